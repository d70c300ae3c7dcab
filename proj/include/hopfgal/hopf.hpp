#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfgal/tensor.hpp"

namespace hopfgal {

// Element of the group algebra of Z (Laurent polynomial in z) or Z2: group element -> coefficient.
using GroupAlgebraElem = std::map<int, Scalar>;

std::string group_algebra_string(const Grading& G, const GroupAlgebraElem& h);

// Group algebra H = k[Gamma] with its group-like basis.
struct GroupHopf {
  Grading grading;

  TensorElem coproduct(const PresentationPtr& P, int g) const;  // g (x) g, signature HH
  Scalar counit(int) const { return Scalar(1); }
  int antipode(int g) const { return grading.neg(g); }
  // Right adjoint coaction g -> g (x) g^{-1} g = g (x) e, signature HH.
  TensorElem ad_R(const PresentationPtr& P, int g) const;
};

// Full Hopf structure on a presentation that is itself a Hopf algebra.
class HopfStructure {
 public:
  explicit HopfStructure(PresentationPtr P);

  void set_coproduct(int gen, TensorElem value);
  void set_counit(int gen, Scalar value);
  void set_antipode(int gen, NcPoly value);
  // Projection onto the structure group algebra: gen -> z^k. Unset generators map to 0.
  void set_projection(int gen, int group_element);

  const PresentationPtr& presentation() const { return P_; }
  // Algebra map into P (x) P.
  TensorElem coproduct(const NcPoly& p) const;
  // Algebra map into scalars.
  Scalar counit(const NcPoly& p) const;
  // Antihomomorphism, reduced.
  NcPoly antipode(const NcPoly& p) const;
  // Algebra map P -> k[Gamma].
  GroupAlgebraElem pi_I(const NcPoly& p) const;
  // Group element a generator projects to, if any.
  std::optional<int> projection_of(int gen) const { return pi_.at(gen); }
  // Generator projecting onto the group element g, or -1.
  int generator_projecting_to(int g) const;

  // Axioms on generators and compatibility of every structure map with the relations.
  std::vector<std::string> verify() const;

 private:
  PresentationPtr P_;
  std::vector<std::optional<TensorElem>> delta_;
  std::vector<std::optional<Scalar>> eps_;
  std::vector<std::optional<NcPoly>> S_;
  std::vector<std::optional<int>> pi_;
};

}  // namespace hopfgal
