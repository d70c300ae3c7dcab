#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfgal/rewrite.hpp"

namespace hopfgal {

// Basis element of a tensor product: normal words for P slots, group elements for H slots.
struct TensorKey {
  std::vector<Word> p;
  std::vector<int> h;

  friend bool operator<(const TensorKey& a, const TensorKey& b) {
    if (a.p.size() != b.p.size()) return a.p.size() < b.p.size();
    for (size_t k = 0; k < a.p.size(); ++k) {
      if (a.p[k] != b.p[k]) return ShortLex()(a.p[k], b.p[k]);
    }
    return a.h < b.h;
  }
  friend bool operator==(const TensorKey& a, const TensorKey& b) { return a.p == b.p && a.h == b.h; }
};

// Sum of pure tensors over slots of kind P (the algebra) or H (group algebra), in
// canonical form: each P slot is a normal word, so equality is coefficient equality.
class TensorElem {
 public:
  using Terms = std::map<TensorKey, Scalar>;

  TensorElem() = default;
  TensorElem(PresentationPtr P, std::string signature);

  // Expanded tensor product of the given factors, P slots reduced to normal form.
  static TensorElem pure(PresentationPtr P, const std::string& signature, const std::vector<NcPoly>& pfactors,
                         const std::vector<int>& hfactors = {});
  // Sum of l_k (x) r_k in P (x) P.
  static TensorElem pairs(PresentationPtr P, const std::vector<std::pair<NcPoly, NcPoly>>& terms);
  static TensorElem parse(PresentationPtr P, const std::string& signature, std::string_view text);

  const PresentationPtr& presentation() const { return P_; }
  const std::string& signature() const { return sig_; }
  size_t arity() const { return sig_.size(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const TensorKey& k, const Scalar& c);

  // Sum of slot degrees (H slots contribute their group element).
  int key_degree(const TensorKey& k) const;
  std::optional<int> total_degree() const;
  // Degree of the P slot with the given index among P slots.
  int p_slot_degree(const TensorKey& k, size_t pslot) const;
  size_t max_length() const;

  // Applies f to the P slot with index pslot (among P slots); f must return reduced polys.
  TensorElem map_p_slot(size_t pslot, const std::function<NcPoly(const Word&)>& f) const;
  // Keeps only terms satisfying pred.
  TensorElem filtered(const std::function<bool(const TensorKey&)>& pred) const;
  TensorElem map_coeffs(const std::function<Scalar(const Scalar&)>& f) const;

  std::string to_string() const;

  TensorElem& operator+=(const TensorElem& b);
  TensorElem& operator-=(const TensorElem& b);
  friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
  friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }
  friend TensorElem operator-(const TensorElem& a);
  friend TensorElem operator*(const Scalar& c, const TensorElem& t);
  // Left action on the first slot (must be P).
  friend TensorElem operator*(const NcPoly& a, const TensorElem& t);
  // Right action on the last P slot.
  friend TensorElem operator*(const TensorElem& t, const NcPoly& a);
  friend bool operator==(const TensorElem& a, const TensorElem& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

  // Factorwise product (x1 (x) y1)(x2 (x) y2) = x1x2 (x) y1y2, H slots multiply in the group.
  TensorElem factorwise(const TensorElem& o) const;
  // Concatenated tensor product.
  TensorElem tensor(const TensorElem& o) const;

 private:
  void check_compatible(const TensorElem& b) const;
  PresentationPtr P_;
  std::string sig_;
  Terms terms_;
};

// d(p) = 1 (x) p - p (x) 1.
TensorElem d_universal(const PresentationPtr& P, const NcPoly& p);
// Multiplies slots k and k+1 (both P).
TensorElem contract_m(const TensorElem& t, size_t slot = 0);
// Lifted canonical map: sum p q (x) g_{deg q}.
TensorElem chi_bar(const TensorElem& t);
// Coaction p -> p (x) g_{deg p} on homogeneous components.
TensorElem coaction(const PresentationPtr& P, const NcPoly& p);

enum class Space { Omega1P, BotP, Omega1B_P };
std::string space_name(Space s);
// Omega1P: m(t) = 0. BotP: every left slot has degree 0. Omega1B_P: both.
bool membership(const TensorElem& t, Space space);

}  // namespace hopfgal
