#pragma once

#include <vector>

#include "hopfgal/tensor.hpp"

namespace hopfgal {

enum class SpanFamily {
  // (Omega^1 B) P = span{ d(b) p } = span{ 1 (x) bp - b (x) p }.
  KerMOverB,
  // P (Omega^1 B) P = span{ p d(b) p' } = span{ p (x) bp' - pb (x) p' }; equals ker pi_B.
  PKerMOverBP,
};

struct MembershipResult {
  bool member = false;
  size_t spanning_vectors = 0;
  size_t rank = 0;
};

// Decides whether t (in P (x) P) lies in the span of the family restricted to spanning
// elements whose words have total length <= degree_bound. B enters through its
// degree-0 normal words (KerMOverB) or through `b_generators` (PKerMOverBP, where
// d(b1 b2) = b1 d(b2) + d(b1) b2 makes algebra generators enough).
// Exact linear algebra; sound always, complete for elements that have a witness inside the bound.
// Throws MathError when t itself does not fit in the bound.
MembershipResult subspace_membership(const TensorElem& t, SpanFamily family, size_t degree_bound,
                                     const std::vector<NcPoly>& b_generators = {});

}  // namespace hopfgal
