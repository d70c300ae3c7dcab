#include "hopfgal/membership.hpp"

#include <set>

#include "hopfgal/linalg.hpp"

namespace hopfgal {

namespace {

using Vec = std::map<TensorKey, Scalar>;

Vec to_vec(const TensorElem& t) { return Vec(t.terms().begin(), t.terms().end()); }

// Splits t by (left slot degree, right slot degree); both families are spanned by
// bihomogeneous vectors, so each component is tested on its own.
std::map<std::pair<int, int>, TensorElem> bigraded(const TensorElem& t) {
  std::map<std::pair<int, int>, TensorElem> out;
  for (const auto& [k, c] : t.terms()) {
    std::pair<int, int> key{t.p_slot_degree(k, 0), t.p_slot_degree(k, 1)};
    auto it = out.try_emplace(key, TensorElem(t.presentation(), "PP")).first;
    it->second.add_term(k, c);
  }
  return out;
}

}  // namespace

MembershipResult subspace_membership(const TensorElem& t, SpanFamily family, size_t degree_bound,
                                     const std::vector<NcPoly>& b_generators) {
  if (t.signature() != "PP") throw MathError("subspace_membership expects an element of P (x) P");
  if (t.max_length() > degree_bound)
    throw MathError("degree bound " + std::to_string(degree_bound) + " below the length of the element (" +
                    std::to_string(t.max_length()) + ")");
  const auto& P = t.presentation();
  const auto& T = *P->table();
  MembershipResult result;
  result.member = true;
  if (t.is_zero()) return result;

  std::vector<Word> words = P->normal_words(degree_bound);
  std::map<int, std::vector<Word>> by_degree;
  for (const auto& w : words) by_degree[T.word_degree(w)].push_back(w);
  auto words_of = [&](int deg, size_t max_len) {
    std::vector<Word> out;
    auto it = by_degree.find(deg);
    if (it == by_degree.end()) return out;
    for (const auto& w : it->second)
      if (w.size() <= max_len) out.push_back(w);
    return out;
  };

  for (const auto& [bideg, comp] : bigraded(t)) {
    auto [d1, d2] = bideg;
    Echelon<TensorKey> ech;
    size_t count = 0;
    auto add = [&](const TensorElem& v) {
      if (v.is_zero()) return;
      ++count;
      ech.insert(to_vec(v));
    };
    if (family == SpanFamily::KerMOverB) {
      // d(b) p has bidegree (0, deg p); nothing else to span.
      if (d1 != 0) {
        result.member = false;
        continue;
      }
      for (const auto& b : words_of(0, degree_bound)) {
        if (b.empty()) continue;  // d(1) = 0
        NcPoly bp = NcPoly::monomial(P->table(), b);
        for (const auto& p : words_of(d2, degree_bound - b.size())) {
          NcPoly pp = NcPoly::monomial(P->table(), p);
          add(TensorElem::pure(P, "PP", {P->one(), P->mul(bp, pp)}) - TensorElem::pure(P, "PP", {bp, pp}));
        }
      }
    } else {
      if (b_generators.empty()) throw MathError("P(Omega^1 B)P membership needs coinvariant generators");
      for (const auto& b : b_generators) {
        size_t lb = b.max_length();
        if (lb > degree_bound) continue;
        for (const auto& p : words_of(d1, degree_bound - lb)) {
          NcPoly pp = NcPoly::monomial(P->table(), p);
          NcPoly pb = P->mul(pp, b);
          for (const auto& p2 : words_of(d2, degree_bound - lb - p.size())) {
            NcPoly pp2 = NcPoly::monomial(P->table(), p2);
            add(TensorElem::pure(P, "PP", {pp, P->mul(b, pp2)}) - TensorElem::pure(P, "PP", {pb, pp2}));
          }
        }
      }
    }
    result.spanning_vectors += count;
    result.rank += ech.rank();
    if (!ech.contains(to_vec(comp))) result.member = false;
  }
  return result;
}

}  // namespace hopfgal
