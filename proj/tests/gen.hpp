#pragma once

// Seeded generators for property tests. Sizes stay small so normal forms remain cheap.

#include <random>
#include <string>
#include <vector>

#include "hopfgal/presets.hpp"

namespace testgen {

using namespace hopfgal;

struct Gen {
  std::mt19937 rng;
  explicit Gen(unsigned seed) : rng(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  bool coin() { return integer(0, 1) == 1; }

  // Small Gaussian rational.
  GaussRat gauss() {
    int d = integer(1, 4);
    return GaussRat(mpq_class(integer(-5, 5), d), mpq_class(coin() ? integer(-3, 3) : 0, integer(1, 3)));
  }

  QPoly qpoly(int max_deg) {
    QPoly p;
    int deg = integer(0, max_deg);
    for (int k = 0; k <= deg; ++k) p = p + QPoly::monomial(gauss(), k);
    return p;
  }

  // Rational function with a nonzero denominator.
  Scalar scalar(int max_deg = 2) {
    QPoly den;
    do den = qpoly(max_deg);
    while (den.is_zero());
    return Scalar(qpoly(max_deg), den);
  }

  Scalar nonzero_scalar(int max_deg = 2) {
    Scalar s;
    do s = scalar(max_deg);
    while (s.is_zero());
    return s;
  }

  Scalar small_constant() { return Scalar(GaussRat(mpq_class(integer(-4, 4), integer(1, 3)), 0)); }

  Word word(const GeneratorTable& T, int max_len) {
    Word w;
    int len = integer(0, max_len);
    for (int k = 0; k < len; ++k) w.push_back(static_cast<char>(integer(0, static_cast<int>(T.size()) - 1)));
    return w;
  }

  // Free-algebra element with up to `terms` monomials of length <= max_len.
  NcPoly poly(const TablePtr& T, int terms, int max_len, bool rational_coeffs = false) {
    NcPoly p(T);
    int n = integer(1, terms);
    for (int k = 0; k < n; ++k) p.add_term(word(*T, max_len), rational_coeffs ? scalar(1) : small_constant());
    return p;
  }

  // Homogeneous element of the given degree: a word of that degree times constants.
  NcPoly homogeneous(const PresetPtr& preset, int degree, int max_len, int attempts = 200) {
    NcPoly p(preset->table());
    const Grading& G = preset->grading();
    for (int k = 0; k < attempts && p.size() < 3; ++k) {
      Word w = word(*preset->table(), max_len);
      if (G.reduce(preset->table()->word_degree(w)) == G.reduce(degree)) p.add_term(w, small_constant());
    }
    return p;
  }
};

}  // namespace testgen
