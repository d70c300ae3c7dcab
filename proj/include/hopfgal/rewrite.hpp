#pragma once

#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopfgal/ncpoly.hpp"

namespace hopfgal {

// Finitely presented algebra: free algebra modulo rewrite rules lhs -> rhs.
// Monomial order: weighted degree, then lexicographic by generator index.
class Presentation {
 public:
  struct Rule {
    Word lhs;
    NcPoly rhs;
  };

  Presentation(TablePtr table, std::vector<int> weights = {});

  // Orients a relation by the monomial order and adds it as a rule.
  void add_relation(const NcPoly& rel);
  // Adds lhs -> rhs; rejects inhomogeneous rules and tails not below lhs.
  void add_rule(const Word& lhs, const NcPoly& rhs);

  const TablePtr& table() const { return table_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<NcPoly>& relations() const { return relations_; }
  const std::vector<int>& weights() const { return weights_; }

  int weight(const Word& w) const;
  // Strict monomial order.
  bool less(const Word& a, const Word& b) const;
  Word leading_word(const NcPoly& p) const;

  NcPoly normal_form(const NcPoly& p) const;
  NcPoly nf_word(const Word& w) const;
  bool is_normal_word(const Word& w) const;
  // Normal words of length <= max_len, shortlex order.
  std::vector<Word> normal_words(size_t max_len) const;

  // Convenience: parse then reduce.
  NcPoly parse(std::string_view text) const;
  NcPoly gen(std::string_view name) const { return NcPoly::generator(table_, name); }
  NcPoly one() const { return NcPoly::constant(table_, Scalar(1)); }
  NcPoly scalar(const Scalar& c) const { return NcPoly::constant(table_, c); }
  // Reduced product.
  NcPoly mul(const NcPoly& a, const NcPoly& b) const { return normal_form(a * b); }
  NcPoly pow(const NcPoly& a, int n) const;

 private:
  // Rule whose lhs is a suffix of w, or -1.
  int suffix_rule(const Word& w) const;
  NcPoly nf_append(const NcPoly& p, char letter) const;

  TablePtr table_;
  std::vector<int> weights_;
  std::vector<Rule> rules_;
  std::vector<NcPoly> relations_;
  std::vector<std::vector<int>> rules_by_last_;

  mutable std::shared_mutex memo_mutex_;
  mutable std::unordered_map<Word, NcPoly> memo_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

struct ConfluenceFailure {
  Word overlap;
  size_t rule_a, rule_b;
  NcPoly difference;  // nf of the two one-step reductions, subtracted
};

struct ConfluenceReport {
  size_t pairs_checked = 0;
  std::vector<ConfluenceFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Checks every overlap and inclusion ambiguity whose word has length <= degree_bound.
ConfluenceReport check_confluence(const Presentation& P, size_t degree_bound);

struct IndependenceResult {
  bool independent = true;
  // When dependent: coefficients c with sum c_j nf(p_j) = 0, last nonzero equal to -1.
  std::vector<Scalar> witness;
};

IndependenceResult linear_independent(const Presentation& P, const std::vector<NcPoly>& polys);

}  // namespace hopfgal
