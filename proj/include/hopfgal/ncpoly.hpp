#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopfgal/scalar.hpp"

namespace hopfgal {

// Abelian grading group: Z or Z2. Elements are ints (reduced mod 2 for Z2).
enum class GroupKind { Z, Z2 };

struct Grading {
  GroupKind kind = GroupKind::Z;

  int reduce(int g) const { return kind == GroupKind::Z ? g : ((g % 2) + 2) % 2; }
  int add(int a, int b) const { return reduce(a + b); }
  int neg(int a) const { return reduce(-a); }
  // z^n for Z, g for the nontrivial element of Z2, 1 for the unit.
  std::string name(int g) const;
  static Grading parse_kind(std::string_view s);
  std::string kind_name() const { return kind == GroupKind::Z ? "Z" : "Z2"; }
};

// A word is a string of generator indices, one byte per letter.
using Word = std::string;

struct ShortLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class GeneratorTable {
 public:
  struct StarImage {
    Scalar coef;
    int gen;
  };

  GeneratorTable(Grading grading, std::vector<std::string> names, std::vector<int> degrees);

  // Declares star(gen) = coef * image. Call validate_star() once all are set.
  void set_star(int gen, Scalar coef, int image);
  // Checks the star map is total, involutive and negates degrees.
  void validate_star() const;

  const Grading& grading() const { return grading_; }
  size_t size() const { return names_.size(); }
  const std::string& name(int k) const { return names_.at(k); }
  int degree(int k) const { return degrees_.at(k); }
  int find(std::string_view name) const;
  int require(std::string_view name) const;
  bool has_star() const;
  const std::optional<StarImage>& star(int k) const { return star_.at(k); }

  int word_degree(const Word& w) const;
  std::string word_string(const Word& w) const;

 private:
  Grading grading_;
  std::vector<std::string> names_;
  std::vector<int> degrees_;
  std::vector<std::optional<StarImage>> star_;
};

using TablePtr = std::shared_ptr<const GeneratorTable>;

// Element of the free algebra over Q(i)(q). No zero coefficients are stored.
class NcPoly {
 public:
  using Terms = std::map<Word, Scalar, ShortLex>;

  NcPoly() = default;
  explicit NcPoly(TablePtr t) : table_(std::move(t)) {}
  static NcPoly constant(TablePtr t, const Scalar& c);
  static NcPoly monomial(TablePtr t, Word w, const Scalar& c = Scalar(1));
  static NcPoly generator(TablePtr t, std::string_view name);
  static NcPoly parse(TablePtr t, std::string_view text);

  const TablePtr& table() const { return table_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  // Coefficient of w (zero if absent).
  Scalar coeff(const Word& w) const;
  void add_term(const Word& w, const Scalar& c);

  // Degree in the grading group; nullopt when inhomogeneous. The zero polynomial has degree 0.
  std::optional<int> degree_of() const;
  std::map<int, NcPoly> homogeneous_components() const;
  size_t max_length() const;

  // Antilinear antihomomorphism extending the generator star map.
  NcPoly star() const;
  NcPoly conj_coeffs() const;
  NcPoly map_coeffs(const std::function<Scalar(const Scalar&)>& f) const;

  std::string to_string() const;

  NcPoly& operator+=(const NcPoly& b);
  NcPoly& operator-=(const NcPoly& b);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator-(const NcPoly& a);
  // Free (unreduced) product.
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend NcPoly operator*(const Scalar& c, const NcPoly& a);
  friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.terms_ == b.terms_; }

 private:
  void adopt_table(const NcPoly& b);
  TablePtr table_;
  Terms terms_;
};

std::string scalar_coefficient_prefix(const Scalar& c);

namespace detail {

// Recursive-descent reader for polynomial expressions with generator-aware tokens.
class PolyParser {
 public:
  PolyParser(TablePtr t, std::string_view text) : table_(std::move(t)), s_(text) {}

  NcPoly expr();
  NcPoly term();
  void skip();
  bool at_end();
  bool accept(std::string_view tok);
  void expect(std::string_view tok);
  // Reads an optional sign and an integer literal.
  int read_int();
  // Reads an identifier made of letters.
  std::string read_word();
  [[noreturn]] void fail(const std::string& what) const;
  char peek();

 private:
  NcPoly factor();
  NcPoly atom();
  bool starts_atom();
  int match_generator();

  TablePtr table_;
  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace detail

}  // namespace hopfgal
