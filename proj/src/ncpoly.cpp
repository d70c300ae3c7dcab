#include "hopfgal/ncpoly.hpp"

#include <algorithm>
#include <cctype>

namespace hopfgal {

std::string Grading::name(int g) const {
  g = reduce(g);
  if (g == 0) return "1";
  if (kind == GroupKind::Z2) return "g";
  if (g == 1) return "z";
  return "z^" + std::to_string(g);
}

Grading Grading::parse_kind(std::string_view s) {
  if (s == "Z") return {GroupKind::Z};
  if (s == "Z2") return {GroupKind::Z2};
  throw MathError("unknown grading group: " + std::string(s));
}

// ---------------------------------------------------------------- GeneratorTable

namespace {

bool valid_name(const std::string& n) {
  if (n.empty() || n == "i" || n == "q") return false;
  if (!std::isalpha(static_cast<unsigned char>(n[0]))) return false;
  for (char c : n)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '_' || c == '\''))
      return false;
  return true;
}

}  // namespace

GeneratorTable::GeneratorTable(Grading grading, std::vector<std::string> names, std::vector<int> degrees)
    : grading_(grading), names_(std::move(names)), degrees_(std::move(degrees)) {
  if (names_.size() != degrees_.size()) throw MathError("generator table: names/degrees size mismatch");
  if (names_.size() > 250) throw MathError("generator table: too many generators");
  for (size_t k = 0; k < names_.size(); ++k) {
    if (!valid_name(names_[k])) throw MathError("invalid generator name: " + names_[k]);
    for (size_t j = 0; j < k; ++j)
      if (names_[j] == names_[k]) throw MathError("duplicate generator: " + names_[k]);
    degrees_[k] = grading_.reduce(degrees_[k]);
  }
  star_.resize(names_.size());
}

void GeneratorTable::set_star(int gen, Scalar coef, int image) {
  star_.at(gen) = StarImage{std::move(coef), image};
}

bool GeneratorTable::has_star() const {
  return !star_.empty() && std::all_of(star_.begin(), star_.end(), [](const auto& s) { return s.has_value(); });
}

void GeneratorTable::validate_star() const {
  for (size_t k = 0; k < size(); ++k) {
    if (!star_[k]) throw MathError("star map missing for generator " + names_[k]);
    const StarImage& s = *star_[k];
    if (degrees_[s.gen] != grading_.neg(degrees_[k]))
      throw MathError("star map does not negate the degree of " + names_[k]);
    const StarImage& t = *star_.at(s.gen);
    if (t.gen != static_cast<int>(k) || !(s.coef.conj() * t.coef).is_one())
      throw MathError("star map is not an involution on " + names_[k]);
  }
}

int GeneratorTable::find(std::string_view name) const {
  for (size_t k = 0; k < names_.size(); ++k)
    if (names_[k] == name) return static_cast<int>(k);
  return -1;
}

int GeneratorTable::require(std::string_view name) const {
  int k = find(name);
  if (k < 0) throw MathError("unknown generator: " + std::string(name));
  return k;
}

int GeneratorTable::word_degree(const Word& w) const {
  int d = 0;
  for (unsigned char c : w) d += degrees_[c];
  return grading_.reduce(d);
}

std::string GeneratorTable::word_string(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) s += '*';
    s += names_[static_cast<unsigned char>(w[k])];
  }
  return s;
}

// ---------------------------------------------------------------- NcPoly

NcPoly NcPoly::constant(TablePtr t, const Scalar& c) { return monomial(std::move(t), Word(), c); }

NcPoly NcPoly::monomial(TablePtr t, Word w, const Scalar& c) {
  NcPoly p(std::move(t));
  p.add_term(w, c);
  return p;
}

NcPoly NcPoly::generator(TablePtr t, std::string_view name) {
  int k = t->require(name);
  return monomial(std::move(t), Word(1, static_cast<char>(k)));
}

Scalar NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NcPoly::adopt_table(const NcPoly& b) {
  if (!table_) {
    table_ = b.table_;
  } else if (b.table_ && b.table_ != table_) {
    throw MathError("generator table mismatch");
  }
}

std::optional<int> NcPoly::degree_of() const {
  std::optional<int> d;
  for (const auto& [w, c] : terms_) {
    int e = table_->word_degree(w);
    if (d && *d != e) return std::nullopt;
    d = e;
  }
  return d.value_or(0);
}

std::map<int, NcPoly> NcPoly::homogeneous_components() const {
  std::map<int, NcPoly> out;
  for (const auto& [w, c] : terms_) {
    auto [it, fresh] = out.try_emplace(table_->word_degree(w), table_);
    it->second.terms_.emplace(w, c);
  }
  return out;
}

size_t NcPoly::max_length() const {
  size_t m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.size());
  return m;
}

NcPoly NcPoly::star() const {
  if (!table_ || is_zero()) return *this;
  NcPoly out(table_);
  for (const auto& [w, c] : terms_) {
    Scalar coef = c.conj();
    Word img;
    img.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const auto& s = table_->star(static_cast<unsigned char>(*it));
      if (!s) throw MathError("no star map for generator " + table_->name(static_cast<unsigned char>(*it)));
      coef *= s->coef;
      img.push_back(static_cast<char>(s->gen));
    }
    out.add_term(img, coef);
  }
  return out;
}

NcPoly NcPoly::conj_coeffs() const {
  return map_coeffs([](const Scalar& c) { return c.conj(); });
}

NcPoly NcPoly::map_coeffs(const std::function<Scalar(const Scalar&)>& f) const {
  NcPoly out(table_);
  for (const auto& [w, c] : terms_) out.add_term(w, f(c));
  return out;
}

NcPoly& NcPoly::operator+=(const NcPoly& b) {
  adopt_table(b);
  for (const auto& [w, c] : b.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& b) {
  adopt_table(b);
  for (const auto& [w, c] : b.terms_) add_term(w, -c);
  return *this;
}

NcPoly operator-(const NcPoly& a) {
  NcPoly out(a.table_);
  for (const auto& [w, c] : a.terms_) out.terms_.emplace(w, -c);
  return out;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  NcPoly out(a.table_);
  out.adopt_table(b);
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) out.add_term(u + v, c * d);
  return out;
}

NcPoly operator*(const Scalar& c, const NcPoly& a) {
  NcPoly out(a.table_);
  if (c.is_zero()) return out;
  for (const auto& [w, d] : a.terms_) out.terms_.emplace(w, c * d);
  return out;
}

std::string scalar_coefficient_prefix(const Scalar& c) {
  if (c.is_one()) return "";
  if ((-c).is_one()) return "-";
  if (c.is_constant()) {
    GaussRat g = c.constant();
    if (sgn(g.im) == 0) return g.re.get_str() + " * ";
  }
  return "(" + c.to_string() + ")*";
}

std::string NcPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    std::string term;
    if (w.empty()) {
      bool plain = c.is_constant() && sgn(c.constant().im) == 0 && c.constant().re.get_den() == 1;
      term = plain ? c.to_string() : "(" + c.to_string() + ")";
    } else {
      term = scalar_coefficient_prefix(c) + table_->word_string(w);
    }
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

NcPoly NcPoly::parse(TablePtr t, std::string_view text) {
  detail::PolyParser p(t, text);
  NcPoly v = p.expr();
  if (!p.at_end()) p.fail("unexpected trailing input");
  if (!v.table_) v.table_ = t;
  return v;
}

// ---------------------------------------------------------------- parser

namespace detail {

void PolyParser::fail(const std::string& what) const {
  throw MathError("parse error at " + std::to_string(pos_) + ": " + what + " in \"" + std::string(s_) + "\"");
}

void PolyParser::skip() {
  while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
}

char PolyParser::peek() {
  skip();
  return pos_ < s_.size() ? s_[pos_] : '\0';
}

bool PolyParser::at_end() {
  skip();
  return pos_ == s_.size();
}

bool PolyParser::accept(std::string_view tok) {
  skip();
  if (s_.substr(pos_, tok.size()) == tok) {
    pos_ += tok.size();
    return true;
  }
  return false;
}

void PolyParser::expect(std::string_view tok) {
  if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
}

int PolyParser::read_int() {
  bool neg = false;
  if (peek() == '-') {
    neg = true;
    ++pos_;
  } else if (peek() == '+') {
    ++pos_;
  }
  skip();
  size_t start = pos_;
  while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  if (start == pos_) fail("expected integer");
  int v = std::stoi(std::string(s_.substr(start, pos_ - start)));
  return neg ? -v : v;
}

std::string PolyParser::read_word() {
  skip();
  size_t start = pos_;
  while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  return std::string(s_.substr(start, pos_ - start));
}

int PolyParser::match_generator() {
  if (!table_) return -1;
  int best = -1;
  size_t best_len = 0;
  for (size_t k = 0; k < table_->size(); ++k) {
    const std::string& n = table_->name(static_cast<int>(k));
    if (n.size() > best_len && s_.substr(pos_, n.size()) == n) {
      best = static_cast<int>(k);
      best_len = n.size();
    }
  }
  return best;
}

bool PolyParser::starts_atom() {
  char c = peek();
  if (c == '(') return s_.substr(pos_, 3) != "(x)";
  return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c));
}

NcPoly PolyParser::expr() {
  NcPoly v = term();
  for (;;) {
    char c = peek();
    if (c == '+') {
      ++pos_;
      v += term();
    } else if (c == '-') {
      ++pos_;
      v -= term();
    } else {
      return v;
    }
  }
}

NcPoly PolyParser::term() {
  NcPoly v = factor();
  for (;;) {
    char c = peek();
    if (c == '*') {
      ++pos_;
      v = v * factor();
    } else if (c == '/') {
      ++pos_;
      NcPoly d = factor();
      if (d.size() != 1 || !d.terms().begin()->first.empty()) fail("division by a non-scalar");
      v = d.terms().begin()->second.inverse() * v;
    } else if (starts_atom()) {
      v = v * factor();
    } else {
      return v;
    }
  }
}

NcPoly PolyParser::factor() {
  if (peek() == '-') {
    ++pos_;
    return -factor();
  }
  if (peek() == '+') {
    ++pos_;
    return factor();
  }
  NcPoly base = atom();
  if (peek() == '^') {
    ++pos_;
    int e = read_int();
    bool scalar = base.is_zero() || (base.size() == 1 && base.terms().begin()->first.empty());
    if (e < 0) {
      if (!scalar || base.is_zero()) fail("negative power of a non-scalar");
      Scalar s = base.terms().begin()->second.pow(e);
      return NcPoly::constant(table_, s);
    }
    NcPoly r = NcPoly::constant(table_, Scalar(1));
    for (int k = 0; k < e; ++k) r = r * base;
    return r;
  }
  return base;
}

NcPoly PolyParser::atom() {
  char c = peek();
  if (c == '(') {
    ++pos_;
    NcPoly v = expr();
    expect(")");
    return v;
  }
  int g = match_generator();
  if (g >= 0) {
    pos_ += table_->name(g).size();
    return NcPoly::monomial(table_, Word(1, static_cast<char>(g)));
  }
  if (c == 'i') {
    ++pos_;
    return NcPoly::constant(table_, Scalar::i());
  }
  if (c == 'q') {
    ++pos_;
    return NcPoly::constant(table_, Scalar::q());
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    mpz_class n(std::string(s_.substr(start, pos_ - start)));
    return NcPoly::constant(table_, Scalar(GaussRat(mpq_class(n), 0)));
  }
  fail("expected a number, generator, i, q or '('");
}

}  // namespace detail

}  // namespace hopfgal
