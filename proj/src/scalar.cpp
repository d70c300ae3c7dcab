#include "hopfgal/scalar.hpp"

#include <cctype>

namespace hopfgal {

GaussRat GaussRat::inverse() const {
  mpq_class n = re * re + im * im;
  if (sgn(n) == 0) throw MathError("division by zero");
  return {re / n, -im / n};
}

std::string GaussRat::to_string() const {
  auto imag = [](const mpq_class& v) -> std::string {
    if (v == 1) return "i";
    if (v == -1) return "-i";
    return v.get_str() + "i";
  };
  if (sgn(im) == 0) return re.get_str();
  if (sgn(re) == 0) return imag(im);
  std::string s = re.get_str();
  std::string t = imag(im);
  return s + (t[0] == '-' ? "" : "+") + t;
}

// ---------------------------------------------------------------- QPoly

QPoly QPoly::monomial(GaussRat a, int k) {
  QPoly p;
  if (a.is_zero()) return p;
  p.c.assign(k + 1, GaussRat(0));
  p.c[k] = std::move(a);
  return p;
}

void QPoly::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

QPoly QPoly::conj() const {
  QPoly r;
  r.c.reserve(c.size());
  for (const auto& a : c) r.c.push_back(a.conj());
  return r;
}

GaussRat QPoly::eval(const GaussRat& x) const {
  GaussRat acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> QPoly::eval(std::complex<double> x) const {
  std::complex<double> acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->to_complex();
  return acc;
}

QPoly QPoly::scaled(const GaussRat& a) const {
  if (a.is_zero()) return {};
  QPoly r;
  r.c.reserve(c.size());
  for (const auto& x : c) r.c.push_back(x * a);
  return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  QPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), GaussRat(0));
  for (size_t k = 0; k < a.c.size(); ++k) r.c[k] = a.c[k];
  for (size_t k = 0; k < b.c.size(); ++k) r.c[k] = r.c[k] + b.c[k];
  r.trim();
  return r;
}

QPoly operator-(const QPoly& a) {
  QPoly r;
  r.c.reserve(a.c.size());
  for (const auto& x : a.c) r.c.push_back(-x);
  return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, GaussRat(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
  if (b.is_zero()) throw MathError("division by zero");
  quot = QPoly();
  rem = a;
  int db = b.degree();
  GaussRat inv = b.lead().inverse();
  if (rem.degree() >= db) quot.c.assign(rem.degree() - db + 1, GaussRat(0));
  while (!rem.is_zero() && rem.degree() >= db) {
    int shift = rem.degree() - db;
    GaussRat f = rem.lead() * inv;
    quot.c[shift] = f;
    for (int k = 0; k <= db; ++k) rem.c[k + shift] = rem.c[k + shift] - f * b.c[k];
    rem.c.pop_back();
    rem.trim();
  }
  quot.trim();
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(a.lead().inverse());
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const GaussRat& a = c[k];
    if (a.is_zero()) continue;
    std::string term;
    bool cplx = sgn(a.re) != 0 && sgn(a.im) != 0;
    std::string cs = cplx ? "(" + a.to_string() + ")" : a.to_string();
    std::string qs = k == 0 ? "" : (k == 1 ? "q" : "q^" + std::to_string(k));
    if (k == 0)
      term = cs;
    else if (a.is_one())
      term = qs;
    else if (a == GaussRat(-1))
      term = "-" + qs;
    else
      term = cs + qs;
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw MathError("division by zero");
  canonicalize();
}

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = QPoly(GaussRat(1));
    return;
  }
  if (den_.degree() > 0) {
    QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      QPoly q, r;
      QPoly::divmod(num_, g, q, r);
      num_ = std::move(q);
      QPoly::divmod(den_, g, q, r);
      den_ = std::move(q);
    }
  }
  if (!den_.lead().is_one()) {
    GaussRat inv = den_.lead().inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Scalar Scalar::q_pow(int k) {
  if (k >= 0) return Scalar(QPoly::monomial(GaussRat(1), k), QPoly(GaussRat(1)));
  return Scalar(QPoly(GaussRat(1)), QPoly::monomial(GaussRat(1), -k));
}

GaussRat Scalar::constant() const {
  if (!is_constant()) throw MathError("scalar is not constant: " + to_string());
  return num_.is_zero() ? GaussRat(0) : num_.c[0];
}

Scalar Scalar::conj() const { return Scalar(num_.conj(), den_.conj()); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw MathError("division by zero");
  return Scalar(den_, num_);
}

GaussRat Scalar::specialize_q1() const {
  GaussRat d = den_.eval(GaussRat(1));
  if (d.is_zero()) throw MathError("pole at q=1: " + to_string());
  return num_.eval(GaussRat(1)) / d;
}

std::complex<double> Scalar::eval_numeric(double q0) const {
  std::complex<double> d = den_.eval(std::complex<double>(q0, 0));
  if (std::abs(d) == 0.0) throw MathError("pole at q=" + std::to_string(q0) + ": " + to_string());
  return num_.eval(std::complex<double>(q0, 0)) / d;
}

std::string Scalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto single = [](const QPoly& p) {
    int n = 0;
    for (const auto& a : p.c) n += a.is_zero() ? 0 : 1;
    return n == 1;
  };
  // Canonical denominators are monic, so a single-term one is a bare power of q.
  std::string n = single(num_) ? num_.to_string() : "(" + num_.to_string() + ")";
  std::string d = single(den_) ? den_.to_string() : "(" + den_.to_string() + ")";
  return n + "/" + d;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
  return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a) {
  Scalar r = a;
  r.num_ = -r.num_;
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return Scalar();
  if (a.den_.is_one() && b.den_.is_one()) {
    Scalar r;
    r.num_ = a.num_ * b.num_;
    return r;
  }
  return Scalar(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar r(1), base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

mpz_class binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// ---------------------------------------------------------------- parsing

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view s) : s_(s) {}

  Scalar parse() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw MathError("scalar parse error at " + std::to_string(pos_) + ": " + what + " in \"" +
                    std::string(s_) + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool starts_atom() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'i' || c == 'q' || c == '(';
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        v = v + term();
      } else if (c == '-') {
        ++pos_;
        v = v - term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        v = v * factor();
      } else if (c == '/') {
        ++pos_;
        v = v / factor();
      } else if (starts_atom()) {
        v = v * factor();
      } else {
        return v;
      }
    }
  }

  Scalar factor() {
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    if (peek() == '+') {
      ++pos_;
      return factor();
    }
    Scalar base = atom();
    if (peek() == '^') {
      ++pos_;
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
      }
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      base = base.pow(neg ? -e : e);
    }
    return base;
  }

  Scalar atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == 'i') {
      ++pos_;
      return Scalar::i();
    }
    if (c == 'q') {
      ++pos_;
      return Scalar::q();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class n(std::string(s_.substr(start, pos_ - start)));
      return Scalar(GaussRat(mpq_class(n), 0));
    }
    fail("expected a number, i, q or '('");
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace hopfgal
