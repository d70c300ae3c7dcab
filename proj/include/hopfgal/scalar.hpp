#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hopfgal {

struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element of Q(i).
struct GaussRat {
  mpq_class re, im;

  GaussRat() = default;
  GaussRat(long r) : re(r), im(0) {}
  GaussRat(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }
  static GaussRat I() { return GaussRat(0, 1); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_one() const { return re == 1 && sgn(im) == 0; }
  GaussRat conj() const { return GaussRat(re, -im); }
  GaussRat inverse() const;
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
  std::string to_string() const;

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inverse(); }
  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
};

// Polynomial in q over Q(i); c[k] is the coefficient of q^k, no trailing zeros.
struct QPoly {
  std::vector<GaussRat> c;

  QPoly() = default;
  explicit QPoly(GaussRat a) {
    if (!a.is_zero()) c.push_back(std::move(a));
  }
  static QPoly monomial(GaussRat a, int k);

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const GaussRat& lead() const { return c.back(); }
  bool is_one() const { return c.size() == 1 && c[0].is_one(); }
  void trim();

  QPoly conj() const;
  GaussRat eval(const GaussRat& x) const;
  std::complex<double> eval(std::complex<double> x) const;
  QPoly scaled(const GaussRat& a) const;
  std::string to_string() const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }

  // a = quot*b + rem.
  static void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
  // Monic gcd; gcd(0,0) = 0.
  static QPoly gcd(QPoly a, QPoly b);
};

// Element of Q(i)(q) in canonical form: den monic, gcd(num, den) = 1, den = 1 when num = 0.
class Scalar {
 public:
  Scalar() : den_(GaussRat(1)) {}
  Scalar(long n) : num_(GaussRat(n)), den_(GaussRat(1)) {}
  Scalar(GaussRat a) : num_(std::move(a)), den_(GaussRat(1)) {}
  Scalar(QPoly num, QPoly den);

  static Scalar i() { return Scalar(GaussRat::I()); }
  static Scalar q() { return Scalar(QPoly::monomial(GaussRat(1), 1), QPoly(GaussRat(1))); }
  static Scalar rational(long n, long d) { return Scalar(GaussRat(mpq_class(n, d), 0)); }
  // q^k for any integer k.
  static Scalar q_pow(int k);
  static Scalar parse(std::string_view text);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  // True when the value is a constant in Q(i).
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  // Constant value; requires is_constant().
  GaussRat constant() const;

  Scalar conj() const;
  Scalar inverse() const;
  GaussRat specialize_q1() const;
  std::complex<double> eval_numeric(double q0) const;
  std::string to_string() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  Scalar pow(int k) const;

 private:
  void canonicalize();
  QPoly num_, den_;
};

// Binomial coefficient C(n, k) as an exact integer; 0 outside 0 <= k <= n.
mpz_class binomial(int n, int k);

}  // namespace hopfgal
