#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "hopfgal/bundles.hpp"

namespace hopfgal {

using cplx = std::complex<double>;

// Commutative polynomial in a, b, c, d with complex float coefficients; key = exponents (a, b, c, d).
struct BodyPoly {
  std::map<std::array<int, 4>, cplx> terms;

  bool is_zero(double tol = 0.0) const;
  std::string to_string() const;
  friend BodyPoly operator+(const BodyPoly& x, const BodyPoly& y);
  friend BodyPoly operator-(const BodyPoly& x, const BodyPoly& y);
  friend BodyPoly operator*(const BodyPoly& x, const BodyPoly& y);
  friend BodyPoly operator*(cplx s, const BodyPoly& x);
};

// Algebra map to the classical body: odd generators go to 0, q to 1, alpha..delta to a..d.
// Throws MathError on a pole at q = 1 or on a generator with no classical image.
BodyPoly body(const NcPoly& p);

// Point of SU(2) over (theta, phi) with the lift rotated by the fiber phase psi:
// a = cos(theta/2) e^{i(phi+psi)}, c = sin(theta/2) e^{i psi}, d = conj(a), b = -conj(c).
cplx eval_su2(const BodyPoly& p, double theta, double phi, double psi = 0.0);

// Entrywise body of a scaled matrix, with the sqrt weights folded in numerically.
struct BodyMatrix {
  size_t rows = 0, cols = 0;
  std::vector<BodyPoly> entries;  // row major

  static BodyMatrix of(const ScaledMatrix& M);
  const BodyPoly& at(size_t i, size_t j) const { return entries.at(i * cols + j); }
  std::vector<cplx> eval(double theta, double phi, double psi = 0.0) const;
};

struct ChernReport {
  int mu = 0;  // the module A_mu, i.e. sign and size of the bundle
  size_t n_theta = 0, n_phi = 0;
  double total = 0.0;  // total flux / 2 pi
  long integer = 0;
  double residual = 0.0;  // |total - integer|
  double max_flux = 0.0;  // largest |flux| over plaquettes and caps
  double idempotency_residual = 0.0;  // max over grid points of |F^2 - F| and |F - u u^dagger|
  double descent_residual = 0.0;      // max change of F under a fiber phase rotation
  double phi_shift = 0.0;             // nonzero when the grid had to be shifted
  std::string csv;                    // per-plaquette flux, filled on request

  Json to_json() const;
};

// Unit-vector field on the sphere: u(theta, phi) with F = u u^dagger.
struct RankOneField {
  BodyMatrix U;            // column
  BodyMatrix F;            // optional symbolic F for the idempotency residual; empty if rows == 0
  int mu = 0;
};

RankOneField rank_one_field(const PresetPtr& preset, int mu);

// Plaquette Berry flux on the cell-centred grid theta_j = (j + 1/2) pi / Nt, phi_k = 2 pi k / Np,
// with the two pole caps closed by the Berry phases of the boundary circles. The orientation makes
// u = (a, c) give -1. Retries once on a half-step phi shift when an overlap is below 1e-6.
ChernReport lattice_chern(const RankOneField& field, size_t n_theta, size_t n_phi, bool want_csv = false);

// For each n in 1..range, c(F_-n) and c(F_n) on both grids: magnitude n, antisymmetry,
// residual below 1e-6, c(F_-n) = -n and identical integers on the second grid.
Report pairing_report(const PresetPtr& preset, int range, size_t grid, size_t refined_grid,
                      std::vector<ChernReport>* table = nullptr);

}  // namespace hopfgal
