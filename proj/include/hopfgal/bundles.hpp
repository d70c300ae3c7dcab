#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfgal/connection.hpp"

namespace hopfgal {

// Matrix over P of the form diag(sqrt wl) * core * diag(sqrt wr) with positive integer weights.
// Square roots of binomial coefficients stay symbolic this way; a product is formed only when
// every middle weight wr_k * wl'_k is a perfect square, so all arithmetic remains in Q(i)(q).
class ScaledMatrix {
 public:
  ScaledMatrix() = default;
  ScaledMatrix(PresentationPtr P, size_t rows, size_t cols);
  // Plain matrix (all weights 1) from rows of polynomials.
  static ScaledMatrix from_rows(PresentationPtr P, const std::vector<std::vector<NcPoly>>& rows);
  static ScaledMatrix identity(PresentationPtr P, size_t n);
  static ScaledMatrix column(PresentationPtr P, const std::vector<NcPoly>& entries, std::vector<long> weights = {});
  static ScaledMatrix row(PresentationPtr P, const std::vector<NcPoly>& entries, std::vector<long> weights = {});
  static ScaledMatrix block_diag(const ScaledMatrix& A, const ScaledMatrix& B);
  // Stacks A over B (equal column counts and column weights).
  static ScaledMatrix vstack(const ScaledMatrix& A, const ScaledMatrix& B);
  // A beside B (equal row counts and row weights).
  static ScaledMatrix hstack(const ScaledMatrix& A, const ScaledMatrix& B);

  const PresentationPtr& presentation() const { return P_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  long row_weight(size_t i) const { return wl_.at(i); }
  long col_weight(size_t j) const { return wr_.at(j); }
  const NcPoly& core(size_t i, size_t j) const { return core_.at(i * cols_ + j); }
  void set_core(size_t i, size_t j, NcPoly p);
  void set_row_weight(size_t i, long w) { wl_.at(i) = w; }
  void set_col_weight(size_t j, long w) { wr_.at(j) = w; }
  // True when every weight is 1.
  bool plain() const;
  // Entry (i, j) as "sqrt(w) * (poly)" or the plain polynomial.
  std::string entry_string(size_t i, size_t j) const;

  ScaledMatrix adjoint() const;  // transpose with the star map
  ScaledMatrix transpose() const;
  ScaledMatrix scaled_left(const NcPoly& c) const;  // c * M, c multiplies every core entry from the left
  // Throws MathError when a middle weight is not a perfect square.
  friend ScaledMatrix operator*(const ScaledMatrix& A, const ScaledMatrix& B);
  // Requires equal weights.
  friend ScaledMatrix operator+(const ScaledMatrix& A, const ScaledMatrix& B);
  friend ScaledMatrix operator-(const ScaledMatrix& A, const ScaledMatrix& B);

  // Entrywise equality of the represented matrices; on failure names the first differing entry.
  bool equals(const ScaledMatrix& B, std::string* witness = nullptr) const;

  Json to_json() const;

 private:
  PresentationPtr P_;
  size_t rows_ = 0, cols_ = 0;
  std::vector<long> wl_, wr_;
  std::vector<NcPoly> core_;
};

// Exact integer square root of a positive rational, if it exists.
std::optional<mpq_class> rational_sqrt(const mpq_class& r);

// ---- line-bundle modules

struct LineBundleModule {
  PresetPtr preset;
  int mu = 0;  // the module A_mu = elements of degree -mu
  std::vector<NcPoly> generators;
};

// super: a^{n-k} c^k, a^{n-1-k} c^k l+ (mu = -n) and d^{n-k} b^k, d^{n-1-k} b^k l- (mu = n);
// slq2 / classical: alpha^{n-k} gamma^k resp. delta^{n-k} beta^k; podles-eq: {1} or {x, y, z} by parity.
LineBundleModule line_bundle_generators(const PresetPtr& preset, int mu);

// Scalar linear independence of the generators after normal form.
Report generator_independence(const LineBundleModule& M);

// Expansion of a right factor outside the generator list: word -> coefficients c_l in P.
using CTable = std::map<Word, std::vector<NcPoly>>;

struct ProjectorCert {
  ScaledMatrix E;
  std::optional<ScaledMatrix> U;  // column with U^dagger U = 1
  std::optional<ScaledMatrix> F;  // U U^dagger
};

// E_kl = a_kl + sum_mu a_k,mu c_mu,l from s(g_k) = sum a_kl (x) g_l + sum a_k,mu (x) g~_mu.
// Throws MathError naming the offending monomial when a right factor is neither a generator nor in `extra`.
ProjectorCert projector_from_splitting(const SplittingS& s, const LineBundleModule& M, const CTable& extra = {});
// E^2 = E, sum_l E_kl g_l = g_k, entries of degree 0.
Report verify_projector(const ScaledMatrix& E, const LineBundleModule& M);

// Row Q with tau'(g) = sum_l Q_l (x) g_l (g = -mu); the generator column P then gives E = P Q and Q P = 1.
ScaledMatrix splitting_row(const TranslationLift& tau, const LineBundleModule& M);

// U_{mu} with F = U U^dagger; super and classical-sl2 for all mu != 0, slq2 for mu = +-1.
ProjectorCert hermitian_projector(const PresetPtr& preset, int mu);
// U^dagger U = 1, F^dagger = F, F^2 = F.
Report verify_hermitian(const ProjectorCert& cert);

// E L F = L F, F L~ E = L~ E, E L L~ = E, F L~ L = F.
Report verify_module_iso(const ScaledMatrix& E, const ScaledMatrix& F, const ScaledMatrix& L, const ScaledMatrix& Lt);

struct IsoWitness {
  ScaledMatrix L, Lt;
};
// L = P U^dagger, L~ = U Q for E = P Q with Q P = 1 and U^dagger U = 1.
IsoWitness iso_witnesses(const ScaledMatrix& P_col, const ScaledMatrix& Q_row, const ScaledMatrix& U);

// Full certificate for A_mu: projector from the default splitting, hermitian companion and the iso.
Report line_bundle_suite(const PresetPtr& preset, int mu);

// A_{-1} (+) A_1 free of rank 2: F = diag(F_-1, M F_1 M), E = I_2 and the block witnesses.
struct FreenessData {
  ScaledMatrix E, F, L, Lt;
};
FreenessData freeness_data(const PresetPtr& preset);
Report freeness_certificate(const PresetPtr& preset);

// Every degree-0 normal word of length <= bound lies in the span of products of the coinvariant generators.
Report coinvariant_generation_check(const PresetPtr& preset, size_t degree_bound);

// F = (x, y, z)^T (x, y, z) and I - F idempotent, trace F = 1.
Report auxiliary_idempotents(const PresetPtr& preset);

// The splitting of the non-strong form leaves B (x) P at x while the strong one does not, also at q = 1.
Report nonstrong_witness(const PresetPtr& preset);

}  // namespace hopfgal
