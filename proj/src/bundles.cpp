#include "hopfgal/bundles.hpp"

#include <functional>

#include "hopfgal/linalg.hpp"

namespace hopfgal {

namespace {

Scalar from_mpq(const mpq_class& r) { return Scalar(GaussRat(r, 0)); }

long binom_long(int n, int k) { return binomial(n, k).get_si(); }

std::string clip(const std::string& s, size_t n = 240) { return s.size() <= n ? s : s.substr(0, n) + " ..."; }

// Letters of the 2x2 matrix coordinates: a, b, c, d or alpha, beta, gamma, delta.
struct Quad {
  NcPoly A, B, C, D;
  bool ok = false;
};

Quad quad_of(const PresetPtr& preset) {
  const auto& T = *preset->table();
  for (auto names : {std::vector<std::string>{"a", "b", "c", "d"},
                     std::vector<std::string>{"alpha", "beta", "gamma", "delta"}}) {
    if (T.find(names[0]) >= 0 && T.find(names[1]) >= 0 && T.find(names[2]) >= 0 && T.find(names[3]) >= 0)
      return {preset->gen(names[0]), preset->gen(names[1]), preset->gen(names[2]), preset->gen(names[3]), true};
  }
  return {};
}

bool has_odd(const PresetPtr& preset) {
  const auto& T = *preset->table();
  return T.find("l+") >= 0 && T.find("l-") >= 0;
}

// A generator as kappa * word.
std::pair<Word, Scalar> as_monomial(const Presentation& P, const NcPoly& g) {
  NcPoly nf = P.normal_form(g);
  if (nf.size() != 1) throw MathError("module generator must be a monomial: " + nf.to_string());
  return {nf.terms().begin()->first, nf.terms().begin()->second};
}

struct GeneratorIndex {
  std::map<Word, std::pair<size_t, Scalar>> by_word;
  explicit GeneratorIndex(const LineBundleModule& M) {
    for (size_t l = 0; l < M.generators.size(); ++l) {
      auto [w, kappa] = as_monomial(*M.preset->P, M.generators[l]);
      by_word.emplace(w, std::make_pair(l, kappa));
    }
  }
};

}  // namespace

// ---------------------------------------------------------------- ScaledMatrix

ScaledMatrix::ScaledMatrix(PresentationPtr P, size_t rows, size_t cols)
    : P_(std::move(P)), rows_(rows), cols_(cols), wl_(rows, 1), wr_(cols, 1), core_(rows * cols, NcPoly(P_->table())) {}

ScaledMatrix ScaledMatrix::from_rows(PresentationPtr P, const std::vector<std::vector<NcPoly>>& rows) {
  size_t r = rows.size(), c = rows.empty() ? 0 : rows[0].size();
  ScaledMatrix M(P, r, c);
  for (size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw MathError("ragged matrix rows");
    for (size_t j = 0; j < c; ++j) M.set_core(i, j, rows[i][j]);
  }
  return M;
}

ScaledMatrix ScaledMatrix::identity(PresentationPtr P, size_t n) {
  ScaledMatrix M(P, n, n);
  for (size_t i = 0; i < n; ++i) M.set_core(i, i, M.P_->one());
  return M;
}

ScaledMatrix ScaledMatrix::column(PresentationPtr P, const std::vector<NcPoly>& entries, std::vector<long> weights) {
  ScaledMatrix M(P, entries.size(), 1);
  for (size_t i = 0; i < entries.size(); ++i) M.set_core(i, 0, entries[i]);
  if (!weights.empty()) M.wl_ = std::move(weights);
  return M;
}

ScaledMatrix ScaledMatrix::row(PresentationPtr P, const std::vector<NcPoly>& entries, std::vector<long> weights) {
  ScaledMatrix M(P, 1, entries.size());
  for (size_t j = 0; j < entries.size(); ++j) M.set_core(0, j, entries[j]);
  if (!weights.empty()) M.wr_ = std::move(weights);
  return M;
}

ScaledMatrix ScaledMatrix::block_diag(const ScaledMatrix& A, const ScaledMatrix& B) {
  ScaledMatrix M(A.P_, A.rows_ + B.rows_, A.cols_ + B.cols_);
  for (size_t i = 0; i < A.rows_; ++i) M.wl_[i] = A.wl_[i];
  for (size_t i = 0; i < B.rows_; ++i) M.wl_[A.rows_ + i] = B.wl_[i];
  for (size_t j = 0; j < A.cols_; ++j) M.wr_[j] = A.wr_[j];
  for (size_t j = 0; j < B.cols_; ++j) M.wr_[A.cols_ + j] = B.wr_[j];
  for (size_t i = 0; i < A.rows_; ++i)
    for (size_t j = 0; j < A.cols_; ++j) M.set_core(i, j, A.core(i, j));
  for (size_t i = 0; i < B.rows_; ++i)
    for (size_t j = 0; j < B.cols_; ++j) M.set_core(A.rows_ + i, A.cols_ + j, B.core(i, j));
  return M;
}

ScaledMatrix ScaledMatrix::vstack(const ScaledMatrix& A, const ScaledMatrix& B) {
  if (A.cols_ != B.cols_ || A.wr_ != B.wr_) throw MathError("vstack: column shapes differ");
  ScaledMatrix M(A.P_, A.rows_ + B.rows_, A.cols_);
  M.wr_ = A.wr_;
  for (size_t i = 0; i < A.rows_; ++i) {
    M.wl_[i] = A.wl_[i];
    for (size_t j = 0; j < A.cols_; ++j) M.set_core(i, j, A.core(i, j));
  }
  for (size_t i = 0; i < B.rows_; ++i) {
    M.wl_[A.rows_ + i] = B.wl_[i];
    for (size_t j = 0; j < B.cols_; ++j) M.set_core(A.rows_ + i, j, B.core(i, j));
  }
  return M;
}

ScaledMatrix ScaledMatrix::hstack(const ScaledMatrix& A, const ScaledMatrix& B) {
  return vstack(A.transpose(), B.transpose()).transpose();
}

void ScaledMatrix::set_core(size_t i, size_t j, NcPoly p) { core_.at(i * cols_ + j) = P_->normal_form(p); }

bool ScaledMatrix::plain() const {
  for (long w : wl_)
    if (w != 1) return false;
  for (long w : wr_)
    if (w != 1) return false;
  return true;
}

std::string ScaledMatrix::entry_string(size_t i, size_t j) const {
  const NcPoly& c = core(i, j);
  long w = wl_[i] * wr_[j];
  if (c.is_zero()) return "0";
  if (auto r = rational_sqrt(mpq_class(w))) {
    if (*r == 1) return c.to_string();
    return r->get_str() + " * (" + c.to_string() + ")";
  }
  return "sqrt(" + std::to_string(w) + ") * (" + c.to_string() + ")";
}

ScaledMatrix ScaledMatrix::adjoint() const {
  ScaledMatrix M(P_, cols_, rows_);
  M.wl_ = wr_;
  M.wr_ = wl_;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) M.set_core(j, i, core(i, j).star());
  return M;
}

ScaledMatrix ScaledMatrix::transpose() const {
  ScaledMatrix M(P_, cols_, rows_);
  M.wl_ = wr_;
  M.wr_ = wl_;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) M.core_[j * rows_ + i] = core(i, j);
  return M;
}

ScaledMatrix ScaledMatrix::scaled_left(const NcPoly& c) const {
  ScaledMatrix M = *this;
  for (auto& e : M.core_) e = P_->mul(c, e);
  return M;
}

ScaledMatrix operator*(const ScaledMatrix& A, const ScaledMatrix& B) {
  if (A.cols_ != B.rows_)
    throw MathError("matrix shapes " + std::to_string(A.rows_) + "x" + std::to_string(A.cols_) + " and " +
                    std::to_string(B.rows_) + "x" + std::to_string(B.cols_) + " do not compose");
  std::vector<Scalar> mid;
  for (size_t k = 0; k < A.cols_; ++k) {
    auto r = rational_sqrt(mpq_class(A.wr_[k]) * B.wl_[k]);
    if (!r) throw MathError("middle weight " + std::to_string(A.wr_[k] * B.wl_[k]) + " is not a perfect square");
    mid.push_back(from_mpq(*r));
  }
  ScaledMatrix M(A.P_, A.rows_, B.cols_);
  M.wl_ = A.wl_;
  M.wr_ = B.wr_;
  const Presentation& P = *A.P_;
  for (size_t i = 0; i < A.rows_; ++i)
    for (size_t j = 0; j < B.cols_; ++j) {
      NcPoly acc(P.table());
      for (size_t k = 0; k < A.cols_; ++k) {
        const NcPoly& x = A.core(i, k);
        const NcPoly& y = B.core(k, j);
        if (x.is_zero() || y.is_zero()) continue;
        acc += mid[k] * (x * y);
      }
      M.set_core(i, j, acc);
    }
  return M;
}

ScaledMatrix operator+(const ScaledMatrix& A, const ScaledMatrix& B) {
  if (A.rows_ != B.rows_ || A.cols_ != B.cols_ || A.wl_ != B.wl_ || A.wr_ != B.wr_)
    throw MathError("matrix sum needs equal shapes and weights");
  ScaledMatrix M = A;
  for (size_t k = 0; k < M.core_.size(); ++k) M.core_[k] = A.P_->normal_form(A.core_[k] + B.core_[k]);
  return M;
}

ScaledMatrix operator-(const ScaledMatrix& A, const ScaledMatrix& B) {
  if (A.rows_ != B.rows_ || A.cols_ != B.cols_ || A.wl_ != B.wl_ || A.wr_ != B.wr_)
    throw MathError("matrix difference needs equal shapes and weights");
  ScaledMatrix M = A;
  for (size_t k = 0; k < M.core_.size(); ++k) M.core_[k] = A.P_->normal_form(A.core_[k] - B.core_[k]);
  return M;
}

bool ScaledMatrix::equals(const ScaledMatrix& B, std::string* witness) const {
  auto fail = [&](const std::string& w) {
    if (witness) *witness = w;
    return false;
  };
  if (rows_ != B.rows_ || cols_ != B.cols_)
    return fail("shape " + std::to_string(rows_) + "x" + std::to_string(cols_) + " vs " + std::to_string(B.rows_) +
                "x" + std::to_string(B.cols_));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      const NcPoly& x = core(i, j);
      const NcPoly& y = B.core(i, j);
      if (x.is_zero() && y.is_zero()) continue;
      // sqrt(w) x = sqrt(w') y  <=>  sqrt(w / w') x = y, possible only for a rational root.
      auto r = rational_sqrt(mpq_class(wl_[i] * wr_[j], B.wl_[i] * B.wr_[j]));
      bool same = r && (P_->normal_form(from_mpq(*r) * x) == y);
      if (!same)
        return fail("entry (" + std::to_string(i) + "," + std::to_string(j) + "): " + clip(entry_string(i, j)) +
                    " vs " + clip(B.entry_string(i, j)));
    }
  return true;
}

Json ScaledMatrix::to_json() const {
  Json entries = Json::array();
  for (size_t i = 0; i < rows_; ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < cols_; ++j) row.push_back(entry_string(i, j));
    entries.push_back(row);
  }
  return Json{{"size", {rows_, cols_}}, {"entries", entries}};
}

std::optional<mpq_class> rational_sqrt(const mpq_class& r0) {
  mpq_class r = r0;
  r.canonicalize();
  if (sgn(r) < 0) return std::nullopt;
  const mpz_class& n = r.get_num();
  const mpz_class& d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return mpq_class(sn, sd);
}

// ---------------------------------------------------------------- line bundles

LineBundleModule line_bundle_generators(const PresetPtr& preset, int mu) {
  const PresentationPtr& P = preset->P;
  const Grading& G = preset->grading();
  LineBundleModule M{preset, G.reduce(mu), {}};
  if (G.kind == GroupKind::Z && std::abs(mu) > 6)
    throw MathError("line bundle index " + std::to_string(mu) + " outside the shipped range |mu| <= 6");
  if (M.mu == 0) {
    M.generators.push_back(P->one());
    return M;
  }
  if (G.kind == GroupKind::Z2) {
    const auto& T = *P->table();
    for (size_t k = 0; k < T.size(); ++k)
      if (G.reduce(T.degree(static_cast<int>(k))) == 1) M.generators.push_back(P->nf_word(Word(1, static_cast<char>(k))));
    return M;
  }
  Quad q = quad_of(preset);
  if (!q.ok) throw MathError("no line-bundle generators known for preset " + preset->name);
  int n = std::abs(mu);
  // mu = -n: degree n, letters A, C (and l+); mu = n: D, B (and l-).
  const NcPoly& x = mu < 0 ? q.A : q.D;
  const NcPoly& y = mu < 0 ? q.C : q.B;
  for (int k = 0; k <= n; ++k) M.generators.push_back(P->mul(P->pow(x, n - k), P->pow(y, k)));
  if (has_odd(preset)) {
    NcPoly l = preset->gen(mu < 0 ? "l+" : "l-");
    for (int k = 0; k < n; ++k) M.generators.push_back(P->mul(P->mul(P->pow(x, n - 1 - k), P->pow(y, k)), l));
  }
  return M;
}

Report generator_independence(const LineBundleModule& M) {
  Report rep;
  rep.suite = "independence";
  rep.preset = M.preset->name;
  rep.parameters = Json{{"mu", M.mu}};
  auto res = linear_independent(*M.preset->P, M.generators);
  std::string witness;
  if (!res.independent) {
    for (size_t k = 0; k < res.witness.size(); ++k)
      if (!res.witness[k].is_zero()) witness += "(" + res.witness[k].to_string() + ")*g" + std::to_string(k) + " ";
  }
  rep.add("generators linearly independent", res.independent, witness, Json{{"count", M.generators.size()}});
  const Grading& G = M.preset->grading();
  bool degrees = true;
  for (const auto& g : M.generators) degrees = degrees && g.degree_of() && G.reduce(*g.degree_of()) == G.neg(M.mu);
  rep.add("generators have degree -mu", degrees);
  return rep;
}

ProjectorCert projector_from_splitting(const SplittingS& s, const LineBundleModule& M, const CTable& extra) {
  const PresentationPtr& P = M.preset->P;
  GeneratorIndex idx(M);
  size_t n = M.generators.size();
  ScaledMatrix E(P, n, n);
  std::vector<NcPoly> acc(n * n, NcPoly(P->table()));
  for (size_t k = 0; k < n; ++k) {
    TensorElem t = s(M.generators[k]);
    for (const auto& [key, c] : t.terms()) {
      NcPoly left = c * P->nf_word(key.p[0]);
      auto it = idx.by_word.find(key.p[1]);
      if (it != idx.by_word.end()) {
        auto [l, kappa] = it->second;
        acc[k * n + l] += kappa.inverse() * left;
        continue;
      }
      auto ex = extra.find(key.p[1]);
      if (ex == extra.end() || ex->second.size() != n)
        throw MathError("splitting of " + M.generators[k].to_string() + " has right factor " +
                        P->table()->word_string(key.p[1]) + " outside the generator span");
      for (size_t l = 0; l < n; ++l) acc[k * n + l] += P->mul(left, ex->second[l]);
    }
  }
  for (size_t k = 0; k < n; ++k)
    for (size_t l = 0; l < n; ++l) E.set_core(k, l, acc[k * n + l]);
  return ProjectorCert{E, std::nullopt, std::nullopt};
}

Report verify_projector(const ScaledMatrix& E, const LineBundleModule& M) {
  const PresentationPtr& P = M.preset->P;
  Report rep;
  rep.suite = "projector";
  rep.preset = M.preset->name;
  rep.parameters = Json{{"mu", M.mu}, {"size", E.rows()}};
  std::string w;
  bool idem = (E * E).equals(E, &w);
  rep.add("E^2 = E", idem, idem ? "" : w);
  ScaledMatrix g = ScaledMatrix::column(P, M.generators);
  bool gens = (E * g).equals(g, &w);
  rep.add("sum_l E_kl g_l = g_k", gens, gens ? "" : w);
  std::string bad;
  for (size_t i = 0; i < E.rows() && bad.empty(); ++i)
    for (size_t j = 0; j < E.cols() && bad.empty(); ++j)
      if (E.core(i, j).degree_of() != std::optional<int>(0)) bad = E.entry_string(i, j);
  rep.add("entries have degree 0", bad.empty(), clip(bad));
  return rep;
}

ScaledMatrix splitting_row(const TranslationLift& tau, const LineBundleModule& M) {
  const PresentationPtr& P = M.preset->P;
  GeneratorIndex idx(M);
  std::vector<NcPoly> q(M.generators.size(), NcPoly(P->table()));
  TensorElem t = tau(M.preset->grading().neg(M.mu));
  for (const auto& [key, c] : t.terms()) {
    auto it = idx.by_word.find(key.p[1]);
    if (it == idx.by_word.end())
      throw MathError("translation lift has right factor " + P->table()->word_string(key.p[1]) +
                      " outside the generator list");
    auto [l, kappa] = it->second;
    q[l] += (c * kappa.inverse()) * P->nf_word(key.p[0]);
  }
  return ScaledMatrix::row(P, q);
}

ProjectorCert hermitian_projector(const PresetPtr& preset, int mu) {
  const PresentationPtr& P = preset->P;
  const Grading& G = preset->grading();
  std::vector<NcPoly> entries;
  std::vector<long> weights;
  if (G.reduce(mu) == 0) {
    entries.push_back(P->one());
    weights.push_back(1);
  } else if (G.kind == GroupKind::Z2) {
    for (const auto& g : line_bundle_generators(preset, mu).generators) {
      entries.push_back(g);
      weights.push_back(1);
    }
  } else {
    Quad q = quad_of(preset);
    if (!q.ok) throw MathError("no hermitian projector known for preset " + preset->name);
    int n = std::abs(mu);
    // With A C != C A the weights would be q-binomials, which are not squares in Q(i)(q).
    if (n > 1 && !(P->mul(q.A, q.C) == P->mul(q.C, q.A)))
      throw MathError("hermitian projector on " + preset->name + " is built for mu = +-1 only");
    const NcPoly& x = mu < 0 ? q.A : q.D;
    const NcPoly& y = mu < 0 ? q.C : q.B;
    NcPoly factor = P->one();
    if (has_odd(preset)) {
      // (1 + (n -+ 1)/2 l+ l-) for mu = -+n.
      NcPoly ll = P->mul(preset->gen("l+"), preset->gen("l-"));
      factor = P->one() + Scalar::rational(mu < 0 ? n - 1 : n + 1, 2) * ll;
    }
    for (int k = 0; k <= n; ++k) {
      entries.push_back(P->mul(factor, P->mul(P->pow(x, n - k), P->pow(y, k))));
      weights.push_back(binom_long(n, k));
    }
    if (has_odd(preset)) {
      NcPoly l = preset->gen(mu < 0 ? "l+" : "l-");
      for (int k = 0; k < n; ++k) {
        entries.push_back(P->mul(factor, P->mul(P->mul(P->pow(x, n - 1 - k), P->pow(y, k)), l)));
        weights.push_back(binom_long(n - 1, k));
      }
    }
  }
  ScaledMatrix U = ScaledMatrix::column(P, entries, weights);
  ScaledMatrix F = U * U.adjoint();
  // E from the default splitting is built separately; here E is left empty.
  return ProjectorCert{ScaledMatrix(), U, F};
}

Report verify_hermitian(const ProjectorCert& cert) {
  Report rep;
  rep.suite = "hermitian";
  if (!cert.U || !cert.F) {
    rep.add("hermitian data present", false, "no U/F");
    return rep;
  }
  const ScaledMatrix& U = *cert.U;
  const ScaledMatrix& F = *cert.F;
  std::string w;
  bool unit = (U.adjoint() * U).equals(ScaledMatrix::identity(U.presentation(), 1), &w);
  rep.add("U^dagger U = 1", unit, unit ? "" : w);
  bool herm = F.adjoint().equals(F, &w);
  rep.add("F^dagger = F", herm, herm ? "" : w);
  bool idem = (F * F).equals(F, &w);
  rep.add("F^2 = F", idem, idem ? "" : w);
  return rep;
}

Report verify_module_iso(const ScaledMatrix& E, const ScaledMatrix& F, const ScaledMatrix& L, const ScaledMatrix& Lt) {
  Report rep;
  rep.suite = "iso";
  auto check = [&](const std::string& name, const std::function<ScaledMatrix()>& lhs,
                   const std::function<ScaledMatrix()>& rhs) {
    try {
      std::string w;
      bool ok = lhs().equals(rhs(), &w);
      rep.add(name, ok, ok ? "" : w);
    } catch (const MathError& e) {
      rep.add(name, false, e.what());
    }
  };
  check("E L F = L F", [&] { return E * L * F; }, [&] { return L * F; });
  check("F L~ E = L~ E", [&] { return F * Lt * E; }, [&] { return Lt * E; });
  check("E L L~ = E", [&] { return E * L * Lt; }, [&] { return E; });
  check("F L~ L = F", [&] { return F * Lt * L; }, [&] { return F; });
  return rep;
}

IsoWitness iso_witnesses(const ScaledMatrix& P_col, const ScaledMatrix& Q_row, const ScaledMatrix& U) {
  return IsoWitness{P_col * U.adjoint(), U * Q_row};
}

Report line_bundle_suite(const PresetPtr& preset, int mu) {
  const PresentationPtr& P = preset->P;
  Report rep;
  rep.suite = "projector";
  rep.preset = preset->name;
  rep.parameters = Json{{"mu", mu}};
  LineBundleModule M = line_bundle_generators(preset, mu);
  auto tag = [&](Report r) {
    for (auto& c : r.checks) c.parameters["mu"] = mu;
    r.suite.clear();
    r.preset.clear();
    rep.merge(r);
  };
  tag(generator_independence(M));
  TranslationLift tau = translation_lift(preset);
  SplittingS s = J4(connection_from_lift(tau));
  ProjectorCert cert = projector_from_splitting(s, M);
  tag(verify_projector(cert.E, M));
  size_t n = M.generators.size();
  rep.add("E is " + std::to_string(n) + "x" + std::to_string(n), cert.E.rows() == n && cert.E.cols() == n, "",
          Json{{"mu", mu}});

  ScaledMatrix Pc = ScaledMatrix::column(P, M.generators);
  ScaledMatrix Q = splitting_row(tau, M);
  std::string w;
  bool fact = (Pc * Q).equals(cert.E, &w);
  rep.add("E = P Q", fact, fact ? "" : w, Json{{"mu", mu}});
  bool qp = (Q * Pc).equals(ScaledMatrix::identity(P, 1), &w);
  rep.add("Q P = 1", qp, qp ? "" : w, Json{{"mu", mu}});

  ProjectorCert herm;
  try {
    herm = hermitian_projector(preset, mu);
  } catch (const MathError& e) {
    rep.parameters["hermitian"] = std::string("not built: ") + e.what();
    return rep;
  }
  tag(verify_hermitian(herm));
  IsoWitness iw = iso_witnesses(Pc, Q, *herm.U);
  tag(verify_module_iso(cert.E, *herm.F, iw.L, iw.Lt));
  return rep;
}

// ---------------------------------------------------------------- freeness

FreenessData freeness_data(const PresetPtr& preset) {
  const PresentationPtr& P = preset->P;
  Quad q = quad_of(preset);
  if (!q.ok || preset->grading().kind != GroupKind::Z)
    throw MathError("freeness certificate needs the coordinates of a 2x2 matrix group: " + preset->name);
  ScaledMatrix Fm = *hermitian_projector(preset, -1).F;
  ScaledMatrix Fp = *hermitian_projector(preset, 1).F;
  size_t k = Fm.rows();
  // M swaps the first two coordinates.
  std::vector<std::vector<NcPoly>> mrows(k, std::vector<NcPoly>(k, NcPoly(P->table())));
  mrows[0][1] = P->one();
  mrows[1][0] = P->one();
  for (size_t i = 2; i < k; ++i) mrows[i][i] = P->one();
  ScaledMatrix Msw = ScaledMatrix::from_rows(P, mrows);
  ScaledMatrix Fp_t = Msw * Fp * Msw;

  FreenessData out;
  out.E = ScaledMatrix::identity(P, 2);
  out.F = ScaledMatrix::block_diag(Fm, Fp_t);
  auto col = [&](std::vector<NcPoly> v) { return ScaledMatrix::column(P, v); };
  auto row = [&](std::vector<NcPoly> v) { return ScaledMatrix::row(P, v); };
  NcPoly zero(P->table());
  if (has_odd(preset)) {
    NcPoly lp = preset->gen("l+"), lm = preset->gen("l-");
    NcPoly ll = P->mul(lp, lm);
    NcPoly one_ll = P->one() + ll, one_3ll = P->one() + Scalar(3) * ll;
    ScaledMatrix f_minus = col({q.A, q.C, lp}) * row({q.D, -q.B});
    ScaledMatrix f_plus = col({q.B, q.D, lm}) * row({-q.C, q.A});
    ScaledMatrix g_minus = col({P->mul(one_ll, q.A), P->mul(one_ll, q.C)}) * row({q.D, -q.B, -lm});
    ScaledMatrix g_plus = col({P->mul(one_3ll, q.B), P->mul(one_3ll, q.D)}) * row({-q.C, q.A, -lp});
    out.Lt = ScaledMatrix::vstack(f_minus, f_plus);
    out.L = ScaledMatrix::hstack(g_minus, g_plus);
  } else {
    // star(B) = c_b C and star(C) = c_c B fix the q-dependent signs of the rows.
    NcPoly sB = q.B.star(), sC = q.C.star();
    ScaledMatrix f_minus = col({q.A, q.C}) * row({q.D, sC});
    ScaledMatrix f_plus = col({q.B, q.D}) * row({sB, q.A});
    out.Lt = ScaledMatrix::vstack(f_minus, f_plus);
    out.L = ScaledMatrix::hstack(f_minus, f_plus);
  }
  return out;
}

Report freeness_certificate(const PresetPtr& preset) {
  const PresentationPtr& P = preset->P;
  Report rep;
  rep.suite = "freeness";
  rep.preset = preset->name;
  FreenessData fd = freeness_data(preset);
  std::string w;
  bool idem = (fd.F * fd.F).equals(fd.F, &w);
  rep.add("diag(F_-1, M F_1 M) idempotent", idem, idem ? "" : w);
  if (has_odd(preset)) {
    Quad q = quad_of(preset);
    NcPoly ll = P->mul(preset->gen("l+"), preset->gen("l-"));
    ScaledMatrix closed = ScaledMatrix::column(P, {q.B, q.D, preset->gen("l-")}) *
                          ScaledMatrix::row(P, {-q.C, q.A, -preset->gen("l+")});
    closed = closed.scaled_left(P->one() + Scalar(2) * ll);
    ScaledMatrix Fp_t(P, 3, 3);
    // Lower-right block of F.
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) Fp_t.set_core(i, j, fd.F.core(3 + i, 3 + j));
    bool same = Fp_t.equals(closed, &w);
    rep.add("M F_1 M = (1 + 2 l+ l-)(b, d, l-)^T (-c, a, -l+)", same, same ? "" : w);
  }
  Report iso = verify_module_iso(fd.E, fd.F, fd.L, fd.Lt);
  iso.suite.clear();
  rep.merge(iso);
  return rep;
}

// ---------------------------------------------------------------- coinvariants and auxiliaries

Report coinvariant_generation_check(const PresetPtr& preset, size_t degree_bound) {
  const PresentationPtr& P = preset->P;
  Report rep;
  rep.suite = "coinvariants";
  rep.preset = preset->name;
  rep.parameters = Json{{"degree_bound", degree_bound}};
  using Vec = std::map<Word, Scalar, ShortLex>;
  Echelon<Word, ShortLex> ech;
  auto vec = [](const NcPoly& p) { return Vec(p.terms().begin(), p.terms().end()); };
  // Products of generators whose unreduced length fits the bound.
  std::vector<std::pair<NcPoly, size_t>> frontier{{P->one(), 0}};
  ech.insert(vec(P->one()));
  size_t products = 1;
  while (!frontier.empty()) {
    std::vector<std::pair<NcPoly, size_t>> next;
    for (const auto& [p, len] : frontier)
      for (const auto& b : preset->coinvariant_generators) {
        size_t l2 = len + b.max_length();
        if (l2 > degree_bound) continue;
        NcPoly pb = P->mul(p, b);
        ++products;
        ech.insert(vec(pb));
        next.emplace_back(pb, l2);
      }
    frontier = std::move(next);
  }
  size_t words = 0;
  std::string missing;
  for (const auto& w : P->normal_words(degree_bound)) {
    if (P->table()->word_degree(w) != 0) continue;
    ++words;
    if (missing.empty() && !ech.contains(Vec{{w, Scalar(1)}})) missing = P->table()->word_string(w);
  }
  rep.add("degree-0 normal words generated by the coinvariant generators", missing.empty(),
          missing.empty() ? "" : "not generated: " + missing,
          Json{{"degree_0_words", words}, {"products", products}, {"rank", ech.rank()}});
  return rep;
}

Report auxiliary_idempotents(const PresetPtr& preset) {
  const PresentationPtr& P = preset->P;
  Report rep;
  rep.suite = "idempotents";
  rep.preset = preset->name;
  std::vector<NcPoly> u{preset->gen("x"), preset->gen("y"), preset->gen("z")};
  ScaledMatrix F = ScaledMatrix::column(P, u) * ScaledMatrix::row(P, u);
  ScaledMatrix I = ScaledMatrix::identity(P, 3);
  ScaledMatrix G = I - F;
  std::string w;
  bool f = (F * F).equals(F, &w);
  rep.add("F^2 = F for F = (x, y, z)^T (x, y, z)", f, f ? "" : w);
  bool g = (G * G).equals(G, &w);
  rep.add("(I - F)^2 = I - F", g, g ? "" : w);
  NcPoly tr = P->normal_form(F.core(0, 0) + F.core(1, 1) + F.core(2, 2));
  rep.add("trace F = 1", tr == P->one(), tr.to_string());
  bool herm = F.adjoint().equals(F, &w);
  rep.add("F^dagger = F", herm, herm ? "" : w);
  return rep;
}

Report nonstrong_witness(const PresetPtr& preset) {
  const PresentationPtr& P = preset->P;
  Report rep;
  rep.suite = "nonstrong";
  rep.preset = preset->name;
  NcPoly x = preset->gen("x");
  SplittingS s = J4(default_connection(preset));
  SplittingS st = J4(podles_nonstrong_connection(preset));
  TensorElem sx = s(x);
  TensorElem t(P, "PP");
  for (const auto& u : {preset->gen("x"), preset->gen("y"), preset->gen("z")}) t += TensorElem::pure(P, "PP", {u, u});
  TensorElem diff = sx - x * t;
  rep.add("s(x) = x (x (x) x + y (x) y + z (x) z)", diff.is_zero(), clip(diff.to_string()));
  rep.add("s(x) in B (x) P", membership(sx, Space::BotP));
  TensorElem stx = st(x);
  std::string odd;
  for (const auto& [k, c] : stx.terms())
    if (odd.empty() && preset->grading().reduce(stx.p_slot_degree(k, 0)) != 0)
      odd = c.to_string() + " * " + P->table()->word_string(k.p[0]) + " (x) " + P->table()->word_string(k.p[1]);
  rep.add("s~(x) not in B (x) P", !membership(stx, Space::BotP), odd.empty() ? "" : "odd left factor: " + odd);
  TensorElem at1 = stx.map_coeffs([](const Scalar& c) { return Scalar(c.specialize_q1()); });
  rep.add("s~(x) not in B (x) P at q = 1", !at1.is_zero() && !membership(at1, Space::BotP));
  return rep;
}

}  // namespace hopfgal
