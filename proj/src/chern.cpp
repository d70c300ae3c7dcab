#include "hopfgal/chern.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace hopfgal {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kOverlapFloor = 1e-6;

// Index among a, b, c, d; -1 for generators killed by the body map.
int classical_slot(const std::string& name) {
  if (name == "a" || name == "alpha") return 0;
  if (name == "b" || name == "beta") return 1;
  if (name == "c" || name == "gamma") return 2;
  if (name == "d" || name == "delta") return 3;
  if (name == "l+" || name == "l-") return -1;
  throw MathError("body: generator " + name + " has no classical image");
}

cplx ipow(cplx x, int k) {
  cplx r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

bool BodyPoly::is_zero(double tol) const {
  return std::all_of(terms.begin(), terms.end(), [&](const auto& t) { return std::abs(t.second) <= tol; });
}

std::string BodyPoly::to_string() const {
  if (terms.empty()) return "0";
  static const char* letters = "abcd";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
    for (int k = 0; k < 4; ++k)
      if (e[k]) os << "*" << letters[k] << (e[k] > 1 ? "^" + std::to_string(e[k]) : "");
  }
  return os.str();
}

BodyPoly operator+(const BodyPoly& x, const BodyPoly& y) {
  BodyPoly r = x;
  for (const auto& [e, c] : y.terms) r.terms[e] += c;
  return r;
}

BodyPoly operator-(const BodyPoly& x, const BodyPoly& y) { return x + cplx(-1.0) * y; }

BodyPoly operator*(const BodyPoly& x, const BodyPoly& y) {
  BodyPoly r;
  for (const auto& [e1, c1] : x.terms)
    for (const auto& [e2, c2] : y.terms) {
      std::array<int, 4> e{};
      for (int k = 0; k < 4; ++k) e[k] = e1[k] + e2[k];
      r.terms[e] += c1 * c2;
    }
  return r;
}

BodyPoly operator*(cplx s, const BodyPoly& x) {
  BodyPoly r = x;
  for (auto& [e, c] : r.terms) c *= s;
  return r;
}

BodyPoly body(const NcPoly& p) {
  BodyPoly r;
  if (!p.table()) return r;
  const GeneratorTable& T = *p.table();
  for (const auto& [w, c] : p.terms()) {
    std::array<int, 4> e{};
    bool killed = false;
    for (char ch : w) {
      int slot = classical_slot(T.name(static_cast<unsigned char>(ch)));
      if (slot < 0) {
        killed = true;
        break;
      }
      ++e[slot];
    }
    if (killed) continue;
    GaussRat v = c.specialize_q1();  // throws on a pole at q = 1
    r.terms[e] += cplx(v.re.get_d(), v.im.get_d());
  }
  std::erase_if(r.terms, [](const auto& t) { return t.second == cplx(0.0); });
  return r;
}

cplx eval_su2(const BodyPoly& p, double theta, double phi, double psi) {
  const cplx a = std::cos(theta / 2) * std::polar(1.0, phi + psi);
  const cplx c = std::sin(theta / 2) * std::polar(1.0, psi);
  const cplx vals[4] = {a, -std::conj(c), c, std::conj(a)};
  cplx sum = 0.0;
  for (const auto& [e, coef] : p.terms) {
    cplx m = coef;
    for (int k = 0; k < 4; ++k) m *= ipow(vals[k], e[k]);
    sum += m;
  }
  return sum;
}

BodyMatrix BodyMatrix::of(const ScaledMatrix& M) {
  BodyMatrix B;
  B.rows = M.rows();
  B.cols = M.cols();
  B.entries.reserve(B.rows * B.cols);
  for (size_t i = 0; i < B.rows; ++i)
    for (size_t j = 0; j < B.cols; ++j) {
      double s = std::sqrt(static_cast<double>(M.row_weight(i)) * static_cast<double>(M.col_weight(j)));
      B.entries.push_back(cplx(s) * body(M.core(i, j)));
    }
  return B;
}

std::vector<cplx> BodyMatrix::eval(double theta, double phi, double psi) const {
  std::vector<cplx> v;
  v.reserve(entries.size());
  for (const auto& e : entries) v.push_back(eval_su2(e, theta, phi, psi));
  return v;
}

Json ChernReport::to_json() const {
  Json j;
  j["mu"] = mu;
  j["grid"] = std::to_string(n_theta) + "x" + std::to_string(n_phi);
  j["flux_over_2pi"] = total;
  j["chern"] = integer;
  j["residual"] = residual;
  j["max_flux"] = max_flux;
  j["idempotency_residual"] = idempotency_residual;
  j["descent_residual"] = descent_residual;
  if (phi_shift != 0.0) j["phi_shift"] = phi_shift;
  return j;
}

RankOneField rank_one_field(const PresetPtr& preset, int mu) {
  RankOneField f;
  f.mu = mu;
  if (mu == 0) {
    ScaledMatrix one = ScaledMatrix::identity(preset->P, 1);
    f.U = BodyMatrix::of(one);
    f.F = f.U;
    return f;
  }
  ProjectorCert cert = hermitian_projector(preset, mu);
  if (!cert.U || !cert.F) throw MathError("no hermitian projector for mu = " + std::to_string(mu));
  f.U = BodyMatrix::of(*cert.U);
  f.F = BodyMatrix::of(*cert.F);
  return f;
}

namespace {

struct Grid {
  size_t nt, np;
  double shift;
  std::vector<std::vector<cplx>> u;  // u[j * np + k]
  double theta(size_t j) const { return (static_cast<double>(j) + 0.5) * kPi / static_cast<double>(nt); }
  double phi(size_t k) const { return 2 * kPi * (static_cast<double>(k) + shift) / static_cast<double>(np); }
  const std::vector<cplx>& at(size_t j, size_t k) const { return u[j * np + (k % np)]; }
};

cplx overlap(const std::vector<cplx>& x, const std::vector<cplx>& y) {
  cplx s = 0.0;
  for (size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

// Flux of the loop through the given points; false when some overlap is too small to carry a phase.
bool loop_flux(const std::vector<const std::vector<cplx>*>& pts, double& flux) {
  cplx prod = 1.0;
  for (size_t i = 0; i < pts.size(); ++i) {
    cplx o = overlap(*pts[i], *pts[(i + 1) % pts.size()]);
    if (std::abs(o) < kOverlapFloor) return false;
    prod *= o / std::abs(o);
  }
  flux = std::arg(prod);
  return true;
}

double matrix_residuals(const BodyMatrix& F, const std::vector<cplx>& u, double theta, double phi, double& descent) {
  const size_t n = F.rows;
  std::vector<cplx> f = F.eval(theta, phi);
  std::vector<cplx> g = F.eval(theta, phi, 0.7);
  double res = 0.0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      cplx sq = 0.0;
      for (size_t k = 0; k < n; ++k) sq += f[i * n + k] * f[k * n + j];
      res = std::max(res, std::abs(sq - f[i * n + j]));
      res = std::max(res, std::abs(f[i * n + j] - u[i] * std::conj(u[j])));
      descent = std::max(descent, std::abs(g[i * n + j] - f[i * n + j]));
    }
  return res;
}

// Returns false on a vanishing overlap.
bool chern_on_grid(const RankOneField& field, Grid& G, ChernReport& rep, bool want_csv) {
  G.u.assign(G.nt * G.np, {});
  double idem = 0.0, descent = 0.0;
  for (size_t j = 0; j < G.nt; ++j)
    for (size_t k = 0; k < G.np; ++k) {
      auto& v = G.u[j * G.np + k];
      v = field.U.eval(G.theta(j), G.phi(k));
      double norm2 = std::real(overlap(v, v));
      idem = std::max(idem, std::abs(norm2 - 1.0));
      if (field.F.rows) idem = std::max(idem, matrix_residuals(field.F, v, G.theta(j), G.phi(k), descent));
    }

  std::ostringstream csv;
  if (want_csv) csv << "j,k,theta,phi,flux\n";
  double total = 0.0, max_flux = 0.0;
  // Interior plaquettes, counterclockwise in the (theta, phi) chart.
  for (size_t j = 0; j + 1 < G.nt; ++j)
    for (size_t k = 0; k < G.np; ++k) {
      double f = 0.0;
      if (!loop_flux({&G.at(j, k), &G.at(j + 1, k), &G.at(j + 1, k + 1), &G.at(j, k + 1)}, f)) return false;
      total += f;
      max_flux = std::max(max_flux, std::abs(f));
      if (want_csv) csv << j << "," << k << "," << G.theta(j) << "," << G.phi(k) << "," << f << "\n";
    }
  // Caps: the north circle runs with phi, the south circle against it.
  std::vector<const std::vector<cplx>*> north, south;
  for (size_t k = 0; k < G.np; ++k) {
    north.push_back(&G.at(0, k));
    south.push_back(&G.at(G.nt - 1, G.np - 1 - k));
  }
  double fn = 0.0, fs = 0.0;
  if (!loop_flux(north, fn) || !loop_flux(south, fs)) return false;
  total += fn + fs;
  max_flux = std::max({max_flux, std::abs(fn), std::abs(fs)});

  rep.n_theta = G.nt;
  rep.n_phi = G.np;
  rep.total = total / (2 * kPi);
  rep.integer = std::lround(rep.total);
  rep.residual = std::abs(rep.total - static_cast<double>(rep.integer));
  rep.max_flux = max_flux;
  rep.idempotency_residual = idem;
  rep.descent_residual = descent;
  rep.phi_shift = G.shift;
  if (want_csv) rep.csv = csv.str();
  return true;
}

}  // namespace

ChernReport lattice_chern(const RankOneField& field, size_t n_theta, size_t n_phi, bool want_csv) {
  if (n_theta < 16 || n_phi < 16) throw MathError("lattice_chern: grid must be at least 16x16");
  if (field.U.cols != 1 || field.U.rows == 0) throw MathError("lattice_chern: U must be a nonempty column");
  ChernReport rep;
  rep.mu = field.mu;
  for (double shift : {0.0, 0.5}) {
    Grid G{n_theta, n_phi, shift, {}};
    if (chern_on_grid(field, G, rep, want_csv)) return rep;
  }
  throw MathError("lattice_chern: vanishing overlap on the grid and on the shifted grid");
}

Report pairing_report(const PresetPtr& preset, int range, size_t grid, size_t refined_grid,
                      std::vector<ChernReport>* table) {
  Report rep;
  rep.suite = "chern";
  rep.preset = preset->name;
  rep.parameters["range"] = range;
  rep.parameters["grid"] = std::to_string(grid) + "x" + std::to_string(grid);
  rep.parameters["refined_grid"] = std::to_string(refined_grid) + "x" + std::to_string(refined_grid);
  constexpr double kResidual = 1e-6, kIdempotent = 1e-8, kDescent = 1e-10;

  auto run = [&](int mu, size_t g) -> std::optional<ChernReport> {
    try {
      ChernReport c = lattice_chern(rank_one_field(preset, mu), g, g);
      if (table) table->push_back(c);
      return c;
    } catch (const MathError& e) {
      rep.add("c(F_" + std::to_string(mu) + ") computable", false, e.what());
      return std::nullopt;
    }
  };
  auto fmt = [](const ChernReport& c) {
    std::ostringstream os;
    os << "c=" << c.integer << " flux/2pi=" << c.total << " residual=" << c.residual;
    return os.str();
  };

  if (auto c0 = run(0, grid)) rep.add("c(F_0) = 0", c0->integer == 0 && c0->residual < kResidual, fmt(*c0));
  for (int n = 1; n <= range; ++n) {
    auto neg = run(-n, grid), pos = run(n, grid);
    if (!neg || !pos) continue;
    Json p{{"n", n}};
    for (const auto* c : {&*neg, &*pos}) {
      std::string tag = "F_" + std::to_string(c->mu);
      rep.add("|c(" + tag + ")| = n", std::labs(c->integer) == n, fmt(*c), p);
      rep.add("integrality residual of " + tag + " < 1e-6", c->residual < kResidual, fmt(*c), p);
      rep.add("F^2 = F = u u^dagger numerically for " + tag, c->idempotency_residual < kIdempotent,
              "residual=" + std::to_string(c->idempotency_residual), p);
      rep.add("F descends to the sphere for " + tag, c->descent_residual < kDescent,
              "residual=" + std::to_string(c->descent_residual), p);
    }
    rep.add("c(F_-n) = -c(F_n)", neg->integer == -pos->integer, fmt(*neg) + " vs " + fmt(*pos), p);
    rep.add("c(F_-n) = -n", neg->integer == -n, fmt(*neg), p);
    auto neg2 = run(-n, refined_grid), pos2 = run(n, refined_grid);
    if (neg2 && pos2)
      rep.add("refined grid gives identical integers", neg2->integer == neg->integer && pos2->integer == pos->integer,
              fmt(*neg2) + "; " + fmt(*pos2), p);
  }
  return rep;
}

}  // namespace hopfgal
