#include "hopfgal/suites.hpp"

#include <algorithm>
#include <charconv>

namespace hopfgal {

namespace {

bool has_gen(const Preset& p, std::string_view name) { return p.table()->find(name) >= 0; }

bool has_matrix_coordinates(const Preset& p) {
  return (has_gen(p, "a") && has_gen(p, "d")) || (has_gen(p, "alpha") && has_gen(p, "delta"));
}

std::vector<NcPoly> test_polys(const PresetPtr& preset) {
  std::vector<NcPoly> v{preset->P->one()};
  for (const auto& g : generator_polys(preset)) v.push_back(g);
  return v;
}

std::vector<int> line_bundle_mus(const Preset& preset, int range) {
  if (preset.grading().kind == GroupKind::Z2) return {0, 1};
  std::vector<int> mus;
  for (int n = 1; n <= range; ++n) {
    mus.push_back(-n);
    mus.push_back(n);
  }
  return mus;
}

Report begin(const SuiteConfig& cfg, const PresetPtr& preset) {
  Report r;
  r.suite = cfg.suite;
  r.preset = preset->name;
  return r;
}

Report suite_galois(const SuiteConfig& cfg, const PresetPtr& preset) {
  Report rep = begin(cfg, preset);
  rep.parameters = Json{{"range", cfg.range}, {"degree_bound", cfg.degree_bound}};
  TranslationLift tau = translation_lift(preset);
  rep.merge(galois_certificate(tau, group_range(preset->grading(), cfg.range)));
  rep.merge(translation_property_suite(tau, J4(connection_from_lift(tau)), cfg.range, cfg.degree_bound));
  return rep;
}

Report suite_connection(const SuiteConfig& cfg, const PresetPtr& preset) {
  Report rep = begin(cfg, preset);
  rep.parameters = Json{{"range", cfg.range}, {"form", cfg.form}, {"seed", cfg.seed}};
  auto groups = group_range(preset->grading(), cfg.range);
  auto polys = test_polys(preset);
  if (cfg.form == "nonstrong") {
    rep.merge(verify_connection_form(podles_nonstrong_connection(preset), true, groups, polys));
    return rep;
  }
  ConnForm omega = default_connection(preset);
  rep.merge(verify_connection_form(omega, true, groups, polys));
  rep.merge(descent_report(psi_lift(omega), cfg.seed, 16, 3));
  if (preset->hopf && preset->grading().kind == GroupKind::Z) {
    Integral i0 = integral_i0(preset);
    rep.merge(integral_checks(preset, i0, groups));
    Report r = verify_connection_form(connection_from_integral(preset, i0), true, groups, polys);
    for (auto& c : r.checks) c.parameters["form"] = "from i0";
    rep.merge(r);
  }
  return rep;
}

Report suite_roundtrip(const SuiteConfig& cfg, const PresetPtr& preset) {
  Report rep = begin(cfg, preset);
  std::vector<int> groups = group_range(preset->grading(), std::min(cfg.range, 2));
  std::erase(groups, 0);
  rep.merge(roundtrip_check(default_connection(preset), translation_lift(preset), test_polys(preset), groups));
  return rep;
}

Report suite_gauge(const SuiteConfig& cfg, const PresetPtr& preset) {
  Report rep = begin(cfg, preset);
  auto groups = group_range(preset->grading(), cfg.range);
  ConnForm omega = default_connection(preset);
  TranslationLift tau = translation_lift(preset);
  const PresentationPtr& P = preset->P;
  bool z = preset->grading().kind == GroupKind::Z;
  if (z && has_gen(*preset, "l+") && has_gen(*preset, "l-")) {
    GaugeTransform f(preset, P->one() + preset->gen("l+") * preset->gen("l-"));
    Report r = gauge_suite(f, omega, tau, groups, GaugeExpectation::Nontrivial);
    for (auto& c : r.checks) c.parameters["f"] = "1 + l+ l-";
    rep.merge(r);
    rep.merge(gauge_automorphism(f));
  }
  // Scalar values: f(z) = 3 on Z, f(x) = -1 on Z2 (f^2 = 1 there).
  NcPoly scalar = NcPoly::constant(preset->table(), Scalar(z ? 3 : -1));
  GaugeTransform fs(preset, scalar);
  Report r = gauge_suite(fs, omega, tau, groups, GaugeExpectation::Trivial);
  for (auto& c : r.checks) c.parameters["f"] = z ? "3" : "-1";
  rep.merge(r);
  rep.merge(gauge_automorphism(fs));
  return rep;
}

Report suite_projector(const SuiteConfig& cfg, const PresetPtr& preset) {
  Report rep = begin(cfg, preset);
  rep.parameters = Json{{"range", cfg.range}};
  TranslationLift tau = translation_lift(preset);
  SplittingS s = J4(connection_from_lift(tau));
  for (int mu : line_bundle_mus(*preset, cfg.range)) {
    auto tag = [&](Report r) {
      for (auto& c : r.checks) c.parameters["mu"] = mu;
      r.suite.clear();
      rep.merge(r);
    };
    LineBundleModule M = line_bundle_generators(preset, mu);
    tag(generator_independence(M));
    ProjectorCert cert = projector_from_splitting(s, M);
    tag(verify_projector(cert.E, M));
    size_t n = M.generators.size();
    rep.add("E is " + std::to_string(n) + "x" + std::to_string(n), cert.E.rows() == n && cert.E.cols() == n, "",
            Json{{"mu", mu}});
    try {
      tag(verify_hermitian(hermitian_projector(preset, mu)));
    } catch (const MathError& e) {
      rep.parameters["hermitian_mu_" + std::to_string(mu)] = std::string("not built: ") + e.what();
    }
  }
  return rep;
}

Report suite_iso(const SuiteConfig& cfg, const PresetPtr& preset) {
  Report rep = begin(cfg, preset);
  rep.parameters = Json{{"range", cfg.range}, {"corrupt_witness", cfg.corrupt_witness}};
  if (!cfg.corrupt_witness) {
    for (int mu : line_bundle_mus(*preset, cfg.range)) {
      Report r = line_bundle_suite(preset, mu);
      if (r.parameters.contains("hermitian")) rep.parameters["hermitian_mu_" + std::to_string(mu)] = r.parameters["hermitian"];
      r.suite.clear();
      rep.merge(r);
    }
    return rep;
  }
  // Negative control: the witnesses of the first module with one entry of L zeroed.
  int mu = line_bundle_mus(*preset, cfg.range).front();
  LineBundleModule M = line_bundle_generators(preset, mu);
  TranslationLift tau = translation_lift(preset);
  ProjectorCert E = projector_from_splitting(J4(connection_from_lift(tau)), M);
  ProjectorCert H = hermitian_projector(preset, mu);
  ScaledMatrix Pc = ScaledMatrix::column(preset->P, M.generators);
  IsoWitness w = iso_witnesses(Pc, splitting_row(tau, M), *H.U);
  w.L.set_core(0, 0, NcPoly(preset->table()));
  Report r = verify_module_iso(E.E, *H.F, w.L, w.Lt);
  for (auto& c : r.checks) c.parameters["mu"] = mu;
  rep.merge(r);
  return rep;
}

Report suite_freeness(const SuiteConfig& cfg, const PresetPtr& preset) {
  Report rep = begin(cfg, preset);
  rep.merge(freeness_certificate(preset));
  return rep;
}

Report suite_chern(const SuiteConfig& cfg, const PresetPtr& preset) {
  Report rep = begin(cfg, preset);
  // slq2 carries hermitian projectors only for |mu| = 1.
  int range = preset->hopf && has_gen(*preset, "alpha") ? std::min(cfg.range, 1) : cfg.range;
  size_t refined = cfg.grid_theta * 3 / 2;
  Report r = pairing_report(preset, range, cfg.grid_theta, refined);
  rep.parameters = r.parameters;
  r.suite.clear();
  rep.merge(r);
  return rep;
}

Report suite_confluence(const SuiteConfig& cfg, const PresetPtr& preset) {
  Report rep = begin(cfg, preset);
  rep.parameters = Json{{"degree_bound", cfg.degree_bound}};
  ConfluenceReport c = check_confluence(*preset->P, cfg.degree_bound);
  std::string w;
  if (!c.ok()) {
    const auto& f = c.failures.front();
    w = "overlap " + preset->table()->word_string(f.overlap) + " leaves " + f.difference.to_string();
  }
  rep.add("critical pairs resolve up to length " + std::to_string(cfg.degree_bound), c.ok(), w,
          Json{{"pairs_checked", c.pairs_checked}});
  return rep;
}

Report suite_coinvariants(const SuiteConfig& cfg, const PresetPtr& preset) {
  Report rep = begin(cfg, preset);
  rep.merge(coinvariant_generation_check(preset, std::min<size_t>(cfg.degree_bound, 4)));
  if (preset->grading().kind == GroupKind::Z2) {
    rep.merge(auxiliary_idempotents(preset));
    rep.merge(nonstrong_witness(preset));
  }
  return rep;
}

using SuiteFn = Report (*)(const SuiteConfig&, const PresetPtr&);

SuiteFn suite_fn(const std::string& name) {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"galois", suite_galois},         {"connection", suite_connection}, {"roundtrip", suite_roundtrip},
      {"gauge", suite_gauge},           {"projector", suite_projector},   {"iso", suite_iso},
      {"freeness", suite_freeness},     {"chern", suite_chern},           {"confluence", suite_confluence},
      {"coinvariants", suite_coinvariants}};
  for (const auto& [n, f] : table)
    if (n == name) return f;
  return nullptr;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"galois",   "connection", "roundtrip",  "gauge",
                                              "projector", "iso",        "freeness",   "chern",
                                              "confluence", "coinvariants"};
  return names;
}

bool suite_applies(const std::string& suite, const Preset& preset) {
  bool z = preset.grading().kind == GroupKind::Z;
  if (suite == "freeness" || suite == "chern") return z && has_matrix_coordinates(preset);
  return true;
}

std::pair<size_t, size_t> parse_grid(const std::string& text) {
  auto x = text.find('x');
  auto num = [&](std::string_view s) {
    size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw UsageError("bad grid: " + text);
    return v;
  };
  if (x == std::string::npos) throw UsageError("grid must look like 32x32: " + text);
  auto g = std::make_pair(num(std::string_view(text).substr(0, x)), num(std::string_view(text).substr(x + 1)));
  if (g.first < 16 || g.second < 16) throw UsageError("grid must be at least 16x16: " + text);
  return g;
}

void validate(const SuiteConfig& cfg) {
  if (cfg.suite != "all" && !suite_fn(cfg.suite)) throw UsageError("unknown suite: " + cfg.suite);
  if (cfg.range < 1 || cfg.range > 6) throw UsageError("range must be in 1..6");
  if (cfg.degree_bound < 2 || cfg.degree_bound > 10) throw UsageError("degree bound must be in 2..10");
  if (cfg.grid_theta < 16 || cfg.grid_phi < 16) throw UsageError("grid must be at least 16x16");
  if (cfg.form != "strong" && cfg.form != "nonstrong") throw UsageError("form must be strong or nonstrong");
  PresetPtr preset;
  try {
    preset = load_preset(cfg.preset);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (cfg.form == "nonstrong" && preset->grading().kind != GroupKind::Z2)
    throw UsageError("the non-strong form exists on the Z2 sphere only");
  if (cfg.suite != "all" && !suite_applies(cfg.suite, *preset))
    throw UsageError("suite " + cfg.suite + " does not apply to preset " + preset->name);
}

Report run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  PresetPtr preset = load_preset(cfg.preset);
  if (cfg.suite != "all") return suite_fn(cfg.suite)(cfg, preset);
  Report rep;
  rep.suite = "all";
  rep.preset = preset->name;
  rep.parameters = Json{{"range", cfg.range}, {"degree_bound", cfg.degree_bound},
                        {"grid", std::to_string(cfg.grid_theta) + "x" + std::to_string(cfg.grid_phi)},
                        {"seed", cfg.seed}};
  for (const auto& name : suite_names()) {
    if (!suite_applies(name, *preset)) continue;
    SuiteConfig sub = cfg;
    sub.suite = name;
    rep.merge(suite_fn(name)(sub, preset));
  }
  return rep;
}

}  // namespace hopfgal
