#include "hopfgal/connection.hpp"

#include <random>
#include <sstream>

namespace hopfgal {

namespace {

NcPoly mono(const PresentationPtr& P, const Word& w) { return P->nf_word(w); }

Scalar from_mpz(const mpz_class& z) { return Scalar(GaussRat(mpq_class(z), 0)); }

TensorElem one_one(const PresentationPtr& P) { return TensorElem::pure(P, "PP", {P->one(), P->one()}); }

TensorElem pp(const PresentationPtr& P, const NcPoly& l, const NcPoly& r) { return TensorElem::pure(P, "PP", {l, r}); }

std::string clip(const std::string& s, size_t n = 240) { return s.size() <= n ? s : s.substr(0, n) + " ..."; }

// Witness text for a difference that should vanish.
std::string wit(const TensorElem& t) { return t.is_zero() ? "" : clip(t.to_string()); }
std::string wit(const NcPoly& p) { return p.is_zero() ? "" : clip(p.to_string()); }

Json g_param(const Grading& G, int g) { return Json{{"g", G.name(g)}}; }

Json p_param(const NcPoly& p) { return Json{{"p", p.to_string()}}; }

// Homogeneous degree of a normal word.
int word_deg(const PresentationPtr& P, const Word& w) { return P->table()->word_degree(w); }

const HopfStructure& require_hopf(const PresetPtr& preset) {
  if (!preset->hopf) throw MathError("preset " + preset->name + " has no Hopf structure");
  return *preset->hopf;
}

// Left multiplication term by term: sum c l * F(r) for t = sum c l (x) r.
TensorElem left_apply(const TensorElem& t, const std::function<TensorElem(const Word&)>& F) {
  const PresentationPtr& P = t.presentation();
  TensorElem out(P, "PP");
  for (const auto& [k, c] : t.terms()) out += c * (mono(P, k.p[0]) * F(k.p[1]));
  return out;
}

// rep(z^n) = alpha^n, rep(z^-n) = delta^n for the generators projecting to z^{+-1}.
NcPoly representative(const PresetPtr& preset, int g) {
  const HopfStructure& H = require_hopf(preset);
  const PresentationPtr& P = preset->P;
  if (g == 0) return P->one();
  int gen = H.generator_projecting_to(g > 0 ? 1 : -1);
  if (gen < 0) throw MathError("no generator projects to " + preset->grading().name(g > 0 ? 1 : -1));
  return P->pow(mono(P, Word(1, static_cast<char>(gen))), std::abs(g));
}

// (S (x) id) Delta(x).
TensorElem s_id_delta(const HopfStructure& H, const NcPoly& x) {
  const PresentationPtr& P = H.presentation();
  return H.coproduct(x).map_p_slot(0, [&](const Word& w) { return H.antipode(mono(P, w)); });
}

TranslationLift monopole_lift(const PresetPtr& preset) {
  const PresentationPtr& P = preset->P;
  const auto& T = *P->table();
  NcPoly a = P->gen("a"), b = P->gen("b"), c = P->gen("c"), d = P->gen("d");
  NcPoly ll(P->table());
  if (T.find("l+") >= 0 && T.find("l-") >= 0) ll = P->mul(P->gen("l+"), P->gen("l-"));
  return TranslationLift(preset, [=](int g) {
    int n = std::abs(g);
    // g > 0: sum C(n,k) d^{n-k} (-b)^k (x) a^{n-k} c^k; g < 0 swaps a<->d, b<->c.
    const NcPoly& l1 = g > 0 ? d : a;
    const NcPoly& l2 = g > 0 ? b : c;
    const NcPoly& r1 = g > 0 ? a : d;
    const NcPoly& r2 = g > 0 ? c : b;
    NcPoly factor = P->one() + Scalar(n) * ll;
    TensorElem out(P, "PP");
    for (int k = 0; k <= n; ++k) {
      Scalar coef = from_mpz(binomial(n, k)) * (k % 2 ? Scalar(-1) : Scalar(1));
      NcPoly left = P->mul(factor, P->mul(P->pow(l1, n - k), P->pow(l2, k)));
      NcPoly right = P->mul(P->pow(r1, n - k), P->pow(r2, k));
      out += coef * pp(P, left, right);
    }
    return out;
  });
}

}  // namespace

// ---------------------------------------------------------------- memoized maps

GroupFamily::GroupFamily(PresetPtr preset, Rule rule) : st_(std::make_shared<State>()) {
  st_->preset = std::move(preset);
  st_->rule = std::move(rule);
}

TensorElem GroupFamily::operator()(int g) const {
  g = st_->preset->grading().reduce(g);
  {
    std::lock_guard lock(st_->mu);
    auto it = st_->memo.find(g);
    if (it != st_->memo.end()) return it->second;
  }
  // Evaluated outside the lock: rules may consult other families.
  TensorElem v = st_->rule(g);
  std::lock_guard lock(st_->mu);
  return st_->memo.emplace(g, std::move(v)).first->second;
}

WordMap::WordMap(PresetPtr preset, Rule rule) : st_(std::make_shared<State>()) {
  st_->preset = std::move(preset);
  st_->rule = std::move(rule);
}

TensorElem WordMap::operator()(const Word& w) const {
  {
    std::lock_guard lock(st_->mu);
    auto it = st_->memo.find(w);
    if (it != st_->memo.end()) return it->second;
  }
  TensorElem v = st_->rule(w);
  std::lock_guard lock(st_->mu);
  return st_->memo.emplace(w, std::move(v)).first->second;
}

TensorElem WordMap::operator()(const NcPoly& p) const {
  const PresentationPtr& P = st_->preset->P;
  TensorElem out(P, "PP");
  NcPoly nf = P->normal_form(p);
  for (const auto& [w, c] : nf.terms()) out += c * (*this)(w);
  return out;
}

// ---------------------------------------------------------------- preset constructions

TranslationLift translation_lift(const PresetPtr& preset) {
  const PresentationPtr& P = preset->P;
  const auto& T = *P->table();
  if (preset->hopf && preset->hopf->generator_projecting_to(1) >= 0 &&
      preset->hopf->generator_projecting_to(-1) >= 0) {
    auto hopf = preset->hopf;
    return TranslationLift(preset, [=](int g) { return s_id_delta(*hopf, representative(preset, g)); });
  }
  const Grading& G = preset->grading();
  if (G.kind == GroupKind::Z && T.find("a") >= 0 && T.find("b") >= 0 && T.find("c") >= 0 && T.find("d") >= 0)
    return monopole_lift(preset);
  if (G.kind == GroupKind::Z2) {
    std::vector<NcPoly> odd;
    for (size_t k = 0; k < T.size(); ++k)
      if (G.reduce(T.degree(static_cast<int>(k))) == 1) odd.push_back(mono(P, Word(1, static_cast<char>(k))));
    return TranslationLift(preset, [=](int g) {
      if (g == 0) return one_one(P);
      TensorElem out(P, "PP");
      for (const auto& x : odd) out += pp(P, x, x);
      return out;
    });
  }
  throw MathError("no closed-form translation lift for preset " + preset->name);
}

ConnForm connection_from_lift(const TranslationLift& tau) {
  const PresentationPtr& P = tau.preset()->P;
  return ConnForm(tau.preset(), [=](int g) {
    if (g == 0) return TensorElem(P, "PP");
    return tau(g) - one_one(P);
  });
}

ConnForm default_connection(const PresetPtr& preset) { return connection_from_lift(translation_lift(preset)); }

ConnForm podles_nonstrong_connection(const PresetPtr& preset) {
  ConnForm omega = default_connection(preset);
  const PresentationPtr& P = preset->P;
  NcPoly x2 = P->mul(P->gen("x"), P->gen("x"));
  return ConnForm(preset, [=](int g) {
    if (g == 0) return TensorElem(P, "PP");
    return omega(g) - Scalar(2) * d_universal(P, x2);
  });
}

ConnForm shifted_connection(const ConnForm& omega, const GroupFamily::Rule& shift) {
  const PresentationPtr& P = omega.preset()->P;
  return ConnForm(omega.preset(), [=](int g) {
    if (g == 0) return TensorElem(P, "PP");
    return omega(g) + shift(g);
  });
}

std::vector<int> group_range(const Grading& G, int range) {
  if (G.kind == GroupKind::Z2) return {0, 1};
  std::vector<int> out;
  for (int n = -range; n <= range; ++n) out.push_back(n);
  return out;
}

std::vector<NcPoly> generator_polys(const PresetPtr& preset) {
  std::vector<NcPoly> out;
  for (size_t k = 0; k < preset->table()->size(); ++k) out.push_back(mono(preset->P, Word(1, static_cast<char>(k))));
  return out;
}

// ---------------------------------------------------------------- J maps

SplittingS J4(const ConnForm& omega) {
  const PresentationPtr& P = omega.preset()->P;
  return SplittingS(omega.preset(), [=](const Word& w) {
    NcPoly p = mono(P, w);
    return pp(P, p, P->one()) + p * omega(word_deg(P, w));
  });
}

CovariantD J1(const SplittingS& s) {
  const PresentationPtr& P = s.preset()->P;
  return CovariantD(s.preset(), [=](const Word& w) { return pp(P, P->one(), mono(P, w)) - s(w); });
}

ProjectionPi J2(const CovariantD& D) {
  return ProjectionPi(D.preset(), [=](const TensorElem& t) { return t - left_apply(t, [&](const Word& v) { return D(v); }); });
}

ConnForm J3(const ProjectionPi& Pi, const TranslationLift& tau) {
  const PresentationPtr& P = tau.preset()->P;
  return ConnForm(tau.preset(), [=](int g) {
    return left_apply(tau(g), [&](const Word& r) { return Pi(d_universal(P, mono(P, r))); });
  });
}

Report roundtrip_check(const ConnForm& omega, const TranslationLift& tau, const std::vector<NcPoly>& test_polys,
                       const std::vector<int>& test_groups) {
  const PresetPtr& preset = omega.preset();
  const PresentationPtr& P = preset->P;
  const Grading& G = preset->grading();
  Report rep;
  rep.suite = "roundtrip";
  rep.preset = preset->name;

  SplittingS s = J4(omega);
  CovariantD D = J1(s);
  ProjectionPi Pi = J2(D);

  ConnForm omega2 = J3(J2(J1(J4(omega))), tau);
  for (int g : test_groups) {
    TensorElem diff = omega2(g) - omega(g);
    rep.add("J3 J2 J1 J4 = id on omega", diff.is_zero(), wit(diff), g_param(G, g));
  }
  SplittingS s2 = J4(J3(J2(J1(s)), tau));
  CovariantD D2 = J1(J4(J3(J2(D), tau)));
  FormMap Pi2(preset, [=](const TensorElem& t) { return J2(J1(J4(J3(Pi, tau))))(t); });
  for (const auto& p : test_polys) {
    TensorElem ds = s2(p) - s(p);
    rep.add("J4 J3 J2 J1 = id on s", ds.is_zero(), wit(ds), p_param(p));
    TensorElem dD = D2(p) - D(p);
    rep.add("J1 J4 J3 J2 = id on D", dD.is_zero(), wit(dD), p_param(p));
    TensorElem dp = d_universal(P, p);
    TensorElem dPi = Pi2(dp) - Pi(dp);
    rep.add("J2 J1 J4 J3 = id on Pi", dPi.is_zero(), wit(dPi), p_param(p));
  }
  return rep;
}

// ---------------------------------------------------------------- connection forms

Report verify_connection_form(const ConnForm& omega, bool strong, const std::vector<int>& test_groups,
                              const std::vector<NcPoly>& test_polys) {
  const PresetPtr& preset = omega.preset();
  const PresentationPtr& P = preset->P;
  const Grading& G = preset->grading();
  Report rep;
  rep.suite = "connection";
  rep.preset = preset->name;
  rep.parameters = Json{{"strong", strong}};

  TensorElem at_e = omega(0);
  rep.add("(i) omega(e) = 0", at_e.is_zero(), wit(at_e));
  for (int g : test_groups) {
    TensorElem w = omega(g);
    bool in_omega = membership(w, Space::Omega1P);
    rep.add("(ii) omega(g) in Omega^1 P", in_omega, in_omega ? "" : clip(w.to_string()), g_param(G, g));
    auto td = w.total_degree();
    bool colinear = td && *td == 0;
    rep.add("(iii) adjoint colinearity: total degree 0", colinear, colinear ? "" : clip(w.to_string()), g_param(G, g));
    TensorElem expect = TensorElem::pure(P, "PH", {P->one()}, {g}) - TensorElem::pure(P, "PH", {P->one()}, {0});
    TensorElem diff = chi_bar(w) - expect;
    rep.add("(iv) chi_bar(omega(g)) = 1 (x) g - 1 (x) e", diff.is_zero(), wit(diff), g_param(G, g));
  }
  if (strong) {
    for (const auto& p : test_polys) {
      for (const auto& [deg, comp] : P->normal_form(p).homogeneous_components()) {
        TensorElem t = d_universal(P, comp) - comp * omega(deg);
        bool strong_here = membership(t, Space::Omega1B_P);
        rep.add("(v) strongness: dp - p omega(deg p) in (Omega^1 B)P", strong_here,
                strong_here ? "" : clip(t.to_string()), p_param(comp));
      }
    }
  }
  return rep;
}

Report galois_certificate(const TranslationLift& tau, const std::vector<int>& groups) {
  const PresetPtr& preset = tau.preset();
  const PresentationPtr& P = preset->P;
  const Grading& G = preset->grading();
  Report rep;
  rep.suite = "galois";
  rep.preset = preset->name;
  for (int g : groups) {
    TensorElem t = tau(g);
    TensorElem m = contract_m(t) - TensorElem::pure(P, "P", {P->one()});
    rep.add("m(tau'(g)) = 1", m.is_zero(), wit(m), g_param(G, g));
    TensorElem c = chi_bar(t) - TensorElem::pure(P, "PH", {P->one()}, {g});
    rep.add("chi_bar(tau'(g)) = 1 (x) g", c.is_zero(), wit(c), g_param(G, g));
  }
  return rep;
}

TensorElem star_product(const TensorElem& tg, const TensorElem& th) {
  const PresentationPtr& P = tg.presentation();
  TensorElem out(P, "PP");
  for (const auto& [kg, cg] : tg.terms())
    for (const auto& [kh, ch] : th.terms())
      out += (cg * ch) * pp(P, P->nf_word(kh.p[0] + kg.p[0]), P->nf_word(kg.p[1] + kh.p[1]));
  return out;
}

Report translation_property_suite(const TranslationLift& tau, const SplittingS& s, int range, size_t degree_bound) {
  const PresetPtr& preset = tau.preset();
  const PresentationPtr& P = preset->P;
  const Grading& G = preset->grading();
  Report rep;
  rep.suite = "translation";
  rep.preset = preset->name;
  rep.parameters = Json{{"range", range}, {"degree_bound", degree_bound}};
  auto groups = group_range(G, range);
  for (int g : groups) {
    TensorElem t = tau(g);
    bool right = true, left = true;
    for (const auto& [k, c] : t.terms()) {
      right = right && G.reduce(t.p_slot_degree(k, 1)) == g;
      left = left && G.reduce(t.p_slot_degree(k, 0)) == G.neg(g);
    }
    rep.add("right slot degree is g", right, right ? "" : clip(t.to_string()), g_param(G, g));
    rep.add("left slot degree is g^-1", left, left ? "" : clip(t.to_string()), g_param(G, g));
    auto td = t.total_degree();
    rep.add("total degree 0", td && *td == 0, "", g_param(G, g));
    TensorElem m = contract_m(t) - TensorElem::pure(P, "P", {P->one()});
    rep.add("m(tau'(g)) = eps(g)", m.is_zero(), wit(m), g_param(G, g));
  }
  for (int g : groups) {
    for (int h : groups) {
      if (G.kind == GroupKind::Z && std::abs(g) + std::abs(h) > range) continue;
      TensorElem diff = star_product(tau(g), tau(h)) - tau(G.add(g, h));
      Json params{{"g", G.name(g)}, {"h", G.name(h)}};
      if (diff.is_zero()) {
        params["route"] = "exact";
        rep.add("antimultiplicativity tau(g)*tau(h) = tau(gh)", true, "", params);
        continue;
      }
      KernelDecision kd = in_ker_pi_B(diff, s, degree_bound);
      params["route"] = kd.routes();
      rep.add("antimultiplicativity tau(g)*tau(h) = tau(gh)", kd.member(), kd.member() ? "" : wit(diff),
              params);
    }
  }
  return rep;
}

// ---------------------------------------------------------------- ker pi_B

LiftR xi_tilde(const SplittingS& s) {
  return LiftR(s.preset(), [=](const TensorElem& t) { return left_apply(t, [&](const Word& r) { return s(r); }); });
}

std::string KernelDecision::routes() const {
  std::string out = std::string("r-hat:") + (by_r_hat ? "yes" : "no");
  if (span_decided)
    out += std::string(", span:") + (by_span ? "yes" : "no");
  else
    out += ", span:beyond-bound";
  out += std::string(", chi_bar:") + (by_canonical_map ? "yes" : "no");
  return out;
}

KernelDecision in_ker_pi_B(const TensorElem& t, const SplittingS& s, size_t degree_bound) {
  KernelDecision kd;
  kd.by_r_hat = xi_tilde(s)(t).is_zero();
  kd.by_canonical_map = chi_bar(t).is_zero();
  if (t.max_length() <= degree_bound) {
    kd.span_decided = true;
    kd.by_span = subspace_membership(t, SpanFamily::PKerMOverBP, degree_bound, s.preset()->coinvariant_generators).member;
  }
  return kd;
}

// ---------------------------------------------------------------- Psi / Xi

LiftR psi_lift(const ConnForm& omega) {
  const PresentationPtr& P = omega.preset()->P;
  return LiftR(omega.preset(), [=](const TensorElem& t) {
    TensorElem out(P, "PP");
    for (const auto& [k, c] : t.terms()) {
      NcPoly prod = P->nf_word(k.p[0] + k.p[1]);
      out += c * (pp(P, prod, P->one()) + prod * omega(word_deg(P, k.p[1])));
    }
    return out;
  });
}

ConnForm psi_tilde(const LiftR& r, const TranslationLift& tau) {
  const PresentationPtr& P = tau.preset()->P;
  return ConnForm(tau.preset(), [=](int g) {
    if (g == 0) return TensorElem(P, "PP");
    return r(tau(g)) - r(one_one(P));
  });
}

SplittingS xi(const LiftR& r) {
  const PresentationPtr& P = r.preset()->P;
  return SplittingS(r.preset(), [=](const Word& w) { return r(pp(P, P->one(), mono(P, w))); });
}

Report descent_report(const LiftR& r, unsigned seed, size_t samples, size_t depth) {
  const PresetPtr& preset = r.preset();
  const PresentationPtr& P = preset->P;
  Report rep;
  rep.suite = "descent";
  rep.preset = preset->name;
  rep.parameters = Json{{"seed", seed}, {"samples", samples}, {"depth", depth}};
  const auto& bs = preset->coinvariant_generators;
  if (bs.empty()) {
    rep.add("descent over B", false, "preset lists no coinvariant generators");
    return rep;
  }
  auto gens = generator_polys(preset);
  std::vector<NcPoly> outer{P->one()};
  outer.insert(outer.end(), gens.begin(), gens.end());

  auto test = [&](const NcPoly& p, const NcPoly& b, const NcPoly& p2) {
    return r(pp(P, P->mul(p, b), p2)) - r(pp(P, p, P->mul(b, p2)));
  };
  size_t checked = 0;
  std::string witness;
  for (const auto& p : outer)
    for (const auto& b : bs)
      for (const auto& p2 : outer) {
        ++checked;
        if (witness.empty() && !test(p, b, p2).is_zero())
          witness = "(" + p.to_string() + ", " + b.to_string() + ", " + p2.to_string() + ")";
      }
  rep.add("r(pb (x) p') = r(p (x) bp') on generator triples", witness.empty(), witness,
          Json{{"triples", checked}});

  std::mt19937 rng(seed);
  auto random_word = [&]() {
    std::uniform_int_distribution<size_t> len(0, depth);
    std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
    NcPoly w = P->one();
    for (size_t k = len(rng); k > 0; --k) w = P->mul(w, gens[pick(rng)]);
    return w;
  };
  std::uniform_int_distribution<size_t> pick_b(0, bs.size() - 1);
  witness.clear();
  for (size_t k = 0; k < samples; ++k) {
    NcPoly p = random_word(), b = bs[pick_b(rng)], p2 = random_word();
    if (witness.empty() && !test(p, b, p2).is_zero())
      witness = "(" + p.to_string() + ", " + b.to_string() + ", " + p2.to_string() + ")";
  }
  rep.add("r(pb (x) p') = r(p (x) bp') on random triples", witness.empty(), witness, Json{{"samples", samples}});
  return rep;
}

SplittingS unitalize(const SplittingS& s_bar, const std::vector<NcPoly>& test_polys, size_t degree_bound) {
  const PresetPtr& preset = s_bar.preset();
  const PresentationPtr& P = preset->P;
  std::vector<NcPoly> polys{P->one()};
  polys.insert(polys.end(), test_polys.begin(), test_polys.end());
  for (const auto& p : polys) {
    TensorElem t = s_bar(p) - pp(P, P->one(), p);
    if (!subspace_membership(t, SpanFamily::PKerMOverBP, degree_bound, preset->coinvariant_generators).member)
      throw MathError("unitalize: s(p) - 1 (x) p not in ker pi_B at bound " + std::to_string(degree_bound) +
                      " for p = " + p.to_string());
  }
  TensorElem defect = one_one(P) - s_bar(Word());
  return SplittingS(preset, [=](const Word& w) { return s_bar(w) + mono(P, w) * defect; });
}

// ---------------------------------------------------------------- integrals

Integral make_integral(const PresetPtr& preset, std::function<NcPoly(int)> factor) {
  require_hopf(preset);
  const PresentationPtr& P = preset->P;
  return [=](int g) {
    if (g == 0) return P->one();
    return P->mul(factor(g), representative(preset, g));
  };
}

Integral integral_i0(const PresetPtr& preset) {
  const PresentationPtr& P = preset->P;
  return make_integral(preset, [P](int) { return P->one(); });
}

Integral integral_from_connection(const ConnForm& omega) {
  const PresetPtr& preset = omega.preset();
  const HopfStructure& H = require_hopf(preset);
  const PresentationPtr& P = preset->P;
  SplittingS s = J4(omega);
  return [=, &H](int g) {
    TensorElem t = s(representative(preset, g));
    NcPoly out(P->table());
    for (const auto& [k, c] : t.terms()) out += (c * H.counit(mono(P, k.p[0]))) * mono(P, k.p[1]);
    return P->normal_form(out);
  };
}

ConnForm connection_from_integral(const PresetPtr& preset, const Integral& i) {
  auto hopf = preset->hopf;
  if (!hopf) throw MathError("preset " + preset->name + " has no Hopf structure");
  const PresentationPtr& P = preset->P;
  return ConnForm(preset, [=](int g) {
    NcPoly x = i(g);
    return s_id_delta(*hopf, x) - hopf->counit(x) * one_one(P);
  });
}

Report integral_checks(const PresetPtr& preset, const Integral& i, const std::vector<int>& groups) {
  const HopfStructure& H = require_hopf(preset);
  const PresentationPtr& P = preset->P;
  const Grading& G = preset->grading();
  Report rep;
  rep.suite = "integral";
  rep.preset = preset->name;
  NcPoly at_e = P->normal_form(i(0));
  rep.add("i(e) = 1", at_e == P->one(), at_e.to_string());
  Integral back = integral_from_connection(connection_from_integral(preset, i));
  for (int g : groups) {
    NcPoly v = P->normal_form(i(g));
    auto deg = v.degree_of();
    rep.add("i(g) has degree g", deg && G.reduce(*deg) == g, v.to_string(), g_param(G, g));
    GroupAlgebraElem pi = H.pi_I(v);
    bool is_g = pi.size() == 1 && pi.begin()->first == g && pi.begin()->second.is_one();
    rep.add("pi_I(i(g)) = g", is_g, group_algebra_string(G, pi), g_param(G, g));
    NcPoly diff = P->normal_form(back(g) - v);
    rep.add("integral -> connection -> integral = id", diff.is_zero(), wit(diff), g_param(G, g));
  }
  return rep;
}

TensorElem covariant_derivative(const SplittingS& s, const NcPoly& xi_poly) {
  const PresentationPtr& P = s.preset()->P;
  NcPoly x = P->normal_form(xi_poly);
  if (!x.degree_of()) throw MathError("covariant derivative of an inhomogeneous element: " + x.to_string());
  return pp(P, P->one(), x) - s(x);
}

// ---------------------------------------------------------------- gauge transformations

NcPoly unit_inverse(const Presentation& P, const NcPoly& u) {
  NcPoly v = P.normal_form(u);
  Scalar c = v.coeff(Word());
  if (c.is_zero()) throw MathError("not a unit of the form c(1 + nilpotent): " + v.to_string());
  Scalar cinv = c.inverse();
  // u = c (1 + N) with N = u/c - 1; the inverse is c^-1 sum (-N)^k.
  NcPoly N = cinv * v - P.one();
  NcPoly term = P.one(), sum = P.one();
  for (int k = 1; k <= 64; ++k) {
    term = P.mul(term, -N);
    if (term.is_zero()) return cinv * sum;
    sum += term;
  }
  throw MathError("not a unit of the form c(1 + nilpotent): " + v.to_string());
}

GaugeTransform::GaugeTransform(PresetPtr preset, NcPoly value_on_generator) : preset_(std::move(preset)) {
  const PresentationPtr& P = preset_->P;
  f1_ = P->normal_form(value_on_generator);
  if (f1_.degree_of() != std::optional<int>(0))
    throw MathError("gauge transformation value must have degree 0: " + f1_.to_string());
  f1_inv_ = unit_inverse(*P, f1_);
  if (preset_->grading().kind == GroupKind::Z2 && !(P->mul(f1_, f1_) == P->one()))
    throw MathError("gauge transformation on Z2 needs f.f(g)^2 = 1: " + f1_.to_string());
}

NcPoly GaugeTransform::f(int g) const {
  const PresentationPtr& P = preset_->P;
  g = preset_->grading().reduce(g);
  return g >= 0 ? P->pow(f1_, g) : P->pow(f1_inv_, -g);
}

NcPoly GaugeTransform::f_inv(int g) const { return f(-g); }

ConnForm gauge_form(const GaugeTransform& f, const ConnForm& omega) {
  const PresentationPtr& P = f.preset()->P;
  return ConnForm(f.preset(), [=](int g) {
    NcPoly fg = f.f(g), fi = f.f_inv(g);
    return fg * omega(g) * fi + fg * d_universal(P, fi);
  });
}

SplittingS gauge_split(const GaugeTransform& f, const SplittingS& s) {
  const PresentationPtr& P = f.preset()->P;
  return SplittingS(f.preset(), [=](const Word& w) {
    int g = word_deg(P, w);
    return s(P->mul(mono(P, w), f.f(g))) * f.f_inv(g);
  });
}

CovariantD gauge_D(const GaugeTransform& f, const CovariantD& D) {
  const PresentationPtr& P = f.preset()->P;
  return CovariantD(f.preset(), [=](const Word& w) {
    int g = word_deg(P, w);
    return D(P->mul(mono(P, w), f.f(g))) * f.f_inv(g);
  });
}

ProjectionPi gauge_Pi(const GaugeTransform& f, const ProjectionPi& Pi) {
  const PresentationPtr& P = f.preset()->P;
  return ProjectionPi(f.preset(), [=](const TensorElem& t) {
    return left_apply(t, [&](const Word& v) {
      int g = word_deg(P, v);
      NcPoly fg = f.f(g), fi = f.f_inv(g);
      NcPoly vf = P->mul(mono(P, v), fg);
      return Pi(d_universal(P, vf)) * fi + vf * d_universal(P, fi);
    });
  });
}

Report gauge_suite(const GaugeTransform& f, const ConnForm& omega, const TranslationLift& tau,
                   const std::vector<int>& groups, GaugeExpectation expect) {
  const PresetPtr& preset = f.preset();
  const PresentationPtr& P = preset->P;
  const Grading& G = preset->grading();
  auto gens = generator_polys(preset);
  std::vector<NcPoly> polys{P->one()};
  polys.insert(polys.end(), gens.begin(), gens.end());

  ConnForm fw = gauge_form(f, omega);
  Report rep = verify_connection_form(fw, true, groups, polys);
  rep.suite = "gauge";

  if (expect != GaugeExpectation::Any) {
    bool all_equal = true;
    std::string witness;
    for (int g : groups) {
      TensorElem diff = fw(g) - omega(g);
      if (!diff.is_zero() && all_equal) {
        all_equal = false;
        witness = G.name(g) + ": " + wit(diff);
      }
    }
    if (expect == GaugeExpectation::Trivial)
      rep.add("f acts trivially on omega", all_equal, witness);
    else
      rep.add("f . omega differs from omega", !all_equal, all_equal ? "equal on all tested g" : "");
  }

  SplittingS s = J4(omega);
  CovariantD D = J1(s);
  ProjectionPi Pi = J2(D);
  // alpha_i = J o alpha_4 o J^-1: transport to connection forms, act there, transport back.
  SplittingS s_via = J4(gauge_form(f, J3(J2(J1(s)), tau)));
  CovariantD D_via = J1(J4(gauge_form(f, J3(J2(D), tau))));
  ProjectionPi Pi_via = J2(J1(J4(gauge_form(f, J3(Pi, tau)))));
  SplittingS fs = gauge_split(f, s);
  CovariantD fD = gauge_D(f, D);
  ProjectionPi fPi = gauge_Pi(f, Pi);
  for (const auto& p : polys) {
    TensorElem a1 = fs(p) - s_via(p);
    rep.add("gauge on s matches J4 o gauge on omega", a1.is_zero(), wit(a1), p_param(p));
    TensorElem a2 = fD(p) - D_via(p);
    rep.add("gauge on D matches J1 J4 o gauge on omega", a2.is_zero(), wit(a2), p_param(p));
    TensorElem dp = d_universal(P, p);
    TensorElem a3 = fPi(dp) - Pi_via(dp);
    rep.add("gauge on Pi matches J2 J1 J4 o gauge on omega", a3.is_zero(), wit(a3), p_param(p));
  }
  return rep;
}

Report gauge_automorphism(const GaugeTransform& f) {
  const PresetPtr& preset = f.preset();
  const PresentationPtr& P = preset->P;
  Report rep;
  rep.suite = "gauge-automorphism";
  rep.preset = preset->name;
  auto F = [&](const NcPoly& p, bool inverse) {
    NcPoly out(P->table());
    for (const auto& [g, comp] : P->normal_form(p).homogeneous_components())
      out += P->mul(comp, inverse ? f.f_inv(g) : f.f(g));
    return P->normal_form(out);
  };
  NcPoly f1 = F(P->one(), false);
  rep.add("F(1) = 1", f1 == P->one(), f1.to_string());
  auto gens = generator_polys(preset);
  for (const auto& x : gens) {
    NcPoly fx = F(x, false);
    rep.add("F preserves degree", fx.degree_of() == x.degree_of(), fx.to_string(), p_param(x));
    NcPoly back = F(fx, true) - x;
    rep.add("F^-1 F = id", back.is_zero(), wit(back), p_param(x));
    for (const auto& b : preset->coinvariant_generators) {
      NcPoly diff = F(P->mul(b, x), false) - P->mul(b, fx);
      rep.add("F(b p) = b F(p)", diff.is_zero(), wit(diff), Json{{"b", b.to_string()}, {"p", x.to_string()}});
    }
    for (const auto& y : gens) {
      NcPoly diff = F(P->mul(x, y), false) - P->mul(fx, F(y, false));
      rep.add("F(xy) = F(x) F(y)", diff.is_zero(), wit(diff), Json{{"x", x.to_string()}, {"y", y.to_string()}});
    }
  }
  return rep;
}

}  // namespace hopfgal
