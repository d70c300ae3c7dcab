#include "doctest.h"
#include "gen.hpp"
#include "hopfgal/connection.hpp"

using namespace hopfgal;

namespace {

TensorElem PP(const PresetPtr& p, const char* text) { return TensorElem::parse(p->P, "PP", text); }

// Closed-form translation lift on the super sphere, written out from the binomial formula:
// tau(z^n) = (1 + n l+ l-) sum_k C(n,k) d^{n-k} (-b)^k (x) a^{n-k} c^k, and the mirror for z^-n.
TensorElem super_tau(const PresetPtr& P, int n) {
  const auto& A = P->P;
  int m = std::abs(n);
  NcPoly l1 = n >= 0 ? P->gen("d") : P->gen("a"), l2 = n >= 0 ? -P->gen("b") : -P->gen("c");
  NcPoly r1 = n >= 0 ? P->gen("a") : P->gen("d"), r2 = n >= 0 ? P->gen("c") : P->gen("b");
  std::vector<std::pair<NcPoly, NcPoly>> terms;
  for (int k = 0; k <= m; ++k) {
    NcPoly left = A->scalar(Scalar(GaussRat(mpq_class(binomial(m, k)), 0))) * A->mul(A->pow(l1, m - k), A->pow(l2, k));
    terms.emplace_back(A->normal_form(left), A->mul(A->pow(r1, m - k), A->pow(r2, k)));
  }
  NcPoly factor = A->one() + A->scalar(Scalar(m)) * P->parse("l+*l-");
  return factor * TensorElem::pairs(A, terms);
}

std::vector<NcPoly> gens_and_one(const PresetPtr& P) {
  std::vector<NcPoly> v{P->P->one()};
  for (const auto& g : generator_polys(P)) v.push_back(g);
  return v;
}

bool all_pass(const Report& r) {
  if (!r.pass()) MESSAGE(r.to_text());
  return r.pass();
}

}  // namespace

TEST_CASE("super translation lift matches the binomial formula") {
  auto P = load_preset("super-s3");
  TranslationLift tau = translation_lift(P);
  for (int n = -3; n <= 3; ++n) CHECK(tau(n) == super_tau(P, n));
  CHECK(tau(0) == PP(P, "1 (x) 1"));
}

TEST_CASE("antimultiplicativity is exact at lift level for same-sign pairs on the super sphere") {
  auto P = load_preset("super-s3");
  TranslationLift tau = translation_lift(P);
  CHECK(star_product(tau(1), tau(1)) == super_tau(P, 2));
  CHECK(star_product(tau(-1), tau(-1)) == super_tau(P, -2));
  CHECK(star_product(tau(1), tau(2)) == super_tau(P, 3));
  CHECK(contract_m(tau(2)) == TensorElem::pure(P->P, "P", {P->P->one()}));
}

TEST_CASE("Galois certificates") {
  for (const char* name : {"super-s3", "slq2", "podles-eq"}) {
    auto P = load_preset(name);
    CHECK(all_pass(galois_certificate(translation_lift(P), group_range(P->grading(), 3))));
  }
  auto S = load_preset("slq2");
  CHECK(translation_lift(S)(1) == PP(S, "delta (x) alpha - q*beta (x) gamma"));
}

TEST_CASE("translation-map identities on the super sphere") {
  auto P = load_preset("super-s3");
  TranslationLift tau = translation_lift(P);
  Report r = translation_property_suite(tau, J4(connection_from_lift(tau)), 3, 6);
  CHECK(all_pass(r));
}

TEST_CASE("splitting of the super monopole") {
  auto P = load_preset("super-s3");
  SplittingS s = J4(default_connection(P));
  CHECK(s(P->gen("a")) == P->parse("1 + l+*l-") * PP(P, "a*d (x) a - a*b (x) c"));
  CHECK(s(P->P->one()) == PP(P, "1 (x) 1"));
  TensorElem Da = J1(s)(P->gen("a"));
  CHECK(Da == PP(P, "1 (x) a") - s(P->gen("a")));
  CHECK(membership(Da, Space::Omega1B_P));
}

TEST_CASE("connection-form axioms") {
  auto P = load_preset("super-s3");
  CHECK(all_pass(verify_connection_form(default_connection(P), true, group_range(P->grading(), 3), gens_and_one(P))));
  auto Z = load_preset("podles-eq");
  CHECK(all_pass(verify_connection_form(default_connection(Z), true, {0, 1}, gens_and_one(Z))));
  Report bad = verify_connection_form(podles_nonstrong_connection(Z), true, {0, 1}, gens_and_one(Z));
  CHECK(!bad.pass());
  for (const auto& f : bad.failures()) CHECK(f.rfind("(v)", 0) == 0);
  // The zero family only tested at e passes vacuously.
  ConnForm zero(Z, [Z](int) { return TensorElem(Z->P, "PP"); });
  CHECK(verify_connection_form(zero, false, {0}, {}).pass());
}

TEST_CASE("round trips through the four descriptions") {
  for (const char* name : {"super-s3", "slq2"}) {
    auto P = load_preset(name);
    CHECK(all_pass(roundtrip_check(default_connection(P), translation_lift(P), gens_and_one(P), {-2, -1, 1, 2})));
  }
  auto Z = load_preset("podles-eq");
  CHECK(all_pass(roundtrip_check(default_connection(Z), translation_lift(Z), gens_and_one(Z), {1})));
}

TEST_CASE("unitalization of a shifted splitting") {
  auto P = load_preset("super-s3");
  SplittingS s = J4(default_connection(P));
  TensorElem w = d_universal(P->P, P->parse("a*b"));
  SplittingS s_bar(P, [s, w, P](const Word& u) { return s(u) + P->P->nf_word(u) * w; });
  CHECK(s_bar(P->P->one()) == PP(P, "1 (x) 1") + w);
  SplittingS s_t = unitalize(s_bar, gens_and_one(P), 6);
  CHECK(s_t(P->P->one()) == PP(P, "1 (x) 1"));
  TranslationLift tau = translation_lift(P);
  ConnForm omega = J3(J2(J1(s_t)), tau);
  CHECK(all_pass(verify_connection_form(omega, true, {-2, -1, 0, 1, 2}, gens_and_one(P))));
  // Already unital: unchanged on generators.
  SplittingS same = unitalize(s, gens_and_one(P), 6);
  for (const auto& g : gens_and_one(P)) CHECK(same(g) == s(g));
}

TEST_CASE("Psi and Xi") {
  auto P = load_preset("super-s3");
  ConnForm omega = default_connection(P);
  TranslationLift tau = translation_lift(P);
  LiftR r = psi_lift(omega);
  ConnForm back = psi_tilde(r, tau);
  for (int g : {-2, -1, 0, 1, 2}) CHECK(back(g) == omega(g));
  NcPoly a = P->gen("a"), ab = P->parse("a*b"), c = P->gen("c");
  CHECK(r(TensorElem::pure(P->P, "PP", {P->P->mul(a, ab), c})) == r(TensorElem::pure(P->P, "PP", {a, P->P->mul(ab, c)})));
  CHECK(xi(r)(P->P->one()) == PP(P, "1 (x) 1"));
  CHECK(all_pass(descent_report(r, 7, 10, 3)));
}

TEST_CASE("integrals on the quantum group") {
  auto S = load_preset("slq2");
  Integral i0 = integral_i0(S);
  ConnForm w0 = connection_from_integral(S, i0);
  // S(alpha) d(alpha) + S(beta) d(gamma) from Delta(alpha) = alpha (x) alpha + beta (x) gamma.
  CHECK(w0(1) == PP(S, "delta (x) alpha - q*beta (x) gamma - 1 (x) 1"));
  CHECK(w0(0).is_zero());
  CHECK(all_pass(integral_checks(S, i0, {-2, -1, 0, 1, 2})));
  Integral back = integral_from_connection(w0);
  for (int g : {-2, -1, 0, 1, 2}) CHECK(back(g) == i0(g));

  Integral i1 = make_integral(S, [S](int n) { return n > 0 ? S->parse("1 - q^-1*beta*gamma") : S->P->one(); });
  CHECK(all_pass(integral_checks(S, i1, {-2, -1, 0, 1, 2})));
  ConnForm w1 = connection_from_integral(S, i1);
  CHECK(!(w1(1) == w0(1)));
  CHECK(all_pass(verify_connection_form(w1, true, {-2, -1, 0, 1, 2}, gens_and_one(S))));
}

TEST_CASE("covariant derivative") {
  auto P = load_preset("super-s3");
  SplittingS s = J4(default_connection(P));
  TensorElem na = covariant_derivative(s, P->gen("a"));
  CHECK(na == PP(P, "1 (x) a") - P->parse("1 + l+*l-") * PP(P, "a*d (x) a - a*b (x) c"));
  CHECK(membership(na, Space::Omega1B_P));
  CHECK(covariant_derivative(s, P->P->one()).is_zero());
  TensorElem nl = covariant_derivative(s, P->gen("l+"));
  for (const auto& [k, c] : nl.terms()) CHECK(nl.p_slot_degree(k, 1) == 1);
}

TEST_CASE("gauge transformations") {
  auto P = load_preset("super-s3");
  ConnForm omega = default_connection(P);
  TranslationLift tau = translation_lift(P);
  GaugeTransform f(P, P->parse("1 + l+*l-"));
  CHECK(f.f(1) == P->parse("1 + l+*l-"));
  CHECK(f.f(-1) == P->parse("1 - l+*l-"));
  CHECK(f.f_inv(1) == f.f(-1));
  CHECK(all_pass(gauge_suite(f, omega, tau, {-2, -1, 0, 1, 2}, GaugeExpectation::Nontrivial)));
  CHECK(all_pass(gauge_automorphism(f)));
  // F(a) = a f(z).
  CHECK(P->P->mul(P->gen("a"), f.f(1)) == P->parse("a + a*l+*l-"));

  GaugeTransform scalar(P, P->P->scalar(Scalar(5)));
  CHECK(all_pass(gauge_suite(scalar, omega, tau, {-2, -1, 0, 1, 2}, GaugeExpectation::Trivial)));
  GaugeTransform identity(P, P->P->one());
  ConnForm same = gauge_form(identity, omega);
  for (int g : {-2, -1, 1, 2}) CHECK(same(g) == omega(g));
  CHECK_THROWS_AS(GaugeTransform(P, P->gen("a")), MathError);
}

TEST_CASE("ker pi_B decisions") {
  auto P = load_preset("super-s3");
  SplittingS s = J4(default_connection(P));
  TensorElem inside = TensorElem::pure(P->P, "PP", {P->gen("a"), P->P->one()}) * P->parse("a*b") -
                      TensorElem::pure(P->P, "PP", {P->parse("a*a*b"), P->P->one()});
  KernelDecision k1 = in_ker_pi_B(inside, s, 6);
  CHECK(k1.member());
  KernelDecision k2 = in_ker_pi_B(PP(P, "a (x) d"), s, 6);
  CHECK(!k2.member());
  CHECK(!k2.by_r_hat);
}

TEST_CASE("property: splitting is unital, left B-linear, colinear and splits multiplication") {
  testgen::Gen g(51);
  for (const char* name : {"super-s3", "slq2", "podles-eq"}) {
    auto P = load_preset(name);
    SplittingS s = J4(default_connection(P));
    const Grading& G = P->grading();
    for (int t = 0; t < 20; ++t) {
      int d = G.reduce(g.integer(-2, 2));
      NcPoly p = P->P->normal_form(g.homogeneous(P, d, 3));
      if (p.is_zero()) continue;
      TensorElem sp = s(p);
      CHECK(contract_m(sp) == TensorElem::pure(P->P, "P", {p}));
      for (const auto& [k, c] : sp.terms()) {
        CHECK(G.reduce(sp.p_slot_degree(k, 0)) == 0);
        CHECK(G.reduce(sp.p_slot_degree(k, 1)) == d);
      }
      const NcPoly& b = P->coinvariant_generators.at(g.integer(0, static_cast<int>(P->coinvariant_generators.size()) - 1));
      CHECK(s(P->P->mul(b, p)) == P->P->normal_form(b) * sp);
    }
  }
}

TEST_CASE("property: gauge action composes and inverts") {
  testgen::Gen g(52);
  auto P = load_preset("super-s3");
  ConnForm omega = default_connection(P);
  for (int t = 0; t < 5; ++t) {
    Scalar c1 = Scalar(g.integer(1, 4)), c2 = Scalar(g.integer(1, 4));
    GaugeTransform f(P, P->P->scalar(c1) * P->parse("1 + l+*l-"));
    GaugeTransform h(P, P->P->scalar(c2) * P->parse("1 - 2*l+*l-"));
    GaugeTransform fh(P, P->P->mul(f.f(1), h.f(1)));
    GaugeTransform finv(P, f.f_inv(1));
    ConnForm a = gauge_form(f, gauge_form(h, omega));
    ConnForm b = gauge_form(fh, omega);
    ConnForm back = gauge_form(finv, gauge_form(f, omega));
    for (int n : {-2, -1, 1, 2}) {
      CHECK(a(n) == b(n));
      CHECK(back(n) == omega(n));
    }
  }
}
