#include "doctest.h"
#include "gen.hpp"
#include "hopfgal/connection.hpp"
#include "hopfgal/hopf.hpp"

using namespace hopfgal;

namespace {

TensorElem PP(const PresetPtr& p, const char* text) { return TensorElem::parse(p->P, "PP", text); }

}  // namespace

TEST_CASE("coaction on the super sphere") {
  auto P = load_preset("super-s3");
  CHECK(coaction(P->P, P->gen("a")) == TensorElem::parse(P->P, "PH", "a (x) z"));
  CHECK(coaction(P->P, P->gen("l-")) == TensorElem::parse(P->P, "PH", "l- (x) z^-1"));
  CHECK(coaction(P->P, P->parse("a*b")) == TensorElem::parse(P->P, "PH", "a*b (x) 1"));
}

TEST_CASE("adjoint coaction of group elements") {
  auto P = load_preset("super-s3");
  GroupHopf H{P->grading()};
  CHECK(H.ad_R(P->P, 1) == TensorElem::parse(P->P, "HH", "z (x) 1"));
  CHECK(H.ad_R(P->P, -2) == TensorElem::parse(P->P, "HH", "z^-2 (x) 1"));
  auto Z = load_preset("podles-eq");
  GroupHopf H2{Z->grading()};
  CHECK(H2.ad_R(Z->P, 1) == TensorElem::parse(Z->P, "HH", "g (x) 1"));
}

TEST_CASE("projection of the quantum group onto the torus") {
  auto S = load_preset("slq2");
  const HopfStructure& H = *S->hopf;
  GroupAlgebraElem a3 = H.pi_I(S->parse("alpha^3"));
  CHECK(a3.size() == 1);
  CHECK(a3.at(3) == Scalar(1));
  CHECK(H.pi_I(S->gen("beta")).empty());
  GroupAlgebraElem ad = H.pi_I(S->parse("alpha*delta"));
  CHECK(ad.size() == 1);
  CHECK(ad.at(0) == Scalar(1));
}

TEST_CASE("Hopf axioms hold on the built-in Hopf presets") {
  for (const char* name : {"slq2", "classical-sl2"}) {
    auto P = load_preset(name);
    REQUIRE(P->hopf);
    CHECK(P->hopf->verify().empty());
  }
}

TEST_CASE("universal differential") {
  auto P = load_preset("super-s3");
  CHECK(d_universal(P->P, P->P->one()).is_zero());
  CHECK(d_universal(P->P, P->gen("a")) == PP(P, "1 (x) a - a (x) 1"));
}

TEST_CASE("multiplication map") {
  auto P = load_preset("super-s3");
  CHECK(contract_m(PP(P, "1 (x) a - a (x) 1")).is_zero());
  TensorElem tz = translation_lift(P)(1);
  TensorElem expect = P->parse("1 + l+*l-") * PP(P, "d (x) a - b (x) c");
  CHECK(tz == expect);
  CHECK(contract_m(tz) == TensorElem::pure(P->P, "P", {P->P->one()}));
  auto Z = load_preset("podles-eq");
  CHECK(contract_m(PP(Z, "x (x) x + y (x) y + z (x) z")) == TensorElem::pure(Z->P, "P", {Z->P->one()}));
}

TEST_CASE("canonical map on translation lifts") {
  auto P = load_preset("super-s3");
  TranslationLift tau = translation_lift(P);
  CHECK(chi_bar(tau(1)) == TensorElem::parse(P->P, "PH", "1 (x) z"));
  TensorElem tm = P->parse("1 + l+*l-") * PP(P, "a (x) d - c (x) b");
  CHECK(tau(-1) == tm);
  CHECK(chi_bar(tm) == TensorElem::parse(P->P, "PH", "1 (x) z^-1"));
  CHECK(chi_bar(PP(P, "1 (x) 1")) == TensorElem::parse(P->P, "PH", "1 (x) 1"));
}

TEST_CASE("membership in the spaces of one-forms") {
  auto P = load_preset("super-s3");
  CHECK(membership(d_universal(P->P, P->parse("a*c + l+")), Space::Omega1P));
  TensorElem sa = J4(default_connection(P))(P->gen("a"));
  CHECK(sa == P->parse("1 + l+*l-") * PP(P, "a*d (x) a - a*b (x) c"));
  CHECK(membership(sa, Space::BotP));
  auto Z = load_preset("podles-eq");
  TensorElem st = J4(podles_nonstrong_connection(Z))(Z->gen("x"));
  CHECK(!membership(st, Space::BotP));
}

TEST_CASE("property: Leibniz rule for the universal differential") {
  testgen::Gen g(41);
  for (const char* name : {"super-s3", "slq2"}) {
    auto P = load_preset(name);
    for (int t = 0; t < 40; ++t) {
      NcPoly x = P->P->normal_form(g.poly(P->table(), 2, 2)), y = P->P->normal_form(g.poly(P->table(), 2, 2));
      TensorElem lhs = d_universal(P->P, P->P->mul(x, y));
      TensorElem rhs = x * d_universal(P->P, y) + d_universal(P->P, x) * y;
      CHECK(lhs == rhs);
      CHECK(contract_m(lhs).is_zero());
    }
  }
}

TEST_CASE("property: coaction is multiplicative and counital on homogeneous elements") {
  testgen::Gen g(42);
  auto P = load_preset("super-s3");
  for (int t = 0; t < 60; ++t) {
    int d1 = g.integer(-2, 2), d2 = g.integer(-2, 2);
    NcPoly x = P->P->normal_form(g.homogeneous(P, d1, 3)), y = P->P->normal_form(g.homogeneous(P, d2, 3));
    if (x.is_zero() || y.is_zero()) continue;
    TensorElem lhs = coaction(P->P, P->P->mul(x, y));
    TensorElem rhs = coaction(P->P, x).factorwise(coaction(P->P, y));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("property: antipode and counit axioms on random elements") {
  testgen::Gen g(43);
  auto S = load_preset("slq2");
  const HopfStructure& H = *S->hopf;
  for (int t = 0; t < 25; ++t) {
    NcPoly x = S->P->normal_form(g.poly(S->table(), 2, 3));
    TensorElem dx = H.coproduct(x);
    // m (S (x) id) Delta = eps 1 and (eps (x) id) Delta = id.
    NcPoly left(S->table()), right(S->table());
    for (const auto& [k, c] : dx.terms()) {
      NcPoly l = S->P->nf_word(k.p[0]), r = S->P->nf_word(k.p[1]);
      left += c * S->P->mul(H.antipode(l), r);
      right += (c * H.counit(l)) * r;
    }
    CHECK(S->P->normal_form(left) == S->P->scalar(H.counit(x)));
    CHECK(S->P->normal_form(right) == x);
  }
}

TEST_CASE("property: canonical map of a pure tensor tracks the right degree") {
  testgen::Gen g(44);
  auto P = load_preset("super-s3");
  for (int t = 0; t < 40; ++t) {
    int d = g.integer(-2, 2);
    NcPoly l = P->P->normal_form(g.poly(P->table(), 2, 2));
    NcPoly r = P->P->normal_form(g.homogeneous(P, d, 3));
    if (l.is_zero() || r.is_zero()) continue;
    TensorElem c = chi_bar(TensorElem::pure(P->P, "PP", {l, r}));
    for (const auto& [k, coef] : c.terms()) CHECK(k.h[0] == d);
  }
}
