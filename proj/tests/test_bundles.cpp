#include "doctest.h"
#include "gen.hpp"
#include "hopfgal/bundles.hpp"

using namespace hopfgal;

namespace {

bool all_pass(const Report& r) {
  if (!r.pass()) MESSAGE(r.to_text());
  return r.pass();
}

NcPoly num(const PresetPtr& P, const mpz_class& z) { return P->P->scalar(Scalar(GaussRat(mpq_class(z), 0))); }

// P_{-n} Q_{-n}^T written out from the generator column and the binomial row:
// P = (1 + n l+ l-)(a^{n-k} c^k, a^{n-1-k} c^k l+), Q = (C(n,l) d^{n-l} (-b)^l, 0, ..., 0).
ScaledMatrix super_E_minus(const PresetPtr& P, int n) {
  const auto& A = P->P;
  NcPoly a = P->gen("a"), c = P->gen("c"), d = P->gen("d"), mb = -P->gen("b"), lp = P->gen("l+");
  NcPoly factor = A->one() + num(P, n) * P->parse("l+*l-");
  std::vector<NcPoly> col, row;
  for (int k = 0; k <= n; ++k) col.push_back(A->mul(factor, A->mul(A->pow(a, n - k), A->pow(c, k))));
  for (int k = 0; k < n; ++k) col.push_back(A->mul(factor, A->mul(A->mul(A->pow(a, n - 1 - k), A->pow(c, k)), lp)));
  for (int l = 0; l <= n; ++l) row.push_back(A->mul(num(P, binomial(n, l)), A->mul(A->pow(d, n - l), A->pow(mb, l))));
  for (int l = 0; l < n; ++l) row.push_back(NcPoly(P->table()));
  std::vector<std::vector<NcPoly>> rows;
  for (const auto& x : col) {
    std::vector<NcPoly> r;
    for (const auto& y : row) r.push_back(A->mul(x, y));
    rows.push_back(r);
  }
  return ScaledMatrix::from_rows(A, rows);
}

ProjectorCert default_projector(const PresetPtr& P, int mu) {
  TranslationLift tau = translation_lift(P);
  return projector_from_splitting(J4(connection_from_lift(tau)), line_bundle_generators(P, mu));
}

}  // namespace

TEST_CASE("line-bundle generators") {
  auto P = load_preset("super-s3");
  auto gm = line_bundle_generators(P, -1).generators;
  REQUIRE(gm.size() == 3);
  CHECK(gm[0] == P->gen("a"));
  CHECK(gm[1] == P->gen("c"));
  CHECK(gm[2] == P->gen("l+"));
  auto gp = line_bundle_generators(P, 1).generators;
  REQUIRE(gp.size() == 3);
  CHECK(gp[0] == P->gen("d"));
  CHECK(gp[1] == P->gen("b"));
  CHECK(gp[2] == P->gen("l-"));
  auto g0 = line_bundle_generators(P, 0).generators;
  REQUIRE(g0.size() == 1);
  CHECK(g0[0] == P->P->one());
  for (int n = 1; n <= 4; ++n) {
    CHECK(line_bundle_generators(P, -n).generators.size() == static_cast<size_t>(2 * n + 1));
    CHECK(all_pass(generator_independence(line_bundle_generators(P, -n))));
    CHECK(all_pass(generator_independence(line_bundle_generators(P, n))));
  }
}

TEST_CASE("projector from the monopole splitting") {
  auto P = load_preset("super-s3");
  for (int n = 1; n <= 3; ++n) {
    ProjectorCert cert = default_projector(P, -n);
    std::string w;
    CHECK_MESSAGE(cert.E.equals(super_E_minus(P, n), &w), w);
    CHECK(all_pass(verify_projector(cert.E, line_bundle_generators(P, -n))));
  }
  ProjectorCert e0 = default_projector(P, 0);
  CHECK(e0.E.equals(ScaledMatrix::identity(P->P, 1)));
  for (int n = 1; n <= 4; ++n) {
    CHECK(all_pass(verify_projector(default_projector(P, n).E, line_bundle_generators(P, n))));
  }
}

TEST_CASE("hermitian projectors") {
  auto P = load_preset("super-s3");
  ProjectorCert h = hermitian_projector(P, -1);
  ScaledMatrix F = ScaledMatrix::column(P->P, {P->gen("a"), P->gen("c"), P->gen("l+")}) *
                   ScaledMatrix::row(P->P, {P->gen("d"), -P->gen("b"), -P->gen("l-")});
  std::string w;
  CHECK_MESSAGE(h.F->equals(F, &w), w);
  for (int n = 1; n <= 4; ++n) {
    CHECK(all_pass(verify_hermitian(hermitian_projector(P, -n))));
    CHECK(all_pass(verify_hermitian(hermitian_projector(P, n))));
  }
  ProjectorCert u2 = hermitian_projector(P, -2);
  CHECK((u2.U->adjoint() * *u2.U).equals(ScaledMatrix::identity(P->P, 1)));

  auto S = load_preset("slq2");
  ProjectorCert hs = hermitian_projector(S, -1);
  ScaledMatrix Fs = ScaledMatrix::column(S->P, {S->gen("alpha"), S->gen("gamma")}) *
                    ScaledMatrix::row(S->P, {S->gen("delta"), S->parse("-q*beta")});
  CHECK(hs.F->equals(Fs));
  CHECK((Fs * Fs).equals(Fs));
}

TEST_CASE("module isomorphism certificates") {
  auto P = load_preset("super-s3");
  for (int mu : {-3, -2, -1, 1, 2, 3}) CHECK(all_pass(line_bundle_suite(P, mu)));
  ScaledMatrix I = ScaledMatrix::identity(P->P, 3);
  CHECK(verify_module_iso(I, I, I, I).pass());

  // Negative control: zero one entry of L.
  LineBundleModule M = line_bundle_generators(P, -1);
  TranslationLift tau = translation_lift(P);
  ProjectorCert E = default_projector(P, -1);
  ProjectorCert H = hermitian_projector(P, -1);
  IsoWitness iw = iso_witnesses(ScaledMatrix::column(P->P, M.generators), splitting_row(tau, M), *H.U);
  CHECK(verify_module_iso(E.E, *H.F, iw.L, iw.Lt).pass());
  iw.L.set_core(0, 0, NcPoly(P->table()));
  Report bad = verify_module_iso(E.E, *H.F, iw.L, iw.Lt);
  CHECK(!bad.pass());
  auto f = bad.failures();
  CHECK(std::find(f.begin(), f.end(), "E L L~ = E") != f.end());
}

TEST_CASE("freeness of the sum of the spin modules") {
  for (const char* name : {"super-s3", "slq2", "classical-sl2"}) CHECK(all_pass(freeness_certificate(load_preset(name))));
  auto P = load_preset("super-s3");
  FreenessData fd = freeness_data(P);
  CHECK(fd.E.equals(ScaledMatrix::identity(P->P, 2)));
  CHECK(fd.F.rows() == 6);
  CHECK_THROWS_AS(freeness_data(load_preset("podles-eq")), MathError);
}

TEST_CASE("coinvariant generation and auxiliary idempotents") {
  for (const char* name : {"super-s3", "podles-eq", "slq2"}) {
    auto P = load_preset(name);
    CHECK(all_pass(coinvariant_generation_check(P, 4)));
    CHECK(all_pass(coinvariant_generation_check(P, 0)));
  }
  auto Z = load_preset("podles-eq");
  CHECK(all_pass(auxiliary_idempotents(Z)));
  CHECK(all_pass(nonstrong_witness(Z)));
}

TEST_CASE("rational square roots") {
  CHECK(rational_sqrt(mpq_class(9, 4)) == mpq_class(3, 2));
  CHECK(!rational_sqrt(mpq_class(2)).has_value());
  CHECK(rational_sqrt(mpq_class(1)) == mpq_class(1));
}

TEST_CASE("scaled matrices with irrational weights") {
  auto P = load_preset("super-s3");
  // (sqrt2 a, c) (sqrt2 d, -b): middle weights 2*2 = 4 are squares.
  ScaledMatrix col = ScaledMatrix::column(P->P, {P->gen("a"), P->gen("c")}, {2, 1});
  ScaledMatrix row = ScaledMatrix::row(P->P, {P->gen("d"), -P->gen("b")}, {2, 1});
  ScaledMatrix prod = row * col;
  CHECK(prod.equals(ScaledMatrix::from_rows(P->P, {{P->parse("2*a*d - b*c")}})));
  ScaledMatrix odd = ScaledMatrix::row(P->P, {P->gen("d"), -P->gen("b")}, {3, 1});
  CHECK_THROWS_AS(odd * col, MathError);
  CHECK(col.adjoint().adjoint().equals(col));
}

TEST_CASE("property: adjoint reverses products and E g = g for random B-combinations") {
  testgen::Gen g(61);
  auto P = load_preset("super-s3");
  const auto& A = P->P;
  auto rnd = [&](size_t r, size_t c) {
    std::vector<std::vector<NcPoly>> rows(r, std::vector<NcPoly>(c, NcPoly(P->table())));
    for (auto& row : rows)
      for (auto& x : row) x = A->normal_form(g.poly(P->table(), 2, 2));
    return ScaledMatrix::from_rows(A, rows);
  };
  for (int t = 0; t < 15; ++t) {
    ScaledMatrix X = rnd(2, 3), Y = rnd(3, 2), Z = rnd(2, 2);
    CHECK((X * Y).adjoint().equals(Y.adjoint() * X.adjoint()));
    CHECK(((X * Y) * Z).equals(X * (Y * Z)));
  }
  for (int n : {-2, -1, 1, 2}) {
    LineBundleModule M = line_bundle_generators(P, n);
    ScaledMatrix E = default_projector(P, n).E;
    ScaledMatrix G = ScaledMatrix::column(A, M.generators);
    for (int t = 0; t < 5; ++t) {
      std::vector<NcPoly> b;
      for (size_t k = 0; k < M.generators.size(); ++k) {
        const auto& cg = P->coinvariant_generators;
        b.push_back(A->mul(A->scalar(g.small_constant()), cg.at(g.integer(0, static_cast<int>(cg.size()) - 1))));
      }
      ScaledMatrix v = ScaledMatrix::row(A, b);
      // Entries of v E are in B, and v E G = v G.
      ScaledMatrix vE = v * E;
      for (size_t l = 0; l < vE.cols(); ++l) CHECK(vE.core(0, l).degree_of() == 0);
      CHECK((vE * G).equals(v * G));
    }
  }
}
