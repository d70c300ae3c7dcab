// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 only when all ten pass.
// Time limits and numeric tolerances are fixed here.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sys/wait.h>

#include "hopfgal/suites.hpp"

using namespace hopfgal;

#ifndef HOPFGAL_CLI_PATH
#error "HOPFGAL_CLI_PATH must point at the hopfgal executable"
#endif

namespace {

constexpr double kChernResidual = 1e-6;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void require(const Report& r) {
    if (r.pass()) return;
    std::string names;
    for (const auto& f : r.failures()) names += (names.empty() ? "" : ", ") + f;
    require(false, r.suite + "[" + r.preset + "]: " + names);
  }
};

std::vector<NcPoly> gens_and_one(const PresetPtr& P) {
  std::vector<NcPoly> v{P->P->one()};
  for (const auto& g : generator_polys(P)) v.push_back(g);
  return v;
}

int cli_exit(const std::string& args) {
  std::string cmd = std::string(HOPFGAL_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0) o.require(dt < limit_s, "runtime " + std::to_string(dt) + " s over " + std::to_string(limit_s) + " s");
  if (!o.pass) ++failures;
  std::printf("criterion %2d: %s  %s (%.2f s%s)%s%s\n", id, o.pass ? "PASS" : "FAIL", title, dt,
              limit_s > 0 ? (", limit " + std::to_string(static_cast<int>(limit_s)) + " s").c_str() : "",
              o.detail.empty() ? "" : " :: ", o.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  auto super = load_preset("super-s3");
  auto slq2 = load_preset("slq2");
  auto podles = load_preset("podles-eq");

  criterion(1, "Galois certificates on super-s3, slq2, podles-eq for |n| <= 3", 5.0, [&](Outcome& o) {
    for (const auto& P : {super, slq2, podles}) o.require(galois_certificate(translation_lift(P), group_range(P->grading(), 3)));
  });

  criterion(2, "translation-map identities on super-s3, exact products for n + m <= 3", 5.0, [&](Outcome& o) {
    TranslationLift tau = translation_lift(super);
    o.require(translation_property_suite(tau, J4(connection_from_lift(tau)), 3, 6));
    // Exact lift-level antimultiplicativity for z^n z^m with n, m >= 0 and the mirrored negative powers.
    for (int sign : {1, -1})
      for (int n = 0; n <= 3; ++n)
        for (int m = 0; n + m <= 3; ++m)
          o.require(star_product(tau(sign * n), tau(sign * m)) == tau(sign * (n + m)),
                    "tau(" + std::to_string(sign * n) + ") * tau(" + std::to_string(sign * m) + ") inexact");
  });

  criterion(3, "strong connections: super monopole, Podles omega, slq2 omega from i0; omega~ fails only (v)", 10.0,
            [&](Outcome& o) {
              o.require(verify_connection_form(default_connection(super), true, group_range(super->grading(), 3),
                                               gens_and_one(super)));
              o.require(verify_connection_form(default_connection(podles), true, {0, 1}, gens_and_one(podles)));
              o.require(verify_connection_form(connection_from_integral(slq2, integral_i0(slq2)), true,
                                               group_range(slq2->grading(), 3), gens_and_one(slq2)));
              Report bad = verify_connection_form(podles_nonstrong_connection(podles), true, {0, 1}, gens_and_one(podles));
              o.require(!bad.pass(), "omega~ passed");
              for (const auto& f : bad.failures()) o.require(f.rfind("(v)", 0) == 0, "omega~ also failed " + f);
            });

  criterion(4, "round trips of the four descriptions on generators, g in {z^+-1, z^+-2}", 0.0, [&](Outcome& o) {
    for (const auto& P : {super, slq2})
      o.require(roundtrip_check(default_connection(P), translation_lift(P), gens_and_one(P), {-2, -1, 1, 2}));
  });

  criterion(5, "projectors E_+-n and hermitian F_+-n on super-s3 for n <= 4", 30.0, [&](Outcome& o) {
    TranslationLift tau = translation_lift(super);
    SplittingS s = J4(connection_from_lift(tau));
    for (int n = 1; n <= 4; ++n)
      for (int mu : {-n, n}) {
        LineBundleModule M = line_bundle_generators(super, mu);
        ProjectorCert E = projector_from_splitting(s, M);
        o.require(verify_projector(E.E, M));
        ProjectorCert F = hermitian_projector(super, mu);
        o.require(verify_hermitian(F));
        size_t sz = static_cast<size_t>(2 * n + 1);
        o.require(E.E.rows() == sz && E.E.cols() == sz && F.F->rows() == sz && F.F->cols() == sz,
                  "size of mu = " + std::to_string(mu));
      }
  });

  criterion(6, "module isomorphisms for n <= 3 and freeness on super-s3 and slq2", 10.0, [&](Outcome& o) {
    for (int n = 1; n <= 3; ++n)
      for (int mu : {-n, n}) o.require(line_bundle_suite(super, mu));
    o.require(freeness_certificate(super));
    o.require(freeness_certificate(slq2));
  });

  criterion(7, "lattice Chern numbers of F_+-n, n = 1..3, at 32x32 and 48x48", 10.0, [&](Outcome& o) {
    std::vector<ChernReport> table;
    o.require(pairing_report(super, 3, 32, 48, &table));
    for (const auto& c : table) {
      o.require(c.residual < kChernResidual, "residual of mu = " + std::to_string(c.mu));
      o.require(std::labs(c.integer) == std::abs(c.mu), "magnitude of mu = " + std::to_string(c.mu));
    }
  });

  criterion(8, "gauge action: 1 + l+ l- moves the monopole, scalars act trivially", 5.0, [&](Outcome& o) {
    ConnForm omega = default_connection(super);
    TranslationLift tau = translation_lift(super);
    auto groups = group_range(super->grading(), 3);
    GaugeTransform f(super, super->parse("1 + l+*l-"));
    o.require(gauge_suite(f, omega, tau, groups, GaugeExpectation::Nontrivial));
    o.require(gauge_automorphism(f));
    GaugeTransform c(super, super->P->scalar(Scalar(3)));
    o.require(gauge_suite(c, omega, tau, groups, GaugeExpectation::Trivial));
  });

  criterion(9, "confluence to length 6, PBW independence n <= 4, coinvariants to degree 4, idempotents", 0.0,
            [&](Outcome& o) {
              for (const auto& P : {super, slq2, podles}) {
                ConfluenceReport c = check_confluence(*P->P, 6);
                o.require(c.ok(), "confluence of " + P->name);
                o.require(coinvariant_generation_check(P, 4));
              }
              for (int n = 1; n <= 4; ++n)
                for (int mu : {-n, n}) o.require(generator_independence(line_bundle_generators(super, mu)));
              o.require(auxiliary_idempotents(podles));
            });

  criterion(10, "negative controls fail: corrupted witness and omega~ exit 1", 0.0, [&](Outcome& o) {
    o.require(cli_exit("verify iso --preset super-s3 --range 1 --corrupt-witness") == 1, "corrupted witness did not exit 1");
    o.require(cli_exit("verify connection --preset podles-eq --form nonstrong") == 1, "omega~ did not exit 1");
    // The same suites without the corruption pass, so the failures come from the controls.
    o.require(cli_exit("verify iso --preset super-s3 --range 1") == 0, "clean iso suite did not exit 0");
    o.require(cli_exit("verify connection --preset podles-eq") == 0, "strong Podles connection did not exit 0");
    o.require(cli_exit("verify no-such-suite") == 2, "bad suite did not exit 2");
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
