// hopfgal: runs verification suites and the lattice Chern computation, printing report-v1 JSON or text.
// Exit codes: 0 every check passed, 1 some check failed, 2 usage error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hopfgal/suites.hpp"

using namespace hopfgal;

namespace {

int emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out);
  if (!f) {
    std::cerr << "cannot write " << out << "\n";
    return 2;
  }
  f << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopf-Galois verification toolkit"};
  app.require_subcommand(1);

  SuiteConfig cfg;
  std::string grid = "32x32", format = "json", out;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("suite", cfg.suite, "suite name")->required()->check(CLI::IsMember(choices));
  verify->add_option("--preset", cfg.preset, "built-in preset name or preset file")->capture_default_str();
  verify->add_option("--range", cfg.range, "group range |n|")->capture_default_str();
  verify->add_option("--degree-bound", cfg.degree_bound, "word length bound for span and confluence checks")
      ->capture_default_str();
  verify->add_option("--grid", grid, "lattice size for the chern suite")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "RNG seed for sampled checks")->capture_default_str();
  verify->add_option("--form", cfg.form, "connection suite: strong or nonstrong")->capture_default_str();
  verify->add_flag("--corrupt-witness", cfg.corrupt_witness, "iso suite negative control: zero one entry of L");

  int chern_n = 1;
  std::string csv;
  auto* chern = app.add_subcommand("chern", "lattice Chern numbers of the line bundles of degree -n and n");
  chern->add_option("--n", chern_n, "bundle size n >= 0")->capture_default_str();
  chern->add_option("--preset", cfg.preset, "preset")->capture_default_str();
  chern->add_option("--grid", grid, "lattice size")->capture_default_str();
  chern->add_option("--csv", csv, "write per-plaquette flux of F_-n to this file");

  for (auto* sub : {verify, chern}) {
    sub->add_option("--out", out, "write the report to this file");
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    auto g = parse_grid(grid);
    cfg.grid_theta = g.first;
    cfg.grid_phi = g.second;

    if (*verify) {
      Report rep = run_suite(cfg);
      std::string text = format == "json" ? rep.to_json().dump(2) + "\n" : rep.to_text();
      if (int rc = emit(text, out)) return rc;
      return rep.pass() ? 0 : 1;
    }

    // chern
    if (chern_n < 0) throw UsageError("--n must be nonnegative");
    cfg.suite = "chern";
    validate(cfg);
    PresetPtr preset = load_preset(cfg.preset);
    Report rep;
    rep.suite = "chern";
    rep.preset = preset->name;
    rep.parameters = Json{{"n", chern_n}, {"grid", grid}};
    Json values = Json::array();
    for (int mu : {-chern_n, chern_n}) {
      ChernReport c = lattice_chern(rank_one_field(preset, mu), cfg.grid_theta, cfg.grid_phi, mu == -chern_n && !csv.empty());
      values.push_back(c.to_json());
      rep.add("c(F_" + std::to_string(mu) + ") is an integer of magnitude n", c.residual < 1e-6 && std::labs(c.integer) == chern_n,
              "flux/2pi=" + std::to_string(c.total));
      if (!c.csv.empty()) {
        std::ofstream f(csv);
        f << c.csv;
      }
      if (chern_n == 0) break;
    }
    Json j = rep.to_json();
    j["values"] = values;
    std::string text = format == "json" ? j.dump(2) + "\n" : rep.to_text();
    if (format == "text")
      for (const auto& v : values)
        text += "  mu=" + std::to_string(v["mu"].get<int>()) + " chern=" + std::to_string(v["chern"].get<long>()) +
                " flux/2pi=" + std::to_string(v["flux_over_2pi"].get<double>()) + "\n";
    if (int rc = emit(text, out)) return rc;
    return rep.pass() ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
