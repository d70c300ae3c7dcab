#include "hopfgal/presets.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

namespace hopfgal {

namespace {

const char* kSuperS3 = R"(preset super-s3
group Z
# a and d sit next to each other and weigh 2, so a*d leads the determinant relation
# and normal words are a^i d^l b^j c^k (l+)^e (l-)^f with min(i,l) = 0.
generator a 1 weight 2
generator d -1 weight 2
generator b -1
generator c 1
generator l+ 1
generator l- -1
star a = d
star d = a
star b = -c
star c = -b
star l+ = -l-
star l- = -l+
relation d*a - a*d
relation b*a - a*b
relation c*a - a*c
relation b*d - d*b
relation c*d - d*c
relation c*b - b*c
relation l+*a - a*l+
relation l+*d - d*l+
relation l+*b - b*l+
relation l+*c - c*l+
relation l-*a - a*l-
relation l-*d - d*l-
relation l-*b - b*l-
relation l-*c - c*l-
relation l+*l+
relation l-*l-
relation l+*l- + l-*l+
relation l+*l- + a*d - b*c - 1
coinvariant a*b
coinvariant b*c
coinvariant c*d
coinvariant l+*b
coinvariant l+*d
coinvariant l-*a
coinvariant l-*c
coinvariant l+*l-
)";

const char* kSlq2 = R"(preset slq2
group Z
# alpha, delta adjacent and heavy: normal words alpha^i delta^l beta^j gamma^k, min(i,l) = 0.
generator alpha 1 weight 2
generator delta -1 weight 2
generator beta -1
generator gamma 1
star alpha = delta
star delta = alpha
star beta = -q^-1*gamma
star gamma = -q*beta
relation alpha*beta - q^-1*beta*alpha
relation alpha*gamma - q^-1*gamma*alpha
relation beta*delta - q^-1*delta*beta
relation gamma*delta - q^-1*delta*gamma
relation beta*gamma - gamma*beta
relation alpha*delta - delta*alpha - (q^-1 - q)*beta*gamma
relation alpha*delta - q^-1*beta*gamma - 1
coinvariant alpha*beta
coinvariant alpha*delta
coinvariant gamma*beta
coinvariant gamma*delta
hopf
coproduct alpha = alpha (x) alpha + beta (x) gamma
coproduct beta = alpha (x) beta + beta (x) delta
coproduct gamma = gamma (x) alpha + delta (x) gamma
coproduct delta = gamma (x) beta + delta (x) delta
counit alpha = 1
counit beta = 0
counit gamma = 0
counit delta = 1
antipode alpha = delta
antipode delta = alpha
antipode beta = -q*beta
antipode gamma = -q^-1*gamma
projection alpha = z
projection delta = z^-1
end
)";

const char* kPodlesEq = R"(preset podles-eq
group Z2
# z < x < y: y*y, y*x, y*z and x*z lead; normal words z^k x^i y^e with e in {0,1}.
generator z 1
generator x 1
generator y 1
star x = x
star y = y
star z = z
relation x^2 + y^2 + z^2 - 1
relation x*y - y*x - i*(q^4 - 1)/(q^4 + 1)*z^2
relation x*z - (q^2 + q^-2)/2*z*x - i*(q^-2 - q^2)/2*z*y
relation y*z - (q^2 + q^-2)/2*z*y - i*(q^2 - q^-2)/2*z*x
coinvariant z*z
coinvariant z*x
coinvariant z*y
coinvariant x*x
coinvariant x*y
)";

const char* kClassicalSl2 = R"(preset classical-sl2
group Z
generator a 1 weight 2
generator d -1 weight 2
generator b -1
generator c 1
star a = d
star d = a
star b = -c
star c = -b
relation d*a - a*d
relation b*a - a*b
relation c*a - a*c
relation b*d - d*b
relation c*d - d*c
relation c*b - b*c
relation a*d - b*c - 1
coinvariant a*b
coinvariant a*d
coinvariant c*b
coinvariant c*d
hopf
coproduct a = a (x) a + b (x) c
coproduct b = a (x) b + b (x) d
coproduct c = c (x) a + d (x) c
coproduct d = c (x) b + d (x) d
counit a = 1
counit b = 0
counit c = 0
counit d = 1
antipode a = d
antipode d = a
antipode b = -b
antipode c = -c
projection a = z
projection d = z^-1
end
)";

struct Line {
  size_t number;
  std::string keyword;
  std::string rest;
};

std::string trim(std::string s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void line_error(const Line& l, const std::string& what) {
  throw MathError("preset line " + std::to_string(l.number) + " (" + l.keyword + "): " + what);
}

// Splits "NAME = VALUE".
std::pair<std::string, std::string> split_assign(const Line& l) {
  size_t eq = l.rest.find('=');
  if (eq == std::string::npos) line_error(l, "expected NAME = VALUE");
  return {trim(l.rest.substr(0, eq)), trim(l.rest.substr(eq + 1))};
}

int parse_group_element(const Line& l, const Grading& G, const std::string& s) {
  if (s == "1") return 0;
  if (G.kind == GroupKind::Z2) {
    if (s == "g") return 1;
    line_error(l, "expected 1 or g");
  }
  if (s == "z") return 1;
  if (s.rfind("z^", 0) == 0) return std::stoi(s.substr(2));
  line_error(l, "expected 1, z or z^k");
}

}  // namespace

PresetPtr parse_preset(std::string_view text) {
  std::vector<Line> lines;
  {
    std::istringstream in{std::string(text)};
    std::string raw;
    size_t n = 0;
    while (std::getline(in, raw)) {
      ++n;
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw.resize(hash);
      raw = trim(raw);
      if (raw.empty()) continue;
      size_t sp = raw.find_first_of(" \t");
      Line l{n, raw.substr(0, sp), sp == std::string::npos ? "" : trim(raw.substr(sp))};
      lines.push_back(std::move(l));
    }
  }

  auto preset = std::make_shared<Preset>();
  Grading grading;
  std::vector<std::string> names;
  std::vector<int> degrees, weights;
  for (const auto& l : lines) {
    if (l.keyword == "preset") {
      preset->name = l.rest;
    } else if (l.keyword == "group") {
      grading = Grading::parse_kind(l.rest);
    } else if (l.keyword == "generator") {
      std::istringstream in(l.rest);
      std::string name, kw;
      int deg = 0, w = 1;
      if (!(in >> name >> deg)) line_error(l, "expected NAME DEGREE [weight W]");
      if (in >> kw) {
        if (kw != "weight" || !(in >> w)) line_error(l, "expected 'weight W'");
      }
      names.push_back(name);
      degrees.push_back(deg);
      weights.push_back(w);
    }
  }
  if (preset->name.empty()) throw MathError("preset: missing 'preset NAME' line");
  if (names.empty()) throw MathError("preset: no generators");

  auto table = std::make_shared<GeneratorTable>(grading, names, degrees);
  bool any_star = false;
  for (const auto& l : lines) {
    if (l.keyword != "star") continue;
    any_star = true;
    auto [name, value] = split_assign(l);
    int g = table->require(name);
    NcPoly img = NcPoly::parse(table, value);
    if (img.size() != 1 || img.terms().begin()->first.size() != 1) line_error(l, "star image must be c*generator");
    const auto& [w, c] = *img.terms().begin();
    table->set_star(g, c, static_cast<unsigned char>(w[0]));
  }
  if (any_star) table->validate_star();

  auto P = std::make_shared<Presentation>(table, weights);
  for (const auto& l : lines) {
    try {
      if (l.keyword == "relation") {
        P->add_relation(NcPoly::parse(table, l.rest));
      } else if (l.keyword == "rule") {
        size_t arrow = l.rest.find("->");
        if (arrow == std::string::npos) line_error(l, "expected WORD -> POLY");
        NcPoly lhs = NcPoly::parse(table, l.rest.substr(0, arrow));
        if (lhs.size() != 1 || !lhs.terms().begin()->second.is_one()) line_error(l, "left side must be a word");
        P->add_rule(lhs.terms().begin()->first, NcPoly::parse(table, l.rest.substr(arrow + 2)));
      }
    } catch (const MathError& e) {
      line_error(l, e.what());
    }
  }
  preset->P = P;

  bool in_hopf = false;
  std::shared_ptr<HopfStructure> hopf;
  for (const auto& l : lines) {
    try {
      if (l.keyword == "coinvariant") {
        preset->coinvariant_generators.push_back(P->parse(l.rest));
        if (preset->coinvariant_generators.back().degree_of() != std::optional<int>(0))
          line_error(l, "coinvariant generator must have degree 0");
      } else if (l.keyword == "hopf") {
        in_hopf = true;
        hopf = std::make_shared<HopfStructure>(P);
      } else if (l.keyword == "end") {
        in_hopf = false;
      } else if (l.keyword == "coproduct" || l.keyword == "counit" || l.keyword == "antipode" ||
                 l.keyword == "projection") {
        if (!in_hopf) line_error(l, "outside a hopf block");
        auto [name, value] = split_assign(l);
        int g = table->require(name);
        if (l.keyword == "coproduct")
          hopf->set_coproduct(g, TensorElem::parse(P, "PP", value));
        else if (l.keyword == "counit")
          hopf->set_counit(g, Scalar::parse(value));
        else if (l.keyword == "antipode")
          hopf->set_antipode(g, NcPoly::parse(table, value));
        else
          hopf->set_projection(g, parse_group_element(l, grading, value));
      } else if (l.keyword != "preset" && l.keyword != "group" && l.keyword != "generator" && l.keyword != "star" &&
                 l.keyword != "relation" && l.keyword != "rule") {
        line_error(l, "unknown keyword");
      }
    } catch (const MathError& e) {
      if (std::string(e.what()).rfind("preset line", 0) == 0) throw;
      line_error(l, e.what());
    }
  }
  if (hopf) {
    auto failures = hopf->verify();
    if (!failures.empty()) throw MathError("preset " + preset->name + ": hopf axioms fail: " + failures.front());
    preset->hopf = hopf;
  }
  return preset;
}

std::vector<std::string> builtin_preset_names() { return {"super-s3", "slq2", "podles-eq", "classical-sl2"}; }

std::string builtin_preset_text(std::string_view name) {
  if (name == "super-s3") return kSuperS3;
  if (name == "slq2") return kSlq2;
  if (name == "podles-eq") return kPodlesEq;
  if (name == "classical-sl2") return kClassicalSl2;
  throw MathError("unknown preset: " + std::string(name));
}

PresetPtr load_preset(std::string_view name_or_path) {
  static std::mutex mu;
  static std::map<std::string, PresetPtr> cache;
  std::string key(name_or_path);
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::string text;
  auto names = builtin_preset_names();
  if (std::find(names.begin(), names.end(), key) != names.end()) {
    text = builtin_preset_text(key);
  } else {
    auto read = [&](const std::string& path) {
      std::ifstream f(path);
      if (!f) return false;
      std::stringstream ss;
      ss << f.rdbuf();
      text = ss.str();
      return true;
    };
    bool found = key.find('/') != std::string::npos && read(key);
    if (!found) {
      if (const char* env = std::getenv("HOPFGAL_PRESET_PATH")) {
        std::stringstream dirs(env);
        std::string dir;
        while (!found && std::getline(dirs, dir, ':'))
          if (!dir.empty()) found = read(dir + "/" + key + ".preset");
      }
    }
    if (!found) found = read(key);
    if (!found) throw MathError("unknown preset: " + key);
  }
  PresetPtr p = parse_preset(text);
  std::lock_guard lock(mu);
  return cache.emplace(key, p).first->second;
}

}  // namespace hopfgal
