#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hopfgal/hopf.hpp"

namespace hopfgal {

struct Preset {
  std::string name;
  PresentationPtr P;
  std::shared_ptr<const HopfStructure> hopf;  // may be null
  // Generators of the coinvariant subalgebra B (1 is implicit).
  std::vector<NcPoly> coinvariant_generators;

  const TablePtr& table() const { return P->table(); }
  const Grading& grading() const { return P->table()->grading(); }
  NcPoly gen(std::string_view name) const { return P->gen(name); }
  NcPoly parse(std::string_view text) const { return P->parse(text); }
};

using PresetPtr = std::shared_ptr<const Preset>;

// Parses the structured preset format (see README). Throws MathError with a line number.
PresetPtr parse_preset(std::string_view text);

// Built-in names: super-s3, slq2, podles-eq, classical-sl2.
std::vector<std::string> builtin_preset_names();
std::string builtin_preset_text(std::string_view name);

// Resolves a built-in name, a file path, or NAME.preset on HOPFGAL_PRESET_PATH.
// Results are cached so equal names share one presentation.
PresetPtr load_preset(std::string_view name_or_path);

}  // namespace hopfgal
