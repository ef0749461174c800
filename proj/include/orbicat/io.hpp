#pragma once

#include "orbicat/groupoid.hpp"
#include "orbicat/rational.hpp"
#include "orbicat/simplicial.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orbicat {

/// Malformed input; `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// .grp: `group <name>`, `elements <e...>`, `table:` then one row per element.
AbstractGroup parseGroup(std::string_view text);
std::string writeGroup(const AbstractGroup& g);

// .gpd: `objects <x...>`, `arrow f : x -> y`, `inverse f = g`,
// `compose g f = h`. Units are `id_<object>` and need no declarations.
GroupoidPtr parseGroupoid(std::string_view text);
std::string writeGroupoid(const FiniteGroupoid& g);

/// A loaded model: labeled, or an action together with its quotient.
struct ModelFile {
  std::optional<SimplicialGComplex> action;  // quotient-ready
  OrbifoldComplex model;
};

// .ogx: `complex:` with `vertices`, `facet` or `simplex` lines; then either
// `labels:` (`ambient <group>`, `label v... -> e...`) or `action:`
// (`group <group>`, `gen <e> : v->w ...`). Groups are builtin names or paths
// to .grp files, resolved against `baseDir`.
ModelFile parseModel(std::string_view text, const std::filesystem::path& baseDir = {});
std::string writeModel(const OrbifoldComplex& m);
std::string writeModel(const SimplicialGComplex& x);

/// Values on the vertices of a complex, by vertex index.
using InvariantFunction = std::vector<ExactRational>;
// .fn: one `<vertex> <p/q>` line per vertex.
InvariantFunction parseFunction(std::string_view text, const SimplicialComplex& k);
std::string writeFunction(const InvariantFunction& f, const SimplicialComplex& k);

std::string readFile(const std::filesystem::path& path);

/// Splits on whitespace, dropping `#` comments.
std::vector<std::string> tokenize(std::string_view line);

}  // namespace orbicat
