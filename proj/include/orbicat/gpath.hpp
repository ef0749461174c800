#pragma once

#include "orbicat/io.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbicat {

/// Points are the objects of a groupoid; path steps follow an undirected
/// graph on those objects.
struct PathModel {
  GroupoidPtr groupoid;
  std::set<std::pair<int, int>> edges;  // stored with first < second
  bool adjacent(int x, int y) const { return x == y || edges.count({std::min(x, y), std::max(x, y)}) > 0; }
};

/// Vertices and edges of a labeled model; the arrows at a vertex are its label.
PathModel pathModel(const OrbifoldComplex& m);
/// Vertices and edges of the complex with the translation groupoid.
PathModel pathModel(const SimplicialGComplex& x);
/// Two charts of the teardrop: a cone vertex c with ring a0 a1 a2 rotated by
/// Z3, and a disk s, b. The ring points and b form one orbit.
PathModel teardropCharts();

struct PathBranch {
  std::vector<std::string> points;
  std::optional<std::string> start;  // h from the first branch at the start mark
  std::optional<std::string> end;    // h from the first branch at the end mark
};
struct PathSegment {
  std::vector<PathBranch> branches;  // branches[0] is the main branch
};
/// Branched path over marks r_0 <= ... <= r_n; `arrows[i]` connects segment
/// i to segment i + 1.
struct MultipleGPath {
  std::vector<ExactRational> marks;
  std::vector<PathSegment> segments;
  std::vector<std::string> arrows;
};

class PathError : public std::runtime_error {
 public:
  PathError(int segment, const std::string& message)
      : std::runtime_error("segment " + std::to_string(segment) + ": " + message), segment_(segment) {}
  int segment() const { return segment_; }

 private:
  int segment_;
};

/// One single path obtained by swapping in branch j on segment i.
struct SplicedPath {
  int segment = 0;
  int branch = 0;
  std::vector<int> points;  // objects, in order, arrows collapsed to jumps
};
struct ValidatedGPath {
  std::vector<SplicedPath> splices;  // splices[0] is the main path
};

/// Throws PathError at the first failing segment (0-based).
ValidatedGPath validateGPath(const MultipleGPath& p, const PathModel& model);

/// Along every splice the isotropy at each point embeds into the isotropy at
/// every later point.
bool pathInjectionsHold(const ValidatedGPath& p, const PathModel& model);

// .gpath: `marks r0 ... rn`, then per segment a `segment` line followed by
// `branch x y ... [start h] [end h]` lines; `arrow g` between segments.
MultipleGPath parseGPath(std::string_view text);
std::string writeGPath(const MultipleGPath& p);

}  // namespace orbicat
