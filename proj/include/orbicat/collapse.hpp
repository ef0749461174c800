#pragma once

#include "orbicat/equivalence.hpp"
#include "orbicat/simplicial.hpp"

#include <vector>

namespace orbicat {

/// Elementary collapse: remove the free face and its unique coface.
struct Collapse {
  int face = 0;
  int coface = 0;
};

struct CollapseOptions {
  long long budget = 100000;
  /// When set, every collapse must be isotropy monotone: the face label
  /// embeds into the label of every other face of the coface, the coface
  /// included.
  const OrbifoldComplex* labels = nullptr;
};

struct CollapseResult {
  Verdict verdict = Verdict::Unknown;
  std::vector<Collapse> sequence;
  long long steps = 0;
};

/// Searches for collapses of `region` onto `target` (target ⊆ region, both
/// subcomplexes). Depth-first with a memo of dead states; NO only after the
/// search space is exhausted.
CollapseResult collapseOnto(const SimplicialComplex& k, const SimplexSet& region, const SimplexSet& target,
                            const CollapseOptions& options = {});

/// Collapses onto a single vertex.
CollapseResult isCollapsible(const SimplicialComplex& k, const SimplexSet& region, int vertex,
                             const CollapseOptions& options = {});

/// True iff the sequence consists of valid elementary collapses (under the
/// label rule when given) leading from region exactly to target.
bool replayCollapses(const SimplicialComplex& k, const SimplexSet& region, const SimplexSet& target,
                     const std::vector<Collapse>& sequence, const OrbifoldComplex* labels = nullptr);

/// The label rule for one collapse.
bool collapseIsMonotone(const OrbifoldComplex& m, const Collapse& c);

}  // namespace orbicat
