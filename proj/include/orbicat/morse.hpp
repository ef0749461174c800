#pragma once

#include "orbicat/io.hpp"
#include "orbicat/lscat.hpp"

#include <string>
#include <vector>

namespace orbicat {

struct CriticalLevel {
  ExactRational value;
  std::vector<int> vertices;  // critical vertices at this value
  SimplexSet kc;              // full subcomplex on `vertices`
};

struct CriticalReport {
  std::vector<CriticalLevel> levels;  // increasing values
  std::vector<bool> critical;         // by vertex
  /// Some edge has equal values at both ends; every vertex at a tied
  /// value is then reported critical.
  bool degenerate = false;
  int criticalCount() const;
};

/// A vertex is regular when its lower link is nonempty and collapsible and
/// its label embeds into the label of some lower-link vertex.
CriticalReport criticalOrbits(const OrbifoldComplex& m, const InvariantFunction& f, const LsOptions& o = {});

/// Full subcomplex on the vertices with f <= c (or f < c when `strict`).
SimplexSet sublevel(const OrbifoldComplex& m, const InvariantFunction& f, const ExactRational& c, bool strict = false);
OrbifoldComplex sublevelModel(const OrbifoldComplex& m, const InvariantFunction& f, const ExactRational& c);

enum class Condition { D1, D2, D3 };
const char* conditionName(Condition c);

struct ConditionCheck {
  Condition condition = Condition::D1;
  ExactRational from;  // D1: lower end of the gap; D2: the critical value; D3: the top value
  ExactRational to;    // D1: upper end of the gap; otherwise equal to `from`
  Verdict verdict = Verdict::Unknown;
  std::optional<DeformationCertificate> certificate;
};

/// D1 on every gap between consecutive critical values, D2 at every critical
/// value, D3 at the top.
std::vector<ConditionCheck> verifyDeformationConditions(CatEngine& engine, const InvariantFunction& f,
                                                        const CriticalReport& r);
std::vector<ConditionCheck> verifyDeformationConditions(const OrbifoldComplex& m, const InvariantFunction& f,
                                                        const LsOptions& o = {});

struct LsInequality {
  int catLower = 0;
  int sumRelativeUpper = 0;
  int criticalCount = 0;
  bool pass = false;
};
LsInequality verifyLSInequality(CatEngine& engine, const CriticalReport& r);
LsInequality verifyLSInequality(const OrbifoldComplex& m, const InvariantFunction& f, const LsOptions& o = {});

struct MSample {
  std::string where;  // "below", "between a b", "above"
  ExactRational at;
  int lower = 0;
  int upper = 0;
};
struct MFunction {
  std::vector<MSample> samples;
  std::vector<int> jumpBound;  // relative cat upper bound of K_c, per level
  bool monotone = true;
  bool jumpsBounded = true;
};
/// relativeCat of the sublevel sets below, between and above the critical
/// values.
MFunction mFunction(CatEngine& engine, const InvariantFunction& f, const CriticalReport& r);
MFunction mFunction(const OrbifoldComplex& m, const InvariantFunction& f, const LsOptions& o = {});

}  // namespace orbicat
