#include "orbicat/morse.hpp"

#include <algorithm>
#include <map>

namespace orbicat {

int CriticalReport::criticalCount() const {
  return static_cast<int>(std::count(critical.begin(), critical.end(), true));
}

namespace {

bool lowerLinkRegular(const OrbifoldComplex& m, const InvariantFunction& f, int v, long long budget) {
  const auto& k = m.complex();
  std::vector<int> below{v};
  for (int w = 0; w < k.vertexCount(); ++w)
    if (f[w] < f[v]) below.push_back(w);
  std::sort(below.begin(), below.end());
  auto lower = link(k, v, fullSubcomplex(k, below));
  auto verts = verticesOf(k, lower);
  if (verts.empty()) return false;
  bool labelOk = false;
  for (int w : verts) labelOk = labelOk || m.embeds(v, w);
  if (!labelOk) return false;
  for (int w : verts) {
    auto r = isCollapsible(k, lower, w, {budget, nullptr});
    if (r.verdict == Verdict::Yes) return true;
    if (r.verdict == Verdict::No) return false;
  }
  return false;
}

std::vector<ExactRational> distinctValues(const InvariantFunction& f) {
  std::vector<ExactRational> out(f.begin(), f.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

CriticalReport criticalOrbits(const OrbifoldComplex& m, const InvariantFunction& f, const LsOptions& o) {
  const auto& k = m.complex();
  if (static_cast<int>(f.size()) != k.vertexCount()) throw ModelError("function must have one value per vertex");
  CriticalReport r;
  r.critical.assign(k.vertexCount(), false);
  std::vector<bool> tiedLevel(k.vertexCount(), false);
  for (int s = 0; s < k.simplexCount(); ++s)
    if (k.dim(s) == 1 && f[k.simplex(s)[0]] == f[k.simplex(s)[1]]) {
      r.degenerate = true;
      tiedLevel[k.simplex(s)[0]] = tiedLevel[k.simplex(s)[1]] = true;
    }
  std::vector<ExactRational> tiedValues;
  for (int v = 0; v < k.vertexCount(); ++v)
    if (tiedLevel[v]) tiedValues.push_back(f[v]);
  for (int v = 0; v < k.vertexCount(); ++v) {
    bool tied = std::find(tiedValues.begin(), tiedValues.end(), f[v]) != tiedValues.end();
    r.critical[v] = tied || !lowerLinkRegular(m, f, v, o.budget);
  }
  for (const auto& c : distinctValues(f)) {
    CriticalLevel level{c, {}, k.none()};
    for (int v = 0; v < k.vertexCount(); ++v)
      if (r.critical[v] && f[v] == c) level.vertices.push_back(v);
    if (level.vertices.empty()) continue;
    level.kc = fullSubcomplex(k, level.vertices);
    r.levels.push_back(std::move(level));
  }
  return r;
}

SimplexSet sublevel(const OrbifoldComplex& m, const InvariantFunction& f, const ExactRational& c, bool strict) {
  std::vector<int> verts;
  for (int v = 0; v < m.complex().vertexCount(); ++v)
    if (strict ? f[v] < c : f[v] <= c) verts.push_back(v);
  return fullSubcomplex(m.complex(), verts);
}

OrbifoldComplex sublevelModel(const OrbifoldComplex& m, const InvariantFunction& f, const ExactRational& c) {
  return restrictModel(m, sublevel(m, f, c));
}

const char* conditionName(Condition c) {
  switch (c) {
    case Condition::D1: return "D1";
    case Condition::D2: return "D2";
    case Condition::D3: return "D3";
  }
  return "?";
}

std::vector<ConditionCheck> verifyDeformationConditions(CatEngine& engine, const InvariantFunction& f,
                                                        const CriticalReport& r) {
  const auto& m = engine.model();
  const auto& k = m.complex();
  std::vector<ConditionCheck> out;
  auto run = [&](Condition c, const ExactRational& from, const ExactRational& to, const SimplexSet& a,
                 const SimplexSet& b) {
    auto res = engine.deformableInto(a, b);
    out.push_back({c, from, to, res.verdict, std::move(res.certificate)});
  };
  const auto& lv = r.levels;
  for (std::size_t i = 0; i + 1 < lv.size(); ++i)
    run(Condition::D1, lv[i].value, lv[i + 1].value, sublevel(m, f, lv[i + 1].value, true), sublevel(m, f, lv[i].value));
  for (const auto& level : lv) {
    // the sublevel at c with the critical vertices of K_c removed
    std::vector<int> keep;
    for (int v = 0; v < k.vertexCount(); ++v)
      if (f[v] <= level.value && std::find(level.vertices.begin(), level.vertices.end(), v) == level.vertices.end())
        keep.push_back(v);
    run(Condition::D2, level.value, level.value, fullSubcomplex(k, keep), sublevel(m, f, level.value, true));
  }
  if (!f.empty()) {
    auto top = *std::max_element(f.begin(), f.end());
    run(Condition::D3, top, top, k.all(), sublevel(m, f, top));
  }
  return out;
}

std::vector<ConditionCheck> verifyDeformationConditions(const OrbifoldComplex& m, const InvariantFunction& f,
                                                        const LsOptions& o) {
  CatEngine engine(m, o);
  return verifyDeformationConditions(engine, f, criticalOrbits(m, f, o));
}

LsInequality verifyLSInequality(CatEngine& engine, const CriticalReport& r) {
  LsInequality out;
  out.catLower = engine.catBounds().lower;
  for (const auto& level : r.levels) out.sumRelativeUpper = addBounds(out.sumRelativeUpper, engine.relativeCat(level.kc).upper);
  out.criticalCount = r.criticalCount();
  out.pass = out.catLower <= out.sumRelativeUpper && out.catLower <= out.criticalCount;
  return out;
}

LsInequality verifyLSInequality(const OrbifoldComplex& m, const InvariantFunction& f, const LsOptions& o) {
  CatEngine engine(m, o);
  return verifyLSInequality(engine, criticalOrbits(m, f, o));
}

MFunction mFunction(CatEngine& engine, const InvariantFunction& f, const CriticalReport& r) {
  const auto& m = engine.model();
  MFunction out;
  const auto& lv = r.levels;
  auto sample = [&](std::string where, const ExactRational& c) {
    auto rep = engine.relativeCat(sublevel(m, f, c));
    out.samples.push_back({std::move(where), c, rep.lower, rep.upper});
  };
  if (lv.empty()) {
    sample("everywhere", f.empty() ? ExactRational(0) : *std::max_element(f.begin(), f.end()));
    return out;
  }
  sample("below", lv.front().value - 1);
  for (std::size_t i = 0; i + 1 < lv.size(); ++i)
    sample("between " + lv[i].value.str() + " " + lv[i + 1].value.str(), (lv[i].value + lv[i + 1].value) / 2);
  sample("above", std::max(lv.back().value, *std::max_element(f.begin(), f.end())) + 1);
  for (std::size_t i = 0; i < lv.size(); ++i) {
    out.jumpBound.push_back(engine.relativeCat(lv[i].kc).upper);
    const auto& before = out.samples[i];
    const auto& after = out.samples[i + 1];
    if (after.upper < before.upper) out.monotone = false;
    if (after.upper - before.upper > out.jumpBound.back()) out.jumpsBounded = false;
  }
  return out;
}

MFunction mFunction(const OrbifoldComplex& m, const InvariantFunction& f, const LsOptions& o) {
  CatEngine engine(m, o);
  return mFunction(engine, f, criticalOrbits(m, f, o));
}

}  // namespace orbicat
