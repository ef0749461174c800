#include "orbicat/lscat.hpp"

#include "orbicat/homology.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <set>

namespace orbicat {

DeformationCertificate makeCertificate(const OrbifoldComplex& m, SimplexSet region, SimplexSet target,
                                       std::vector<Collapse> collapses) {
  DeformationCertificate c{std::move(region), std::move(target), std::move(collapses), {}};
  for (const auto& step : c.collapses)
    for (int rho : m.complex().allFaces(step.coface)) {
      if (rho == step.face) continue;
      std::pair<int, int> key{m.labelId(step.face), m.labelId(rho)};
      if (c.embeddings.count(key)) continue;
      auto map = m.embedding(step.face, rho);
      if (!map) throw ModelError("internal error: certificate step without an embedding");
      c.embeddings.emplace(key, std::move(*map));
    }
  return c;
}

bool verifyCertificate(const OrbifoldComplex& m, const DeformationCertificate& c) {
  const auto& k = m.complex();
  if (!isSubcomplex(k, c.region) || !isSubcomplex(k, c.target) || !c.target.isSubsetOf(c.region)) return false;
  if (!replayCollapses(k, c.region, c.target, c.collapses)) return false;
  for (const auto& step : c.collapses)
    for (int rho : k.allFaces(step.coface)) {
      if (rho == step.face) continue;
      auto it = c.embeddings.find({m.labelId(step.face), m.labelId(rho)});
      if (it == c.embeddings.end()) return false;
      const auto& from = m.labelGroup(step.face);
      const auto& to = m.labelGroup(rho);
      if (static_cast<int>(it->second.size()) != from.order()) return false;
      if (!isHomomorphism(from, to, it->second) || !isInjective(it->second, to.order())) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------

CatEngine::CatEngine(const OrbifoldComplex& m, LsOptions options) : m_(m), opts_(options) {
  const auto& k = m_.complex();
  const int n = k.vertexCount();
  reach_.assign(n, std::vector<bool>(n, false));
  for (int v = 0; v < n; ++v) {
    auto& seen = reach_[v];
    seen[v] = true;
    std::deque<int> q{v};
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int e : k.cofaces(x)) {
        if (k.dim(e) != 1 || !m_.embeds(v, e)) continue;
        int y = k.simplex(e)[0] == x ? k.simplex(e)[1] : k.simplex(e)[0];
        if (!seen[y] && m_.embeds(v, y)) {
          seen[y] = true;
          q.push_back(y);
        }
      }
    }
  }
}

std::vector<int> CatEngine::targetOrder(const SimplexSet& u) const {
  const auto& k = m_.complex();
  std::set<int> cand;
  for (int v : verticesOf(k, u)) {
    cand.insert(v);
    for (int e : k.cofaces(v))
      if (k.dim(e) == 1)
        for (int w : k.simplex(e)) cand.insert(w);
  }
  std::vector<int> out(cand.begin(), cand.end());
  std::stable_sort(out.begin(), out.end(), [&](int a, int b) {
    if (m_.labelOrder(a) != m_.labelOrder(b)) return m_.labelOrder(a) < m_.labelOrder(b);
    return m_.labelClassNumber(a) < m_.labelClassNumber(b);
  });
  return out;
}

namespace {

struct Attempt {
  Verdict verdict = Verdict::Unknown;
  std::optional<DeformationCertificate> certificate;
};

/// Collapse search over the growing regions around U.
Attempt searchRegions(const OrbifoldComplex& m, const SimplexSet& u, int target, long long budget,
                      CollapseCache& cache) {
  const auto& k = m.complex();
  std::vector<SimplexSet> regions;
  if (u.test(target)) regions.push_back(u);
  SimplexSet withStar = closure(k, u | closedStar(k, {target}));
  regions.push_back(withStar);
  regions.push_back(closedStar(k, verticesOf(k, withStar)));
  SimplexSet t = k.none();
  t.set(target);
  std::vector<SimplexSet> tried;
  for (const auto& r : regions) {
    if (std::find(tried.begin(), tried.end(), r) != tried.end()) continue;
    tried.push_back(r);
    if (componentCount(k, r) != 1 || eulerCharacteristic(k, r) != 1 || !hasTrivialReducedHomology(k, r)) continue;
    auto& slot = cache[r];
    auto it = slot.find(target);
    if (it == slot.end()) {
      CollapseOptions opts{budget, &m};
      it = slot.emplace(target, collapseOnto(k, r, t, opts)).first;
    }
    const auto& res = it->second;
    if (res.verdict == Verdict::Yes) return {Verdict::Yes, makeCertificate(m, r, t, res.sequence)};
  }
  return {};
}

}  // namespace

CategoricalResult CatEngine::isCategorical(const SimplexSet& u, int target) const {
  const auto& k = m_.complex();
  if (target < 0 || target >= k.vertexCount()) throw ModelError("target is not a vertex of the model");
  if (u.universe() != static_cast<std::size_t>(k.simplexCount()) || !isSubcomplex(k, u))
    throw ModelError("piece is not a subcomplex");
  CategoricalResult r;
  for (int v : verticesOf(k, u))
    if (!reach_[v][target]) {
      r.verdict = Verdict::No;
      r.obstruction = Obstruction::Injection;
      r.detail = "isotropy of " + k.vertexName(v) + " does not inject along any path to " + k.vertexName(target);
      return r;
    }
  if (auto cls = nonzeroInclusionClass(k, u, k.all())) {
    r.verdict = Verdict::No;
    r.obstruction = Obstruction::Homology;
    r.detail = "degree " + std::to_string(cls->degree) + " homology of the piece survives in the model";
    return r;
  }
  auto a = searchRegions(m_, u, target, opts_.budget, cache_);
  r.verdict = a.verdict;
  r.certificate = std::move(a.certificate);
  return r;
}

std::optional<Piece> CatEngine::certify(const SimplexSet& u) const {
  const auto& k = m_.complex();
  if (u.empty() || nonzeroInclusionClass(k, u, k.all())) return std::nullopt;
  auto verts = verticesOf(k, u);
  for (int t : targetOrder(u)) {
    if (!std::all_of(verts.begin(), verts.end(), [&](int v) { return reach_[v][t]; })) continue;
    auto a = searchRegions(m_, u, t, opts_.budget, cache_);
    if (a.verdict == Verdict::Yes) return Piece{u, t, m_.labelClassNumber(t), std::move(*a.certificate)};
  }
  return std::nullopt;
}

void CatEngine::buildPieces() {
  const auto& k = m_.complex();
  const int n = k.vertexCount();
  std::vector<Piece> raw;
  auto add = [&](const SimplexSet& u) {
    for (const auto& p : raw)
      if (p.simplices == u) return;
    if (auto p = certify(u)) raw.push_back(std::move(*p));
  };
  std::vector<SimplexSet> stars;
  for (int v = 0; v < n; ++v) stars.push_back(closedStar(k, {v}));
  for (int v = 0; v < n; ++v) add(stars[v]);

  // unions of up to `depth` stars, connected ones only
  std::vector<int> pick;
  std::function<void(int, const SimplexSet&)> unions = [&](int from, const SimplexSet& acc) {
    if (static_cast<int>(pick.size()) >= 2) {
      if (componentCount(k, acc) == 1) add(acc);
    }
    if (static_cast<int>(pick.size()) >= opts_.depth) return;
    for (int v = from; v < n; ++v) {
      pick.push_back(v);
      unions(v + 1, acc | stars[v]);
      pick.pop_back();
    }
  };
  if (opts_.depth >= 2) unions(0, k.none());

  // maximal pieces grown around each target
  for (int t = 0; t < n; ++t) {
    SimplexSet u = stars[t];
    auto first = isCategorical(u, t);
    if (first.verdict != Verdict::Yes) continue;
    DeformationCertificate cert = std::move(*first.certificate);
    std::vector<int> dist(n, -1);
    std::vector<int> order;
    std::deque<int> q{t};
    dist[t] = 0;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      order.push_back(x);
      for (int e : k.cofaces(x)) {
        if (k.dim(e) != 1) continue;
        int y = k.simplex(e)[0] == x ? k.simplex(e)[1] : k.simplex(e)[0];
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          q.push_back(y);
        }
      }
    }
    for (int w : order) {
      if (stars[w].isSubsetOf(u)) continue;
      SimplexSet grown = u | stars[w];
      auto r = isCategorical(grown, t);
      if (r.verdict != Verdict::Yes) continue;
      u = std::move(grown);
      cert = std::move(*r.certificate);
    }
    bool fresh = true;
    for (auto& p : raw)
      if (p.simplices == u) {
        fresh = false;
        if (m_.labelClassNumber(t) < p.weight) p = Piece{u, t, m_.labelClassNumber(t), cert};
      }
    if (fresh) raw.push_back(Piece{u, t, m_.labelClassNumber(t), std::move(cert)});
  }

  // drop pieces contained in a piece of no greater weight
  std::vector<Piece> kept;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < raw.size() && !dominated; ++j) {
      if (i == j || raw[j].weight > raw[i].weight) continue;
      if (!raw[i].simplices.isSubsetOf(raw[j].simplices)) continue;
      if (raw[i].simplices == raw[j].simplices && raw[j].weight == raw[i].weight && j > i) continue;
      dominated = true;
    }
    if (!dominated) kept.push_back(raw[i]);
  }
  pieces_ = std::move(kept);
}

const std::vector<Piece>& CatEngine::pieces() {
  if (!pieces_) buildPieces();
  return *pieces_;
}

int CatEngine::obstructionCount(const std::vector<int>& vertices) const {
  const int n = m_.complex().vertexCount();
  if (vertices.empty()) return 0;
  std::vector<std::vector<bool>> sets;
  for (int v : vertices) sets.push_back(reach_[v]);
  auto subset = [&](const std::vector<bool>& a, const std::vector<bool>& b) {
    for (int i = 0; i < n; ++i)
      if (a[i] && !b[i]) return false;
    return true;
  };
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::vector<bool>> minimal;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool implied = false;
    for (std::size_t j = 0; j < sets.size() && !implied; ++j)
      if (i != j && subset(sets[j], sets[i])) implied = true;
    if (!implied) minimal.push_back(sets[i]);
  }
  int best = static_cast<int>(minimal.size());
  std::vector<bool> chosen(n, false);
  std::function<void(int)> search = [&](int count) {
    if (count >= best) return;
    const std::vector<bool>* open = nullptr;
    for (const auto& s : minimal) {
      bool hit = false;
      for (int i = 0; i < n && !hit; ++i) hit = s[i] && chosen[i];
      if (!hit) {
        if (!open || std::count(s.begin(), s.end(), true) < std::count(open->begin(), open->end(), true)) open = &s;
      }
    }
    if (!open) {
      best = count;
      return;
    }
    if (count + 1 >= best) return;
    for (int i = 0; i < n; ++i)
      if ((*open)[i]) {
        chosen[i] = true;
        search(count + 1);
        chosen[i] = false;
      }
  };
  search(0);
  return best;
}

int CatEngine::basicLowerBound() const {
  const auto& k = m_.complex();
  if (k.simplexCount() == 0) return 0;
  std::vector<int> all(k.vertexCount());
  for (int v = 0; v < k.vertexCount(); ++v) all[v] = v;
  return std::max(cupLengthZ2(k) + 1, obstructionCount(all));
}

CatReport CatEngine::cover(const SimplexSet& sub) {
  const auto& k = m_.complex();
  CatReport rep;
  auto elements = maximalSimplices(k, sub);
  if (elements.empty()) return rep;
  const auto& ps = pieces();
  const int e = static_cast<int>(elements.size());
  std::vector<std::vector<int>> options(e);
  std::vector<std::vector<bool>> covers(ps.size(), std::vector<bool>(e, false));
  for (std::size_t p = 0; p < ps.size(); ++p)
    for (int i = 0; i < e; ++i)
      if (ps[p].simplices.test(elements[i])) {
        covers[p][i] = true;
        options[i].push_back(static_cast<int>(p));
      }
  for (int i = 0; i < e; ++i)
    if (options[i].empty()) {
      rep.upper = kUnbounded;
      return rep;
    }

  int maxCover = 0, minWeight = std::numeric_limits<int>::max();
  for (std::size_t p = 0; p < ps.size(); ++p) {
    maxCover = std::max(maxCover, static_cast<int>(std::count(covers[p].begin(), covers[p].end(), true)));
    minWeight = std::min(minWeight, ps[p].weight);
  }

  // greedy start
  std::vector<int> bestSet;
  int bestCount = 0, bestWeight = 0;
  {
    std::vector<bool> done(e, false);
    int left = e;
    while (left > 0) {
      int pick = -1, gain = -1;
      for (std::size_t p = 0; p < ps.size(); ++p) {
        int g = 0;
        for (int i = 0; i < e; ++i) g += covers[p][i] && !done[i];
        if (g > gain || (g == gain && ps[p].weight < ps[pick].weight)) {
          gain = g;
          pick = static_cast<int>(p);
        }
      }
      bestSet.push_back(pick);
      bestWeight += ps[pick].weight;
      for (int i = 0; i < e; ++i)
        if (covers[pick][i] && !done[i]) {
          done[i] = true;
          --left;
        }
    }
    bestCount = static_cast<int>(bestSet.size());
  }

  std::vector<int> cnt(e, 0);
  std::vector<int> chosen;
  int weightSoFar = 0;
  int uncovered = e;
  std::function<void()> search = [&]() {
    const int count = static_cast<int>(chosen.size());
    if (uncovered == 0) {
      if (count < bestCount || (count == bestCount && weightSoFar < bestWeight)) {
        bestCount = count;
        bestWeight = weightSoFar;
        bestSet = chosen;
      }
      return;
    }
    const int need = (uncovered + maxCover - 1) / maxCover;
    if (count + need > bestCount) return;
    if (count + need == bestCount && weightSoFar + need * minWeight >= bestWeight) return;
    int elem = -1;
    for (int i = 0; i < e; ++i)
      if (cnt[i] == 0 && (elem < 0 || options[i].size() < options[elem].size())) elem = i;
    std::vector<int> opts = options[elem];
    std::stable_sort(opts.begin(), opts.end(), [&](int a, int b) { return ps[a].weight < ps[b].weight; });
    for (int p : opts) {
      chosen.push_back(p);
      weightSoFar += ps[p].weight;
      for (int i = 0; i < e; ++i)
        if (covers[p][i] && cnt[i]++ == 0) --uncovered;
      search();
      for (int i = 0; i < e; ++i)
        if (covers[p][i] && --cnt[i] == 0) ++uncovered;
      weightSoFar -= ps[p].weight;
      chosen.pop_back();
    }
  };
  search();
  std::sort(bestSet.begin(), bestSet.end());
  rep.upper = bestCount;
  rep.coverWeight = bestWeight;
  for (int p : bestSet) rep.cover.push_back(ps[p]);
  return rep;
}

CatReport CatEngine::catBounds() {
  const auto& k = m_.complex();
  if (k.simplexCount() == 0) throw ModelError("empty model");
  CatReport rep = cover(k.all());
  if (!fullLower_) {
    cupLower_ = cupLengthZ2(k) + 1;
    std::vector<int> all(k.vertexCount());
    for (int v = 0; v < k.vertexCount(); ++v) all[v] = v;
    int obstruction = obstructionCount(all);
    sectorLower_ = 0;
    if (opts_.sectorBound && m_.ambient().order() > 1) {
      try {
        for (const auto& s : sectorsSimplicial(m_)) {
          if (!s.twisted) continue;
          LsOptions o = opts_;
          o.sectorBound = false;
          sectorLower_ = std::max(sectorLower_, CatEngine(s.model, o).basicLowerBound());
        }
      } catch (const ModelError&) {
        sectorLower_ = 0;
      }
    }
    fullLower_ = std::max({cupLower_, sectorLower_, obstruction});
  }
  rep.cupLower = cupLower_;
  rep.sectorLower = sectorLower_;
  std::vector<int> all(k.vertexCount());
  for (int v = 0; v < k.vertexCount(); ++v) all[v] = v;
  rep.obstructionLower = obstructionCount(all);
  rep.lower = *fullLower_;
  return rep;
}

CatReport CatEngine::relativeCat(const SimplexSet& sub) {
  const auto& k = m_.complex();
  if (!isSubcomplex(k, sub)) throw ModelError("relative category needs a subcomplex");
  if (sub == k.all()) return catBounds();
  CatReport rep = cover(sub);
  rep.obstructionLower = obstructionCount(verticesOf(k, sub));
  rep.lower = std::max(rep.obstructionLower, sub.empty() ? 0 : 1);
  return rep;
}

DeformResult CatEngine::deformableInto(const SimplexSet& a, const SimplexSet& b) const {
  const auto& k = m_.complex();
  if (!isSubcomplex(k, a) || !isSubcomplex(k, b)) throw ModelError("deformation needs subcomplexes");
  if (a.isSubsetOf(b)) return {Verdict::Yes, makeCertificate(m_, b, b, {})};
  std::vector<SimplexSet> regions{a | b, closure(k, openStar(k, a)) | b};
  for (const auto& r : regions) {
    CollapseOptions opts{opts_.budget, &m_};
    auto res = collapseOnto(k, r, b, opts);
    if (res.verdict == Verdict::Yes) return {Verdict::Yes, makeCertificate(m_, r, b, std::move(res.sequence))};
  }
  return {};
}

// ---------------------------------------------------------------------------

CategoricalResult isCategorical(const OrbifoldComplex& m, const SimplexSet& u, int target, const LsOptions& o) {
  return CatEngine(m, o).isCategorical(u, target);
}

CatReport catBounds(const OrbifoldComplex& m, const LsOptions& o) { return CatEngine(m, o).catBounds(); }

int weight(const OrbifoldComplex& m, const SimplexSet& u, const LsOptions& o) {
  auto p = CatEngine(m, o).certify(u);
  if (!p) throw ModelError("piece has no deformation certificate");
  return p->weight;
}

CatReport relativeCat(const OrbifoldComplex& m, const SimplexSet& sub, const LsOptions& o) {
  return CatEngine(m, o).relativeCat(sub);
}

DeformResult deformableInto(const OrbifoldComplex& m, const SimplexSet& a, const SimplexSet& b, const LsOptions& o) {
  return CatEngine(m, o).deformableInto(a, b);
}

namespace {

WcatResult wcatFrom(const CatReport& r) {
  WcatResult w;
  w.exact = r.exact();
  w.upper = r.upper == kUnbounded ? kUnbounded : r.coverWeight;
  w.lower = w.exact ? r.coverWeight : r.lower;
  w.cover = r.cover;
  return w;
}

}  // namespace

WcatResult wcat(const OrbifoldComplex& m, const LsOptions& o) { return wcatFrom(catBounds(m, o)); }
WcatResult wcat(CatEngine& engine) { return wcatFrom(engine.catBounds()); }

const char* conjectureName(ConjectureVerdict v) {
  switch (v) {
    case ConjectureVerdict::Equal: return "equal";
    case ConjectureVerdict::Unequal: return "unequal";
    case ConjectureVerdict::Undetermined: return "undetermined";
  }
  return "undetermined";
}

InertiaCatReport inertiaCatReport(const OrbifoldComplex& m, const std::vector<SectorModel>& sectors,
                                  const LsOptions& o) {
  InertiaCatReport rep;
  CatEngine main(m, o);
  auto mainReport = main.catBounds();
  rep.wcat = wcatFrom(mainReport);
  bool exact = rep.wcat.exact;
  for (const auto& s : sectors) {
    CatReport r = s.twisted ? CatEngine(s.model, o).catBounds() : mainReport;
    rep.sectors.push_back({s.id, s.twisted, s.element, r.lower, r.upper});
    rep.sumLower += r.lower;
    rep.sumUpper = addBounds(rep.sumUpper, r.upper);
    exact = exact && r.exact();
  }
  if (exact) rep.verdict = rep.sumUpper == rep.wcat.upper ? ConjectureVerdict::Equal : ConjectureVerdict::Unequal;
  return rep;
}

InertiaCatReport inertiaCatReport(const OrbifoldComplex& m, const LsOptions& o) {
  return inertiaCatReport(m, sectorsSimplicial(m), o);
}

}  // namespace orbicat
