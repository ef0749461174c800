#include "orbicat/collapse.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace orbicat {

bool collapseIsMonotone(const OrbifoldComplex& m, const Collapse& c) {
  for (int rho : m.complex().allFaces(c.coface))
    if (rho != c.face && !m.embeds(c.face, rho)) return false;
  return true;
}

namespace {

class Searcher {
 public:
  Searcher(const SimplicialComplex& k, const SimplexSet& region, const SimplexSet& target, const CollapseOptions& o)
      : k_(k), target_(target), opts_(o), state_(region) {
    remaining_ = static_cast<long long>(region.count());
    targetCount_ = static_cast<long long>(target.count());
    cofaceCount_.assign(k.simplexCount(), 0);
    for (int s : region.members())
      for (int f : k.faces(s)) ++cofaceCount_[f];
    // distance of each vertex from the target, used to order moves
    std::vector<int> dist(k.vertexCount(), -1);
    std::deque<int> q;
    for (int v : verticesOf(k, target)) {
      dist[v] = 0;
      q.push_back(v);
    }
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int e : k.cofaces(v)) {
        if (!region.test(e) || k.dim(e) != 1) continue;
        int w = k.simplex(e)[0] == v ? k.simplex(e)[1] : k.simplex(e)[0];
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push_back(w);
        }
      }
    }
    // simplices each one could ever be collapsed with
    partners_.resize(k.simplexCount());
    for (int s : region.members()) {
      if (target.test(s)) continue;
      for (int c : k.cofaces(s))
        if (region.test(c) && allowed(s, c)) partners_[s].push_back(c);
      for (int f : k.faces(s))
        if (allowed(f, s)) partners_[s].push_back(f);
    }
    far_.assign(k.simplexCount(), 0);
    for (int s : region.members())
      for (int v : k.simplex(s)) far_[s] = std::max(far_[s], dist[v] < 0 ? 1 << 20 : dist[v]);
  }

  CollapseResult run() {
    CollapseResult r;
    const auto members = state_.members();
    bool ok = std::none_of(members.begin(), members.end(), [&](int s) { return stranded(s); }) && dfs();
    r.steps = steps_;
    if (ok) {
      r.verdict = Verdict::Yes;
      r.sequence = sequence_;
    } else {
      r.verdict = budgetHit_ ? Verdict::Unknown : Verdict::No;
    }
    return r;
  }

 private:
  bool allowed(int face, int coface) const {
    if (target_.test(face) || target_.test(coface)) return false;
    if (opts_.labels && !collapseIsMonotone(*opts_.labels, {face, coface})) return false;
    return true;
  }

  std::vector<Collapse> moves() const {
    std::vector<Collapse> out;
    for (int s : state_.members()) {
      if (cofaceCount_[s] != 1 || target_.test(s)) continue;
      int tau = -1;
      for (int c : k_.cofaces(s))
        if (state_.test(c)) tau = c;
      if (allowed(s, tau)) out.push_back({s, tau});
    }
    std::sort(out.begin(), out.end(), [&](const Collapse& a, const Collapse& b) {
      if (k_.dim(a.coface) != k_.dim(b.coface)) return k_.dim(a.coface) > k_.dim(b.coface);
      if (far_[a.coface] != far_[b.coface]) return far_[a.coface] > far_[b.coface];
      if (a.coface != b.coface) return a.coface < b.coface;
      return a.face < b.face;
    });
    return out;
  }

  void apply(const Collapse& c) {
    state_.reset(c.face);
    state_.reset(c.coface);
    for (int f : k_.faces(c.coface)) --cofaceCount_[f];
    for (int f : k_.faces(c.face)) --cofaceCount_[f];
    remaining_ -= 2;
  }
  void undo(const Collapse& c) {
    state_.set(c.face);
    state_.set(c.coface);
    for (int f : k_.faces(c.coface)) ++cofaceCount_[f];
    for (int f : k_.faces(c.face)) ++cofaceCount_[f];
    remaining_ += 2;
  }

  bool stranded(int s) const {
    if (!state_.test(s) || target_.test(s)) return false;
    return std::none_of(partners_[s].begin(), partners_[s].end(), [&](int p) { return state_.test(p); });
  }
  // only neighbours of the removed pair can lose their last partner
  bool strandedAfter(const Collapse& c) const {
    for (int x : {c.face, c.coface}) {
      for (int f : k_.faces(x))
        if (stranded(f)) return true;
      for (int f : k_.cofaces(x))
        if (stranded(f)) return true;
    }
    return false;
  }

  bool dfs() {
    if (remaining_ == targetCount_) return true;
    if (dead_.count(state_)) return false;
    for (const auto& m : moves()) {
      if (steps_ >= opts_.budget) {
        budgetHit_ = true;
        return false;
      }
      ++steps_;
      apply(m);
      sequence_.push_back(m);
      if (!strandedAfter(m) && dfs()) return true;
      sequence_.pop_back();
      undo(m);
      if (budgetHit_) return false;
    }
    dead_.insert(state_);
    return false;
  }

  const SimplicialComplex& k_;
  const SimplexSet& target_;
  const CollapseOptions& opts_;
  SimplexSet state_;
  long long remaining_ = 0;
  long long targetCount_ = 0;
  std::vector<int> cofaceCount_;
  std::vector<int> far_;
  std::vector<std::vector<int>> partners_;
  std::unordered_set<SimplexSet, SimplexSetHash> dead_;
  std::vector<Collapse> sequence_;
  long long steps_ = 0;
  bool budgetHit_ = false;
};

}  // namespace

CollapseResult collapseOnto(const SimplicialComplex& k, const SimplexSet& region, const SimplexSet& target,
                            const CollapseOptions& options) {
  if (!isSubcomplex(k, region) || !isSubcomplex(k, target)) throw ModelError("collapse needs subcomplexes");
  if (!target.isSubsetOf(region)) throw ModelError("collapse target is not inside the region");
  if (eulerCharacteristic(k, region) != eulerCharacteristic(k, target)) return {Verdict::No, {}, 0};
  Searcher s(k, region, target, options);
  return s.run();
}

CollapseResult isCollapsible(const SimplicialComplex& k, const SimplexSet& region, int vertex,
                             const CollapseOptions& options) {
  if (!region.test(vertex)) throw ModelError("target vertex is not in the region");
  SimplexSet target = k.none();
  target.set(vertex);
  return collapseOnto(k, region, target, options);
}

bool replayCollapses(const SimplicialComplex& k, const SimplexSet& region, const SimplexSet& target,
                     const std::vector<Collapse>& sequence, const OrbifoldComplex* labels) {
  SimplexSet state = region;
  for (const auto& c : sequence) {
    if (c.face < 0 || c.coface < 0 || c.face >= k.simplexCount() || c.coface >= k.simplexCount()) return false;
    if (!state.test(c.face) || !state.test(c.coface)) return false;
    const auto& faces = k.faces(c.coface);
    if (std::find(faces.begin(), faces.end(), c.face) == faces.end()) return false;
    for (int other : k.cofaces(c.face))
      if (other != c.coface && state.test(other)) return false;
    if (target.test(c.face) || target.test(c.coface)) return false;
    if (labels && !collapseIsMonotone(*labels, c)) return false;
    state.reset(c.face);
    state.reset(c.coface);
  }
  return state == target;
}

}  // namespace orbicat
