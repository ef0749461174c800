#include "orbicat/gpath.hpp"

#include "orbicat/constructions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace orbicat {

namespace {

void addEdges(PathModel& p, const SimplicialComplex& k) {
  for (int s = 0; s < k.simplexCount(); ++s)
    if (k.dim(s) == 1) p.edges.insert({k.simplex(s)[0], k.simplex(s)[1]});
}

}  // namespace

PathModel pathModel(const OrbifoldComplex& m) {
  const auto& k = m.complex();
  std::vector<InflationOrbit> orbits;
  for (int v = 0; v < k.vertexCount(); ++v) orbits.push_back({{k.vertexName(v)}, m.labelGroup(v)});
  PathModel p{inflatedGroupoid(orbits), {}};
  addEdges(p, k);
  return p;
}

PathModel pathModel(const SimplicialGComplex& x) {
  const auto& k = x.complex();
  std::vector<std::vector<int>> act(x.group().order(), std::vector<int>(k.vertexCount()));
  for (int g = 0; g < x.group().order(); ++g)
    for (int v = 0; v < k.vertexCount(); ++v) act[g][v] = x.actVertex(g, v);
  PathModel p{translationGroupoid(makeGroupAction(x.group(), k.vertexNames(), std::move(act))), {}};
  addEdges(p, k);
  return p;
}

PathModel teardropCharts() {
  auto trivial = AbstractGroup::trivial();
  PathModel p{inflatedGroupoid({{{"c"}, cyclicGroup(3)}, {{"a0", "a1", "a2", "b"}, trivial}, {{"s"}, trivial}}), {}};
  const auto& g = *p.groupoid;
  auto edge = [&](const char* x, const char* y) {
    int a = g.objectIndex(x), b = g.objectIndex(y);
    p.edges.insert({std::min(a, b), std::max(a, b)});
  };
  edge("c", "a0");
  edge("c", "a1");
  edge("c", "a2");
  edge("a0", "a1");
  edge("a1", "a2");
  edge("a2", "a0");
  edge("b", "s");
  return p;
}

ValidatedGPath validateGPath(const MultipleGPath& p, const PathModel& model) {
  const auto& g = *model.groupoid;
  const int n = static_cast<int>(p.segments.size());
  if (n == 0) throw PathError(0, "path has no segments");
  if (static_cast<int>(p.marks.size()) != n + 1)
    throw PathError(0, "expected " + std::to_string(n + 1) + " marks, got " + std::to_string(p.marks.size()));
  for (int i = 0; i < n; ++i)
    if (p.marks[i + 1] < p.marks[i]) throw PathError(i, "marks decrease");
  if (static_cast<int>(p.arrows.size()) != n - 1)
    throw PathError(0, "expected " + std::to_string(n - 1) + " connecting arrows");

  auto object = [&](int seg, const std::string& id) {
    auto x = g.findObject(id);
    if (!x) throw PathError(seg, "unknown point '" + id + "'");
    return *x;
  };
  auto arrow = [&](int seg, const std::string& id) {
    try {
      return g.arrowIndex(id);
    } catch (const GroupoidError&) {
      throw PathError(seg, "unknown arrow '" + id + "'");
    }
  };

  // resolve points, check steps
  std::vector<std::vector<std::vector<int>>> pts(n);
  for (int i = 0; i < n; ++i) {
    if (p.segments[i].branches.empty()) throw PathError(i, "segment has no branches");
    for (std::size_t j = 0; j < p.segments[i].branches.size(); ++j) {
      const auto& br = p.segments[i].branches[j];
      if (br.points.empty()) throw PathError(i, "empty branch");
      std::vector<int> xs;
      for (const auto& id : br.points) xs.push_back(object(i, id));
      for (std::size_t t = 0; t + 1 < xs.size(); ++t)
        if (!model.adjacent(xs[t], xs[t + 1]))
          throw PathError(i, "branch " + std::to_string(j) + " steps from " + br.points[t] + " to " +
                                 br.points[t + 1] + " along no edge");
      pts[i].push_back(std::move(xs));
    }
  }
  std::vector<int> conn;
  for (int i = 0; i + 1 < n; ++i) {
    int a = arrow(i, p.arrows[i]);
    if (g.source(a) != pts[i][0].back()) throw PathError(i, "arrow " + p.arrows[i] + " does not start where the segment ends");
    if (g.target(a) != pts[i + 1][0].front())
      throw PathError(i, "arrow " + p.arrows[i] + " does not end where the next segment starts");
    conn.push_back(a);
  }

  ValidatedGPath out;
  auto single = [&](int seg, int br) {
    SplicedPath s{seg, br, {}};
    for (int i = 0; i < n; ++i) {
      const auto& xs = pts[i][i == seg ? br : 0];
      s.points.insert(s.points.end(), xs.begin(), xs.end());
    }
    return s;
  };
  out.splices.push_back(single(0, 0));
  for (int i = 0; i < n; ++i)
    for (std::size_t j = 1; j < p.segments[i].branches.size(); ++j) {
      const auto& br = p.segments[i].branches[j];
      const auto& main = pts[i][0];
      const auto& mine = pts[i][j];
      const std::string tag = "branch " + std::to_string(j);
      if (i > 0) {
        if (!br.start) throw PathError(i, tag + " needs a start arrow");
        int h = arrow(i, *br.start);
        if (g.source(h) != main.front() || g.target(h) != mine.front())
          throw PathError(i, tag + ": start arrow does not join the branch starts");
        int hg = g.compose(h, conn[i - 1]);
        if (g.target(hg) != mine.front()) throw PathError(i, tag + " does not splice at its start");
      }
      if (i + 1 < n) {
        if (!br.end) throw PathError(i, tag + " needs an end arrow");
        int h = arrow(i, *br.end);
        if (g.source(h) != main.back() || g.target(h) != mine.back())
          throw PathError(i, tag + ": end arrow does not join the branch ends");
        int gh = g.compose(conn[i], g.inverse(h));
        if (g.source(gh) != mine.back()) throw PathError(i, tag + " does not splice at its end");
      }
      out.splices.push_back(single(i, static_cast<int>(j)));
    }
  return out;
}

bool pathInjectionsHold(const ValidatedGPath& p, const PathModel& model) {
  const auto& g = *model.groupoid;
  std::map<int, AbstractGroup> iso;
  auto group = [&](int x) -> const AbstractGroup& {
    auto it = iso.find(x);
    if (it == iso.end()) it = iso.emplace(x, isotropy(g, x)).first;
    return it->second;
  };
  std::map<std::pair<int, int>, bool> memo;
  for (const auto& s : p.splices)
    for (std::size_t a = 0; a < s.points.size(); ++a)
      for (std::size_t b = a + 1; b < s.points.size(); ++b) {
        auto key = std::make_pair(s.points[a], s.points[b]);
        auto it = memo.find(key);
        if (it == memo.end()) {
          const auto& ga = group(key.first);
          const auto& gb = group(key.second);
          bool ok = gb.order() % ga.order() == 0 && findEmbedding(ga, gb).has_value();
          it = memo.emplace(key, ok).first;
        }
        if (!it->second) return false;
      }
  return true;
}

MultipleGPath parseGPath(std::string_view text) {
  MultipleGPath p;
  bool haveMarks = false;
  int n = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++n;
    auto tok = tokenize(raw);
    if (tok.empty()) continue;
    if (tok[0] == "marks") {
      if (haveMarks) throw ParseError(n, "marks given twice");
      haveMarks = true;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        try {
          p.marks.push_back(ExactRational::parse(tok[i]));
        } catch (const std::exception&) {
          throw ParseError(n, "malformed mark '" + tok[i] + "'");
        }
      }
    } else if (tok[0] == "segment") {
      if (tok.size() != 1) throw ParseError(n, "expected 'segment'");
      if (!p.segments.empty() && p.arrows.size() != p.segments.size())
        throw ParseError(n, "missing 'arrow' before segment");
      p.segments.emplace_back();
    } else if (tok[0] == "branch") {
      if (p.segments.empty()) throw ParseError(n, "branch before any segment");
      PathBranch b;
      std::size_t i = 1;
      for (; i < tok.size() && tok[i] != "start" && tok[i] != "end"; ++i) b.points.push_back(tok[i]);
      while (i < tok.size()) {
        if (i + 1 >= tok.size()) throw ParseError(n, "'" + tok[i] + "' needs an arrow");
        (tok[i] == "start" ? b.start : b.end) = tok[i + 1];
        i += 2;
        if (i < tok.size() && tok[i] != "start" && tok[i] != "end") throw ParseError(n, "unexpected '" + tok[i] + "'");
      }
      if (b.points.empty()) throw ParseError(n, "branch without points");
      p.segments.back().branches.push_back(std::move(b));
    } else if (tok[0] == "arrow") {
      if (tok.size() != 2) throw ParseError(n, "expected 'arrow <id>'");
      if (p.segments.size() != p.arrows.size() + 1) throw ParseError(n, "arrow must follow a segment");
      p.arrows.push_back(tok[1]);
    } else {
      throw ParseError(n, "unexpected '" + tok[0] + "'");
    }
  }
  if (!haveMarks) throw ParseError(0, "missing 'marks' line");
  return p;
}

std::string writeGPath(const MultipleGPath& p) {
  std::ostringstream out;
  out << "marks";
  for (const auto& r : p.marks) out << " " << r;
  out << "\n";
  for (std::size_t i = 0; i < p.segments.size(); ++i) {
    if (i > 0) out << "arrow " << p.arrows[i - 1] << "\n";
    out << "segment\n";
    for (const auto& b : p.segments[i].branches) {
      out << "branch";
      for (const auto& x : b.points) out << " " << x;
      if (b.start) out << " start " << *b.start;
      if (b.end) out << " end " << *b.end;
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace orbicat
