#include "orbicat/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace orbicat {

std::vector<std::string> tokenize(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> lines(std::string_view text) {
  std::vector<Line> out;
  int n = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++n;
    auto t = tokenize(text.substr(pos, end - pos));
    if (!t.empty()) out.push_back({n, std::move(t)});
    pos = end + 1;
  }
  return out;
}

std::string join(const std::vector<std::string>& v, std::size_t from = 0) {
  std::string out;
  for (std::size_t i = from; i < v.size(); ++i) out += (i > from ? " " : "") + v[i];
  return out;
}

}  // namespace

std::string readFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------

AbstractGroup parseGroup(std::string_view text) {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;
  bool inTable = false;
  int headerLine = 0;
  for (const auto& [num, tok] : lines(text)) {
    if (inTable) {
      if (elements.empty()) throw ParseError(num, "table before elements");
      if (tok.size() != elements.size())
        throw ParseError(num, "ragged table: expected " + std::to_string(elements.size()) + " entries");
      std::vector<int> row;
      for (const auto& t : tok) {
        auto it = std::find(elements.begin(), elements.end(), t);
        if (it == elements.end()) throw ParseError(num, "unknown element '" + t + "'");
        row.push_back(static_cast<int>(it - elements.begin()));
      }
      table.push_back(std::move(row));
      continue;
    }
    if (tok[0] == "group") {
      if (tok.size() != 2) throw ParseError(num, "expected 'group <name>'");
      name = tok[1];
      headerLine = num;
    } else if (tok[0] == "elements") {
      elements.assign(tok.begin() + 1, tok.end());
      std::set<std::string> uniq(elements.begin(), elements.end());
      if (uniq.size() != elements.size() || elements.empty()) throw ParseError(num, "elements must be distinct");
    } else if (tok[0] == "table:") {
      inTable = true;
    } else {
      throw ParseError(num, "unexpected '" + tok[0] + "'");
    }
  }
  if (name.empty()) throw ParseError(0, "missing 'group' header");
  if (table.size() != elements.size())
    throw ParseError(0, "ragged table: expected " + std::to_string(elements.size()) + " rows");
  try {
    return AbstractGroup(name, elements, table);
  } catch (const GroupError& e) {
    throw ParseError(headerLine, e.what());
  }
}

std::string writeGroup(const AbstractGroup& g) {
  std::ostringstream out;
  out << "group " << g.name() << "\nelements " << join(g.elementNames()) << "\ntable:\n";
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.elementName(g.mul(a, b));
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------

GroupoidPtr parseGroupoid(std::string_view text) {
  RawGroupoid raw;
  std::map<std::string, int> arrowLine;
  std::map<std::string, std::pair<std::string, std::string>> ends;
  std::map<std::pair<std::string, std::string>, std::string> compose;
  std::map<std::string, std::string> inverse;
  bool haveObjects = false;
  for (const auto& [num, tok] : lines(text)) {
    if (tok[0] == "objects") {
      if (haveObjects) throw ParseError(num, "objects declared twice");
      haveObjects = true;
      raw.objects.assign(tok.begin() + 1, tok.end());
      std::set<std::string> uniq(raw.objects.begin(), raw.objects.end());
      if (uniq.size() != raw.objects.size()) throw ParseError(num, "duplicate object");
    } else if (tok[0] == "arrow") {
      if (tok.size() != 6 || tok[2] != ":" || tok[4] != "->") throw ParseError(num, "expected 'arrow f : x -> y'");
      if (arrowLine.count(tok[1])) throw ParseError(num, "duplicate arrow '" + tok[1] + "'");
      for (const auto* end : {&tok[3], &tok[5]})
        if (std::find(raw.objects.begin(), raw.objects.end(), *end) == raw.objects.end())
          throw ParseError(num, "unknown object '" + *end + "'");
      if (tok[1].rfind("id_", 0) == 0) throw ParseError(num, "ids starting with 'id_' are reserved for units");
      arrowLine[tok[1]] = num;
      ends[tok[1]] = {tok[3], tok[5]};
      raw.arrows.push_back({tok[1], tok[3], tok[5]});
    } else if (tok[0] == "inverse") {
      if (tok.size() != 4 || tok[2] != "=") throw ParseError(num, "expected 'inverse f = g'");
      for (const auto* a : {&tok[1], &tok[3]})
        if (!arrowLine.count(*a) && a->rfind("id_", 0) != 0) throw ParseError(num, "unknown arrow '" + *a + "'");
      if (inverse.count(tok[1]) && inverse[tok[1]] != tok[3]) throw ParseError(num, "conflicting inverse");
      inverse[tok[1]] = tok[3];
    } else if (tok[0] == "compose") {
      if (tok.size() != 5 || tok[3] != "=") throw ParseError(num, "expected 'compose g f = h'");
      for (std::size_t i : {1, 2, 4})
        if (!arrowLine.count(tok[i]) && tok[i].rfind("id_", 0) != 0)
          throw ParseError(num, "unknown arrow '" + tok[i] + "'");
      auto endsOf = [&](const std::string& a) -> std::optional<std::pair<std::string, std::string>> {
        if (ends.count(a)) return ends[a];
        auto x = a.substr(3);
        if (std::find(raw.objects.begin(), raw.objects.end(), x) == raw.objects.end()) return std::nullopt;
        return std::make_pair(x, x);
      };
      auto g = endsOf(tok[1]), f = endsOf(tok[2]), h = endsOf(tok[4]);
      if (!g || !f || !h) throw ParseError(num, "unknown unit in composition");
      if (f->second != g->first) throw ParseError(num, tok[1] + " and " + tok[2] + " are not composable");
      if (h->first != f->first || h->second != g->second)
        throw ParseError(num, tok[4] + " has the wrong endpoints for " + tok[1] + " " + tok[2]);
      auto key = std::make_pair(tok[1], tok[2]);
      if (compose.count(key) && compose[key] != tok[4]) throw ParseError(num, "conflicting composition");
      compose[key] = tok[4];
      raw.compositions.push_back({tok[1], tok[2], tok[4]});
    } else {
      throw ParseError(num, "unexpected '" + tok[0] + "'");
    }
  }
  if (!haveObjects) throw ParseError(0, "missing 'objects' line");

  // units and their trivial entries
  for (const auto& x : raw.objects) {
    std::string u = "id_" + x;
    raw.arrows.push_back({u, x, x});
    ends[u] = {x, x};
    raw.units.push_back({x, u});
    inverse[u] = u;
  }
  for (const auto& a : raw.arrows) {
    const auto& [s, t] = ends[a.id];
    for (auto key : {std::make_pair(a.id, "id_" + s), std::make_pair("id_" + t, a.id)})
      if (!compose.count(key)) {
        compose[key] = a.id;
        raw.compositions.push_back({key.first, key.second, a.id});
      }
  }
  for (auto [f, g] : std::map<std::string, std::string>(inverse))
    if (!inverse.count(g)) inverse[g] = f;
  for (const auto& [f, g] : inverse) raw.inverses.push_back({f, g});

  // coverage, reported at the declaring line of the left arrow
  for (const auto& a : raw.arrows) {
    if (!inverse.count(a.id))
      throw ParseError(arrowLine.count(a.id) ? arrowLine[a.id] : 0, "missing inverse for arrow " + a.id);
    for (const auto& b : raw.arrows)
      if (ends[b.id].second == ends[a.id].first && !compose.count({a.id, b.id}))
        throw ParseError(arrowLine.count(a.id) ? arrowLine[a.id] : arrowLine[b.id],
                         "missing composition " + a.id + " " + b.id);
  }
  try {
    return validateGroupoid(raw);
  } catch (const GroupoidError& e) {
    std::string msg = e.what();
    int line = 0;
    for (const auto& a : raw.arrows) {
      if (!arrowLine.count(a.id)) continue;
      auto pos = msg.find(a.id);
      while (pos != std::string::npos) {
        bool left = pos == 0 || msg[pos - 1] == ' ' || msg[pos - 1] == '(';
        auto after = pos + a.id.size();
        bool right = after == msg.size() || msg[after] == ' ' || msg[after] == ',' || msg[after] == ')';
        if (left && right) {
          line = line == 0 ? arrowLine[a.id] : std::min(line, arrowLine[a.id]);
          break;
        }
        pos = msg.find(a.id, pos + 1);
      }
    }
    throw ParseError(line, msg);
  }
}

std::string writeGroupoid(const FiniteGroupoid& g) {
  auto name = [&](int a) { return g.isUnit(a) ? "id_" + g.objectId(g.source(a)) : g.arrowId(a); };
  std::ostringstream out;
  out << "objects " << join(g.objectIds()) << "\n";
  for (int a = 0; a < g.arrowCount(); ++a)
    if (!g.isUnit(a)) out << "arrow " << name(a) << " : " << g.objectId(g.source(a)) << " -> " << g.objectId(g.target(a)) << "\n";
  for (int a = 0; a < g.arrowCount(); ++a)
    if (!g.isUnit(a)) out << "inverse " << name(a) << " = " << name(g.inverse(a)) << "\n";
  for (int a = 0; a < g.arrowCount(); ++a) {
    if (g.isUnit(a)) continue;
    for (int b : g.arrowsFrom(g.target(a)))
      if (!g.isUnit(b)) out << "compose " << name(b) << " " << name(a) << " = " << name(g.compose(b, a)) << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

AbstractGroup resolveGroup(const std::string& text, const std::filesystem::path& baseDir, int line) {
  try {
    if (text.size() > 4 && text.substr(text.size() - 4) == ".grp") return parseGroup(readFile(baseDir / text));
    return namedGroup(text);
  } catch (const ParseError& e) {
    throw ParseError(line, "group " + text + ": " + e.what());
  } catch (const GroupError& e) {
    throw ParseError(line, e.what());
  }
}

int elementIndex(const AbstractGroup& g, const std::string& name, int line) {
  try {
    return g.indexOf(name);
  } catch (const GroupError&) {
    throw ParseError(line, "unknown element '" + name + "' of " + g.name());
  }
}

}  // namespace

ModelFile parseModel(std::string_view text, const std::filesystem::path& baseDir) {
  enum class Section { None, Complex, Labels, Action } section = Section::None;
  std::vector<std::string> vertices;
  std::map<std::string, int> vertexIndex;
  auto vertex = [&](const std::string& name) {
    auto [it, fresh] = vertexIndex.emplace(name, static_cast<int>(vertices.size()));
    if (fresh) vertices.push_back(name);
    return it->second;
  };
  std::vector<std::pair<int, std::vector<int>>> facets, simplices;
  std::optional<AbstractGroup> ambient;
  std::vector<std::pair<int, std::vector<std::string>>> labelLines;  // line, tokens
  std::optional<AbstractGroup> actGroup;
  std::vector<std::pair<int, std::vector<std::string>>> genLines;
  bool sawLabels = false, sawAction = false;

  for (const auto& [num, tok] : lines(text)) {
    if (tok[0] == "complex:") {
      section = Section::Complex;
      continue;
    }
    if (tok[0] == "labels:") {
      if (sawAction) throw ParseError(num, "a model has either labels or an action");
      section = Section::Labels;
      sawLabels = true;
      continue;
    }
    if (tok[0] == "action:") {
      if (sawLabels) throw ParseError(num, "a model has either labels or an action");
      section = Section::Action;
      sawAction = true;
      continue;
    }
    switch (section) {
      case Section::None:
        throw ParseError(num, "expected a section header");
      case Section::Complex:
        if (tok[0] == "vertices") {
          for (std::size_t i = 1; i < tok.size(); ++i) vertex(tok[i]);
        } else if (tok[0] == "facet" || tok[0] == "simplex") {
          if (tok.size() < 2) throw ParseError(num, "empty simplex");
          std::vector<int> s;
          for (std::size_t i = 1; i < tok.size(); ++i) s.push_back(vertex(tok[i]));
          std::sort(s.begin(), s.end());
          if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw ParseError(num, "repeated vertex");
          (tok[0] == "facet" ? facets : simplices).push_back({num, s});
        } else {
          throw ParseError(num, "unexpected '" + tok[0] + "' in complex");
        }
        break;
      case Section::Labels:
        if (tok[0] == "ambient") {
          if (tok.size() != 2) throw ParseError(num, "expected 'ambient <group>'");
          ambient = resolveGroup(tok[1], baseDir, num);
        } else if (tok[0] == "label") {
          labelLines.push_back({num, tok});
        } else {
          throw ParseError(num, "unexpected '" + tok[0] + "' in labels");
        }
        break;
      case Section::Action:
        if (tok[0] == "group") {
          if (tok.size() != 2) throw ParseError(num, "expected 'group <group>'");
          actGroup = resolveGroup(tok[1], baseDir, num);
        } else if (tok[0] == "gen") {
          genLines.push_back({num, tok});
        } else {
          throw ParseError(num, "unexpected '" + tok[0] + "' in action");
        }
        break;
    }
  }
  if (vertices.empty()) throw ParseError(0, "model has no vertices");

  SimplicialComplex complex;
  try {
    std::vector<std::vector<int>> all;
    for (auto& f : facets) all.push_back(f.second);
    auto closed = SimplicialComplex::fromFacets(vertices, all);
    if (!simplices.empty()) {
      // simplex lines must be closed under faces on their own (with facets)
      std::vector<std::vector<int>> listed = all;
      for (auto& s : simplices) listed.push_back(s.second);
      std::set<std::vector<int>> have(listed.begin(), listed.end());
      for (const auto& [num, s] : simplices)
        for (std::size_t i = 0; s.size() > 2 && i < s.size(); ++i) {
          std::vector<int> f = s;
          f.erase(f.begin() + static_cast<long>(i));
          bool inFacet = false;
          for (const auto& fa : all) inFacet = inFacet || std::includes(fa.begin(), fa.end(), f.begin(), f.end());
          if (!have.count(f) && !inFacet) {
            std::string name;
            for (int v : f) name += (name.empty() ? "" : " ") + vertices[v];
            throw ParseError(num, "complex is not closed under faces: missing {" + name + "}");
          }
        }
      closed = SimplicialComplex::fromFacets(vertices, listed);
    }
    complex = std::move(closed);
  } catch (const ModelError& e) {
    throw ParseError(0, e.what());
  }

  if (sawAction) {
    if (!actGroup) throw ParseError(0, "action without 'group'");
    const auto& g = *actGroup;
    const int n = complex.vertexCount();
    std::vector<std::pair<int, std::vector<int>>> gens;
    for (const auto& [num, tok] : genLines) {
      if (tok.size() < 3 || tok[2] != ":") throw ParseError(num, "expected 'gen <element> : v->w ...'");
      int e = elementIndex(g, tok[1], num);
      std::vector<int> p(n);
      for (int v = 0; v < n; ++v) p[v] = v;
      for (std::size_t i = 3; i < tok.size(); ++i) {
        auto arrow = tok[i].find("->");
        if (arrow == std::string::npos) throw ParseError(num, "expected v->w, got '" + tok[i] + "'");
        auto from = tok[i].substr(0, arrow), to = tok[i].substr(arrow + 2);
        if (!vertexIndex.count(from) || !vertexIndex.count(to))
          throw ParseError(num, "unknown vertex in '" + tok[i] + "'");
        p[vertexIndex[from]] = vertexIndex[to];
      }
      gens.push_back({e, std::move(p)});
    }
    std::vector<std::vector<int>> perm(g.order());
    std::vector<int> id(n);
    for (int v = 0; v < n; ++v) id[v] = v;
    perm[g.identity()] = id;
    std::vector<int> queue{g.identity()};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const auto& [s, p] = gens[gi];
        int y = g.mul(s, x);
        std::vector<int> composed(n);
        for (int v = 0; v < n; ++v) composed[v] = p[perm[x][v]];
        if (perm[y].empty()) {
          perm[y] = std::move(composed);
          queue.push_back(y);
        } else if (perm[y] != composed) {
          throw ParseError(genLines[gi].first, "generators do not define an action of " + g.name());
        }
      }
    }
    if (static_cast<int>(queue.size()) != g.order()) throw ParseError(0, "generators do not generate " + g.name());
    try {
      SimplicialGComplex x(std::move(complex), g, std::move(perm));
      auto ready = makeQuotientReady(x);
      auto q = quotientOrbifoldComplex(ready);
      return {std::move(ready), std::move(q)};
    } catch (const ModelError& e) {
      throw ParseError(0, e.what());
    }
  }

  if (!sawLabels) return {std::nullopt, OrbifoldComplex(std::move(complex))};
  if (!ambient) throw ParseError(0, "labels without 'ambient'");
  std::vector<Subgroup> labels(complex.simplexCount(), trivialSubgroup(*ambient));
  std::vector<int> labelLine(complex.simplexCount(), 0);
  for (const auto& [num, tok] : labelLines) {
    auto arrow = std::find(tok.begin(), tok.end(), "->");
    if (arrow == tok.end() || arrow == tok.begin() + 1) throw ParseError(num, "expected 'label v... -> e...'");
    std::vector<int> s;
    for (auto it = tok.begin() + 1; it != arrow; ++it) {
      if (!vertexIndex.count(*it)) throw ParseError(num, "unknown vertex '" + *it + "'");
      s.push_back(vertexIndex[*it]);
    }
    std::sort(s.begin(), s.end());
    auto idx = complex.find(s);
    if (!idx) throw ParseError(num, "label for a simplex not in the complex");
    Subgroup sub;
    for (auto it = arrow + 1; it != tok.end(); ++it) sub.push_back(elementIndex(*ambient, *it, num));
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    if (!isSubgroup(*ambient, sub)) throw ParseError(num, "label is not a subgroup of " + ambient->name());
    labels[*idx] = std::move(sub);
    labelLine[*idx] = num;
  }
  for (int s = 0; s < complex.simplexCount(); ++s)
    for (int f : complex.faces(s))
      if (!std::includes(labels[f].begin(), labels[f].end(), labels[s].begin(), labels[s].end()))
        throw ParseError(labelLine[s] ? labelLine[s] : labelLine[f],
                         "label of " + complex.simplexName(s) + " is not contained in the label of its face " +
                             complex.simplexName(f));
  try {
    return {std::nullopt, OrbifoldComplex(std::move(complex), *ambient, std::move(labels))};
  } catch (const ModelError& e) {
    throw ParseError(0, e.what());
  }
}

namespace {

void writeComplex(std::ostringstream& out, const SimplicialComplex& k) {
  out << "complex:\nvertices " << join(k.vertexNames()) << "\n";
  for (int s : maximalSimplices(k, k.all())) {
    if (k.dim(s) == 0) continue;
    out << "facet";
    for (int v : k.simplex(s)) out << " " << k.vertexName(v);
    out << "\n";
  }
}

}  // namespace

std::string writeModel(const OrbifoldComplex& m) {
  std::ostringstream out;
  const auto& k = m.complex();
  writeComplex(out, k);
  if (m.ambient().order() == 1) return out.str();
  out << "labels:\nambient " << m.ambient().name() << "\n";
  for (int s = 0; s < k.simplexCount(); ++s) {
    if (m.labelOrder(s) == 1) continue;
    out << "label";
    for (int v : k.simplex(s)) out << " " << k.vertexName(v);
    out << " ->";
    for (int e : m.label(s)) out << " " << m.ambient().elementName(e);
    out << "\n";
  }
  return out.str();
}

std::string writeModel(const SimplicialGComplex& x) {
  std::ostringstream out;
  const auto& k = x.complex();
  writeComplex(out, k);
  out << "action:\ngroup " << x.group().name() << "\n";
  for (int g = 0; g < x.group().order(); ++g) {
    if (g == x.group().identity()) continue;
    out << "gen " << x.group().elementName(g) << " :";
    for (int v = 0; v < k.vertexCount(); ++v)
      if (x.actVertex(g, v) != v) out << " " << k.vertexName(v) << "->" << k.vertexName(x.actVertex(g, v));
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------

InvariantFunction parseFunction(std::string_view text, const SimplicialComplex& k) {
  std::vector<std::optional<ExactRational>> values(k.vertexCount());
  for (const auto& [num, tok] : lines(text)) {
    if (tok.size() != 2) throw ParseError(num, "expected '<vertex> <p/q>'");
    auto v = k.findVertex(tok[0]);
    if (!v) throw ParseError(num, "unknown vertex '" + tok[0] + "'");
    if (values[*v]) throw ParseError(num, "vertex '" + tok[0] + "' given twice");
    try {
      values[*v] = ExactRational::parse(tok[1]);
    } catch (const std::exception&) {
      throw ParseError(num, "malformed value '" + tok[1] + "'");
    }
  }
  InvariantFunction f;
  for (int v = 0; v < k.vertexCount(); ++v) {
    if (!values[v]) throw ParseError(0, "no value for vertex '" + k.vertexName(v) + "'");
    f.push_back(*values[v]);
  }
  return f;
}

std::string writeFunction(const InvariantFunction& f, const SimplicialComplex& k) {
  std::ostringstream out;
  for (int v = 0; v < k.vertexCount(); ++v) out << k.vertexName(v) << " " << f[v] << "\n";
  return out.str();
}

}  // namespace orbicat
