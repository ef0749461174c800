#include "orbicat/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace orbicat {

AbstractGroup::AbstractGroup(std::string name, std::vector<std::string> elements, std::vector<std::vector<int>> table)
    : name_(std::move(name)), names_(std::move(elements)), table_(std::move(table)) {
  const int n = order();
  if (n == 0) throw GroupError("group '" + name_ + "' has no elements");
  if (static_cast<int>(table_.size()) != n) throw GroupError("group '" + name_ + "': table has wrong number of rows");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table_[a].size()) != n)
      throw GroupError("group '" + name_ + "': ragged table at row " + names_[a]);
    for (int b = 0; b < n; ++b)
      if (table_[a][b] < 0 || table_[a][b] >= n)
        throw GroupError("group '" + name_ + "': product out of range at " + names_[a] + "*" + names_[b]);
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw GroupError("group '" + name_ + "': no identity element");
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] < 0) throw GroupError("group '" + name_ + "': element " + names_[a] + " has no inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw GroupError("group '" + name_ + "': not associative at (" + names_[a] + "," + names_[b] + "," +
                           names_[c] + ")");
  orders_.assign(n, 1);
  for (int a = 0; a < n; ++a) {
    int x = a;
    int k = 1;
    while (x != identity_) {
      x = table_[x][a];
      ++k;
    }
    orders_[a] = k;
  }
}

AbstractGroup AbstractGroup::trivial() { return AbstractGroup("1", {"1"}, {{0}}); }

bool AbstractGroup::isAbelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = a + 1; b < order(); ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

int AbstractGroup::indexOf(std::string_view element) const {
  for (int a = 0; a < order(); ++a)
    if (names_[a] == element) return a;
  throw GroupError("group '" + name_ + "' has no element '" + std::string(element) + "'");
}

namespace {

std::string power(const std::string& base, int k) {
  if (k == 0) return "";
  if (k == 1) return base;
  return base + std::to_string(k);
}

}  // namespace

AbstractGroup cyclicGroup(int n) {
  if (n < 1) throw GroupError("cyclic group order must be positive");
  std::vector<std::string> names(n);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    names[i] = i == 0 ? "1" : power("r", i);
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return AbstractGroup("Z" + std::to_string(n), std::move(names), std::move(table));
}

AbstractGroup dihedralGroup(int order) {
  if (order < 2 || order % 2) throw GroupError("dihedral group order must be even and positive");
  const int m = order / 2;
  // index f*m + i stands for s^f r^i
  std::vector<std::string> names(order);
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int f = 0; f < 2; ++f)
    for (int i = 0; i < m; ++i) {
      std::string w = (f ? "s" : "") + power("r", i);
      names[f * m + i] = w.empty() ? "1" : w;
    }
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      int fa = a / m, ia = a % m, fb = b / m, ib = b % m;
      int f = (fa + fb) % 2;
      int i = ((fb ? -ia : ia) + ib) % m;
      if (i < 0) i += m;
      table[a][b] = f * m + i;
    }
  return AbstractGroup("D" + std::to_string(order), std::move(names), std::move(table));
}

AbstractGroup directProduct(const AbstractGroup& a, const AbstractGroup& b) {
  const int na = a.order(), nb = b.order();
  std::vector<std::string> names(static_cast<std::size_t>(na * nb));
  std::vector<std::vector<int>> table(names.size(), std::vector<int>(names.size()));
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) names[x * nb + y] = "(" + a.elementName(x) + "," + b.elementName(y) + ")";
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          table[x1 * nb + y1][x2 * nb + y2] = a.mul(x1, x2) * nb + b.mul(y1, y2);
  return AbstractGroup(a.name() + "x" + b.name(), std::move(names), std::move(table));
}

AbstractGroup groupFromPermutations(std::string name, const std::vector<std::vector<int>>& generators,
                                    const std::vector<std::string>& generatorNames) {
  if (generators.empty()) return AbstractGroup(std::move(name), {"1"}, {{0}});
  const std::size_t degree = generators.front().size();
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  auto compose = [](const std::vector<int>& p, const std::vector<int>& q) {
    // (p*q)(x) = p(q(x))
    std::vector<int> r(q.size());
    for (std::size_t x = 0; x < q.size(); ++x) r[x] = p[q[x]];
    return r;
  };
  std::vector<std::vector<int>> elems{id};
  std::vector<std::string> names{"1"};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t g = 0; g < generators.size(); ++g) {
      auto p = compose(elems[i], generators[g]);
      if (!index.count(p)) {
        index[p] = static_cast<int>(elems.size());
        elems.push_back(p);
        names.push_back((names[i] == "1" ? "" : names[i]) + generatorNames.at(g));
      }
    }
  const std::size_t n = elems.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  return AbstractGroup(std::move(name), std::move(names), std::move(table));
}

AbstractGroup symmetricGroup(int n) {
  if (n < 1) throw GroupError("symmetric group degree must be positive");
  if (n == 1) return AbstractGroup("S1", {"1"}, {{0}});
  std::vector<int> cycle(n), swap(n);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return groupFromPermutations("S" + std::to_string(n), {cycle, swap}, {"c", "t"});
}

AbstractGroup quaternionGroup() {
  // left regular representation on (1, i, j, k, -1, -i, -j, -k)
  return groupFromPermutations("Q8", {{1, 4, 3, 6, 5, 0, 7, 2}, {2, 7, 4, 1, 6, 3, 0, 5}}, {"i", "j"});
}

AbstractGroup alternatingGroup4() {
  return groupFromPermutations("A4", {{1, 2, 0, 3}, {1, 0, 3, 2}}, {"a", "b"});
}

AbstractGroup dicyclicGroup12() {
  // <(0 1 2), (1 2)(3 4 5 6)>
  return groupFromPermutations("Dic12", {{1, 2, 0, 3, 4, 5, 6}, {0, 2, 1, 4, 5, 6, 3}}, {"a", "b"});
}

AbstractGroup namedGroup(std::string_view name) {
  if (auto x = name.find('x'); x != std::string_view::npos) {
    auto g = directProduct(namedGroup(name.substr(0, x)), namedGroup(name.substr(x + 1)));
    g.rename(std::string(name));
    return g;
  }
  auto number = [&](std::size_t from) {
    auto digits = name.substr(from);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw GroupError("unknown group name '" + std::string(name) + "'");
    return std::stoi(std::string(digits));
  };
  if (name == "V4") {
    auto g = directProduct(cyclicGroup(2), cyclicGroup(2));
    g.rename("V4");
    return g;
  }
  if (name == "Q8") return quaternionGroup();
  if (name == "A4") return alternatingGroup4();
  if (name == "Dic12") return dicyclicGroup12();
  if (name == "1") return AbstractGroup::trivial();
  if (name.starts_with("Z")) return cyclicGroup(number(1));
  if (name.starts_with("D")) return dihedralGroup(number(1));
  if (name.starts_with("S")) return symmetricGroup(number(1));
  throw GroupError("unknown group name '" + std::string(name) + "'");
}

bool isSubgroup(const AbstractGroup& g, std::span<const int> elements) {
  std::vector<char> in(g.order(), 0);
  for (int e : elements) {
    if (e < 0 || e >= g.order()) return false;
    in[e] = 1;
  }
  if (!in[g.identity()]) return false;
  for (int a : elements)
    for (int b : elements)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

Subgroup generatedSubgroup(const AbstractGroup& g, std::span<const int> generators) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> out{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int s : generators) {
      int x = g.mul(out[i], s);
      if (!in[x]) {
        in[x] = 1;
        out.push_back(x);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup centralizer(const AbstractGroup& g, int element) {
  Subgroup out;
  for (int h = 0; h < g.order(); ++h)
    if (g.mul(h, element) == g.mul(element, h)) out.push_back(h);
  return out;
}

Subgroup fullSubgroup(const AbstractGroup& g) {
  Subgroup out(g.order());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

Subgroup trivialSubgroup(const AbstractGroup& g) { return {g.identity()}; }

AbstractGroup subgroupAsGroup(const AbstractGroup& g, const Subgroup& elements, std::string name) {
  if (!isSubgroup(g, elements)) throw GroupError("not a subgroup of " + g.name());
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) local[elements[i]] = static_cast<int>(i);
  std::vector<std::string> names;
  std::vector<std::vector<int>> table(elements.size(), std::vector<int>(elements.size()));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    names.push_back(g.elementName(elements[i]));
    for (std::size_t j = 0; j < elements.size(); ++j) table[i][j] = local[g.mul(elements[i], elements[j])];
  }
  if (name.empty()) name = g.name() + "<" + std::to_string(elements.size()) + ">";
  return AbstractGroup(std::move(name), std::move(names), std::move(table));
}

std::vector<std::vector<int>> conjugacyClasses(const AbstractGroup& g) {
  std::vector<int> cls(g.order(), -1);
  std::vector<std::vector<int>> out;
  for (int a = 0; a < g.order(); ++a) {
    if (cls[a] >= 0) continue;
    std::vector<int> c;
    for (int h = 0; h < g.order(); ++h) {
      int x = g.conjugate(h, a);
      if (cls[x] < 0) {
        cls[x] = static_cast<int>(out.size());
        c.push_back(x);
      }
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

int classNumber(const AbstractGroup& g) { return static_cast<int>(conjugacyClasses(g).size()); }

std::vector<int> orderProfile(const AbstractGroup& g) {
  std::vector<int> out;
  for (int a = 0; a < g.order(); ++a) out.push_back(g.elementOrder(a));
  std::sort(out.begin(), out.end());
  return out;
}

int commutatorSubgroupOrder(const AbstractGroup& g) {
  std::vector<int> comms;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      comms.push_back(g.mul(g.mul(a, b), g.mul(g.inverse(a), g.inverse(b))));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return static_cast<int>(generatedSubgroup(g, comms).size());
}

bool isHomomorphism(const AbstractGroup& from, const AbstractGroup& to, const GroupMap& map) {
  if (static_cast<int>(map.size()) != from.order()) return false;
  for (int x : map)
    if (x < 0 || x >= to.order()) return false;
  for (int a = 0; a < from.order(); ++a)
    for (int b = 0; b < from.order(); ++b)
      if (map[from.mul(a, b)] != to.mul(map[a], map[b])) return false;
  return true;
}

bool isInjective(const GroupMap& map, int codomainOrder) {
  std::vector<char> hit(codomainOrder, 0);
  for (int x : map) {
    if (x < 0 || x >= codomainOrder || hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

namespace {

// Generating set chosen greedily from elements of largest order first.
std::vector<int> generatingSet(const AbstractGroup& g) {
  std::vector<int> byOrder(g.order());
  std::iota(byOrder.begin(), byOrder.end(), 0);
  std::stable_sort(byOrder.begin(), byOrder.end(),
                   [&](int a, int b) { return g.elementOrder(a) > g.elementOrder(b); });
  std::vector<int> gens;
  Subgroup h = trivialSubgroup(g);
  for (int a : byOrder) {
    if (static_cast<int>(h.size()) == g.order()) break;
    if (std::binary_search(h.begin(), h.end(), a)) continue;
    gens.push_back(a);
    h = generatedSubgroup(g, gens);
  }
  return gens;
}

// Extends an assignment on gens[0..k) to the subgroup they generate.
// Returns false on inconsistency or a collision (non-injectivity).
bool extend(const AbstractGroup& a, const AbstractGroup& b, const std::vector<int>& gens, std::size_t k,
            const std::vector<int>& images, GroupMap& map) {
  std::fill(map.begin(), map.end(), -1);
  std::vector<int> used(b.order(), -1);
  map[a.identity()] = b.identity();
  used[b.identity()] = a.identity();
  std::deque<int> queue{a.identity()};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < k; ++i) {
      int y = a.mul(x, gens[i]);
      int fy = b.mul(map[x], images[i]);
      if (map[y] >= 0) {
        if (map[y] != fy) return false;
        continue;
      }
      if (used[fy] >= 0) return false;
      map[y] = fy;
      used[fy] = y;
      queue.push_back(y);
    }
  }
  return true;
}

bool searchEmbedding(const AbstractGroup& a, const AbstractGroup& b, const std::vector<int>& gens, std::size_t k,
                     std::vector<int>& images, GroupMap& map) {
  if (k == gens.size()) return extend(a, b, gens, k, images, map);
  for (int c = 0; c < b.order(); ++c) {
    if (b.elementOrder(c) != a.elementOrder(gens[k])) continue;
    images[k] = c;
    if (!extend(a, b, gens, k + 1, images, map)) continue;
    if (searchEmbedding(a, b, gens, k + 1, images, map)) return true;
  }
  return false;
}

}  // namespace

std::optional<GroupMap> findEmbedding(const AbstractGroup& a, const AbstractGroup& b) {
  if (b.order() % a.order() != 0) return std::nullopt;
  auto pa = orderProfile(a);
  auto pb = orderProfile(b);
  // every element order of a must occur in b at least as often
  {
    std::map<int, int> ca, cb;
    for (int o : pa) ++ca[o];
    for (int o : pb) ++cb[o];
    for (auto [o, c] : ca)
      if (cb[o] < c) return std::nullopt;
  }
  auto gens = generatingSet(a);
  std::vector<int> images(gens.size(), -1);
  GroupMap map(a.order(), -1);
  if (!searchEmbedding(a, b, gens, 0, images, map)) return std::nullopt;
  return map;
}

std::optional<GroupMap> findIsomorphism(const AbstractGroup& a, const AbstractGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (orderProfile(a) != orderProfile(b)) return std::nullopt;
  if (a.isAbelian() != b.isAbelian()) return std::nullopt;
  if (classNumber(a) != classNumber(b)) return std::nullopt;
  if (commutatorSubgroupOrder(a) != commutatorSubgroupOrder(b)) return std::nullopt;
  return findEmbedding(a, b);
}

}  // namespace orbicat
