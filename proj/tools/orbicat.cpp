// orbicat: command-line front end.

#include "orbicat/constructions.hpp"
#include "orbicat/corpus.hpp"
#include "orbicat/equivalence.hpp"
#include "orbicat/gpath.hpp"
#include "orbicat/inertia.hpp"
#include "orbicat/io.hpp"
#include "orbicat/lscat.hpp"
#include "orbicat/morse.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <iostream>
#include <optional>

using namespace orbicat;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0, kNo = 1, kUnknown = 2, kInputError = 3;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool hasExt(const std::string& path, const char* ext) { return fs::path(path).extension() == ext; }

std::string load(const std::string& path) {
  try {
    return readFile(path);
  } catch (const ParseError& e) {
    throw InputError(e.what());
  }
}

// errors inside a file are reported as "<file>: line N: ..."
template <class F>
auto parsing(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

GroupoidPtr loadGroupoid(const std::string& path) {
  return parsing(path, [&] { return parseGroupoid(load(path)); });
}

ModelFile loadModel(const std::string& path) {
  return parsing(path, [&] { return parseModel(load(path), fs::path(path).parent_path()); });
}

InvariantFunction loadFunction(const std::string& path, const SimplicialComplex& k) {
  return parsing(path, [&] { return parseFunction(load(path), k); });
}

SimplexSet fullOn(const SimplicialComplex& k, const std::vector<std::string>& names) {
  std::vector<int> verts;
  for (const auto& n : names) {
    auto v = k.findVertex(n);
    if (!v) throw InputError("unknown vertex '" + n + "'");
    verts.push_back(*v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return fullSubcomplex(k, verts);
}

std::string simplexList(const SimplicialComplex& k, const SimplexSet& s) {
  std::string out;
  for (int x : maximalSimplices(k, s)) out += (out.empty() ? "" : " ") + k.simplexName(x);
  return out.empty() ? "(empty)" : out;
}

std::string groupSummary(const AbstractGroup& g) {
  return g.name() + " (order " + std::to_string(g.order()) + ", " + std::to_string(classNumber(g)) + " classes)";
}

void printPieces(const OrbifoldComplex& m, const std::vector<Piece>& pieces) {
  const auto& k = m.complex();
  for (const auto& p : pieces) {
    std::cout << "piece: target " << k.vertexName(p.target) << " label " << m.labelOrder(p.target) << " weight "
              << p.weight << "\n";
    std::cout << "  simplices: " << simplexList(k, p.simplices) << "\n";
    std::cout << "  collapses: " << p.certificate.collapses.size() << " ("
              << (verifyCertificate(m, p.certificate) ? "verified" : "NOT verified") << ")\n";
  }
}

std::string bound(int b) { return b == kUnbounded ? "?" : std::to_string(b); }

std::string range(int lower, int upper) { return lower == upper ? bound(lower) : bound(lower) + ".." + bound(upper); }

int boundsExit(const CatReport& r) { return r.exact() ? kOk : kUnknown; }

void printBounds(const char* key, const CatReport& r) {
  std::cout << key << ": " << range(r.lower, r.upper) << "\n";
  std::cout << "  lower " << r.lower << " (cup length " << std::max(0, r.cupLower - 1) << ", sectors "
            << r.sectorLower << ", isotropy " << r.obstructionLower << ")\n";
  std::cout << "  upper " << bound(r.upper) << "\n";
}

// --- commands ---------------------------------------------------------------

int cmdValidate(const std::string& path, const std::optional<std::string>& model) {
  if (hasExt(path, ".grp")) {
    auto g = parsing(path, [&] { return parseGroup(load(path)); });
    std::cout << "group: " << groupSummary(g) << "\n";
  } else if (hasExt(path, ".gpd")) {
    auto g = loadGroupoid(path);
    std::cout << "groupoid: " << g->objectCount() << " objects, " << g->arrowCount() << " arrows, "
              << orbits(*g).size() << " orbits\n";
  } else if (hasExt(path, ".ogx")) {
    auto mf = loadModel(path);
    const auto& k = mf.model.complex();
    if (mf.action)
      std::cout << "action: " << groupSummary(mf.action->group()) << " on " << mf.action->complex().vertexCount()
                << " vertices\n";
    std::cout << "model: " << k.vertexCount() << " vertices, " << k.simplexCount() << " simplices, dimension "
              << k.dimension() << ", ambient " << mf.model.ambient().name() << "\n";
  } else if (hasExt(path, ".fn")) {
    if (!model) throw InputError("validating a .fn file needs --model");
    auto mf = loadModel(*model);
    auto f = loadFunction(path, mf.model.complex());
    std::cout << "function: " << f.size() << " values\n";
  } else if (hasExt(path, ".gpath")) {
    auto p = parsing(path, [&] { return parseGPath(load(path)); });
    PathModel pm = model ? pathModel(loadModel(*model).model) : teardropCharts();
    try {
      auto v = validateGPath(p, pm);
      bool inj = pathInjectionsHold(v, pm);
      std::cout << "path: " << v.splices.size() << " splices, injections " << (inj ? "hold" : "fail") << "\n";
      return inj ? kOk : kNo;
    } catch (const PathError& e) {
      std::cout << "path: invalid, " << e.what() << "\n";
      return kNo;
    }
  } else {
    throw InputError("unknown file type: " + path);
  }
  std::cout << "valid\n";
  return kOk;
}

int cmdOrbits(const std::string& path) {
  auto g = loadGroupoid(path);
  auto os = orbits(*g);
  std::cout << "orbits: " << os.size() << "\n";
  for (const auto& o : os) {
    std::cout << " ";
    for (int x : o) std::cout << " " << g->objectId(x);
    std::cout << " | isotropy order " << isotropy(*g, o.front()).order() << "\n";
  }
  return kOk;
}

int cmdSkeleton(const std::string& path) {
  auto g = loadGroupoid(path);
  auto sk = skeleton(*g);
  std::cout << "skeleton: " << sk.size() << " objects\n";
  for (const auto& r : sk)
    std::cout << "  " << g->objectId(r.representative) << ": " << groupSummary(r.isotropy) << "\n";
  return kOk;
}

int cmdMorita(const std::string& a, const std::string& b) {
  auto g = loadGroupoid(a);
  auto h = loadGroupoid(b);
  auto w = moritaEquivalent(*g, *h);
  std::cout << "morita: " << (w ? "yes" : "no") << "\n";
  if (w) {
    auto sg = skeleton(*g), sh = skeleton(*h);
    for (std::size_t i = 0; i < w->orbitMap.size(); ++i)
      std::cout << "  " << g->objectId(sg[i].representative) << " ~ " << h->objectId(sh[w->orbitMap[i]].representative)
                << "\n";
  }
  return w ? kOk : kNo;
}

int cmdInertia(const std::string& path) {
  auto g = loadGroupoid(path);
  auto in = inertiaGroupoid(*g);
  auto secs = sectorsDiscrete(*g);
  std::cout << "inertia: " << in->objectCount() << " objects, " << in->arrowCount() << " arrows, " << secs.size()
            << " orbits\n";
  return kOk;
}

int cmdSectors(const std::string& path) {
  if (hasExt(path, ".gpd")) {
    auto g = loadGroupoid(path);
    auto secs = sectorsDiscrete(*g);
    int twisted = 0;
    for (const auto& s : secs) twisted += s.twisted;
    std::cout << "sectors: " << secs.size() << " (" << secs.size() - twisted << " untwisted, " << twisted
              << " twisted)\n";
    for (const auto& s : secs) {
      std::cout << "  " << s.id << (s.twisted ? " twisted:" : " untwisted:");
      for (int x : s.objects) std::cout << " " << x;
      std::cout << "\n";
    }
    return kOk;
  }
  auto mf = loadModel(path);
  auto secs = mf.action ? sectorsSimplicial(*mf.action) : sectorsSimplicial(mf.model);
  std::cout << "sectors: " << secs.size() << " (1 untwisted, " << secs.size() - 1 << " twisted)\n";
  for (const auto& s : secs) {
    const auto& k = s.model.complex();
    std::cout << "  " << s.id << (s.twisted ? " twisted " : " untwisted ") << s.element << ": " << k.vertexCount()
              << " vertices, dimension " << k.dimension() << "\n";
  }
  return kOk;
}

int cmdCard(const std::string& path) {
  if (hasExt(path, ".gpd")) {
    auto g = loadGroupoid(path);
    std::cout << "baez-dolan: " << baezDolanCardinality(*g) << "\n";
    std::cout << "string-euler: " << stringEulerCardinality(*g) << "\n";
    return kOk;
  }
  auto mf = loadModel(path);
  auto c = modelCardinalities(mf.model);
  std::cout << "baez-dolan: " << c.orbifoldEuler << "\n";
  std::cout << "string-euler: " << c.stringEuler << "\n";
  return kOk;
}

int cmdCat(const std::string& path, const LsOptions& o) {
  auto mf = loadModel(path);
  CatEngine engine(mf.model, o);
  auto r = engine.catBounds();
  printBounds("cat", r);
  printPieces(mf.model, r.cover);
  return boundsExit(r);
}

int cmdWcat(const std::string& path, const LsOptions& o) {
  auto mf = loadModel(path);
  auto w = wcat(mf.model, o);
  std::cout << "wcat: " << range(w.lower, w.upper) << "\n";
  printPieces(mf.model, w.cover);
  return w.exact ? kOk : kUnknown;
}

int cmdRelcat(const std::string& path, const std::vector<std::string>& vertices, const LsOptions& o) {
  auto mf = loadModel(path);
  auto sub = fullOn(mf.model.complex(), vertices);
  auto r = relativeCat(mf.model, sub, o);
  printBounds("relcat", r);
  printPieces(mf.model, r.cover);
  return boundsExit(r);
}

int cmdDeform(const std::string& path, const std::vector<std::string>& from, const std::vector<std::string>& into,
              const LsOptions& o) {
  auto mf = loadModel(path);
  const auto& k = mf.model.complex();
  auto a = fullOn(k, from), b = fullOn(k, into);
  auto r = deformableInto(mf.model, a, b, o);
  std::cout << "deform: " << verdictName(r.verdict) << "\n";
  if (r.certificate)
    std::cout << "  collapses: " << r.certificate->collapses.size() << " ("
              << (verifyCertificate(mf.model, *r.certificate) ? "verified" : "NOT verified") << ")\n";
  return r.verdict == Verdict::Yes ? kOk : kUnknown;
}

void printCritical(const OrbifoldComplex& m, const CriticalReport& r) {
  const auto& k = m.complex();
  std::cout << "critical: " << r.criticalCount() << (r.degenerate ? " (degenerate function)" : "") << "\n";
  for (const auto& l : r.levels) {
    std::cout << "  " << l.value << ":";
    for (int v : l.vertices) std::cout << " " << k.vertexName(v) << "[" << m.labelOrder(v) << "]";
    std::cout << "\n";
  }
}

int cmdCritical(const std::string& path, const std::string& fn, const LsOptions& o) {
  auto mf = loadModel(path);
  auto f = loadFunction(fn, mf.model.complex());
  printCritical(mf.model, criticalOrbits(mf.model, f, o));
  return kOk;
}

int cmdLsVerify(const std::string& path, const std::string& fn, const LsOptions& o) {
  auto mf = loadModel(path);
  const auto& m = mf.model;
  auto f = loadFunction(fn, m.complex());
  CatEngine engine(m, o);
  auto crit = criticalOrbits(m, f, o);
  printCritical(m, crit);
  for (const auto& c : verifyDeformationConditions(engine, f, crit)) {
    std::cout << "  " << conditionName(c.condition) << " at " << c.from;
    if (c.to != c.from) std::cout << ".." << c.to;
    std::cout << ": " << verdictName(c.verdict) << "\n";
  }
  auto mf2 = mFunction(engine, f, crit);
  for (const auto& s : mf2.samples) std::cout << "  m " << s.where << ": " << range(s.lower, s.upper) << "\n";
  std::cout << "  m increasing: " << (mf2.monotone ? "yes" : "no") << ", jumps bounded: "
            << (mf2.jumpsBounded ? "yes" : "no") << "\n";
  auto ls = verifyLSInequality(engine, crit);
  std::cout << "cat lower " << ls.catLower << ", sum of relative cat " << bound(ls.sumRelativeUpper) << ", critical orbits "
            << ls.criticalCount << "\n";
  std::cout << "ls-verify: " << (ls.pass ? "PASS" : "UNKNOWN") << "\n";
  return ls.pass ? kOk : kUnknown;
}

int cmdConjecture(const std::string& path, const LsOptions& o) {
  auto mf = loadModel(path);
  auto secs = mf.action ? sectorsSimplicial(*mf.action) : sectorsSimplicial(mf.model);
  auto r = inertiaCatReport(mf.model, secs, o);
  for (const auto& s : r.sectors)
    std::cout << "  sector " << s.id << (s.twisted ? " twisted " : " untwisted ") << s.element << ": cat " << range(s.lower, s.upper) << "\n";
  std::cout << "cat inertia: " << range(r.sumLower, r.sumUpper) << "\n";
  std::cout << "wcat: " << range(r.wcat.lower, r.wcat.upper) << "\n";
  std::cout << "conjecture: " << conjectureName(r.verdict) << "\n";
  switch (r.verdict) {
    case ConjectureVerdict::Equal: return kOk;
    case ConjectureVerdict::Unequal: return kNo;
    case ConjectureVerdict::Undetermined: return kUnknown;
  }
  return kUnknown;
}

int cmdCorpus(std::uint64_t seed, int count) {
  std::cout << "seed: " << seed << "\n";
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    auto g = randomGroupoid(rng);
    std::cout << i << ": " << g->objectCount() << " objects, " << g->arrowCount() << " arrows, " << orbits(*g).size()
              << " orbits, baez-dolan " << baezDolanCardinality(*g) << ", string-euler " << stringEulerCardinality(*g)
              << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of finite groupoids and orbifold models"};
  app.require_subcommand(1);
  app.fallthrough();
  LsOptions opts;
  std::uint64_t seed = 1;
  auto positive = CLI::PositiveNumber;
  app.add_option("--depth", opts.depth, "stars per candidate piece")->check(positive);
  app.add_option("--budget", opts.budget, "collapse steps per search")->check(positive);
  app.add_option("--seed", seed, "corpus seed");

  std::string file, file2;
  std::optional<std::string> model;
  std::vector<std::string> verts, from, into;
  int count = 10;
  std::function<int()> run;

  auto oneFile = [&](const char* name, const char* help, std::function<int()> f) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", file)->required();
    c->callback([&run, f] { run = f; });
    return c;
  };
  auto* validate = oneFile("validate", "check a .grp, .gpd, .ogx, .fn or .gpath file",
                           [&] { return cmdValidate(file, model); });
  validate->add_option("--model", model, "model for .fn and .gpath files");
  oneFile("orbits", "orbits of a groupoid", [&] { return cmdOrbits(file); });
  oneFile("skeleton", "skeleton of a groupoid", [&] { return cmdSkeleton(file); });
  auto* morita = app.add_subcommand("morita", "Morita equivalence of two groupoids");
  morita->add_option("a", file)->required();
  morita->add_option("b", file2)->required();
  morita->callback([&] { run = [&] { return cmdMorita(file, file2); }; });
  oneFile("inertia", "inertia groupoid", [&] { return cmdInertia(file); });
  oneFile("sectors", "inertia sectors of a groupoid or model", [&] { return cmdSectors(file); });
  oneFile("card", "Baez-Dolan and string-theoretic cardinalities", [&] { return cmdCard(file); });
  oneFile("cat", "category bounds of a model", [&] { return cmdCat(file, opts); });
  oneFile("wcat", "weighted category of a model", [&] { return cmdWcat(file, opts); });
  auto* relcat = oneFile("relcat", "relative category of a full subcomplex",
                         [&] { return cmdRelcat(file, verts, opts); });
  relcat->add_option("vertices", verts)->required();
  auto* deform = oneFile("deform", "deformability of one full subcomplex into another",
                         [&] { return cmdDeform(file, from, into, opts); });
  deform->add_option("--from", from)->required()->delimiter(',');
  deform->add_option("--into", into)->required()->delimiter(',');
  auto* critical = oneFile("critical", "critical orbits of a function", [&] { return cmdCritical(file, file2, opts); });
  critical->add_option("function", file2)->required();
  auto* lsv = oneFile("ls-verify", "critical point inequality", [&] { return cmdLsVerify(file, file2, opts); });
  lsv->add_option("function", file2)->required();
  oneFile("conjecture", "compare cat of the inertia model with wcat", [&] { return cmdConjecture(file, opts); });
  auto* corpus = app.add_subcommand("corpus", "seeded random groupoids");
  corpus->add_option("--count", count)->check(positive);
  corpus->callback([&] { run = [&] { return cmdCorpus(seed, count); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  try {
    return run();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const ModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const GroupoidError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const GroupError& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kInputError;
}
