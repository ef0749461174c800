// Prints one PASS/FAIL line per acceptance criterion. Exit status is the
// number of failing criteria.
#include "orbicat/constructions.hpp"
#include "orbicat/corpus.hpp"
#include "orbicat/equivalence.hpp"
#include "orbicat/inertia.hpp"
#include "orbicat/io.hpp"
#include "orbicat/lscat.hpp"
#include "orbicat/morse.hpp"
#include "orbicat/sectors.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace orbicat;

namespace {

const std::string kModels = ORBICAT_MODELS_DIR;

ModelFile model(const std::string& name) { return parseModel(readFile(kModels + "/" + name), kModels); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int n, double limitSeconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limitSeconds > 0 && secs >= limitSeconds) {
    o.pass = false;
    o.detail << " [over time limit " << limitSeconds << " s]";
  }
  if (!o.pass) ++failures;
  std::printf("criterion %d: %s (%.3f s)%s\n", n, o.pass ? "PASS" : "FAIL", secs, o.detail.str().c_str());
  std::fflush(stdout);
}

std::string str(long long v) { return std::to_string(v); }

}  // namespace

int main() {
  // teardrop
  criterion(1, 10.0, [](Outcome& o) {
    auto m = model("teardrop.ogx").model;
    auto cat = catBounds(m);
    o.expect(cat.lower == 2 && cat.upper == 2, "cat " + str(cat.lower) + ".." + str(cat.upper));
    auto w = wcat(m);
    o.expect(w.exact && w.upper == 4, "wcat " + str(w.upper));
    auto sectors = sectorsSimplicial(m);
    int points = 0, untwisted = 0;
    for (const auto& s : sectors) {
      if (!s.twisted) ++untwisted;
      else if (s.model.complex().simplexCount() == 1) ++points;
    }
    o.expect(sectors.size() == 3 && untwisted == 1 && points == 2, "sectors " + str(sectors.size()));
    auto r = inertiaCatReport(m, sectors);
    o.expect(r.sumLower == 4 && r.sumUpper == 4, "inertia cat " + str(r.sumLower) + ".." + str(r.sumUpper));
    o.detail << " cat 2 wcat " << w.upper << " sectors " << sectors.size() << " inertia " << r.sumUpper;
  });

  // D8 sphere
  criterion(2, 60.0, [](Outcome& o) {
    o.expect(classNumber(namedGroup("D8")) == 5, "class number");
    auto f = model("d8-sphere.ogx");
    LsOptions opts;
    opts.depth = 2;
    auto cat = catBounds(f.model, opts);
    o.expect(cat.lower == 2 && cat.upper == 2, "cat " + str(cat.lower) + ".." + str(cat.upper));
    auto w = wcat(f.model, opts);
    o.expect(w.exact && w.upper == 10, "wcat " + str(w.upper));
    auto r = inertiaCatReport(f.model, sectorsSimplicial(*f.action), opts);
    o.expect(r.sumLower == 10 && r.sumUpper == 10, "inertia cat " + str(r.sumLower) + ".." + str(r.sumUpper));
    o.detail << " class number 5 cat 2 wcat " << w.upper << " inertia " << r.sumUpper;
  });

  // Klein interval
  criterion(3, 5.0, [](Outcome& o) {
    auto m = model("klein.ogx").model;
    auto cat = catBounds(m);
    o.expect(cat.lower == 2 && cat.upper == 2, "cat " + str(cat.lower) + ".." + str(cat.upper));
    o.expect(cat.obstructionLower == 2, "isotropy bound " + str(cat.obstructionLower));
    bool allInjection = true;
    for (int v = 0; v < m.complex().vertexCount(); ++v) {
      auto r = isCategorical(m, m.complex().all(), v);
      allInjection = allInjection && r.verdict == Verdict::No && r.obstruction == Obstruction::Injection;
    }
    o.expect(allInjection, "single piece not refuted by the injection test");
    o.detail << " cat 2, single piece NO by isotropy injection";
  });

  // cardinalities
  criterion(4, 0, [](Outcome& o) {
    std::mt19937_64 rng(20240401);
    int bad = 0;
    for (int i = 0; i < 200; ++i) {
      auto g = randomGroupoid(rng, {12, 12});
      auto h = randomGroupoid(rng, {12, 12});
      auto small = randomGroupoid(rng, {3, 4});
      auto bg = baezDolanCardinality(*g);
      bool ok = baezDolanCardinality(*disjointUnion(*g, *h)) == bg + baezDolanCardinality(*h);
      ok = ok && baezDolanCardinality(*productGroupoid(*g, *small)) == bg * baezDolanCardinality(*small);
      ok = ok && baezDolanCardinality(*groupoidFromSkeleton(skeleton(*g))) == bg;
      ok = ok && stringEulerCardinality(*g) == static_cast<long long>(orbits(*inertiaGroupoid(*g)).size());
      if (!ok) ++bad;
    }
    o.expect(bad == 0, str(bad) + " instances");
    o.detail << " 200 instances, " << bad << " violations";
  });

  // Morita
  criterion(5, 0, [](Outcome& o) {
    std::mt19937_64 rng(20240402);
    int errors = 0;
    for (int i = 0; i < 100; ++i) {
      auto p = randomMoritaPair(rng);
      if (!moritaEquivalent(*p.a, *p.b)) ++errors;
    }
    for (int i = 0; i < 100; ++i) {
      auto p = randomNonMoritaPair(rng);
      if (moritaEquivalent(*p.a, *p.b)) ++errors;
    }
    o.expect(errors == 0, str(errors) + " errors");
    o.detail << " 200 pairs, " << errors << " errors";
  });

  // Morse
  criterion(6, 0, [](Outcome& o) {
    auto oct = model("octahedron.ogx").model;
    auto h = parseFunction(readFile(kModels + "/octahedron-height.fn"), oct.complex());
    auto crit = criticalOrbits(oct, h);
    o.expect(crit.criticalCount() == 2, "octahedron critical orbits " + str(crit.criticalCount()));

    int certificates = 0;
    auto replay = [&](const OrbifoldComplex& m, const std::optional<DeformationCertificate>& c) {
      if (!c) return;
      ++certificates;
      o.expect(verifyCertificate(m, *c), "certificate replay");
    };
    const std::pair<const char*, const char*> pairs[] = {{"octahedron.ogx", "octahedron-height.fn"},
                                                         {"teardrop.ogx", "teardrop-height.fn"},
                                                         {"klein.ogx", "klein-height.fn"},
                                                         {"d8-sphere.ogx", "d8-sphere-height.fn"}};
    for (const auto& [name, fn] : pairs) {
      auto m = model(name).model;
      auto f = parseFunction(readFile(kModels + "/" + fn), m.complex());
      CatEngine engine(m);
      auto r = criticalOrbits(m, f);
      auto ls = verifyLSInequality(engine, r);
      o.expect(ls.pass, std::string("LS inequality on ") + name);
      for (const auto& c : verifyDeformationConditions(engine, f, r)) replay(m, c.certificate);
      for (const auto& p : engine.catBounds().cover) replay(m, p.certificate);
    }

    std::mt19937_64 rng(20240403);
    int instances = 0, nonMonotone = 0;
    for (const char* name : {"octahedron.ogx", "teardrop.ogx", "klein.ogx", "klein-action.ogx", "d8-sphere.ogx"}) {
      auto m = model(name).model;
      CatEngine engine(m);
      for (int i = 0; i < 10; ++i) {
        auto f = randomFunction(rng, m.complex());
        auto mf = mFunction(engine, f, criticalOrbits(m, f));
        ++instances;
        if (!mf.monotone) ++nonMonotone;
      }
    }
    o.expect(nonMonotone == 0, str(nonMonotone) + " non-monotone m");
    o.detail << " 2 critical orbits, LS PASS on 4 models, m monotone on " << instances << " functions, "
             << certificates << " certificates replayed";
  });

  // subdivision invariance
  criterion(7, 0, [](Outcome& o) {
    for (const char* name : {"teardrop.ogx", "klein.ogx", "klein-action.ogx", "octahedron.ogx", "d8-sphere.ogx"}) {
      auto f = model(name);
      auto sd = barycentricSubdivide(f.model);
      const std::string tag = std::string(name) + ": ";
      CatEngine before(f.model), after(sd);
      auto a = before.catBounds(), b = after.catBounds();
      o.expect(a.lower == b.lower && a.upper == b.upper, tag + "cat");
      o.expect(wcat(before).upper == wcat(after).upper, tag + "wcat");
      o.expect(sectorsSimplicial(f.model).size() == sectorsSimplicial(sd).size(), tag + "labeled sectors");
      if (f.action)
        o.expect(sectorsSimplicial(*f.action).size() == sectorsSimplicial(barycentricSubdivide(*f.action)).size(),
                 tag + "action sectors");
      auto ca = modelCardinalities(f.model), cb = modelCardinalities(sd);
      o.expect(ca.orbifoldEuler == cb.orbifoldEuler && ca.stringEuler == cb.stringEuler, tag + "cardinalities");
    }
    o.detail << " 5 models subdivided once";
  });

  return failures;
}
