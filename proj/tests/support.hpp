#pragma once

#include "orbicat/io.hpp"

#include <string>
#include <vector>

namespace fixtures {

inline std::string modelPath(const std::string& name) { return std::string(ORBICAT_MODELS_DIR) + "/" + name; }

inline orbicat::ModelFile model(const std::string& name) {
  return orbicat::parseModel(orbicat::readFile(modelPath(name)), ORBICAT_MODELS_DIR);
}

inline orbicat::InvariantFunction function(const std::string& name, const orbicat::SimplicialComplex& k) {
  return orbicat::parseFunction(orbicat::readFile(modelPath(name)), k);
}

inline std::vector<std::string> names(int n, const std::string& prefix = "v") {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// octahedral sphere: N=0, S=1, equator 2..5
inline orbicat::SimplicialComplex octahedron() {
  std::vector<std::vector<int>> f;
  for (int i = 0; i < 4; ++i) {
    int a = 2 + i, b = 2 + (i + 1) % 4;
    f.push_back({0, a, b});
    f.push_back({1, a, b});
  }
  return orbicat::SimplicialComplex::fromFacets({"N", "S", "e0", "e1", "e2", "e3"}, f);
}

// 7-vertex torus
inline orbicat::SimplicialComplex torus() {
  std::vector<std::vector<int>> f;
  for (int i = 0; i < 7; ++i) {
    f.push_back({i, (i + 1) % 7, (i + 3) % 7});
    f.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return orbicat::SimplicialComplex::fromFacets(names(7), f);
}

inline orbicat::SimplicialComplex cycle(int n) {
  std::vector<std::vector<int>> f;
  for (int i = 0; i < n; ++i) f.push_back({i, (i + 1) % n});
  return orbicat::SimplicialComplex::fromFacets(names(n), f);
}

inline orbicat::SimplicialComplex triangle() {
  return orbicat::SimplicialComplex::fromFacets(names(3), {{0, 1, 2}});
}

// hexagon with a center vertex 6
inline orbicat::SimplicialComplex hexDisk() {
  std::vector<std::vector<int>> f;
  for (int i = 0; i < 6; ++i) f.push_back({i, (i + 1) % 6, 6});
  return orbicat::SimplicialComplex::fromFacets(names(7), f);
}

}  // namespace fixtures
