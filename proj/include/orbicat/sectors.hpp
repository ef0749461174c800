#pragma once

#include "orbicat/rational.hpp"
#include "orbicat/simplicial.hpp"

#include <string>
#include <vector>

namespace orbicat {

/// One sector of the inertia model. The untwisted sector is the whole model.
struct SectorModel {
  int id = 0;
  bool twisted = false;
  std::string element;  // representative group element, "1" when untwisted
  OrbifoldComplex model;
};

/// Labeled route: pairs (g, σ) with g ∈ label(σ), g ≠ 1, joined along faces
/// with the same g and by conjugation inside label(σ). Sector labels are the
/// centralizers of g in label(σ).
std::vector<SectorModel> sectorsSimplicial(const OrbifoldComplex& m);

/// Action route: components of the fixed subcomplexes under adjacency and
/// conjugation, each divided by the centralizer of its element.
std::vector<SectorModel> sectorsSimplicial(const SimplicialGComplex& x);

/// Cardinalities of a labeled model read off its simplices:
/// Σ (-1)^dim / |label| and Σ (-1)^dim · classNumber(label).
struct ModelCardinalities {
  ExactRational orbifoldEuler;
  long long stringEuler = 0;
};
ModelCardinalities modelCardinalities(const OrbifoldComplex& m);

}  // namespace orbicat
