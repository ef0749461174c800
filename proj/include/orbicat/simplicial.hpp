#pragma once

#include "orbicat/group.hpp"
#include "orbicat/simplex_set.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbicat {

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite abstract simplicial complex. Simplices are sorted vertex lists,
/// indexed by (dimension, lexicographic order); simplex v is the vertex {v}.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Adds every face of the given simplices.
  static SimplicialComplex fromFacets(std::vector<std::string> vertices, const std::vector<std::vector<int>>& facets);
  /// Requires the list to be closed under faces; throws ModelError naming a
  /// missing face otherwise.
  static SimplicialComplex fromSimplices(std::vector<std::string> vertices,
                                         const std::vector<std::vector<int>>& simplices);

  int vertexCount() const { return static_cast<int>(vertices_.size()); }
  int simplexCount() const { return static_cast<int>(simplices_.size()); }
  int dimension() const { return simplices_.empty() ? -1 : dim(simplexCount() - 1); }

  const std::string& vertexName(int v) const { return vertices_[v]; }
  const std::vector<std::string>& vertexNames() const { return vertices_; }
  std::optional<int> findVertex(const std::string& name) const;

  const std::vector<int>& simplex(int s) const { return simplices_[s]; }
  int dim(int s) const { return static_cast<int>(simplices_[s].size()) - 1; }
  /// `vertices` must be sorted.
  std::optional<int> find(const std::vector<int>& vertices) const;
  int indexOf(const std::vector<int>& vertices) const;

  /// Codimension-one faces and cofaces.
  const std::vector<int>& faces(int s) const { return faces_[s]; }
  const std::vector<int>& cofaces(int s) const { return cofaces_[s]; }
  /// All faces including s itself.
  std::vector<int> allFaces(int s) const;

  SimplexSet all() const;
  SimplexSet none() const { return SimplexSet(simplices_.size()); }
  std::string simplexName(int s) const;

 private:
  void index();

  std::vector<std::string> vertices_;
  std::vector<std::vector<int>> simplices_;
  std::map<std::vector<int>, int> lookup_;
  std::vector<std::vector<int>> faces_;
  std::vector<std::vector<int>> cofaces_;
};

// Subcomplex helpers. Sets are over simplex indices of the complex.
bool isSubcomplex(const SimplicialComplex& k, const SimplexSet& s);
SimplexSet closure(const SimplicialComplex& k, const SimplexSet& s);
/// Closed star of a vertex set within `within` (whole complex if empty).
SimplexSet closedStar(const SimplicialComplex& k, const std::vector<int>& vertices);
SimplexSet closedStar(const SimplicialComplex& k, const std::vector<int>& vertices, const SimplexSet& within);
/// Simplices having a face in `s`.
SimplexSet openStar(const SimplicialComplex& k, const SimplexSet& s);
SimplexSet fullSubcomplex(const SimplicialComplex& k, const std::vector<int>& vertices);
std::vector<int> verticesOf(const SimplicialComplex& k, const SimplexSet& s);
/// Simplices of `s` not properly contained in another simplex of `s`.
std::vector<int> maximalSimplices(const SimplicialComplex& k, const SimplexSet& s);
long long eulerCharacteristic(const SimplicialComplex& k, const SimplexSet& s);
int componentCount(const SimplicialComplex& k, const SimplexSet& s);
/// Link of vertex v inside the subcomplex `s`.
SimplexSet link(const SimplicialComplex& k, int v, const SimplexSet& s);

/// Standalone complex on the vertices of `s`; `vertexMap` receives the old
/// vertex index of each new vertex.
SimplicialComplex extractSubcomplex(const SimplicialComplex& k, const SimplexSet& s,
                                    std::vector<int>* vertexMap = nullptr, std::vector<int>* simplexMap = nullptr);

/// Barycentric subdivision. New vertex i is the barycenter of old simplex i;
/// vertices keep their names, higher barycenters are named "(a,b,...)".
/// `chains` receives the old simplex chain (ascending) of each new simplex.
SimplicialComplex barycentricSubdivide(const SimplicialComplex& k,
                                       std::vector<std::vector<int>>* chains = nullptr);

/// Simplicial action of a finite group; `perm[g][v]` is g·v.
class SimplicialGComplex {
 public:
  /// Validates that each permutation is simplicial and that g ↦ perm[g] is a
  /// homomorphism. Throws ModelError.
  SimplicialGComplex(SimplicialComplex complex, AbstractGroup group, std::vector<std::vector<int>> perm);

  const SimplicialComplex& complex() const { return complex_; }
  const AbstractGroup& group() const { return group_; }
  int actVertex(int g, int v) const { return perm_[g][v]; }
  int actSimplex(int g, int s) const { return simplexPerm_[g][s]; }
  const std::vector<std::vector<int>>& permutations() const { return perm_; }

 private:
  SimplicialComplex complex_;
  AbstractGroup group_;
  std::vector<std::vector<int>> perm_;
  std::vector<std::vector<int>> simplexPerm_;
};

/// Any element fixing a simplex setwise fixes it pointwise.
bool isRegular(const SimplicialGComplex& x);
/// Regular, and the orbit complex is simplicial: vertices of a simplex lie in
/// distinct orbits and distinct simplex orbits have distinct vertex orbits.
bool hasSimplicialQuotient(const SimplicialGComplex& x);
SimplicialGComplex barycentricSubdivide(const SimplicialGComplex& x);
/// Subdivides until `hasSimplicialQuotient` holds (at most `maxRounds`).
SimplicialGComplex makeQuotientReady(const SimplicialGComplex& x, int maxRounds = 3);

/// Simplices fixed pointwise by g.
SimplexSet fixedSubcomplex(const SimplicialGComplex& x, int g);
/// Stabilizer (setwise = pointwise for regular actions).
Subgroup stabilizer(const SimplicialGComplex& x, int s);

/// Simplicial complex with isotropy labels: subgroups of one ambient group,
/// shrinking on cofaces.
class OrbifoldComplex {
 public:
  /// Throws ModelError on a non-subgroup label or a monotonicity violation.
  OrbifoldComplex(SimplicialComplex complex, AbstractGroup ambient, std::vector<Subgroup> labels);
  /// Trivially labeled model.
  explicit OrbifoldComplex(SimplicialComplex complex);

  const SimplicialComplex& complex() const { return complex_; }
  const AbstractGroup& ambient() const { return ambient_; }
  const Subgroup& label(int s) const { return distinct_[labelId_[s]]; }
  std::vector<Subgroup> labels() const;
  int labelId(int s) const { return labelId_[s]; }
  int labelOrder(int s) const { return static_cast<int>(label(s).size()); }
  const AbstractGroup& labelGroup(int s) const { return groups_[labelId_[s]]; }
  int labelClassNumber(int s) const { return classNumbers_[labelId_[s]]; }
  int distinctLabelCount() const { return static_cast<int>(distinct_.size()); }

  /// label(a) admits an injective homomorphism into label(b).
  bool embeds(int a, int b) const { return embeds_[labelId_[a]][labelId_[b]]; }
  std::optional<GroupMap> embedding(int a, int b) const;
  bool isTrivial() const;

 private:
  void prepare();

  SimplicialComplex complex_;
  AbstractGroup ambient_;
  std::vector<int> labelId_;
  std::vector<Subgroup> distinct_;
  std::vector<AbstractGroup> groups_;
  std::vector<int> classNumbers_;
  std::vector<std::vector<bool>> embeds_;
};

/// Quotient complex with subgroup labels; each simplex label is the
/// stabilizer of a coherently chosen lift.
OrbifoldComplex quotientOrbifoldComplex(const SimplicialGComplex& x, std::vector<int>* liftOf = nullptr);

/// Sub-model on a subcomplex; vertex names are kept.
OrbifoldComplex restrictModel(const OrbifoldComplex& m, const SimplexSet& s, std::vector<int>* vertexMap = nullptr,
                              std::vector<int>* simplexMap = nullptr);
/// Each new simplex (a chain) carries the label of its largest simplex.
OrbifoldComplex barycentricSubdivide(const OrbifoldComplex& m);

}  // namespace orbicat
