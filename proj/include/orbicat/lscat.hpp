#pragma once

#include "orbicat/collapse.hpp"
#include "orbicat/sectors.hpp"

#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace orbicat {

struct LsOptions {
  int depth = 2;             // candidate pieces are unions of up to `depth` closed stars
  long long budget = 100000;  // elementary collapse steps per search
  bool sectorBound = true;   // use twisted sectors in the lower bound
};

/// Collapses of `region` onto `target` that respect the isotropy labels.
/// `embeddings` holds one injective homomorphism per (face label, other
/// label) pair the collapses rely on.
struct DeformationCertificate {
  SimplexSet region;
  SimplexSet target;
  std::vector<Collapse> collapses;
  std::map<std::pair<int, int>, GroupMap> embeddings;  // by label id
};

DeformationCertificate makeCertificate(const OrbifoldComplex& m, SimplexSet region, SimplexSet target,
                                       std::vector<Collapse> collapses);
/// Replays the collapses and checks every stored embedding.
bool verifyCertificate(const OrbifoldComplex& m, const DeformationCertificate& c);

enum class Obstruction { None, Injection, Homology };

struct CategoricalResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<DeformationCertificate> certificate;
  Obstruction obstruction = Obstruction::None;
  std::string detail;
};

struct Piece {
  SimplexSet simplices;
  int target = 0;
  int weight = 1;
  DeformationCertificate certificate;
};

/// Upper bound when some simplex has no certified piece.
inline constexpr int kUnbounded = std::numeric_limits<int>::max();
/// a + b, saturating at kUnbounded.
inline int addBounds(int a, int b) { return a == kUnbounded || b == kUnbounded ? kUnbounded : a + b; }

struct CatReport {
  int lower = 0;
  int upper = 0;  // kUnbounded when no cover was certified
  int cupLower = 0;
  int sectorLower = 0;
  int obstructionLower = 0;
  std::vector<Piece> cover;      // realizes `upper`
  int coverWeight = 0;           // least weight among covers of size `upper`
  bool exact() const { return lower == upper; }
};

/// Collapse searches already run, by region and target.
using CollapseCache = std::unordered_map<SimplexSet, std::map<int, CollapseResult>, SimplexSetHash>;

struct DeformResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<DeformationCertificate> certificate;
};

/// Certified cat bounds of one labeled model. Candidate pieces are computed
/// once and shared by every query.
class CatEngine {
 public:
  explicit CatEngine(const OrbifoldComplex& m, LsOptions options = {});

  const OrbifoldComplex& model() const { return m_; }
  const LsOptions& options() const { return opts_; }

  CategoricalResult isCategorical(const SimplexSet& u, int target) const;
  /// Least label order, then class number, among certified targets.
  std::optional<Piece> certify(const SimplexSet& u) const;

  const std::vector<Piece>& pieces();
  CatReport catBounds();
  CatReport relativeCat(const SimplexSet& m);
  DeformResult deformableInto(const SimplexSet& m, const SimplexSet& n) const;

  /// Vertices reachable from v along vertices and edges whose labels admit
  /// label(v).
  const std::vector<bool>& reach(int v) const { return reach_[v]; }
  /// Least number of targets meeting every reach set of the given vertices.
  int obstructionCount(const std::vector<int>& vertices) const;
  /// max(cup length + 1, obstruction count), without sectors.
  int basicLowerBound() const;

 private:
  std::vector<int> targetOrder(const SimplexSet& u) const;
  void buildPieces();
  CatReport cover(const SimplexSet& m);

  OrbifoldComplex m_;
  LsOptions opts_;
  std::vector<std::vector<bool>> reach_;
  std::optional<std::vector<Piece>> pieces_;
  std::optional<int> fullLower_;
  mutable CollapseCache cache_;
  int cupLower_ = 0, sectorLower_ = 0;
};

// Free-function forms.
CategoricalResult isCategorical(const OrbifoldComplex& m, const SimplexSet& u, int target, const LsOptions& o = {});
CatReport catBounds(const OrbifoldComplex& m, const LsOptions& o = {});
/// Throws ModelError when U has no certificate.
int weight(const OrbifoldComplex& m, const SimplexSet& u, const LsOptions& o = {});
CatReport relativeCat(const OrbifoldComplex& m, const SimplexSet& sub, const LsOptions& o = {});
DeformResult deformableInto(const OrbifoldComplex& m, const SimplexSet& a, const SimplexSet& b,
                            const LsOptions& o = {});

struct WcatResult {
  bool exact = false;  // cat bounds agree
  int lower = 0;
  int upper = 0;
  std::vector<Piece> cover;
};
WcatResult wcat(const OrbifoldComplex& m, const LsOptions& o = {});
WcatResult wcat(CatEngine& engine);

enum class ConjectureVerdict { Equal, Unequal, Undetermined };
const char* conjectureName(ConjectureVerdict v);

struct SectorCat {
  int id = 0;
  bool twisted = false;
  std::string element;
  int lower = 0;
  int upper = 0;
};
struct InertiaCatReport {
  std::vector<SectorCat> sectors;
  int sumLower = 0;
  int sumUpper = 0;
  WcatResult wcat;
  ConjectureVerdict verdict = ConjectureVerdict::Undetermined;
};
InertiaCatReport inertiaCatReport(const OrbifoldComplex& m, const std::vector<SectorModel>& sectors,
                                  const LsOptions& o = {});
InertiaCatReport inertiaCatReport(const OrbifoldComplex& m, const LsOptions& o = {});

}  // namespace orbicat
