#pragma once

#include "orbicat/simplicial.hpp"

#include <cstdint>
#include <vector>

namespace orbicat {

/// Dense vector over the two-element field.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}
  std::size_t size() const { return n_; }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  BitVector& operator^=(const BitVector& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  /// Index of the lowest set bit, or -1.
  long lowest() const;
  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Incrementally reduced row space, pivot on lowest set bit.
class Gf2Basis {
 public:
  /// Reduces v against the basis; returns true and keeps it if independent.
  bool insert(BitVector v);
  BitVector reduce(BitVector v) const;
  bool contains(const BitVector& v) const { return !reduce(v).any(); }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<BitVector>& rows() const { return rows_; }

 private:
  std::vector<BitVector> rows_;
  std::vector<long> pivots_;
};

/// Betti numbers b_0..b_dim of the subcomplex over the two-element field.
std::vector<int> homologyZ2(const SimplicialComplex& k, const SimplexSet& s);
std::vector<int> homologyZ2(const SimplicialComplex& k);
/// Reduced Betti numbers (b_0 lowered by one when nonempty).
std::vector<int> reducedHomologyZ2(const SimplicialComplex& k, const SimplexSet& s);
bool hasTrivialReducedHomology(const SimplicialComplex& k, const SimplexSet& s);

/// Degree and index of a reduced homology class of `sub` that survives in
/// `ambient` (sub ⊆ ambient), if any.
struct NonzeroInclusionClass {
  int degree = 0;
};
std::optional<NonzeroInclusionClass> nonzeroInclusionClass(const SimplicialComplex& k, const SimplexSet& sub,
                                                           const SimplexSet& ambient);

/// Cup length over the two-element field with the front-face/back-face
/// product in global vertex order.
int cupLengthZ2(const SimplicialComplex& k, const SimplexSet& s);
int cupLengthZ2(const SimplicialComplex& k);

}  // namespace orbicat
