#pragma once

// The standard symplectic space Z2^{2g} and Sp(2g, Z2).
//
// Basis order is interleaved: index 2k is a_{k+1}, index 2k+1 is b_{k+1},
// with omega(a_i, b_i) = 1 and every other basis pairing zero.

#include <cstddef>
#include <vector>

#include "spinext/bigint.hpp"
#include "spinext/f2.hpp"

namespace spinext {

class SymplecticSpace {
 public:
  /// Throws InvalidArgument when genus < 1.
  explicit SymplecticSpace(std::size_t genus);

  std::size_t genus() const { return genus_; }
  std::size_t dim() const { return 2 * genus_; }

  /// Basis vector a_i (1-based i).
  F2Vec a(std::size_t i) const;
  /// Basis vector b_i (1-based i).
  F2Vec b(std::size_t i) const;

  friend bool operator==(const SymplecticSpace&, const SymplecticSpace&) = default;

 private:
  std::size_t genus_;
};

bool omega(const SymplecticSpace& space, const F2Vec& x, const F2Vec& y);

/// True iff M preserves omega on every pair of basis vectors.
bool is_symplectic(const SymplecticSpace& space, const F2Mat& m);

/// An element of Sp(2g, Z2). Construction validates the matrix.
class SymplecticElement {
 public:
  /// Throws DimensionMismatch or PreconditionFailed (not symplectic).
  SymplecticElement(SymplecticSpace space, F2Mat matrix);

  static SymplecticElement identity(SymplecticSpace space);

  const SymplecticSpace& space() const { return space_; }
  const F2Mat& matrix() const { return matrix_; }

  SymplecticElement inverse() const;
  F2Vec apply(const F2Vec& x) const { return mat_vec(matrix_, x); }

  friend SymplecticElement operator*(const SymplecticElement& lhs, const SymplecticElement& rhs);
  friend bool operator==(const SymplecticElement&, const SymplecticElement&) = default;
  friend bool operator<(const SymplecticElement& lhs, const SymplecticElement& rhs) {
    return lhs.matrix_ < rhs.matrix_;
  }

 private:
  struct Trusted {};
  SymplecticElement(Trusted, SymplecticSpace space, F2Mat matrix)
      : space_(space), matrix_(std::move(matrix)) {}

  SymplecticSpace space_;
  F2Mat matrix_;

  friend SymplecticElement transvection(const SymplecticSpace&, const F2Vec&);
};

/// x -> x + omega(x, v) v. Throws InvalidArgument for v = 0.
SymplecticElement transvection(const SymplecticSpace& space, const F2Vec& v);

/// All 2^{2g} - 1 transvections, ordered by the integer value of v.
std::vector<SymplecticElement> all_transvections(const SymplecticSpace& space);

/// Transvections along a_i, b_i (i = 1..g) and a_i + a_{i+1} (i = 1..g-1),
/// the mod-2 images of the Lickorish twist generators. 3g - 1 elements.
std::vector<SymplecticElement> lickorish_transvections(const SymplecticSpace& space);

/// Orbit sizes of a point-stabilizer chain with base e_0, e_1, ..., e_{2g-1}.
struct StabilizerChain {
  std::vector<std::size_t> orbit_sizes;
  std::size_t strong_generator_count = 0;
  BigInt order() const;
};

/// Schreier-Sims over the base of basis vectors for the group generated by
/// `generators` (all acting on `space`).
StabilizerChain stabilizer_chain(const SymplecticSpace& space,
                                 const std::vector<SymplecticElement>& generators);

/// |Sp(2g, Z2)| from the stabilizer chain of the Lickorish transvections.
BigInt group_order(const SymplecticSpace& space);

}  // namespace spinext
