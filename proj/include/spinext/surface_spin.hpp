#pragma once

// Spin structures on a closed oriented surface of genus g, modeled by
// their quadratic refinements. The mapping class group acts through its
// image Sp(2g, Z2), so every computation here is over that finite group.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "spinext/bigint.hpp"
#include "spinext/group_utils.hpp"
#include "spinext/quadform.hpp"
#include "spinext/symplectic.hpp"

namespace spinext {

inline constexpr std::size_t kMaxEnumerateGenus = 6;
inline constexpr std::size_t kMaxOrbitGenus = 4;
inline constexpr std::size_t kMaxWitnessGenus = 3;
inline constexpr std::uint64_t kDefaultWitnessSeed = 20240229;
inline constexpr std::size_t kDefaultWitnessBudget = 100'000;
inline constexpr std::size_t kMaxWitnessWordLength = 20;

struct SpinPartition {
  std::size_t genus = 0;
  std::vector<QuadraticRefinement> bounding;    // Arf 0
  std::vector<QuadraticRefinement> unbounding;  // Arf 1
};

/// Every refinement on genus g, classified by vanishing count.
SpinPartition enumerate_spin(std::size_t genus, std::size_t max_genus = kMaxEnumerateGenus);

struct SpinCounts {
  BigInt bounding;
  BigInt unbounding;
  friend bool operator==(const SpinCounts&, const SpinCounts&) = default;
};

/// (2^{2g-1} + 2^{g-1}, 2^{2g-1} - 2^{g-1}).
SpinCounts count_formula(std::size_t genus);

/// Terms g = 1..max_genus of (b, u) -> (3b + u, 3u + b) from (3, 1).
std::vector<SpinCounts> count_recurrence(std::size_t max_genus);

using SurfaceOrbit = OrbitResult<QuadraticRefinement>;

/// Orbit of q under pullback by all transvections.
SurfaceOrbit spin_orbit(const QuadraticRefinement& q, std::size_t max_genus = kMaxOrbitGenus,
                        ClosureOptions options = {});

/// Splits all 2^{2g} refinements into transvection orbits. Orbits are
/// listed in order of their smallest point.
std::vector<SurfaceOrbit> orbit_partition(std::size_t genus, std::size_t max_genus = kMaxOrbitGenus,
                                          ClosureOptions options = {});

/// M with pullback(from, M) == to. Throws PreconditionFailed on Arf mismatch.
SymplecticElement transitivity_witness(const QuadraticRefinement& from, const QuadraticRefinement& to);

struct NoExtensionWitness {
  SymplecticElement element;
  std::size_t fixed_bounding_count = 0;
  std::optional<std::uint64_t> seed;  // absent for the exhaustive genus-1 search
  std::size_t attempts = 0;
};

/// Number of bounding forms q with pullback(q, m) == q.
std::size_t fixed_bounding_count(const SymplecticElement& m);

/// An element of Sp(2g, Z2) fixing no bounding form. Genus 1 is searched
/// exhaustively in canonical order; higher genus samples products of
/// transvections from a seeded generator. Throws BudgetExceeded.
NoExtensionWitness no_extension_witness(std::size_t genus, std::uint64_t seed = kDefaultWitnessSeed,
                                        std::size_t budget = kDefaultWitnessBudget,
                                        std::size_t max_genus = kMaxWitnessGenus);

struct CountingBound {
  BigInt lhs;          // b (|Sp| / b - 1) + 1
  BigInt group_order;  // |Sp(2g, Z2)|
  BigInt bounding;     // b_g
  std::size_t orbit_size = 0;
  bool divides = false;  // |Sp| is a multiple of the bounding orbit size
  bool ok = false;       // lhs < |Sp|
};

CountingBound counting_bound_check(std::size_t genus);

/// Orbit size of q: b_g for Arf 0, u_g for Arf 1.
BigInt index_lower_bound_surface(const QuadraticRefinement& q);

}  // namespace spinext
