#pragma once

// Spin structures on the p-torus as differences from the Lie-group
// structure in H^1(T^p; Z2). Mapping classes act through SL(p, Z) reduced
// mod 2. Matrices act on H_1 column vectors; differences transform by the
// transpose.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinext/bigint.hpp"
#include "spinext/f2.hpp"
#include "spinext/group_utils.hpp"

namespace spinext {

inline constexpr std::size_t kMaxTorusDim = 16;

class TorusSpin {
 public:
  /// diff.dim() is p; throws InvalidArgument for p = 0.
  explicit TorusSpin(F2Vec diff);

  static TorusSpin lie(std::size_t p);
  static TorusSpin from_string(std::string_view bits) { return TorusSpin(F2Vec::from_string(bits)); }

  std::size_t dim() const { return diff_.dim(); }
  const F2Vec& diff() const { return diff_; }
  bool is_lie() const { return diff_.is_zero(); }
  std::string to_string() const { return diff_.to_string(); }

  friend bool operator==(const TorusSpin&, const TorusSpin&) = default;

 private:
  F2Vec diff_;
};

/// tau_{i,j} mod 2 (1-based): e_i -> e_i + e_j, so the extra 1 sits at
/// (row j, col i).
F2Mat dehn_twist_matrix(std::size_t p, std::size_t i, std::size_t j);

/// All p(p-1) twist matrices, ordered by (i, j).
std::vector<F2Mat> dehn_twist_generators(std::size_t p);

/// diff' = A^T diff. Throws SingularMatrix or DimensionMismatch.
TorusSpin torus_act(const F2Mat& a, const TorusSpin& s);

using TorusOrbit = OrbitResult<TorusSpin>;

TorusOrbit torus_orbit(const TorusSpin& s, std::size_t max_dim = kMaxTorusDim,
                       ClosureOptions options = {});

/// 1 for the Lie structure, else 2^p - 1.
BigInt index_lower_bound_torus(const TorusSpin& s);

/// Order of the matrix group generated by the mod-2 twists (p <= 4).
std::size_t modular_image_order(std::size_t p);

enum class T3Tag { BoundApplies, Indeterminate, InvalidSignature };

struct T3Verdict {
  T3Tag tag = T3Tag::InvalidSignature;
  std::optional<int> bound;
  friend bool operator==(const T3Verdict&, const T3Verdict&) = default;
};

std::string to_string(T3Tag tag);

/// Verdict for a Seifert hypersurface signature of an embedded 3-torus.
T3Verdict t3_signature_gate(std::int64_t signature);

}  // namespace spinext
