#pragma once

// Quadratic refinements q of the standard symplectic form:
//   q(x + y) = q(x) + q(y) + omega(x, y).
// A refinement is determined by its values on the basis; every 2g-bit
// string of basis values defines one, so construction never fails.

#include <cstddef>
#include <string>
#include <utility>

#include "spinext/f2.hpp"
#include "spinext/symplectic.hpp"

namespace spinext {

class QuadraticRefinement {
 public:
  /// basis_values.dim() must equal 2g.
  QuadraticRefinement(SymplecticSpace space, F2Vec basis_values);

  /// Genus is inferred from the string length, which must be even and positive.
  static QuadraticRefinement from_string(std::string_view basis_bits);

  const SymplecticSpace& space() const { return space_; }
  std::size_t genus() const { return space_.genus(); }
  const F2Vec& basis_values() const { return basis_values_; }
  std::string to_string() const { return basis_values_.to_string(); }

  friend bool operator==(const QuadraticRefinement&, const QuadraticRefinement&) = default;
  friend bool operator<(const QuadraticRefinement& lhs, const QuadraticRefinement& rhs) {
    return lhs.basis_values_ < rhs.basis_values_;
  }

 private:
  SymplecticSpace space_;
  F2Vec basis_values_;
};

bool eval(const QuadraticRefinement& q, const F2Vec& x);

/// Number of x in Z2^{2g} with q(x) = 0, by exhaustive Gray-code sweep.
std::size_t zero_count(const QuadraticRefinement& q);

/// Arf invariant from the vanishing count. Throws std::logic_error if the
/// count is neither 2^{2g-1} + 2^{g-1} nor 2^{2g-1} - 2^{g-1}.
bool arf(const QuadraticRefinement& q);

/// sum_i q(a_i) q(b_i).
bool arf_basis_formula(const QuadraticRefinement& q);

/// Right action: the returned q' satisfies q'(x) = q(M x).
QuadraticRefinement pullback(const QuadraticRefinement& q, const SymplecticElement& m);
/// Validating overload for a raw matrix; throws PreconditionFailed if M is not symplectic.
QuadraticRefinement pullback(const QuadraticRefinement& q, const F2Mat& m);

QuadraticRefinement direct_sum(const QuadraticRefinement& q1, const QuadraticRefinement& q2);

/// All zeros for arf 0; (1,1,0,...,0) for arf 1.
QuadraticRefinement standard_form(std::size_t genus, bool arf_value);

struct Reduction {
  SymplecticElement change_of_basis;  // pullback(standard, change_of_basis) == q
  QuadraticRefinement standard;
};

/// Symplectic Gram-Schmidt carrying q to its normal form.
Reduction reduce_to_standard(const QuadraticRefinement& q);

}  // namespace spinext
