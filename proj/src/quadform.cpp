#include "spinext/quadform.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include "spinext/errors.hpp"

namespace spinext {

namespace {

constexpr F2Vec::Word kEvenBits = 0x5555555555555555ULL;

std::size_t partner(std::size_t k) { return k ^ 1u; }

// Independent subset of a spanning list, kept in input order.
class SpanBuilder {
 public:
  bool add(const F2Vec& v) {
    F2Vec r = v;
    for (const auto& [pivot, row] : reduced_) {
      if (r.get(pivot)) r ^= row;
    }
    if (r.is_zero()) return false;
    reduced_.emplace_back(r.lowest_set(), r);
    basis_.push_back(v);
    return true;
  }
  const std::vector<F2Vec>& basis() const { return basis_; }

 private:
  std::vector<std::pair<std::size_t, F2Vec>> reduced_;
  std::vector<F2Vec> basis_;
};

}  // namespace

QuadraticRefinement::QuadraticRefinement(SymplecticSpace space, F2Vec basis_values)
    : space_(space), basis_values_(std::move(basis_values)) {
  if (basis_values_.dim() != space_.dim()) {
    throw DimensionMismatch("basis_values must have 2g bits");
  }
}

QuadraticRefinement QuadraticRefinement::from_string(std::string_view basis_bits) {
  if (basis_bits.empty() || basis_bits.size() % 2 != 0) {
    throw ParseError("form bit string must have even, positive length");
  }
  return {SymplecticSpace(basis_bits.size() / 2), F2Vec::from_string(basis_bits)};
}

bool eval(const QuadraticRefinement& q, const F2Vec& x) {
  if (x.dim() != q.space().dim()) throw DimensionMismatch("eval: vector dim != 2g");
  F2Vec::Word acc = 0;
  const auto xw = x.words();
  const auto qw = q.basis_values().words();
  for (std::size_t k = 0; k < xw.size(); ++k) {
    // Linear part plus the a_i b_i cross terms of the expansion.
    acc ^= (xw[k] & qw[k]) ^ ((xw[k] & kEvenBits) & ((xw[k] >> 1) & kEvenBits));
  }
  return std::popcount(acc) & 1;
}

std::size_t zero_count(const QuadraticRefinement& q) {
  const std::size_t n = q.space().dim();
  if (n >= 63) throw InvalidArgument("zero_count: genus too large to enumerate");
  const F2Vec::Word basis = q.basis_values().low_word();
  // Gray-code walk: flipping bit j moves q by q(e_j) + omega(x, e_j),
  // and omega(x, e_j) is the partner bit of x.
  F2Vec::Word x = 0;
  bool value = false;
  std::size_t zeros = 1;
  const F2Vec::Word total = F2Vec::Word{1} << n;
  for (F2Vec::Word step = 1; step < total; ++step) {
    const auto j = static_cast<std::size_t>(std::countr_zero(step));
    value ^= ((basis >> j) & 1u) ^ ((x >> partner(j)) & 1u);
    x ^= F2Vec::Word{1} << j;
    if (!value) ++zeros;
  }
  return zeros;
}

bool arf(const QuadraticRefinement& q) {
  const std::size_t g = q.genus();
  const std::size_t zeros = zero_count(q);
  const std::size_t half = std::size_t{1} << (2 * g - 1);
  const std::size_t offset = std::size_t{1} << (g - 1);
  if (zeros == half + offset) return false;
  if (zeros == half - offset) return true;
  throw std::logic_error("arf: vanishing count " + std::to_string(zeros) +
                         " matches neither Arf class");
}

bool arf_basis_formula(const QuadraticRefinement& q) {
  bool acc = false;
  for (std::size_t k = 0; k < q.space().dim(); k += 2) {
    acc ^= q.basis_values().get(k) && q.basis_values().get(k + 1);
  }
  return acc;
}

QuadraticRefinement pullback(const QuadraticRefinement& q, const SymplecticElement& m) {
  if (!(m.space() == q.space())) throw DimensionMismatch("pullback: genus differs");
  F2Vec values(q.space().dim());
  for (std::size_t k = 0; k < values.dim(); ++k) {
    if (eval(q, m.matrix().column(k))) values.set(k, true);
  }
  return {q.space(), std::move(values)};
}

QuadraticRefinement pullback(const QuadraticRefinement& q, const F2Mat& m) {
  return pullback(q, SymplecticElement(q.space(), m));
}

QuadraticRefinement direct_sum(const QuadraticRefinement& q1, const QuadraticRefinement& q2) {
  const std::size_t n1 = q1.space().dim();
  SymplecticSpace space(q1.genus() + q2.genus());
  F2Vec values(space.dim());
  for (std::size_t k = 0; k < n1; ++k) values.set(k, q1.basis_values().get(k));
  for (std::size_t k = 0; k < q2.space().dim(); ++k) values.set(n1 + k, q2.basis_values().get(k));
  return {space, std::move(values)};
}

QuadraticRefinement standard_form(std::size_t genus, bool arf_value) {
  SymplecticSpace space(genus);
  F2Vec values(space.dim());
  if (arf_value) {
    values.set(0, true);
    values.set(1, true);
  }
  return {space, std::move(values)};
}

Reduction reduce_to_standard(const QuadraticRefinement& q) {
  const SymplecticSpace& space = q.space();
  const std::size_t n = space.dim();
  const bool a = arf_basis_formula(q);
  QuadraticRefinement target = standard_form(space.genus(), a);
  if (q == target) return {SymplecticElement::identity(space), std::move(target)};

  std::vector<F2Vec> remaining;
  for (std::size_t k = 0; k < n; ++k) remaining.push_back(F2Vec::unit(n, k));

  // Hyperbolic pairs (c, d) with omega(c, d) = 1, pairwise orthogonal.
  std::vector<std::pair<F2Vec, F2Vec>> pairs;
  while (!remaining.empty()) {
    const std::size_t m = remaining.size();
    // First vector (in Gray order over the span) where q vanishes.
    F2Vec c = remaining.front();
    bool found = false;
    {
      F2Vec x(n);
      const std::size_t limit = m >= 20 ? (std::size_t{1} << 20) : (std::size_t{1} << m);
      for (std::size_t step = 1; step < limit; ++step) {
        x ^= remaining[static_cast<std::size_t>(std::countr_zero(step))];
        if (!eval(q, x)) {
          c = x;
          found = true;
          break;
        }
      }
    }
    F2Vec d(n);
    bool have_d = false;
    for (const auto& w : remaining) {
      if (omega(space, c, w)) {
        d = w;
        have_d = true;
        break;
      }
    }
    if (!have_d) throw std::logic_error("reduce_to_standard: degenerate subspace");
    if (found && eval(q, d)) d ^= c;

    SpanBuilder complement;
    for (const auto& w : remaining) {
      F2Vec p = w;
      if (omega(space, w, d)) p ^= c;
      if (omega(space, w, c)) p ^= d;
      if (!p.is_zero()) complement.add(p);
    }
    pairs.emplace_back(std::move(c), std::move(d));
    remaining = complement.basis();
    if (remaining.size() + 2 * pairs.size() != n) {
      throw std::logic_error("reduce_to_standard: complement has wrong dimension");
    }
  }

  // The only pair that can carry q-values (1,1) is the last one; the
  // normal form puts it first.
  if (a) std::rotate(pairs.rbegin(), pairs.rbegin() + 1, pairs.rend());
  std::vector<F2Vec> columns;
  for (const auto& [c, d] : pairs) {
    columns.push_back(c);
    columns.push_back(d);
  }
  // P sends the standard basis to the new symplectic basis, so
  // pullback(q, P) is the normal form and M = P^{-1}.
  const F2Mat basis_change = F2Mat::from_columns(columns);
  SymplecticElement m(space, mat_inverse(basis_change));
  return {std::move(m), std::move(target)};
}

}  // namespace spinext
