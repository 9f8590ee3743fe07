#include "spinext/surface_spin.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "spinext/errors.hpp"

namespace spinext {

namespace {

void require_genus(std::size_t genus, std::size_t max_genus, const char* op) {
  if (genus < 1 || genus > max_genus) {
    throw InvalidArgument(std::string(op) + ": genus must be in 1.." + std::to_string(max_genus) +
                          ", got " + std::to_string(genus));
  }
}

std::string matrix_key(const F2Mat& m) {
  std::string key;
  for (const auto& r : m.to_strings()) {
    key += r;
    key += '/';
  }
  return key;
}

}  // namespace

SpinPartition enumerate_spin(std::size_t genus, std::size_t max_genus) {
  require_genus(genus, max_genus, "enumerate_spin");
  SymplecticSpace space(genus);
  SpinPartition out;
  out.genus = genus;
  // Bit-string order: index 0 is the most significant character.
  const std::size_t n = space.dim();
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t k = 0; k < total; ++k) {
    F2Vec values(n);
    for (std::size_t i = 0; i < n; ++i) {
      if ((k >> (n - 1 - i)) & 1u) values.set(i, true);
    }
    QuadraticRefinement q(space, std::move(values));
    (arf(q) ? out.unbounding : out.bounding).push_back(std::move(q));
  }
  return out;
}

SpinCounts count_formula(std::size_t genus) {
  if (genus < 1) throw InvalidArgument("count_formula: genus must be >= 1");
  const BigInt half = pow2(2 * genus - 1);
  const BigInt offset = pow2(genus - 1);
  return {half + offset, half - offset};
}

std::vector<SpinCounts> count_recurrence(std::size_t max_genus) {
  if (max_genus < 1) throw InvalidArgument("count_recurrence: g_max must be >= 1");
  std::vector<SpinCounts> out;
  out.push_back({3, 1});
  while (out.size() < max_genus) {
    const auto& [b, u] = out.back();
    out.push_back({3 * b + u, 3 * u + b});
  }
  return out;
}

SurfaceOrbit spin_orbit(const QuadraticRefinement& q, std::size_t max_genus, ClosureOptions options) {
  require_genus(q.genus(), max_genus, "spin_orbit");
  const auto generators = all_transvections(q.space());
  return orbit_closure(
      std::vector<QuadraticRefinement>{q}, generators,
      [](const SymplecticElement& m, const QuadraticRefinement& x) { return pullback(x, m); },
      [](const QuadraticRefinement& x) { return x.to_string(); }, options);
}

std::vector<SurfaceOrbit> orbit_partition(std::size_t genus, std::size_t max_genus,
                                          ClosureOptions options) {
  require_genus(genus, max_genus, "orbit_partition");
  const auto all = enumerate_spin(genus, max_genus);
  std::vector<QuadraticRefinement> forms = all.bounding;
  forms.insert(forms.end(), all.unbounding.begin(), all.unbounding.end());
  std::sort(forms.begin(), forms.end());

  std::vector<SurfaceOrbit> orbits;
  std::set<std::string> covered;
  for (const auto& q : forms) {
    if (covered.contains(q.to_string())) continue;
    auto orbit = spin_orbit(q, max_genus, options);
    for (const auto& x : orbit.points) covered.insert(x.to_string());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

SymplecticElement transitivity_witness(const QuadraticRefinement& from, const QuadraticRefinement& to) {
  if (!(from.space() == to.space())) throw DimensionMismatch("transitivity_witness: genus differs");
  if (arf_basis_formula(from) != arf_basis_formula(to)) {
    throw PreconditionFailed("transitivity_witness: Arf invariants differ, no witness exists");
  }
  if (from == to) return SymplecticElement::identity(from.space());
  // q1(x) = s(M1 x), q2(x) = s(M2 x)  =>  q1(M1^{-1} M2 x) = q2(x).
  const auto r1 = reduce_to_standard(from);
  const auto r2 = reduce_to_standard(to);
  return r1.change_of_basis.inverse() * r2.change_of_basis;
}

std::size_t fixed_bounding_count(const SymplecticElement& m) {
  const auto partition = enumerate_spin(m.space().genus());
  std::size_t fixed = 0;
  for (const auto& q : partition.bounding) fixed += pullback(q, m) == q;
  return fixed;
}

NoExtensionWitness no_extension_witness(std::size_t genus, std::uint64_t seed, std::size_t budget,
                                        std::size_t max_genus) {
  require_genus(genus, max_genus, "no_extension_witness");
  SymplecticSpace space(genus);
  const auto bounding = enumerate_spin(genus).bounding;
  auto fixes_none = [&](const SymplecticElement& m) {
    for (const auto& q : bounding) {
      if (pullback(q, m) == q) return false;
    }
    return true;
  };

  if (genus == 1) {
    const auto group = orbit_closure(
        std::vector<SymplecticElement>{SymplecticElement::identity(space)}, all_transvections(space),
        [](const SymplecticElement& t, const SymplecticElement& x) { return t * x; },
        [](const SymplecticElement& x) { return matrix_key(x.matrix()); });
    std::size_t attempts = 0;
    for (const auto& m : group.points) {
      ++attempts;
      if (fixes_none(m)) return {m, 0, std::nullopt, attempts};
    }
    throw BudgetExceeded("no_extension_witness: exhaustive genus-1 search found no witness");
  }

  const auto transvections = all_transvections(space);
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 1; attempt <= budget; ++attempt) {
    const std::size_t length = 1 + static_cast<std::size_t>(rng() % kMaxWitnessWordLength);
    SymplecticElement m = SymplecticElement::identity(space);
    for (std::size_t k = 0; k < length; ++k) {
      m = m * transvections[static_cast<std::size_t>(rng() % transvections.size())];
    }
    if (fixes_none(m)) return {m, 0, seed, attempt};
  }
  throw BudgetExceeded("no_extension_witness: no witness within " + std::to_string(budget) +
                       " attempts (seed " + std::to_string(seed) + ")");
}

CountingBound counting_bound_check(std::size_t genus) {
  require_genus(genus, 3, "counting_bound_check");
  SymplecticSpace space(genus);
  CountingBound out;
  out.group_order = group_order(space);
  out.bounding = count_formula(genus).bounding;
  out.orbit_size = spin_orbit(standard_form(genus, false)).size();
  out.divides = out.group_order % out.orbit_size == 0 && BigInt(out.orbit_size) == out.bounding;
  out.lhs = out.bounding * (out.group_order / out.bounding - 1) + 1;
  out.ok = out.lhs < out.group_order;
  return out;
}

BigInt index_lower_bound_surface(const QuadraticRefinement& q) {
  const auto counts = count_formula(q.genus());
  return arf_basis_formula(q) ? counts.unbounding : counts.bounding;
}

}  // namespace spinext
