#pragma once

// Finite-action machinery shared by the surface and torus computations:
// BFS orbit closure keyed by a canonical serialized form, permutation
// groups by closure, and the semidirect-product index inequality.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spinext/errors.hpp"

namespace spinext {

inline constexpr std::size_t kDefaultStateBudget = std::size_t{1} << 24;
inline constexpr std::size_t kDefaultGroupBudget = 1'000'000;

/// How a state was reached: apply generators[word[0]], then word[1], ...
/// starting from seeds[seed].
struct Witness {
  std::size_t seed = 0;
  std::vector<std::size_t> word;
  friend bool operator==(const Witness&, const Witness&) = default;
};

template <class State>
struct OrbitResult {
  /// Sorted by canonical serialized form.
  std::vector<State> points;
  std::size_t generator_count = 0;
  /// Keyed by canonical serialized form; present when requested.
  std::optional<std::map<std::string, Witness>> witness_words;

  std::size_t size() const { return points.size(); }
};

struct ClosureOptions {
  std::size_t budget = kDefaultStateBudget;
  bool record_words = false;
};

/// Least set containing `seeds` and closed under `apply(generator, state)`.
/// `key` must be injective on reachable states; its ordering is the
/// canonical point order. Throws BudgetExceeded past `options.budget` states.
template <class State, class Generator, class Apply, class Key>
OrbitResult<State> orbit_closure(const std::vector<State>& seeds,
                                 const std::vector<Generator>& generators, Apply&& apply,
                                 Key&& key, ClosureOptions options = {}) {
  std::vector<State> frontier;
  std::vector<std::string> keys;
  std::vector<std::pair<std::size_t, std::size_t>> parent;  // (state index, generator)
  std::vector<std::size_t> seed_of;
  std::unordered_map<std::string, std::size_t> seen;

  auto admit = [&](State s, std::size_t from, std::size_t gen, std::size_t seed) {
    std::string k = key(s);
    if (seen.contains(k)) return;
    if (frontier.size() >= options.budget) {
      throw BudgetExceeded("orbit closure exceeded the state budget of " +
                           std::to_string(options.budget));
    }
    seen.emplace(k, frontier.size());
    keys.push_back(std::move(k));
    frontier.push_back(std::move(s));
    parent.emplace_back(from, gen);
    seed_of.push_back(seed);
  };

  constexpr auto kRoot = static_cast<std::size_t>(-1);
  for (std::size_t i = 0; i < seeds.size(); ++i) admit(seeds[i], kRoot, kRoot, i);
  for (std::size_t k = 0; k < frontier.size(); ++k) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      admit(apply(generators[g], frontier[k]), k, g, seed_of[k]);
    }
  }

  std::vector<std::size_t> order(frontier.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

  OrbitResult<State> result;
  result.generator_count = generators.size();
  result.points.reserve(order.size());
  for (auto i : order) result.points.push_back(frontier[i]);
  if (options.record_words) {
    std::map<std::string, Witness> words;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      Witness w;
      w.seed = seed_of[i];
      for (std::size_t at = i; parent[at].first != kRoot; at = parent[at].first) {
        w.word.push_back(parent[at].second);
      }
      std::reverse(w.word.begin(), w.word.end());
      words.emplace(keys[i], std::move(w));
    }
    result.witness_words = std::move(words);
  }
  return result;
}

/// One-line image notation: p[i] is the image of i.
using Permutation = std::vector<std::uint32_t>;

Permutation perm_identity(std::size_t degree);
bool is_permutation(const Permutation& p);
/// (p * q)(i) = p(q(i)).
Permutation perm_compose(const Permutation& p, const Permutation& q);
Permutation perm_inverse(const Permutation& p);
/// "[p(0),p(1),...]"
std::string perm_to_string(const Permutation& p);
/// Parses "[a,b,...]"; throws ParseError on malformed input or a non-bijection.
Permutation perm_from_string(std::string_view text);

struct PermGroupSpec {
  std::size_t degree = 0;
  std::vector<Permutation> generators;

  /// Throws InvalidArgument if some generator is not a bijection of {0..degree-1}.
  void validate() const;
};

std::set<Permutation> enumerate_group(const PermGroupSpec& spec,
                                      std::size_t budget = kDefaultGroupBudget);

struct SemidirectCheck {
  std::size_t lhs = 0;  // [ambient : G]
  std::size_t rhs = 0;  // [N : N cap G] * [H : H cap G]
  bool ok = false;
};

/// Verifies ambient = N x| H (N normal, N cap H trivial, |N||H| = |ambient|),
/// that G lies in ambient, and compares the indices. Throws
/// PreconditionFailed when the decomposition is invalid.
SemidirectCheck semidirect_index_check(const PermGroupSpec& normal, const PermGroupSpec& complement,
                                       const PermGroupSpec& subgroup, const PermGroupSpec& ambient,
                                       std::size_t budget = kDefaultGroupBudget);

}  // namespace spinext
