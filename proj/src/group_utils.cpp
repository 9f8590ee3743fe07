#include "spinext/group_utils.hpp"

#include <cctype>
#include <charconv>

namespace spinext {

Permutation perm_identity(std::size_t degree) {
  Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
  return p;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> hit(p.size(), false);
  for (auto x : p) {
    if (x >= p.size() || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

Permutation perm_compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw DimensionMismatch("perm_compose: degrees differ");
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

Permutation perm_inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

std::string perm_to_string(const Permutation& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  out += ']';
  return out;
}

Permutation perm_from_string(std::string_view text) {
  auto fail = [&]() -> ParseError {
    return ParseError("malformed permutation \"" + std::string(text) + "\"; expected [p0,p1,...]");
  };
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  if (compact.size() < 2 || compact.front() != '[' || compact.back() != ']') throw fail();
  Permutation p;
  std::string_view body(compact);
  body = body.substr(1, body.size() - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    const auto token = body.substr(0, comma);
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) throw fail();
    p.push_back(value);
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
    if (body.empty()) throw fail();
  }
  if (!is_permutation(p)) throw ParseError("\"" + std::string(text) + "\" is not a bijection");
  return p;
}

void PermGroupSpec::validate() const {
  for (const auto& g : generators) {
    if (g.size() != degree || !is_permutation(g)) {
      throw InvalidArgument("generator " + perm_to_string(g) + " is not a permutation of degree " +
                            std::to_string(degree));
    }
  }
}

std::set<Permutation> enumerate_group(const PermGroupSpec& spec, std::size_t budget) {
  spec.validate();
  auto closure = orbit_closure(
      std::vector<Permutation>{perm_identity(spec.degree)}, spec.generators,
      [](const Permutation& g, const Permutation& x) { return perm_compose(g, x); },
      [](const Permutation& x) { return perm_to_string(x); }, ClosureOptions{budget, false});
  return {closure.points.begin(), closure.points.end()};
}

SemidirectCheck semidirect_index_check(const PermGroupSpec& normal, const PermGroupSpec& complement,
                                       const PermGroupSpec& subgroup, const PermGroupSpec& ambient,
                                       std::size_t budget) {
  for (const auto* s : {&normal, &complement, &subgroup}) {
    if (s->degree != ambient.degree) throw PreconditionFailed("all groups must share one degree");
  }
  const auto whole = enumerate_group(ambient, budget);
  const auto n_set = enumerate_group(normal, budget);
  const auto h_set = enumerate_group(complement, budget);
  const auto g_set = enumerate_group(subgroup, budget);

  auto inside_ambient = [&](const PermGroupSpec& s, const char* name) {
    for (const auto& x : s.generators) {
      if (!whole.contains(x)) {
        throw PreconditionFailed(std::string(name) + " is not a subgroup of the ambient group");
      }
    }
  };
  inside_ambient(normal, "N");
  inside_ambient(complement, "H");
  inside_ambient(subgroup, "G");

  for (const auto& a : ambient.generators) {
    const auto a_inv = perm_inverse(a);
    for (const auto& x : normal.generators) {
      if (!n_set.contains(perm_compose(a, perm_compose(x, a_inv)))) {
        throw PreconditionFailed("N is not normal in the ambient group");
      }
    }
  }
  std::size_t n_cap_h = 0;
  for (const auto& x : h_set) n_cap_h += n_set.contains(x);
  if (n_cap_h != 1) throw PreconditionFailed("N and H intersect nontrivially");
  if (n_set.size() * h_set.size() != whole.size()) {
    throw PreconditionFailed("|N| * |H| != |ambient|; ambient is not NH");
  }

  std::size_t n_cap_g = 0;
  std::size_t h_cap_g = 0;
  for (const auto& x : g_set) {
    n_cap_g += n_set.contains(x);
    h_cap_g += h_set.contains(x);
  }
  SemidirectCheck out;
  out.lhs = whole.size() / g_set.size();
  out.rhs = (n_set.size() / n_cap_g) * (h_set.size() / h_cap_g);
  out.ok = out.lhs <= out.rhs;
  return out;
}

}  // namespace spinext
