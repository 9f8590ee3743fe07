#include "spinext/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinext/errors.hpp"
#include "spinext/group_utils.hpp"
#include "spinext/quadform.hpp"
#include "spinext/surface_spin.hpp"
#include "spinext/symplectic.hpp"
#include "spinext/torus_spin.hpp"

namespace spinext::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kMaxRecurrenceGenus = 10'000;
constexpr std::size_t kMaxArfGenus = 12;
constexpr std::size_t kMaxOrderGenus = 8;

/// Failure attributable to the invocation rather than the computation.
class UsageError : public Error {
 public:
  using Error::Error;
};

Json big(const BigInt& x) {
  if (fits_u64(x)) return static_cast<std::uint64_t>(x);
  return to_decimal(x);
}

Json matrix_json(const F2Mat& m) {
  Json rows = Json::array();
  for (const auto& r : m.to_strings()) rows.push_back(r);
  return rows;
}

template <class State>
Json orbit_json(const std::string& seed, const OrbitResult<State>& orbit) {
  Json points = Json::array();
  for (const auto& p : orbit.points) points.push_back(p.to_string());
  return Json{{"seed", seed}, {"size", orbit.size()}, {"generator_count", orbit.generator_count},
              {"points", std::move(points)}};
}

// Flattens a result to (path, scalar text) rows for csv/table output.
void flatten(const Json& value, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (value.is_object()) {
    for (const auto& [k, v] : value.items()) flatten(v, path.empty() ? k : path + "." + k, rows);
  } else if (value.is_array()) {
    if (value.empty()) rows.emplace_back(path, "");
    for (std::size_t i = 0; i < value.size(); ++i) flatten(value[i], path + "[" + std::to_string(i) + "]", rows);
  } else if (value.is_string()) {
    rows.emplace_back(path, value.get<std::string>());
  } else {
    rows.emplace_back(path, value.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

struct Options {
  std::size_t genus = 0;
  std::size_t dim = 0;
  std::string form;
  std::string spin;
  std::string vector;
  std::string from;
  std::string to;
  std::int64_t signature = 0;
  std::string format = "table";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> budget;
  bool brute_force = false;
  std::string ambient;
  std::string normal;
  std::string complement;
  std::string subgroup;
};

std::size_t resolve_budget(const Options& opt, std::size_t fallback) {
  if (opt.budget) return *opt.budget;
  if (const char* env = std::getenv("SPINEXT_BUDGET"); env != nullptr && *env != '\0') {
    std::size_t value = 0;
    std::istringstream in(env);
    if (!(in >> value) || !in.eof()) throw UsageError("SPINEXT_BUDGET must be a nonnegative integer");
    return value;
  }
  return fallback;
}

QuadraticRefinement parse_form(const std::string& bits, const char* flag) {
  if (bits.empty()) throw UsageError(std::string(flag) + " is required");
  return QuadraticRefinement::from_string(bits);
}

std::vector<Permutation> parse_generators(const std::string& text) {
  std::vector<Permutation> out;
  std::string_view rest(text);
  while (!rest.empty()) {
    const auto semi = rest.find(';');
    const auto token = rest.substr(0, semi);
    if (token.find_first_not_of(" \t") != std::string_view::npos) out.push_back(perm_from_string(token));
    if (semi == std::string_view::npos) break;
    rest = rest.substr(semi + 1);
  }
  return out;
}

struct Outcome {
  Json params = Json::object();
  Json result = Json::object();
  std::optional<std::uint64_t> seed;
};

using Handler = std::function<Outcome(const Options&)>;

Outcome surface_count(const Options& opt) {
  if (opt.genus < 1) throw UsageError("--genus must be >= 1");
  Outcome o;
  o.params = {{"genus", opt.genus}, {"brute_force", opt.brute_force}};
  const auto formula = count_formula(opt.genus);
  BigInt b;
  BigInt u;
  if (opt.brute_force) {
    if (opt.genus > kMaxEnumerateGenus) {
      throw UsageError("--brute-force supports genus 1.." + std::to_string(kMaxEnumerateGenus));
    }
    const auto partition = enumerate_spin(opt.genus);
    b = partition.bounding.size();
    u = partition.unbounding.size();
  } else {
    if (opt.genus > kMaxRecurrenceGenus) {
      throw UsageError("--genus must be <= " + std::to_string(kMaxRecurrenceGenus));
    }
    const auto seq = count_recurrence(opt.genus);
    b = seq.back().bounding;
    u = seq.back().unbounding;
  }
  o.result = {{"g", opt.genus},
              {"method", opt.brute_force ? "brute-force" : "recurrence"},
              {"b", big(b)},
              {"u", big(u)},
              {"formula_b", big(formula.bounding)},
              {"formula_u", big(formula.unbounding)},
              {"match", b == formula.bounding && u == formula.unbounding}};
  return o;
}

Outcome surface_orbits(const Options& opt) {
  Outcome o;
  const ClosureOptions closure{resolve_budget(opt, kDefaultStateBudget), false};
  if (!opt.form.empty()) {
    const auto q = parse_form(opt.form, "--form");
    if (opt.genus != 0 && opt.genus != q.genus()) throw UsageError("--genus disagrees with --form length");
    if (q.genus() > kMaxOrbitGenus) throw UsageError("orbits support genus 1.." + std::to_string(kMaxOrbitGenus));
    o.params = {{"form", opt.form}, {"budget", closure.budget}};
    o.result = orbit_json(q.to_string(), spin_orbit(q, kMaxOrbitGenus, closure));
    return o;
  }
  if (opt.genus < 1 || opt.genus > kMaxOrbitGenus) {
    throw UsageError("--genus must be in 1.." + std::to_string(kMaxOrbitGenus));
  }
  o.params = {{"genus", opt.genus}, {"budget", closure.budget}};
  Json orbits = Json::array();
  Json sizes = Json::array();
  for (const auto& orbit : orbit_partition(opt.genus, kMaxOrbitGenus, closure)) {
    const auto& seed = orbit.points.front();
    Json entry = orbit_json(seed.to_string(), orbit);
    entry["arf"] = static_cast<int>(arf(seed));
    sizes.push_back(orbit.size());
    orbits.push_back(std::move(entry));
  }
  const auto counts = count_formula(opt.genus);
  o.result = {{"g", opt.genus},
              {"orbit_count", orbits.size()},
              {"orbit_sizes", sizes},
              {"expected_sizes", Json::array({big(counts.bounding), big(counts.unbounding)})},
              {"orbits", std::move(orbits)}};
  return o;
}

Outcome surface_witness(const Options& opt) {
  if (opt.genus < 1 || opt.genus > kMaxWitnessGenus) {
    throw UsageError("--genus must be in 1.." + std::to_string(kMaxWitnessGenus));
  }
  Outcome o;
  const std::uint64_t seed = opt.seed.value_or(kDefaultWitnessSeed);
  const std::size_t budget = resolve_budget(opt, kDefaultWitnessBudget);
  o.params = {{"genus", opt.genus}, {"budget", budget}};
  const auto w = no_extension_witness(opt.genus, seed, budget);
  o.seed = w.seed;
  o.result = {{"g", opt.genus},
              {"matrix", matrix_json(w.element.matrix())},
              {"fixed_bounding_count", fixed_bounding_count(w.element)},
              {"bounding_count", enumerate_spin(opt.genus).bounding.size()},
              {"search", w.seed ? "seeded-random" : "exhaustive"},
              {"attempts", w.attempts},
              {"seed", w.seed ? Json(*w.seed) : Json(nullptr)}};
  return o;
}

Outcome surface_transitivity(const Options& opt) {
  const auto from = parse_form(opt.from, "--from");
  const auto to = parse_form(opt.to, "--to");
  if (from.genus() != to.genus()) throw UsageError("--from and --to must have equal length");
  if (opt.genus != 0 && opt.genus != from.genus()) throw UsageError("--genus disagrees with form length");
  Outcome o;
  o.params = {{"from", opt.from}, {"to", opt.to}};
  const auto m = transitivity_witness(from, to);
  o.result = {{"g", from.genus()},
              {"from", from.to_string()},
              {"to", to.to_string()},
              {"matrix", matrix_json(m.matrix())},
              {"verified", pullback(from, m) == to}};
  return o;
}

Outcome surface_index(const Options& opt) {
  Outcome o;
  std::optional<QuadraticRefinement> q;
  if (!opt.form.empty()) {
    q = parse_form(opt.form, "--form");
    if (opt.genus != 0 && opt.genus != q->genus()) throw UsageError("--genus disagrees with --form length");
    o.params = {{"form", opt.form}};
  } else {
    if (opt.genus < 1 || opt.genus > kMaxRecurrenceGenus) throw UsageError("--genus or --form is required");
    // The induced structure of an embedding is null-cobordant, hence Arf 0.
    q = standard_form(opt.genus, false);
    o.params = {{"genus", opt.genus}};
  }
  const auto bound = index_lower_bound_surface(*q);
  Json orbit_size = nullptr;
  Json match = nullptr;
  if (q->genus() <= kMaxOrbitGenus) {
    const auto size = spin_orbit(*q, kMaxOrbitGenus, {resolve_budget(opt, kDefaultStateBudget), false}).size();
    orbit_size = size;
    match = BigInt(size) == bound;
  }
  o.result = {{"g", q->genus()},
              {"form", q->to_string()},
              {"arf", static_cast<int>(arf_basis_formula(*q))},
              {"bound", big(bound)},
              {"orbit_size", orbit_size},
              {"match", match}};
  return o;
}

Outcome quad_arf(const Options& opt) {
  const auto q = parse_form(opt.form, "--form");
  if (q.genus() > kMaxArfGenus) throw UsageError("quad arf supports genus 1.." + std::to_string(kMaxArfGenus));
  Outcome o;
  o.params = {{"form", opt.form}};
  const bool a = arf(q);
  const bool fast = arf_basis_formula(q);
  o.result = {{"g", q.genus()},
              {"form", q.to_string()},
              {"arf", static_cast<int>(a)},
              {"zero_count", zero_count(q)},
              {"arf_basis_formula", static_cast<int>(fast)},
              {"match", a == fast}};
  return o;
}

Outcome quad_eval(const Options& opt) {
  const auto q = parse_form(opt.form, "--form");
  if (opt.vector.empty()) throw UsageError("--vector is required");
  const auto x = F2Vec::from_string(opt.vector);
  if (x.dim() != q.space().dim()) throw UsageError("--vector must have 2g bits");
  Outcome o;
  o.params = {{"form", opt.form}, {"vector", opt.vector}};
  o.result = {{"g", q.genus()}, {"form", q.to_string()}, {"vector", x.to_string()},
              {"value", static_cast<int>(eval(q, x))}};
  return o;
}

Outcome quad_reduce(const Options& opt) {
  const auto q = parse_form(opt.form, "--form");
  Outcome o;
  o.params = {{"form", opt.form}};
  const auto r = reduce_to_standard(q);
  o.result = {{"g", q.genus()},
              {"form", q.to_string()},
              {"arf", static_cast<int>(arf_basis_formula(q))},
              {"standard", r.standard.to_string()},
              {"matrix", matrix_json(r.change_of_basis.matrix())},
              {"verified", pullback(r.standard, r.change_of_basis) == q}};
  return o;
}

TorusSpin parse_torus(const Options& opt) {
  if (opt.spin.empty()) throw UsageError("--spin is required");
  auto s = TorusSpin::from_string(opt.spin);
  if (opt.dim != 0 && opt.dim != s.dim()) throw UsageError("--dim disagrees with --spin length");
  return s;
}

Outcome torus_orbit_cmd(const Options& opt) {
  const auto s = parse_torus(opt);
  if (s.dim() > kMaxTorusDim) throw UsageError("--dim must be in 1.." + std::to_string(kMaxTorusDim));
  Outcome o;
  const ClosureOptions closure{resolve_budget(opt, kDefaultStateBudget), false};
  o.params = {{"dim", s.dim()}, {"spin", opt.spin}, {"budget", closure.budget}};
  o.result = orbit_json(s.to_string(), torus_orbit(s, kMaxTorusDim, closure));
  o.result["p"] = s.dim();
  o.result["is_lie"] = s.is_lie();
  return o;
}

Outcome torus_index(const Options& opt) {
  const auto s = parse_torus(opt);
  Outcome o;
  o.params = {{"dim", s.dim()}, {"spin", opt.spin}};
  Json orbit_size = nullptr;
  if (s.dim() <= kMaxTorusDim) orbit_size = torus_orbit(s).size();
  o.result = {{"p", s.dim()},
              {"spin", s.to_string()},
              {"is_lie", s.is_lie()},
              {"bound", big(index_lower_bound_torus(s))},
              {"orbit_size", orbit_size}};
  return o;
}

Outcome torus_gate(const Options& opt) {
  Outcome o;
  o.params = {{"signature", opt.signature}};
  const auto v = t3_signature_gate(opt.signature);
  o.result = {{"signature", opt.signature},
              {"residue_mod_16", ((opt.signature % 16) + 16) % 16},
              {"tag", to_string(v.tag)},
              {"bound", v.bound ? Json(*v.bound) : Json(nullptr)}};
  return o;
}

Outcome torus_generators(const Options& opt) {
  if (opt.dim < 1 || opt.dim > kMaxTorusDim) throw UsageError("--dim must be in 1.." + std::to_string(kMaxTorusDim));
  Outcome o;
  o.params = {{"dim", opt.dim}};
  Json gens = Json::array();
  for (std::size_t i = 1; i <= opt.dim; ++i) {
    for (std::size_t j = 1; j <= opt.dim; ++j) {
      if (i != j) gens.push_back({{"i", i}, {"j", j}, {"matrix", matrix_json(dehn_twist_matrix(opt.dim, i, j))}});
    }
  }
  o.result = {{"p", opt.dim},
              {"generator_count", gens.size()},
              {"generators", std::move(gens)},
              {"closure_order", opt.dim <= 4 ? Json(modular_image_order(opt.dim)) : Json(nullptr)}};
  return o;
}

Outcome group_semidirect(const Options& opt) {
  if (opt.ambient.empty()) throw UsageError("--ambient is required");
  auto spec = [](const std::string& text, std::size_t degree) {
    PermGroupSpec s;
    s.generators = parse_generators(text);
    s.degree = degree;
    return s;
  };
  const auto ambient_gens = parse_generators(opt.ambient);
  if (ambient_gens.empty()) throw UsageError("--ambient needs at least one generator");
  const std::size_t degree = ambient_gens.front().size();
  const auto ambient = spec(opt.ambient, degree);
  const auto normal = spec(opt.normal, degree);
  const auto complement = spec(opt.complement, degree);
  const auto subgroup = spec(opt.subgroup, degree);
  for (const auto* s : {&ambient, &normal, &complement, &subgroup}) {
    for (const auto& g : s->generators) {
      if (g.size() != degree) throw UsageError("all permutations must have degree " + std::to_string(degree));
    }
  }
  Outcome o;
  const std::size_t budget = resolve_budget(opt, kDefaultGroupBudget);
  o.params = {{"ambient", opt.ambient}, {"normal", opt.normal}, {"complement", opt.complement},
              {"subgroup", opt.subgroup}, {"budget", budget}};
  const auto check = semidirect_index_check(normal, complement, subgroup, ambient, budget);
  o.result = {{"degree", degree}, {"lhs", check.lhs}, {"rhs", check.rhs}, {"ok", check.ok}};
  return o;
}

Outcome sp_order(const Options& opt) {
  if (opt.genus < 1 || opt.genus > kMaxOrderGenus) {
    throw UsageError("--genus must be in 1.." + std::to_string(kMaxOrderGenus));
  }
  Outcome o;
  o.params = {{"genus", opt.genus}};
  SymplecticSpace space(opt.genus);
  const auto chain = stabilizer_chain(space, lickorish_transvections(space));
  o.result = {{"g", opt.genus},
              {"order", big(chain.order())},
              {"orbit_sizes", chain.orbit_sizes},
              {"strong_generator_count", chain.strong_generator_count}};
  return o;
}

void emit(std::ostream& out, const std::string& format, const std::string& command, const Outcome& o) {
  if (format == "json") {
    Json envelope = {{"command", command},
                     {"params", o.params},
                     {"result", o.result},
                     {"seed", o.seed ? Json(*o.seed) : Json(nullptr)},
                     {"tool_version", kToolVersion}};
    out << envelope.dump(2) << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(o.result, "", rows);
  if (format == "csv") {
    out << "key,value\n";
    for (const auto& [k, v] : rows) out << csv_field(k) << ',' << csv_field(v) << '\n';
    return;
  }
  std::size_t width = 3;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  out << std::left << std::setw(static_cast<int>(width)) << "key" << "  value\n";
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << '\n';
}

void emit_error(std::ostream& err, const std::string& command, const char* kind, const std::string& type,
                const std::string& message) {
  Json e = {{"error", {{"kind", kind}, {"type", type}, {"message", message}}},
            {"command", command},
            {"tool_version", kToolVersion}};
  err << e.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with spin structures on surfaces and tori", "spinext"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  };
  auto add_budget = [&](CLI::App* sub) { sub->add_option("--budget", opt.budget, "State or search budget"); };

  struct Leaf {
    CLI::App* app;
    std::string name;
    Handler handler;
  };
  std::vector<Leaf> leaves;
  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& help, Handler handler) {
    CLI::App* sub = group->add_subcommand(name, help);
    add_format(sub);
    leaves.push_back({sub, group->get_name() + " " + name, std::move(handler)});
    return sub;
  };

  CLI::App* surface = app.add_subcommand("surface", "Spin structures on closed surfaces");
  surface->require_subcommand(1);
  {
    auto* c = leaf(surface, "count", "Count bounding/unbounding spin structures", surface_count);
    c->add_option("--genus,-g", opt.genus, "Genus")->required();
    c->add_flag("--brute-force", opt.brute_force, "Enumerate all refinements");
    auto* orbits = leaf(surface, "orbits", "Orbits of the Sp(2g,Z2) action", surface_orbits);
    orbits->add_option("--genus,-g", opt.genus, "Genus");
    orbits->add_option("--form", opt.form, "Seed refinement basis values");
    add_budget(orbits);
    auto* w = leaf(surface, "witness-no-extension", "Element fixing no bounding structure", surface_witness);
    w->add_option("--genus,-g", opt.genus, "Genus")->required();
    w->add_option("--seed", opt.seed, "Search seed");
    add_budget(w);
    auto* t = leaf(surface, "transitivity", "Symplectic map carrying one form to another", surface_transitivity);
    t->add_option("--from", opt.from, "Source form")->required();
    t->add_option("--to", opt.to, "Target form")->required();
    t->add_option("--genus,-g", opt.genus, "Genus");
    auto* idx = leaf(surface, "index", "Index lower bound from the orbit size", surface_index);
    idx->add_option("--genus,-g", opt.genus, "Genus");
    idx->add_option("--form", opt.form, "Refinement basis values");
    add_budget(idx);
  }

  CLI::App* quad = app.add_subcommand("quad", "Quadratic refinements");
  quad->require_subcommand(1);
  {
    leaf(quad, "arf", "Arf invariant", quad_arf)->add_option("--form", opt.form, "Basis values")->required();
    auto* e = leaf(quad, "eval", "Evaluate a refinement", quad_eval);
    e->add_option("--form", opt.form, "Basis values")->required();
    e->add_option("--vector", opt.vector, "Vector bit string")->required();
    leaf(quad, "reduce", "Normal form and change of basis", quad_reduce)
        ->add_option("--form", opt.form, "Basis values")
        ->required();
  }

  CLI::App* torus = app.add_subcommand("torus", "Spin structures on tori");
  torus->require_subcommand(1);
  {
    auto* o = leaf(torus, "orbit", "Orbit under the mod-2 modular group", torus_orbit_cmd);
    o->add_option("--dim,-p", opt.dim, "Torus dimension");
    o->add_option("--spin", opt.spin, "Difference from the Lie structure")->required();
    add_budget(o);
    auto* i = leaf(torus, "index", "Index lower bound", torus_index);
    i->add_option("--dim,-p", opt.dim, "Torus dimension");
    i->add_option("--spin", opt.spin, "Difference from the Lie structure")->required();
    leaf(torus, "t3-gate", "Signature gate for embedded 3-tori", torus_gate)
        ->add_option("--signature", opt.signature, "Seifert hypersurface signature")
        ->required();
    leaf(torus, "generators", "Mod-2 Dehn twist matrices", torus_generators)
        ->add_option("--dim,-p", opt.dim, "Torus dimension")
        ->required();
  }

  CLI::App* group = app.add_subcommand("group", "Permutation group checks");
  group->require_subcommand(1);
  {
    auto* s = leaf(group, "check-semidirect", "Index inequality for a semidirect product", group_semidirect);
    s->add_option("--ambient", opt.ambient, "Generators of N x| H, ';'-separated")->required();
    s->add_option("--normal", opt.normal, "Generators of N");
    s->add_option("--complement", opt.complement, "Generators of H");
    s->add_option("--subgroup", opt.subgroup, "Generators of G");
    add_budget(s);
  }

  CLI::App* sp = app.add_subcommand("sp", "Symplectic group");
  sp->require_subcommand(1);
  leaf(sp, "order", "Order via a stabilizer chain", sp_order)->add_option("--genus,-g", opt.genus)->required();

  std::string command;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, command, "usage", "ParseError", e.what());
    return kUsageError;
  }

  const Leaf* chosen = nullptr;
  for (const auto& l : leaves) {
    if (l.app->parsed()) chosen = &l;
  }
  if (chosen == nullptr) {
    emit_error(err, command, "usage", "ParseError", "no subcommand selected");
    return kUsageError;
  }
  command = chosen->name;

  try {
    const Outcome outcome = chosen->handler(opt);
    emit(out, opt.format, command, outcome);
    return kOk;
  } catch (const UsageError& e) {
    emit_error(err, command, "usage", "UsageError", e.what());
  } catch (const spinext::ParseError& e) {
    emit_error(err, command, "usage", "ParseError", e.what());
  } catch (const InvalidArgument& e) {
    emit_error(err, command, "usage", "InvalidArgument", e.what());
  } catch (const DimensionMismatch& e) {
    emit_error(err, command, "usage", "DimensionMismatch", e.what());
  } catch (const BudgetExceeded& e) {
    emit_error(err, command, "computation", "BudgetExceeded", e.what());
    return kComputationError;
  } catch (const PreconditionFailed& e) {
    emit_error(err, command, "computation", "PreconditionFailed", e.what());
    return kComputationError;
  } catch (const std::exception& e) {
    emit_error(err, command, "computation", "InternalError", e.what());
    return kComputationError;
  }
  return kUsageError;
}

}  // namespace spinext::cli
