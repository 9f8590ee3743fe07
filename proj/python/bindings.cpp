#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "spinext/errors.hpp"
#include "spinext/group_utils.hpp"
#include "spinext/quadform.hpp"
#include "spinext/surface_spin.hpp"
#include "spinext/symplectic.hpp"
#include "spinext/torus_spin.hpp"

namespace py = pybind11;
using namespace spinext;

namespace {

py::int_ big_to_py(const BigInt& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(to_decimal(x).c_str(), nullptr, 10));
}

QuadraticRefinement form(const std::string& bits) { return QuadraticRefinement::from_string(bits); }

template <class State>
std::vector<std::string> points(const OrbitResult<State>& orbit) {
  std::vector<std::string> out;
  for (const auto& p : orbit.points) out.push_back(p.to_string());
  return out;
}

PermGroupSpec perm_spec(const std::vector<Permutation>& generators, std::size_t degree) {
  return {degree, generators};
}

}  // namespace

PYBIND11_MODULE(_spinext, m) {
  m.doc() = "Exact computations with spin structures on surfaces and tori";

  auto base = py::register_exception<Error>(m, "SpinextError");
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base.ptr());
  py::register_exception<SingularMatrix>(m, "SingularMatrix", base.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<PreconditionFailed>(m, "PreconditionFailed", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  // Refinements are passed as basis-value bit strings, matrices as row strings.
  m.def("eval", [](const std::string& q, const std::string& x) {
    return static_cast<int>(eval(form(q), F2Vec::from_string(x)));
  });
  m.def("zero_count", [](const std::string& q) { return zero_count(form(q)); });
  m.def("arf", [](const std::string& q) { return static_cast<int>(arf(form(q))); });
  m.def("arf_basis_formula", [](const std::string& q) { return static_cast<int>(arf_basis_formula(form(q))); });
  m.def("pullback", [](const std::string& q, const std::vector<std::string>& rows) {
    return pullback(form(q), F2Mat::from_strings(rows)).to_string();
  });
  m.def("direct_sum", [](const std::string& a, const std::string& b) {
    return direct_sum(form(a), form(b)).to_string();
  });
  m.def("standard_form", [](std::size_t g, int a) { return standard_form(g, a != 0).to_string(); });
  m.def("reduce_to_standard", [](const std::string& q) {
    const auto r = reduce_to_standard(form(q));
    return py::make_tuple(r.change_of_basis.matrix().to_strings(), r.standard.to_string());
  });
  m.def("is_symplectic", [](const std::vector<std::string>& rows) {
    const auto mat = F2Mat::from_strings(rows);
    if (mat.rows() % 2 != 0 || mat.rows() == 0) throw DimensionMismatch("matrix must be 2g x 2g");
    return is_symplectic(SymplecticSpace(mat.rows() / 2), mat);
  });
  m.def("group_order", [](std::size_t g) { return big_to_py(group_order(SymplecticSpace(g))); });

  m.def("enumerate_spin", [](std::size_t g) {
    const auto p = enumerate_spin(g);
    std::vector<std::string> b, u;
    for (const auto& q : p.bounding) b.push_back(q.to_string());
    for (const auto& q : p.unbounding) u.push_back(q.to_string());
    return py::make_tuple(b, u);
  });
  m.def("count_formula", [](std::size_t g) {
    const auto c = count_formula(g);
    return py::make_tuple(big_to_py(c.bounding), big_to_py(c.unbounding));
  });
  m.def("count_recurrence", [](std::size_t g_max) {
    py::list out;
    for (const auto& c : count_recurrence(g_max)) out.append(py::make_tuple(big_to_py(c.bounding), big_to_py(c.unbounding)));
    return out;
  });
  m.def("spin_orbit", [](const std::string& q) { return points(spin_orbit(form(q))); });
  m.def("orbit_partition", [](std::size_t g) {
    std::vector<std::vector<std::string>> out;
    for (const auto& orbit : orbit_partition(g)) out.push_back(points(orbit));
    return out;
  });
  m.def("transitivity_witness", [](const std::string& a, const std::string& b) {
    return transitivity_witness(form(a), form(b)).matrix().to_strings();
  });
  m.def(
      "no_extension_witness",
      [](std::size_t g, std::uint64_t seed, std::size_t budget) {
        const auto w = no_extension_witness(g, seed, budget);
        py::dict d;
        d["matrix"] = w.element.matrix().to_strings();
        d["fixed_bounding_count"] = fixed_bounding_count(w.element);
        d["seed"] = w.seed ? py::object(py::int_(*w.seed)) : py::object(py::none());
        d["attempts"] = w.attempts;
        return d;
      },
      py::arg("g"), py::arg("seed") = kDefaultWitnessSeed, py::arg("budget") = kDefaultWitnessBudget);
  m.def("counting_bound_check", [](std::size_t g) {
    const auto c = counting_bound_check(g);
    py::dict d;
    d["lhs"] = big_to_py(c.lhs);
    d["order"] = big_to_py(c.group_order);
    d["bounding"] = big_to_py(c.bounding);
    d["ok"] = c.ok;
    d["divides"] = c.divides;
    return d;
  });
  m.def("index_lower_bound_surface", [](const std::string& q) { return big_to_py(index_lower_bound_surface(form(q))); });

  m.def("dehn_twist_matrix", [](std::size_t p, std::size_t i, std::size_t j) {
    return dehn_twist_matrix(p, i, j).to_strings();
  });
  m.def("torus_act", [](const std::vector<std::string>& rows, const std::string& s) {
    return torus_act(F2Mat::from_strings(rows), TorusSpin::from_string(s)).to_string();
  });
  m.def("torus_orbit", [](const std::string& s) { return points(torus_orbit(TorusSpin::from_string(s))); });
  m.def("index_lower_bound_torus", [](const std::string& s) { return big_to_py(index_lower_bound_torus(TorusSpin::from_string(s))); });
  m.def("modular_image_order", &modular_image_order);
  m.def("t3_signature_gate", [](std::int64_t sig) {
    const auto v = t3_signature_gate(sig);
    return py::make_tuple(to_string(v.tag), v.bound ? py::object(py::int_(*v.bound)) : py::object(py::none()));
  });

  m.def(
      "semidirect_index_check",
      [](const std::vector<Permutation>& normal, const std::vector<Permutation>& complement,
         const std::vector<Permutation>& subgroup, const std::vector<Permutation>& ambient, std::size_t degree) {
        const auto c = semidirect_index_check(perm_spec(normal, degree), perm_spec(complement, degree),
                                              perm_spec(subgroup, degree), perm_spec(ambient, degree));
        return py::make_tuple(c.lhs, c.rhs, c.ok);
      },
      py::arg("normal"), py::arg("complement"), py::arg("subgroup"), py::arg("ambient"), py::arg("degree"));
  m.def("enumerate_group", [](const std::vector<Permutation>& generators, std::size_t degree) {
    const auto elems = enumerate_group(perm_spec(generators, degree));
    return std::vector<Permutation>(elems.begin(), elems.end());
  });
}
