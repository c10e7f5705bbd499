// Python module exposing the main operations: dimension scans, the F~
// polynomials, E-tables, orbit partitions, and the closed-form checks.
// Scalars cross the boundary as literal strings ("zeta(3)^2", "-1/2") and
// polynomials as their printed form; exactness stays on the C++ side.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "nichols/closed_forms.hpp"
#include "nichols/result_cache.hpp"
#include "nichols/scalar_literal.hpp"
#include "nichols/symmetrizer.hpp"

namespace py = pybind11;
using namespace nichols;

namespace {

ParamPoint point_of(const std::string& a, const std::string& b,
                    const std::string& e) {
  return ParamPoint(parse_scalar_literal(a), parse_scalar_literal(b),
                    parse_scalar_literal(e));
}

py::dict profile_dict(const GradedProfile& prof) {
  py::dict d;
  d["point"] = prof.point;
  d["ranks"] = prof.ranks;
  d["cap"] = prof.cap;
  d["status"] = prof.status == GradedProfile::Status::terminated
                    ? "terminated"
                    : "cap-exceeded";
  d["total"] = prof.total ? py::cast(*prof.total) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_nichols, m) {
  m.doc() = "exact graded dimensions of the Nichols algebra of V_abe";

  m.def(
      "dimension",
      [](const std::string& a, const std::string& b, const std::string& e,
         std::size_t cap, unsigned jobs) {
        return profile_dict(nichols_dimension(point_of(a, b, e), cap, jobs));
      },
      py::arg("a"), py::arg("b"), py::arg("e"), py::arg("cap") = 24,
      py::arg("jobs") = 1,
      "Per-degree ranks and, when the scan terminates, the total dimension.");

  m.def(
      "graded_dim",
      [](std::size_t n, const std::string& a, const std::string& b,
         const std::string& e, unsigned jobs) {
        return graded_dim(n, point_of(a, b, e), jobs);
      },
      py::arg("n"), py::arg("a"), py::arg("b"), py::arg("e"),
      py::arg("jobs") = 1, "dim B^n(V) at one parameter point.");

  m.def(
      "tilde_f",
      [](const std::string& x, const std::string& y, bool set_e_to_one) {
        SymmetrizerEngine<MultiPoly> engine(symbolic_braiding());
        MultiPoly f = tilde_f(Word::parse(x), Word::parse(y), engine);
        if (set_e_to_one) f = f.with_e_set_to_one();
        return f.str();
      },
      py::arg("x"), py::arg("y"), py::arg("set_e_to_one") = false,
      "The coefficient polynomial F~(x|y) as a string in a, b, e.");

  m.def(
      "tilde_f_k",
      [](std::size_t n, std::uint32_t k) { return tilde_f_k(n, k).str(); },
      py::arg("n"), py::arg("k"),
      "The b^k coefficient of F~(1^n|1^n) at e = 1, as a string in a.");

  m.def(
      "ek_table",
      [](std::size_t n, long k_max) {
        std::map<std::pair<unsigned long, unsigned long>, unsigned long long>
            counts = ek_table(n, k_max).counts;
        return counts;  // {(k, s): count}
      },
      py::arg("n"), py::arg("k_max") = -1,
      "Counts of subgroup elements by (t-length, inversion count).");

  m.def(
      "orbit_partition",
      [](std::size_t n) {
        py::list out;
        for (const auto& o : orbit_partition(n)) {
          py::dict d;
          d["rep"] = o.rep.str();
          d["size"] = o.size;
          d["label"] = o.label;
          out.append(d);
        }
        return out;
      },
      py::arg("n"), "All orbits of {1,2}^n with sizes and theorem forms.");

  m.def(
      "verify",
      [](std::size_t n_max, std::size_t degree_cap, unsigned jobs) {
        py::list out;
        for (const auto& r : verify_all(n_max, degree_cap, jobs)) {
          py::dict d;
          d["name"] = r.name;
          d["range"] = r.range;
          d["pass"] = r.pass;
          d["advisory"] = r.advisory;
          d["detail"] = r.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("n_max") = 9, py::arg("degree_cap") = 14, py::arg("jobs") = 1,
      "Run every closed form against brute force; one report per statement.");

  m.def(
      "cf_E", &cf_E, py::arg("k"), py::arg("s"), py::arg("n"),
      "Closed form for E_{k,s}^n (k <= 5).");
  m.def(
      "cf_tilde_fk",
      [](std::uint32_t k, std::size_t n) { return cf_tilde_fk(k, n).str(); },
      py::arg("k"), py::arg("n"),
      "Closed form for the b^k coefficient of F~(1^n|1^n) at e = 1.");
  m.def(
      "cf_orbit_size",
      [](std::size_t n, std::size_t k, bool odd) {
        return cf_orbit_size(n, k, odd ? WordParity::odd : WordParity::even);
      },
      py::arg("n"), py::arg("k"), py::arg("odd") = false,
      "Binomial closed form for one orbit size.");

  m.def(
      "canonical_scalar",
      [](const std::string& lit) {
        return canonical_scalar(parse_scalar_literal(lit));
      },
      py::arg("literal"),
      "Canonical spelling of a scalar literal (cache-key form).");
}
