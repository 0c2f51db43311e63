#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "primeparts/analysis.hpp"
#include "primeparts/asymptotics.hpp"
#include "primeparts/constants.hpp"
#include "primeparts/errors.hpp"
#include "primeparts/exact_counts.hpp"
#include "primeparts/primes.hpp"
#include "primeparts/saddle.hpp"

namespace py = pybind11;
using namespace primeparts;

namespace {

// Python ints are arbitrary precision; pass through decimal strings.
py::list to_pylist(const PartitionTable& table) {
  py::list out;
  const py::object as_int = py::module_::import("builtins").attr("int");
  for (const BigInt& v : table.counts()) out.append(as_int(v.get_str()));
  return out;
}

PartitionTable table_from(PartitionKind kind, const std::vector<std::string>& decimal) {
  std::vector<BigInt> counts;
  counts.reserve(decimal.size());
  for (const auto& s : decimal) counts.emplace_back(s);
  return PartitionTable(kind, std::move(counts));
}

std::vector<std::string> decimal_strings(const py::sequence& counts) {
  std::vector<std::string> out;
  out.reserve(counts.size());
  for (const auto& v : counts) out.push_back(py::str(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Partitions of integers into primes: exact counts, asymptotics, saddle point.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
  // DomainError and IndexError map onto ValueError and IndexError through
  // pybind11's std::domain_error / std::out_of_range translation.

  m.def("sieve_primes", [](std::uint64_t limit) {
    const PrimeSet p = sieve_primes(limit);
    return std::vector<std::uint64_t>(p.begin(), p.end());
  }, py::arg("limit"));

  m.def("count_distinct", [](std::size_t n_max) {
    PartitionTable t = [&] { py::gil_scoped_release release; return count_distinct(n_max); }();
    return to_pylist(t);
  }, py::arg("n_max"), "Q(n) for n = 0..n_max: partitions into distinct primes.");

  m.def("count_unrestricted", [](std::size_t n_max) {
    PartitionTable t = [&] { py::gil_scoped_release release; return count_unrestricted(n_max); }();
    return to_pylist(t);
  }, py::arg("n_max"), "P(n) for n = 0..n_max: partitions into primes, repetition allowed.");

  m.def("genfunc_coefficients", [](std::size_t n_max) {
    PartitionTable t = [&] { py::gil_scoped_release release; return genfunc_coefficients(n_max); }();
    return to_pylist(t);
  }, py::arg("n_max"));

  m.def("log_count", [](py::object value) { return log_big(BigInt(std::string(py::str(value)))); },
        py::arg("value"), "Natural log of a positive integer of any size.");

  py::class_<ConstantsBundle>(m, "Constants")
      .def_readonly("gamma", &ConstantsBundle::gamma)
      .def_readonly("alt_log_series", &ConstantsBundle::alt_log_series)
      .def_readonly("log_series", &ConstantsBundle::log_series)
      .def_readonly("F1", &ConstantsBundle::F1)
      .def_readonly("F2", &ConstantsBundle::F2)
      .def_readonly("f1", &ConstantsBundle::f1)
      .def_readonly("f2", &ConstantsBundle::f2)
      .def_readonly("bF", &ConstantsBundle::bF)
      .def_readonly("bB", &ConstantsBundle::bB)
      .def_readonly("err_bound", &ConstantsBundle::err_bound);
  m.def("constants", &constants_bundle, py::arg("series_tol") = 1e-12);

  m.def("ln_q0", &ln_q0, py::arg("n"));
  m.def("ln_p0", &ln_p0, py::arg("n"));
  m.def("ln_q_as", [](double n, const ConstantsBundle* c) { return ln_q_as(n, c ? *c : constants_bundle()); },
        py::arg("n"), py::arg("constants") = py::none());
  m.def("ln_p_as", [](double n, const ConstantsBundle* c) { return ln_p_as(n, c ? *c : constants_bundle()); },
        py::arg("n"), py::arg("constants") = py::none());

  py::class_<SaddleSolution>(m, "SaddleSolution")
      .def_readonly("energy", &SaddleSolution::energy)
      .def_readonly("beta0", &SaddleSolution::beta0)
      .def_readonly("entropy", &SaddleSolution::entropy)
      .def_readonly("s2", &SaddleSolution::s2)
      .def_readonly("ln_rho", &SaddleSolution::ln_rho)
      .def_readonly("residual", &SaddleSolution::residual)
      .def_readonly("iterations", &SaddleSolution::iterations);
  m.def("solve_saddle", [](double E, double tol) { return solve_saddle(E, tol); }, py::arg("energy"),
        py::arg("tol") = 1e-10, py::call_guard<py::gil_scoped_release>());
  m.def("ln_z_exact", [](double beta, double tol) { return ln_z_exact(beta, tol); }, py::arg("beta"),
        py::arg("tol") = 1e-12, py::call_guard<py::gil_scoped_release>());
  m.def("ln_z_asymptotic", [](double beta, const ConstantsBundle* c) {
    return ln_z_asymptotic(beta, c ? *c : constants_bundle());
  }, py::arg("beta"), py::arg("constants") = py::none());

  py::class_<ComparisonRow>(m, "ComparisonRow")
      .def_readonly("n", &ComparisonRow::n)
      .def_readonly("ln_exact", &ComparisonRow::ln_exact)
      .def_readonly("ln_q0", &ComparisonRow::ln_q0)
      .def_readonly("ln_qas", &ComparisonRow::ln_qas)
      .def_readonly("rel_diff", &ComparisonRow::rel_diff);
  py::class_<CrossingReport>(m, "Crossing")
      .def_readonly("bracket_low", &CrossingReport::bracket_low)
      .def_readonly("bracket_high", &CrossingReport::bracket_high)
      .def_readonly("sign_low", &CrossingReport::sign_low)
      .def_readonly("sign_high", &CrossingReport::sign_high);

  // counts: Q(0..n_max) (or P with kind="all") as Python ints.
  m.def("compare", [](const py::sequence& counts, std::size_t n_min, std::size_t n_max, std::size_t step,
                      const std::string& kind) {
    const PartitionTable t = table_from(parse_kind(kind), decimal_strings(counts));
    return build_comparison(t, n_min, n_max, step, constants_bundle()).rows;
  }, py::arg("counts"), py::arg("n_min"), py::arg("n_max"), py::arg("step") = 1, py::arg("kind") = "distinct");
  m.def("find_crossing", &find_crossing, py::arg("rows"));
}
