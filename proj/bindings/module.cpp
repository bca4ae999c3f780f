#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "indrate/codes.hpp"
#include "indrate/envelope.hpp"
#include "indrate/parallel.hpp"
#include "indrate/search.hpp"

namespace py = pybind11;
using namespace indrate;

namespace {

Tableau tableau_from_text(const std::string& code) {
  return build_tableau(parse_code(code));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact induced-rate engine for stabilizer channel transforms";

  py::class_<PauliDist>(m, "PauliDist")
      .def(py::init(&make_dist), py::arg("p_i"), py::arg("p_x"), py::arg("p_y"),
           py::arg("p_z"))
      .def_readonly("p_i", &PauliDist::p_i)
      .def_readonly("p_x", &PauliDist::p_x)
      .def_readonly("p_y", &PauliDist::p_y)
      .def_readonly("p_z", &PauliDist::p_z)
      .def("__repr__", [](const PauliDist& d) {
        std::ostringstream ss;
        ss << "PauliDist(p_i=" << d.p_i << ", p_x=" << d.p_x << ", p_y=" << d.p_y
           << ", p_z=" << d.p_z << ")";
        return ss.str();
      });

  py::class_<EntropySummary>(m, "EntropySummary")
      .def_readonly("h_joint", &EntropySummary::h_joint)
      .def_readonly("h_syndrome", &EntropySummary::h_syndrome)
      .def_readonly("h_conditional", &EntropySummary::h_conditional)
      .def_readonly("rate", &EntropySummary::rate)
      .def("__repr__", [](const EntropySummary& s) {
        std::ostringstream ss;
        ss << "EntropySummary(h_conditional=" << s.h_conditional << ", rate=" << s.rate
           << ")";
        return ss.str();
      });

  py::class_<InducedJoint>(m, "InducedJoint")
      .def_readonly("n", &InducedJoint::n)
      .def_readonly("k", &InducedJoint::k)
      .def_readonly("r", &InducedJoint::r)
      .def_readonly("table", &InducedJoint::table)
      .def("index", &InducedJoint::index, py::arg("a"), py::arg("b"), py::arg("s"));

  py::class_<ThresholdResult>(m, "ThresholdResult")
      .def_readonly("n", &ThresholdResult::n)
      .def_readonly("k", &ThresholdResult::k)
      .def_readonly("p_star", &ThresholdResult::p_star)
      .def_readonly("bracket", &ThresholdResult::bracket);

  m.def("skewed_dist", &skewed_dist, py::arg("q_x"), py::arg("q_z"),
        "Independent X/Z flip channel: error X^{U_X} Z^{U_Z}");
  m.def("dist_from_total_p", &dist_from_total_p, py::arg("p"), py::arg("eta"),
        "Skewed channel from p = 1 - p_I at bias eta = q_X/q_Z");
  m.def(
      "skewed_from_total_error",
      [](double p, double eta) {
        SkewedParams q = skewed_from_total_error(p, eta);
        return py::make_tuple(q.q_x, q.q_z);
      },
      py::arg("p"), py::arg("eta"), "(q_X, q_Z) for p = 1 - p_I at bias eta");
  m.def("hashing_bound", &hashing_bound, py::arg("dist"),
        "1 - H(p) in bits per channel use");
  m.def(
      "pattern_prob",
      [](const PauliDist& dist, const std::string& pattern) {
        return pattern_prob(dist, pauli_from_string(pattern));
      },
      py::arg("dist"), py::arg("pattern"),
      "Probability of an n-qubit error pattern like \"XIZ\"");

  m.def(
      "code_dimensions",
      [](const std::string& code) {
        Tableau tab = tableau_from_text(code);
        return py::make_tuple(tab.n, tab.k);
      },
      py::arg("code"), "(n, k) of a validated code string");
  m.def(
      "canonical_code",
      [](const std::string& code) { return canonical_key(parse_code(code)); },
      py::arg("code"), "Row-reduced canonical encoding of the code's row space");

  m.def(
      "evaluate_code",
      [](const std::string& code, const PauliDist& dist, unsigned threads) {
        return evaluate(tableau_from_text(code), dist, {}, threads);
      },
      py::arg("code"), py::arg("dist"), py::arg("threads") = 1,
      "Exact H(L|S) and induced rate of a code on a channel");
  m.def(
      "induced_joint",
      [](const std::string& code, const PauliDist& dist) {
        return induced_joint_dense(tableau_from_text(code), dist);
      },
      py::arg("code"), py::arg("dist"),
      "Dense joint pmf over (a, b, s), index = a | b<<k | s<<2k");

  m.def("free_bit_count",
        [](std::uint32_t n, std::uint32_t k, std::uint32_t r_x) {
          return free_bit_count(StandardFormShape{n, k, r_x});
        },
        py::arg("n"), py::arg("k"), py::arg("r_x"),
        "Free binary entries of the standard form before commutation");
  m.def(
      "sweep_codes",
      [](std::uint32_t n_min, std::uint32_t n_max, std::uint64_t budget,
         std::uint64_t seed, std::uint32_t sample_count) {
        SearchConfig config{n_min, n_max, budget, seed, sample_count};
        std::vector<std::string> out;
        sweep(config, [&](const StandardFormShape&, const CheckRows& rows) {
          out.push_back(render_code(rows));
        });
        return out;
      },
      py::arg("n_min"), py::arg("n_max"), py::arg("budget") = 1'000'000,
      py::arg("seed") = 0, py::arg("sample_count") = 10'000,
      "All candidate codes of the standard-form sweep, as strings");

  m.def(
      "improvement_threshold",
      [](const std::string& code, double eta, double p_lo, double p_hi, double tol,
         unsigned threads) {
        return improvement_threshold(parse_code(code), eta, p_lo, p_hi, tol, {},
                                     threads);
      },
      py::arg("code"), py::arg("eta"), py::arg("p_lo"), py::arg("p_hi"),
      py::arg("tol") = 1e-9, py::arg("threads") = 1,
      "Smallest p at which the code's induced rate exceeds the baseline");

  m.attr("__version__") = "0.1.0";
  m.attr("max_qubits") = kMaxQubits;
}
