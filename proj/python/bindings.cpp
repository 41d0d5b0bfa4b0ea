#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "circtrans/census.hpp"
#include "circtrans/constructive_solver.hpp"
#include "circtrans/exact_oracle.hpp"

namespace py = pybind11;
using namespace circtrans;

namespace {

using Move = std::tuple<int, int, int>;

std::vector<Move> to_tuples(const std::vector<Transposition>& moves) {
  std::vector<Move> out;
  for (const auto& m : moves) out.emplace_back(m.i, m.j, m.k);
  return out;
}

std::vector<Transposition> from_tuples(const std::vector<Move>& moves) {
  std::vector<Transposition> out;
  for (const auto& [i, j, k] : moves) out.push_back({i, j, k});
  return out;
}

CircularBinaryString str(const std::string& text) { return parse_input(text); }

}  // namespace

PYBIND11_MODULE(_circtrans, m) {
  m.doc() = "Transposition distance on circular binary strings";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<InvalidInputError>(m, "InvalidInputError", base.ptr());
  py::register_exception<IncompatiblePairError>(m, "IncompatiblePairError", base.ptr());
  py::register_exception<ConstructionError>(m, "ConstructionError", base.ptr());

  m.def("canonicalize", [](const std::string& text) { return str(text).bits(); }, py::arg("text"),
        "Least rotation of a bit string or p: partition.");
  m.def("partition", [](const std::string& text) {
    const auto p = to_partition(str(text));
    return py::make_tuple(p.weights(), p.complemented());
  }, py::arg("text"), "(weights, complemented) of a string.");
  m.def("apply", [](const std::string& word, Move t) {
    return apply_to_word(word, {std::get<0>(t), std::get<1>(t), std::get<2>(t)});
  }, py::arg("word"), py::arg("move"), "Apply one (i, j, k) move to a concrete word.");
  m.def("neighbors", [](const std::string& text) {
    std::vector<std::string> out;
    for (const auto& s : neighbors(str(text))) out.push_back(s.bits());
    return out;
  }, py::arg("text"));

  m.def("f1", [](const std::vector<int>& w, int r) { return f1(w, r); }, py::arg("weights"), py::arg("r"));
  m.def("f2", [](const std::vector<int>& w, int r) { return f2(w, r); }, py::arg("weights"), py::arg("r"));
  m.def("lower_bound", [](const std::vector<int>& s, const std::vector<int>& t) { return lower_bound(s, t); },
        py::arg("s"), py::arg("t"));
  m.def("diameter_predicate",
        [](const std::vector<int>& s, const std::vector<int>& t) { return diameter_predicate(s, t); },
        py::arg("s"), py::arg("t"));
  m.def("dominance_orientation", [](const std::vector<int>& s, const std::vector<int>& t) -> py::object {
    const auto o = dominance_orientation(CircularPartition(s), CircularPartition(t));
    if (!o) return py::none();
    return py::str(*o == Orientation::as_given ? "as_given" : "swapped");
  }, py::arg("s"), py::arg("t"));

  m.def("exact_distance", [](const std::string& s, const std::string& t) { return exact_distance(str(s), str(t)); },
        py::arg("s"), py::arg("t"));
  m.def("exact_path", [](const std::string& s, const std::string& t) {
    return to_tuples(exact_path(str(s), str(t)).moves);
  }, py::arg("s"), py::arg("t"), "Shortest move list against the evolving canonical start word.");
  m.def("greedy_upper_bound", [](const std::string& s, const std::string& t) {
    return to_tuples(greedy_upper_bound(str(s), str(t)).moves);
  }, py::arg("s"), py::arg("t"));
  m.def("dominance_solve", [](const std::string& s, const std::string& t) {
    return to_tuples(dominance_solve(str(s), str(t)).moves);
  }, py::arg("s"), py::arg("t"));
  m.def("verify", [](const std::string& s, const std::vector<Move>& moves, const std::string& t) {
    return replay({str(s), from_tuples(moves), str(t)}).ok;
  }, py::arg("s"), py::arg("moves"), py::arg("t"), "Replay moves from the canonical form of s.");

  m.def("analyze", [](const std::string& s, const std::string& t, bool exact) {
    const BoundReport r = analyze_pair(str(s), str(t), exact);
    py::dict d;
    d["k"] = r.k;
    d["lower"] = r.lower;
    d["upper"] = r.upper;
    d["upper_source"] = std::string(to_string(r.upper_source));
    d["exact"] = r.exact ? py::object(py::int_(*r.exact)) : py::none();
    d["is_diameter"] = r.is_diameter;
    return d;
  }, py::arg("s"), py::arg("t"), py::arg("exact") = false);

  m.def("census", [](int n_max, bool parallel) {
    std::vector<CensusRecord> records;
    {
      py::gil_scoped_release release;
      records = run_census(n_max, parallel);
    }
    py::list out;
    for (const auto& r : records) {
      py::dict d;
      d["n"] = r.n;
      d["ones"] = r.ones;
      d["classes"] = r.classes;
      d["pairs"] = r.pairs;
      d["diameter"] = r.diameter;
      d["diameter_pairs"] = r.diameter_pairs;
      d["clean"] = r.clean();
      out.append(d);
    }
    return out;
  }, py::arg("n_max"), py::arg("parallel") = false);
  m.def("generate", &generate_classes, py::arg("n"), py::arg("ones"), py::arg("count"), py::arg("seed") = 1);
}
