// Python bindings. Structured results cross the boundary as JSON text and are
// decoded by the pure-Python wrapper in strata/__init__.py.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "strata/checks.hpp"
#include "strata/geomkit.hpp"
#include "strata/lemmalab.hpp"
#include "strata/polycore.hpp"
#include "strata/stratlat.hpp"
#include "strata/swallowtail.hpp"

namespace py = pybind11;
using namespace strata;

namespace {

using RealRootList = std::vector<std::pair<double, int>>;
using PairList = std::vector<std::pair<double, double>>;

RootConfiguration make_config(const RealRootList& roots, const PairList& pairs) {
  RootConfiguration cfg;
  for (const auto& [y, m] : roots) cfg.real_roots.push_back({y, m});
  for (const auto& [a, b] : pairs) cfg.complex_pairs.push_back({a, b});
  cfg.validate();
  return cfg;
}

std::vector<double> to_doubles(const std::vector<Real>& v) { return {v.begin(), v.end()}; }

polycore::Polynomial parse_descending(const std::string& text) {
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    coeffs.push_back(parse_rational(text.substr(start, end - start), start));
    start = end + 1;
  }
  return polycore::Polynomial::from_descending(coeffs);
}

lemmalab::RootOrder root_order(const std::string& s) {
  if (s == "decreasing") return lemmalab::RootOrder::Decreasing;
  if (s == "increasing") return lemmalab::RootOrder::Increasing;
  throw DomainError("root_order must be 'increasing' or 'decreasing'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multiplicity-vector strata of monic real polynomials";

  static py::exception<Error> base(m, "StrataError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def("multiplicity_vector", [](const std::string& poly) {
    return polycore::multiplicity_vector(polycore::MonicPolynomial::parse(poly)).vec();
  }, py::arg("poly"), "MV of a monic polynomial given as descending coefficients, e.g. '1,0,-2,0,1'.");

  m.def("resultant", [](const std::string& p, const std::string& q) {
    return to_string(polycore::resultant(parse_descending(p), parse_descending(q)));
  }, py::arg("p"), py::arg("q"), "Exact resultant of two polynomials (descending coefficients), as a rational string.");

  m.def("validate_mv", [](const std::vector<int>& parts, int n) {
    auto s = stratlat::validate_mv(parts, n);
    return py::make_tuple(s.dimension(), s.codimension());
  }, py::arg("mv"), py::arg("n"), "Returns (dimension, codimension); raises for invalid MVs.");

  m.def("enumerate_mvs", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& s : stratlat::enumerate_mvs(n)) out.push_back(s.mv.vec());
    return out;
  }, py::arg("n"));

  m.def("stratum_count", &stratlat::stratum_count, py::arg("n"));

  m.def("in_closure", [](const std::vector<int>& v1, const std::vector<int>& v2, int n) {
    return stratlat::in_closure(stratlat::validate_mv(v1, n), stratlat::validate_mv(v2, n));
  }, py::arg("lower"), py::arg("upper"), py::arg("n"));

  m.def("poset_json", [](int n) { return stratlat::to_json(stratlat::build_poset(n)).dump(); }, py::arg("n"));
  m.def("poset_dot", [](int n) { return stratlat::to_dot(stratlat::build_poset(n)); }, py::arg("n"));

  m.def("vieta_coeffs", [](const RealRootList& roots, const PairList& pairs) {
    return to_doubles(geomkit::vieta_coeffs(make_config(roots, pairs)));
  }, py::arg("real_roots"), py::arg("complex_pairs") = PairList{});

  m.def("power_sums", [](const RealRootList& roots, const PairList& pairs, int upto) {
    return to_doubles(geomkit::power_sums(make_config(roots, pairs), upto));
  }, py::arg("real_roots"), py::arg("complex_pairs"), py::arg("upto"));

  m.def("sample_json", [](const std::vector<int>& mv, int n, std::uint64_t seed) {
    return geomkit::to_json(geomkit::sample_stratum(stratlat::validate_mv(mv, n), seed)).dump();
  }, py::arg("mv"), py::arg("n"), py::arg("seed"));

  m.def("tangent_frame_json", [](const std::string& point) {
    return geomkit::to_json(geomkit::tangent_frame(geomkit::point_from_json(nlohmann::json::parse(point)))).dump();
  }, py::arg("point"));

  m.def("graph_partial", [](const std::string& point, int k, int u) {
    return static_cast<double>(geomkit::graph_partial(geomkit::point_from_json(nlohmann::json::parse(point)).config, k, u));
  }, py::arg("point"), py::arg("k"), py::arg("u"));

  m.def("check_point_json", [](const std::string& point) {
    return checks::to_json(checks::check_point(geomkit::point_from_json(nlohmann::json::parse(point)))).dump();
  }, py::arg("point"));

  m.def("verify_lemma_json", [](const std::string& lemma, const std::vector<int>& mv, int n, std::uint64_t seed,
                                const std::string& order) {
    lemmalab::LemmaOptions opts;
    opts.order = root_order(order);
    auto t = lemmalab::trace_section(lemmalab::section_setup(stratlat::validate_mv(mv, n), seed), opts);
    return lemmalab::to_json(lemmalab::verify_lemma(lemma, t, opts), t).dump();
  }, py::arg("lemma"), py::arg("mv"), py::arg("n"), py::arg("seed"), py::arg("root_order") = "decreasing");

  m.def("swallowtail_json", [](int resolution) { return swallowtail::to_json(swallowtail::mesh(resolution)).dump(); },
        py::arg("resolution"));
}
