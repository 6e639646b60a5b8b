#include <pybind11/pybind11.h>

#include "webrank/api.hpp"

namespace py = pybind11;

namespace {

using webrank::Json;

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        webrank::fail(webrank::errc::parse_error, ex.what());
    }
}

std::string dump(const Json& j) { return j.dump(2); }

webrank::Scalar sc(const std::string& text) { return webrank::Scalar::from_string(text); }

}  // namespace

PYBIND11_MODULE(_webrank, m) {
    m.doc() = "exact-arithmetic analysis of planar webs given as power-series jets; "
              "all payloads are the JSON interchange strings used by the CLI";

    py::register_exception<webrank::WebError>(m, "WebError");

    m.def(
        "rank",
        [](const std::string& p, const std::string& C, int order) {
            return dump(webrank::api::rank(parse(p), sc(C), order));
        },
        py::arg("p"), py::arg("C") = "-1", py::arg("order") = 8,
        "formal rank report for the web (dx, dy, dy - p dx, dy - C p dx)");

    m.def(
        "curvature",
        [](const std::string& web) { return dump(webrank::api::curvature(parse(web))); },
        py::arg("web"), "Blaschke curvature of a 3-web, or of all 3-subwebs of a 4-web");

    m.def(
        "cross_ratio",
        [](const std::string& web) { return dump(webrank::api::crossratio(parse(web))); },
        py::arg("web"), "cross-ratio jet of a 4-web");

    m.def(
        "normalize",
        [](const std::string& p, int order, const std::string& field) {
            const auto mode = field == "rational" ? webrank::ScalarField::rational
                                                  : webrank::ScalarField::quadratic;
            return dump(webrank::api::normalize(parse(p), order, mode));
        },
        py::arg("p"), py::arg("order") = 6, py::arg("field") = "quadratic",
        "reduce a slope to the normal form 1 + xy(1 + h)");

    m.def(
        "build",
        [](const std::string& r, const std::string& s, const std::string& trace,
           const std::string& C, int order, const std::string& side) {
            return dump(webrank::api::build(parse(r), parse(s), parse(trace), sc(C), order, side));
        },
        py::arg("r"), py::arg("s"), py::arg("trace"), py::arg("C") = "-1", py::arg("order") = 6,
        py::arg("side") = "auto", "solve for a rank-1 slope from (r, s, trace)");

    m.def(
        "example",
        [](const std::string& a, int order) {
            return dump(webrank::api::example(sc(a), order));
        },
        py::arg("a") = "1", py::arg("order") = 8,
        "harmonic rank-1 web bundle with its exactness certificates");

    m.def(
        "verify",
        [](const std::string& bundle) { return dump(webrank::api::verify(parse(bundle))); },
        py::arg("bundle"), "re-check the certificates of a stored bundle");

    m.def(
        "degree3",
        [](const std::string& a, const std::string& b, const std::string& u, const std::string& v,
           const std::string& w) {
            return dump(webrank::api::degree3(sc(a), sc(b), sc(u), sc(v), sc(w)));
        },
        py::arg("a"), py::arg("b"), py::arg("u"), py::arg("v"), py::arg("w"),
        "degree-3 coefficient matrix in (r0, s0) for a strict normal form");

#ifdef WEBRANK_VERSION_INFO
    m.attr("__version__") = WEBRANK_VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
