#ifndef WEBRANK_API_HPP
#define WEBRANK_API_HPP

#include "webrank/io_json.hpp"

namespace webrank::api {

// JSON-in / JSON-out pipelines shared by the CLI and the python module.
// Slope arguments accept either a bare series object or a report carrying
// the series under "p", so pipelines compose.

Json rank(const Json& p, const Scalar& C, int order);
Json curvature(const Json& web);
Json crossratio(const Json& web);
Json normalize(const Json& p, int order, ScalarField field);
Json build(const Json& r, const Json& s, const Json& trace, const Scalar& C, int order,
           const std::string& side);
Json example(const Scalar& a, int order);
/// {"verified": bool, "failures": [...]}.
Json verify(const Json& bundle);
Json degree3(const Scalar& a, const Scalar& b, const Scalar& u, const Scalar& v, const Scalar& w);

BiSeries slope_argument(const Json& j);

}  // namespace webrank::api

#endif
