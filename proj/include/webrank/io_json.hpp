#ifndef WEBRANK_IO_JSON_HPP
#define WEBRANK_IO_JSON_HPP

#include <json.hpp>

#include "webrank/abelian.hpp"
#include "webrank/nakai.hpp"
#include "webrank/normal_form.hpp"
#include "webrank/web.hpp"

namespace webrank {

// Stable key order and canonical fraction strings keep every report
// byte-deterministic for identical inputs.
using Json = nlohmann::ordered_json;

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json series_to_json(const UniSeries& f);
Json series_to_json(const BiSeries& f);
UniSeries uni_from_json(const Json& j);
BiSeries bi_from_json(const Json& j);

Json web_to_json(const PlanarWeb& web);
PlanarWeb web_from_json(const Json& j);

Json rank_report_to_json(const RankReport& report);
Json relation_to_json(const AbelianRelation& rel);
Json normalized_to_json(const NormalizedWeb& nw);
Json nakai_report_to_json(const NakaiReport& report);
Json bundle_to_json(const ExampleBundle& bundle);
ExampleBundle bundle_from_json(const Json& j);

}  // namespace webrank

#endif
