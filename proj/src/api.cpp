#include "webrank/api.hpp"

#include <algorithm>

namespace webrank::api {

BiSeries slope_argument(const Json& j) {
    if (j.is_object() && j.contains("vars")) return bi_from_json(j);
    if (j.is_object() && j.contains("p")) return bi_from_json(j.at("p"));
    fail(errc::parse_error, "expected a bivariate series or an object with key 'p'");
}

Json rank(const Json& p_json, const Scalar& C, int order) {
    const BiSeries p = slope_argument(p_json);
    return rank_report_to_json(rank_report(p, C, order));
}

Json curvature(const Json& web_json) {
    const PlanarWeb web = web_from_json(web_json);
    Json j = Json::object();
    if (web.size() == 3) {
        const BiSeries k = blaschke_curvature(web);
        j["K"] = series_to_json(k);
        j["K0"] = scalar_to_json(k.constant_term());
        j["hexagonal"] = k.is_zero();
        return j;
    }
    const std::array<std::array<int, 3>, 4> subs = {{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};
    Json list = Json::array();
    std::vector<BiSeries> jets;
    for (const auto& idx : subs) {
        const BiSeries k = blaschke_curvature(web.subweb(idx[0], idx[1], idx[2]));
        Json entry = Json::object();
        entry["foliations"] = idx;
        entry["K"] = series_to_json(k);
        entry["K0"] = scalar_to_json(k.constant_term());
        entry["hexagonal"] = k.is_zero();
        list.push_back(std::move(entry));
        jets.push_back(k);
    }
    bool equal = true;
    for (size_t i = 1; i < jets.size(); ++i)
        equal = equal && equal_up_to(jets[0], jets[i], std::min(jets[0].order(), jets[i].order()));
    j["subwebs"] = std::move(list);
    j["equal_jets"] = equal;
    return j;
}

Json crossratio(const Json& web_json) {
    const BiSeries cr = cross_ratio(web_from_json(web_json));
    Json j = Json::object();
    j["cross_ratio"] = series_to_json(cr);
    j["constant"] = cr.is_constant();
    if (cr.is_constant()) j["C"] = scalar_to_json(cr.constant_term());
    return j;
}

Json normalize(const Json& p_json, int order, ScalarField field) {
    const NormalizedWeb nw = webrank::normalize(slope_argument(p_json), order, field);
    Json j = normalized_to_json(nw);
    j["p_normal"] = series_to_json(nw.p_normal);
    if (nw.achieved_strict && nw.h.order() >= 1) {
        const auto [a, b] = invariants_3jet(nw);
        j["jet3"] = Json::array({scalar_to_json(a), scalar_to_json(b)});
    }
    return j;
}

Json build(const Json& r_json, const Json& s_json, const Json& trace_json, const Scalar& C,
           int order, const std::string& side) {
    BuildSpec spec{uni_from_json(r_json), uni_from_json(s_json),   uni_from_json(trace_json),
                   BuildSpec::Side::x_march, C, order};
    if (side == "x") {
        spec.side = BuildSpec::Side::x_march;
    } else if (side == "y") {
        spec.side = BuildSpec::Side::y_march;
    } else if (side == "auto") {
        if (!spec.r.constant_term().is_zero())
            spec.side = BuildSpec::Side::x_march;
        else if (!spec.s.constant_term().is_zero())
            spec.side = BuildSpec::Side::y_march;
        else
            fail(errc::no_unit_direction, "r(0) = s(0) = 0 admits no marching direction");
    } else {
        fail(errc::invalid_parameter, "side must be x, y or auto");
    }
    const BiSeries p = solve_p(spec);
    Json j = Json::object();
    j["p"] = series_to_json(p);
    j["C"] = scalar_to_json(spec.C);
    j["order"] = order;
    j["check"] = nakai_report_to_json(check_nakai(p, spec.C, order));
    return j;
}

Json example(const Scalar& a, int order) { return bundle_to_json(harmonic_example(a, order)); }

Json verify(const Json& bundle_json) {
    const ExampleBundle stored = bundle_from_json(bundle_json);
    const ExampleBundle rebuilt = harmonic_example(stored.a, stored.order);

    Json failures = Json::array();
    auto check = [&](bool ok, const char* what) {
        if (!ok) failures.push_back(what);
    };
    check(stored.u == rebuilt.u, "u differs from the rebuilt series");
    check(stored.f == rebuilt.f, "f differs from the rebuilt series");
    check(stored.g == rebuilt.g, "g differs from the rebuilt series");
    check(stored.p == rebuilt.p, "p differs from the rebuilt slope");
    check(stored.origin_curvature == rebuilt.origin_curvature, "origin curvature differs");
    check(stored.relation.c == rebuilt.relation.c, "relation coefficient c differs");
    check(stored.relation.e == rebuilt.relation.e, "relation coefficient e differs");
    for (const char* name : kBundleCertificates) {
        const auto it = stored.certificates.find(name);
        check(it != stored.certificates.end() && it->second.pass &&
                  rebuilt.certificates.at(name).pass,
              name);
    }

    Json j = Json::object();
    j["verified"] = failures.empty();
    j["failures"] = std::move(failures);
    return j;
}

Json degree3(const Scalar& a, const Scalar& b, const Scalar& u, const Scalar& v, const Scalar& w) {
    const Degree3Report report = degree3_analysis(a, b, u, v, w);
    Json j = Json::object();
    j["matrix"] = Json::array(
        {Json::array({scalar_to_json(report.m.at(0, 0)), scalar_to_json(report.m.at(0, 1))}),
         Json::array({scalar_to_json(report.m.at(1, 0)), scalar_to_json(report.m.at(1, 1))})});
    j["det"] = scalar_to_json(report.det);
    j["generic"] = report.generic;
    return j;
}

}  // namespace webrank::api
