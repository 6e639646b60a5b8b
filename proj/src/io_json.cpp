#include "webrank/io_json.hpp"

namespace webrank {

namespace {

std::string mpq_str(const mpq_class& q) { return q.get_str(); }

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        fail(errc::parse_error, std::string("missing key '") + key + "'");
    return j.at(key);
}

int need_int(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_number_integer()) fail(errc::parse_error, std::string("key '") + key + "' must be an integer");
    return v.get<int>();
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
    if (s.is_rational()) return mpq_str(s.rat_a());
    Json j = Json::object();
    j["a"] = mpq_str(s.rat_a());
    j["b"] = mpq_str(s.rat_b());
    j["c"] = mpq_str(s.ext_c());
    return j;
}

Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) return Scalar::from_string(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
    if (j.is_object()) {
        const Scalar a = Scalar::from_string(need(j, "a").get<std::string>());
        const Scalar b = Scalar::from_string(need(j, "b").get<std::string>());
        const Scalar c = Scalar::from_string(need(j, "c").get<std::string>());
        if (b.as_rational() == 0) return a;
        return Scalar::quadratic(a.as_rational(), b.as_rational(), c.as_rational());
    }
    fail(errc::parse_error, "scalar must be a fraction string or {a, b, c}");
}

Json series_to_json(const UniSeries& f) {
    Json j = Json::object();
    j["vars"] = Json::array({f.var()});
    j["order"] = f.order();
    Json terms = Json::array();
    for (int k = 0; k <= f.order(); ++k) {
        if (f.coeff(k).is_zero()) continue;
        Json term = Json::object();
        term["m"] = Json::array({k});
        term["c"] = scalar_to_json(f.coeff(k));
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json series_to_json(const BiSeries& f) {
    Json j = Json::object();
    j["vars"] = Json::array({f.var_x(), f.var_y()});
    j["order"] = f.order();
    Json terms = Json::array();
    for (int d = 0; d <= f.order(); ++d)
        for (int i = d; i >= 0; --i) {
            const int jj = d - i;
            if (f.coeff(i, jj).is_zero()) continue;
            Json term = Json::object();
            term["m"] = Json::array({i, jj});
            term["c"] = scalar_to_json(f.coeff(i, jj));
            terms.push_back(std::move(term));
        }
    j["terms"] = std::move(terms);
    return j;
}

UniSeries uni_from_json(const Json& j) {
    const Json& vars = need(j, "vars");
    if (!vars.is_array() || vars.size() != 1)
        fail(errc::parse_error, "expected a univariate series");
    UniSeries f(vars[0].get<std::string>(), need_int(j, "order"));
    for (const Json& term : need(j, "terms")) {
        const Json& m = need(term, "m");
        if (!m.is_array() || m.size() != 1)
            fail(errc::parse_error, "univariate term monomial must be [i]");
        const int k = m[0].get<int>();
        if (k < 0 || k > f.order()) fail(errc::parse_error, "term degree outside order");
        f.set_coeff(k, scalar_from_json(need(term, "c")));
    }
    return f;
}

BiSeries bi_from_json(const Json& j) {
    const Json& vars = need(j, "vars");
    if (!vars.is_array() || vars.size() != 2)
        fail(errc::parse_error, "expected a bivariate series");
    BiSeries f(vars[0].get<std::string>(), vars[1].get<std::string>(), need_int(j, "order"));
    for (const Json& term : need(j, "terms")) {
        const Json& m = need(term, "m");
        if (!m.is_array() || m.size() != 2)
            fail(errc::parse_error, "bivariate term monomial must be [i, j]");
        const int a = m[0].get<int>(), b = m[1].get<int>();
        if (a < 0 || b < 0 || a + b > f.order())
            fail(errc::parse_error, "term degree outside order");
        f.set_coeff(a, b, scalar_from_json(need(term, "c")));
    }
    return f;
}

Json web_to_json(const PlanarWeb& web) {
    Json j = Json::object();
    j["order"] = web.order();
    Json fols = Json::array();
    for (int i = 0; i < web.size(); ++i) {
        Json f = Json::object();
        f["a"] = series_to_json(web.foliation(i).a());
        f["b"] = series_to_json(web.foliation(i).b());
        fols.push_back(std::move(f));
    }
    j["foliations"] = std::move(fols);
    return j;
}

PlanarWeb web_from_json(const Json& j) {
    std::vector<Foliation> fols;
    for (const Json& entry : need(j, "foliations")) {
        if (entry.contains("first_integral")) {
            fols.push_back(foliation_from_first_integral(bi_from_json(entry.at("first_integral"))));
        } else if (entry.contains("slope")) {
            fols.push_back(foliation_from_slope(bi_from_json(entry.at("slope"))));
        } else if (entry.contains("a") && entry.contains("b")) {
            fols.emplace_back(bi_from_json(entry.at("a")), bi_from_json(entry.at("b")));
        } else {
            fail(errc::parse_error, "foliation entry needs a/b, first_integral or slope");
        }
    }
    PlanarWeb web(std::move(fols));
    if (j.contains("order")) {
        const int n = j.at("order").get<int>();
        if (n < web.order()) {
            std::vector<Foliation> cut;
            for (int i = 0; i < web.size(); ++i)
                cut.emplace_back(web.foliation(i).a().truncated(n),
                                 web.foliation(i).b().truncated(n));
            return PlanarWeb(std::move(cut));
        }
    }
    return web;
}

Json rank_report_to_json(const RankReport& report) {
    Json j = Json::object();
    j["order"] = report.order;
    j["dims"] = report.dims;
    j["rank"] = report.rank;
    j["stabilized"] = report.stabilized;
    Json basis = Json::array();
    for (const auto& [r, s] : report.basis) {
        Json pair = Json::object();
        pair["r"] = series_to_json(r);
        pair["s"] = series_to_json(s);
        basis.push_back(std::move(pair));
    }
    j["basis"] = std::move(basis);
    return j;
}

Json relation_to_json(const AbelianRelation& rel) {
    Json j = Json::object();
    j["r"] = series_to_json(rel.r);
    j["s"] = series_to_json(rel.s);
    j["c"] = series_to_json(rel.c);
    j["e"] = series_to_json(rel.e);
    j["C"] = scalar_to_json(rel.C);
    Json checks = Json::object();
    checks["sum"] = rel.check_sum;
    checks["collinear"] = rel.check_collinear;
    checks["closed_c"] = rel.check_closed_c;
    checks["closed_e"] = rel.check_closed_e;
    checks["residual_order"] = rel.residual_order;
    j["checks"] = std::move(checks);
    return j;
}

Json normalized_to_json(const NormalizedWeb& nw) {
    Json j = Json::object();
    j["h"] = series_to_json(nw.h);
    j["c"] = scalar_to_json(nw.c);
    j["X"] = series_to_json(nw.X);
    j["Y"] = series_to_json(nw.Y);
    j["mu"] = scalar_to_json(nw.mu);
    j["strict"] = nw.achieved_strict;
    j["swapped"] = nw.swapped;
    return j;
}

Json nakai_report_to_json(const NakaiReport& report) {
    Json j = Json::object();
    j["K0"] = scalar_to_json(report.K0);
    j["nakai"] = report.nakai;
    j["C"] = scalar_to_json(report.C);
    j["hexagonal"] = report.hexagonal;
    return j;
}

Json bundle_to_json(const ExampleBundle& bundle) {
    Json j = Json::object();
    j["a"] = scalar_to_json(bundle.a);
    j["order"] = bundle.order;
    j["u"] = series_to_json(bundle.u);
    j["f"] = series_to_json(bundle.f);
    j["g"] = series_to_json(bundle.g);
    j["p"] = series_to_json(bundle.p);
    j["origin_curvature"] = scalar_to_json(bundle.origin_curvature);
    j["relation"] = relation_to_json(bundle.relation);
    Json certs = Json::object();
    for (const char* name : kBundleCertificates) {
        const auto it = bundle.certificates.find(name);
        if (it == bundle.certificates.end()) continue;
        Json c = Json::object();
        c["pass"] = it->second.pass;
        c["residual_order"] = it->second.residual_order;
        certs[name] = std::move(c);
    }
    j["certificates"] = std::move(certs);
    return j;
}

ExampleBundle bundle_from_json(const Json& j) {
    ExampleBundle bundle{scalar_from_json(need(j, "a")),
                         need_int(j, "order"),
                         uni_from_json(need(j, "u")),
                         bi_from_json(need(j, "f")),
                         bi_from_json(need(j, "g")),
                         bi_from_json(need(j, "p")),
                         AbelianRelation{uni_from_json(need(need(j, "relation"), "r")),
                                         uni_from_json(need(need(j, "relation"), "s")),
                                         bi_from_json(need(need(j, "relation"), "c")),
                                         bi_from_json(need(need(j, "relation"), "e")),
                                         scalar_from_json(need(need(j, "relation"), "C"))},
                         scalar_from_json(need(j, "origin_curvature")),
                         {}};
    for (const char* name : kBundleCertificates) {
        const Json& certs = need(j, "certificates");
        if (!certs.contains(name)) fail(errc::parse_error, std::string("missing certificate ") + name);
        bundle.certificates[name] = {certs.at(name).at("pass").get<bool>(),
                                     certs.at(name).at("residual_order").get<int>()};
    }
    return bundle;
}

}  // namespace webrank
