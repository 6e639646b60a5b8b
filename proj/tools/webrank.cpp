#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "webrank/api.hpp"

namespace {

using webrank::Json;

Json read_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream in(path);
        if (!in) webrank::fail(webrank::errc::parse_error, "cannot open '" + path + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        webrank::fail(webrank::errc::parse_error, ex.what());
    }
}

void write_json(const Json& j, const std::string& path) {
    const std::string text = j.dump(2) + "\n";
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) webrank::fail(webrank::errc::parse_error, "cannot write '" + path + "'");
    out << text;
}

webrank::Scalar parse_scalar_flag(const std::string& text) {
    return webrank::Scalar::from_string(text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic analysis of planar 3- and 4-webs given as jets"};
    app.require_subcommand(1);

    std::string p_path = "-", web_path = "-", r_path, s_path, t_path, bundle_path;
    std::string c_text = "-1", a_text = "1", field = "quadratic", side = "auto", out;
    int rank_order = 8, norm_order = 6, build_order = 6, example_order = 8;

    auto* rank = app.add_subcommand("rank", "formal rank of the 4-web (dx, dy, dy-p dx, dy-Cp dx)");
    rank->add_option("--p", p_path, "slope series JSON (file or -)");
    rank->add_option("--C", c_text, "cross-ratio constant (default -1)");
    rank->add_option("--order,-n", rank_order, "truncation order (default 8)");
    rank->add_option("--out,-o", out, "output path (default stdout)");

    auto* curv = app.add_subcommand("curvature", "Blaschke curvature of a 3-web or all 3-subwebs");
    curv->add_option("--web", web_path, "web JSON (file or -)");
    curv->add_option("--out,-o", out, "output path");

    auto* cross = app.add_subcommand("crossratio", "cross-ratio jet of a 4-web");
    cross->add_option("--web", web_path, "web JSON (file or -)");
    cross->add_option("--out,-o", out, "output path");

    auto* norm = app.add_subcommand("normalize", "reduce a slope to the normal form 1 + xy(1+h)");
    norm->add_option("--p", p_path, "slope series JSON (file or -)");
    norm->add_option("--order,-n", norm_order, "truncation order (default 6)");
    norm->add_option("--field", field, "rational | quadratic (default quadratic)");
    norm->add_option("--out,-o", out, "output path");

    auto* build = app.add_subcommand("build", "solve for a rank-1 slope from (r, s, trace)");
    build->add_option("--r", r_path, "r(x) series JSON")->required();
    build->add_option("--s", s_path, "s(y) series JSON")->required();
    build->add_option("--trace", t_path, "trace series JSON")->required();
    build->add_option("--C", c_text, "cross-ratio constant (default -1)");
    build->add_option("--order,-n", build_order, "truncation order (default 6)");
    build->add_option("--side", side, "march direction: x | y | auto");
    build->add_option("--out,-o", out, "output path");

    auto* example = app.add_subcommand("example", "harmonic rank-1 web bundle for a parameter a");
    example->add_option("--a", a_text, "parameter a != 0 (default 1)");
    example->add_option("--order,-n", example_order, "truncation order (default 8)");
    example->add_option("--out,-o", out, "output path");

    auto* verify = app.add_subcommand("verify", "re-check the certificates of a stored bundle");
    verify->add_option("--bundle", bundle_path, "bundle JSON")->required();
    verify->add_option("--out,-o", out, "output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (rank->parsed()) {
            if (rank_order < 5)
                std::cerr << "webrank: warning: rank below order 5 rarely stabilizes\n";
            Json report = webrank::api::rank(read_json(p_path), parse_scalar_flag(c_text),
                                             rank_order);
            if (!report.at("stabilized").get<bool>())
                std::cerr << "webrank: warning: StabilizationNotReached\n";
            write_json(report, out);
            return 0;
        }
        if (curv->parsed()) {
            write_json(webrank::api::curvature(read_json(web_path)), out);
            return 0;
        }
        if (cross->parsed()) {
            write_json(webrank::api::crossratio(read_json(web_path)), out);
            return 0;
        }
        if (norm->parsed()) {
            if (field != "rational" && field != "quadratic")
                webrank::fail(webrank::errc::invalid_parameter,
                              "--field must be rational or quadratic");
            const auto mode = field == "rational" ? webrank::ScalarField::rational
                                                  : webrank::ScalarField::quadratic;
            write_json(webrank::api::normalize(read_json(p_path), norm_order, mode), out);
            return 0;
        }
        if (build->parsed()) {
            write_json(webrank::api::build(read_json(r_path), read_json(s_path),
                                           read_json(t_path), parse_scalar_flag(c_text),
                                           build_order, side),
                       out);
            return 0;
        }
        if (example->parsed()) {
            write_json(webrank::api::example(parse_scalar_flag(a_text), example_order), out);
            return 0;
        }
        if (verify->parsed()) {
            Json result = webrank::api::verify(read_json(bundle_path));
            write_json(result, out);
            return result.at("verified").get<bool>() ? 0 : 3;
        }
    } catch (const webrank::WebError& ex) {
        Json err = Json::object();
        err["error"] = webrank::errc_name(ex.code());
        err["detail"] = ex.detail();
        std::cout << err.dump(2) << "\n";
        return webrank::errc_is_degeneracy(ex.code()) ? 2 : 1;
    } catch (const std::exception& ex) {
        Json err = Json::object();
        err["error"] = "InternalError";
        err["detail"] = ex.what();
        std::cout << err.dump(2) << "\n";
        return 1;
    }
    return 1;
}
