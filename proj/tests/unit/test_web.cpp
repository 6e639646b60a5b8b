#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "webrank/nakai.hpp"
#include "webrank/web.hpp"

using namespace webrank;
using webrank::testing::random_unit_bi;

namespace {

BiSeries one(int n) { return BiSeries::constant("x", "y", Scalar(1), n); }
BiSeries zero(int n) { return BiSeries("x", "y", n); }

BiSeries one_plus_xy(int n) {
    BiSeries p("x", "y", n);
    p.set_coeff(0, 0, Scalar(1));
    p.set_coeff(1, 1, Scalar(1));
    return p;
}

// The harmonic first integrals f, g = x^3/6 + y ± x u(xy), built by hand.
std::pair<BiSeries, BiSeries> harmonic_integrals(const Scalar& a, int n) {
    const UniSeries u = ode_u(a, n);
    const BiSeries xy = BiSeries::monomial("x", "y", 1, 1, Scalar(1), n);
    const BiSeries xu = BiSeries::monomial("x", "y", 1, 0, Scalar(1), n) * substitute(u, xy);
    BiSeries base("x", "y", n);
    base.set_coeff(3, 0, Scalar(1, 6));
    base.set_coeff(0, 1, Scalar(1));
    return {base + xu, base - xu};
}

}  // namespace

TEST_SUITE("web") {

TEST_CASE("foliation from first integrals") {
    const int n = 4;
    Foliation fx = foliation_from_first_integral(BiSeries::monomial("x", "y", 1, 0, Scalar(1), n));
    CHECK(fx.a() == one(n - 1));
    CHECK(fx.b() == zero(n - 1));

    BiSeries ymx("x", "y", n);
    ymx.set_coeff(0, 1, Scalar(1));
    ymx.set_coeff(1, 0, Scalar(-1));
    Foliation diag = foliation_from_first_integral(ymx);
    CHECK(diag.a() == -one(n - 1));
    CHECK(diag.b() == one(n - 1));
    CHECK(diag.slope() == one(n - 1));

    // Critical point at the origin.
    CHECK_THROWS_AS(foliation_from_first_integral(BiSeries::monomial("x", "y", 2, 0, Scalar(1), n)),
                    WebError);
}

TEST_CASE("harmonic first integral has slope -a at the origin") {
    auto [f, g] = harmonic_integrals(Scalar(1), 8);
    Foliation fol = foliation_from_first_integral(f);
    CHECK(fol.slope().constant_term() == Scalar(-1));
    auto [f2, g2] = harmonic_integrals(Scalar(3), 8);
    CHECK(foliation_from_first_integral(f2).slope().constant_term() == Scalar(-3));
}

TEST_CASE("make_wc validates its arguments") {
    const int n = 5;
    SlopeWeb4 w = make_wc(one_plus_xy(n), Scalar(-1));
    CHECK(w.to_web().foliation(2).slope() == one_plus_xy(n));
    CHECK(w.to_web().foliation(3).slope() == Scalar(-1) * one_plus_xy(n));

    CHECK_THROWS_AS(make_wc(one_plus_xy(n), Scalar(0)), WebError);
    CHECK_THROWS_AS(make_wc(one_plus_xy(n), Scalar(1)), WebError);
    CHECK_THROWS_AS(make_wc(BiSeries::monomial("x", "y", 1, 1, Scalar(1), n), Scalar(-1)),
                    WebError);
}

TEST_CASE("to_slope_form round-trips make_wc") {
    const int n = 6;
    SlopeWeb4 w = make_wc(one_plus_xy(n), Scalar(2));
    SlopeWeb4 back = to_slope_form(w.to_web());
    CHECK(back.p() == one_plus_xy(n));
    CHECK(back.C() == Scalar(2));
}

TEST_CASE("to_slope_form on the harmonic web gives (p, -1)") {
    auto [f, g] = harmonic_integrals(Scalar(1), 8);
    PlanarWeb web({foliation_from_first_integral(BiSeries::monomial("x", "y", 1, 0, Scalar(1), 8)),
                   foliation_from_first_integral(BiSeries::monomial("x", "y", 0, 1, Scalar(1), 8)),
                   foliation_from_first_integral(f), foliation_from_first_integral(g)});
    SlopeWeb4 w = to_slope_form(web);
    CHECK(w.C() == Scalar(-1));
    // p is the slope of the f-foliation: -f_x / f_y.
    const BiSeries p = -(derivative_x(f) * reciprocal(derivative_y(f)));
    CHECK(w.p() == p);
}

TEST_CASE("to_slope_form rejects non-constant ratio and unadapted webs") {
    const int n = 5;
    // Slopes 1+xy and 1+x agree at the origin, so that web is not even
    // pairwise transverse; a fourth slope 2+x keeps transversality while
    // the ratio stays non-constant.
    BiSeries one_plus_x("x", "y", n);
    one_plus_x.set_coeff(0, 0, Scalar(1));
    one_plus_x.set_coeff(1, 0, Scalar(1));
    CHECK_THROWS_WITH_AS(
        PlanarWeb({Foliation(one(n), zero(n)), Foliation(zero(n), one(n)),
                   foliation_from_slope(one_plus_xy(n)), foliation_from_slope(one_plus_x)}),
        doctest::Contains("tangent"), WebError);

    BiSeries two_plus_x("x", "y", n);
    two_plus_x.set_coeff(0, 0, Scalar(2));
    two_plus_x.set_coeff(1, 0, Scalar(1));
    PlanarWeb bad({Foliation(one(n), zero(n)), Foliation(zero(n), one(n)),
                   foliation_from_slope(one_plus_xy(n)), foliation_from_slope(two_plus_x)});
    CHECK_THROWS_AS(to_slope_form(bad), WebError);

    BiSeries ym2x("x", "y", n);
    ym2x.set_coeff(0, 1, Scalar(1));
    ym2x.set_coeff(1, 0, Scalar(-2));
    PlanarWeb unadapted({foliation_from_first_integral(ym2x), Foliation(zero(n), one(n)),
                         foliation_from_slope(one_plus_xy(n)),
                         foliation_from_slope(Scalar(3) * one_plus_xy(n))});
    CHECK_THROWS_AS(to_slope_form(unadapted), WebError);
}

TEST_CASE("cross-ratio of a harmonic quadruple of slopes is -1") {
    const int n = 5;
    const BiSeries m = one_plus_xy(n);
    PlanarWeb web({Foliation(one(n), zero(n)), Foliation(zero(n), one(n)),
                   foliation_from_slope(m), foliation_from_slope(-m)});
    CHECK(cross_ratio(web) == BiSeries::constant("x", "y", Scalar(-1), n));
}

TEST_CASE("cross-ratio of make_wc is the constant C") {
    const int n = 6;
    CHECK(cross_ratio(make_wc(one_plus_xy(n), Scalar(3)).to_web()) ==
          BiSeries::constant("x", "y", Scalar(3), n));

    std::mt19937 rng(4242);
    for (int it = 0; it < 20; ++it) {
        BiSeries p = random_unit_bi(rng, "x", "y", 5);
        BiSeries cr = cross_ratio(make_wc(p, Scalar(5, 3)).to_web());
        CHECK(cr == BiSeries::constant("x", "y", Scalar(5, 3), 5));
    }
}

TEST_CASE("cross-ratio of the harmonic web is -1 up to order") {
    auto [f, g] = harmonic_integrals(Scalar(1), 7);
    PlanarWeb web({foliation_from_first_integral(BiSeries::monomial("x", "y", 1, 0, Scalar(1), 7)),
                   foliation_from_first_integral(BiSeries::monomial("x", "y", 0, 1, Scalar(1), 7)),
                   foliation_from_first_integral(f), foliation_from_first_integral(g)});
    BiSeries cr = cross_ratio(web);
    CHECK(cr == BiSeries::constant("x", "y", Scalar(-1), cr.order()));
    CHECK(cr.order() >= 6);
}

TEST_CASE("curvature calibration: (dx, dy, dy - p dx) has K = (log p)_xy") {
    const int n = 6;
    PlanarWeb web({Foliation(one(n), zero(n)), Foliation(zero(n), one(n)),
                   foliation_from_slope(one_plus_xy(n))});
    BiSeries k = blaschke_curvature(web);
    CHECK(k.constant_term() == Scalar(1));
    CHECK(k == log_mixed_partial(one_plus_xy(n)));

    std::mt19937 rng(77);
    for (int it = 0; it < 25; ++it) {
        BiSeries p = random_unit_bi(rng, "x", "y", 6);
        PlanarWeb w({Foliation(one(6), zero(6)), Foliation(zero(6), one(6)),
                     foliation_from_slope(p)});
        CHECK(blaschke_curvature(w) == log_mixed_partial(p));
    }
}

TEST_CASE("separable slopes are hexagonal") {
    const int n = 6;
    BiSeries p("x", "y", n);
    p.set_coeff(0, 0, Scalar(1));
    p.set_coeff(1, 0, Scalar(1));
    p.set_coeff(0, 1, Scalar(1));
    p.set_coeff(1, 1, Scalar(1));  // (1+x)(1+y)
    PlanarWeb web({Foliation(one(n), zero(n)), Foliation(zero(n), one(n)),
                   foliation_from_slope(p)});
    CHECK(is_hexagonal(web));
    CHECK(blaschke_curvature(web).is_zero());

    PlanarWeb curved({Foliation(one(n), zero(n)), Foliation(zero(n), one(n)),
                      foliation_from_slope(one_plus_xy(n))});
    CHECK_FALSE(is_hexagonal(curved));
}

TEST_CASE("harmonic subweb (x, y, f) has curvature 1/a^2 at the origin") {
    for (long av : {1L, 2L}) {
        const Scalar a(av);
        auto [f, g] = harmonic_integrals(a, 8);
        PlanarWeb sub({Foliation(one(7), zero(7)), Foliation(zero(7), one(7)),
                       foliation_from_first_integral(f)});
        CHECK(blaschke_curvature(sub).constant_term() == (a * a).inverse());
        CHECK_FALSE(is_hexagonal(sub));
    }
}

TEST_CASE("curvature is invariant under permutations and unit rescalings") {
    std::mt19937 rng(31);
    const int n = 5;
    BiSeries p = random_unit_bi(rng, "x", "y", n);
    PlanarWeb web({Foliation(one(n), zero(n)), Foliation(zero(n), one(n)),
                   foliation_from_slope(p)});
    const BiSeries k = blaschke_curvature(web);

    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& perm : perms)
        CHECK(blaschke_curvature(web.subweb(perm[0], perm[1], perm[2])) == k);

    for (int it = 0; it < 10; ++it) {
        BiSeries u0 = random_unit_bi(rng, "x", "y", n);
        BiSeries u2 = random_unit_bi(rng, "x", "y", n);
        PlanarWeb rescaled({Foliation(u0, zero(n)), Foliation(zero(n), one(n)),
                            Foliation(u2 * (-p), u2)});
        CHECK(blaschke_curvature(rescaled) == k);
    }
}

TEST_CASE("all four 3-subwebs of a constant cross-ratio web share one curvature") {
    std::mt19937 rng(8);
    for (int it = 0; it < 10; ++it) {
        BiSeries p = random_unit_bi(rng, "x", "y", 6);
        PlanarWeb web = make_wc(p, Scalar(-2)).to_web();
        const BiSeries k = blaschke_curvature(web.subweb(0, 1, 2));
        CHECK(blaschke_curvature(web.subweb(0, 1, 3)) == k);
        CHECK(blaschke_curvature(web.subweb(0, 2, 3)) == k);
        CHECK(blaschke_curvature(web.subweb(1, 2, 3)) == k);
    }
}

TEST_CASE("hexagonality of one 3-subweb propagates to all four") {
    // A hexagonal yet transverse configuration: separable p.
    const int n = 6;
    BiSeries p("x", "y", n);
    p.set_coeff(0, 0, Scalar(1));
    p.set_coeff(1, 0, Scalar(1, 2));
    p.set_coeff(0, 1, Scalar(1, 3));
    p.set_coeff(1, 1, Scalar(1, 6));  // (1 + x/2)(1 + y/3)
    PlanarWeb web = make_wc(p, Scalar(3)).to_web();
    int hexagonal_count = 0;
    for (const auto& idx : {std::array<int, 3>{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}})
        hexagonal_count += is_hexagonal(web.subweb(idx[0], idx[1], idx[2])) ? 1 : 0;
    CHECK(hexagonal_count == 4);
}

}  // TEST_SUITE
