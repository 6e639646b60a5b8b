#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "webrank/series.hpp"

using namespace webrank;
using webrank::testing::random_bi;
using webrank::testing::random_invertible_uni;
using webrank::testing::random_uni;
using webrank::testing::random_unit_bi;
using webrank::testing::random_unit_uni;

namespace {

UniSeries uni_from(const std::string& var, std::initializer_list<Scalar> coeffs) {
    UniSeries f(var, static_cast<int>(coeffs.size()) - 1);
    int k = 0;
    for (const Scalar& c : coeffs) f.set_coeff(k++, c);
    return f;
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("telescoping product (1+x)(1-x) at order 4") {
    UniSeries a = uni_from("x", {Scalar(1), Scalar(1), Scalar(0), Scalar(0), Scalar(0)});
    UniSeries b = uni_from("x", {Scalar(1), Scalar(-1), Scalar(0), Scalar(0), Scalar(0)});
    UniSeries expected(std::string("x"), 4);
    expected.set_coeff(0, Scalar(1));
    expected.set_coeff(2, Scalar(-1));
    CHECK(a * b == expected);
}

TEST_CASE("additive inverse of xy at order 6") {
    BiSeries one_xy("x", "y", 6);
    one_xy.set_coeff(0, 0, Scalar(1));
    one_xy.set_coeff(1, 1, Scalar(1));
    BiSeries minus_xy = BiSeries::monomial("x", "y", 1, 1, Scalar(-1), 6);
    CHECK(one_xy + minus_xy == BiSeries::constant("x", "y", Scalar(1), 6));
}

TEST_CASE("(1+xy)^3 at order 6 is binomial") {
    BiSeries f("x", "y", 6);
    f.set_coeff(0, 0, Scalar(1));
    f.set_coeff(1, 1, Scalar(1));
    BiSeries cube = f * f * f;
    BiSeries expected("x", "y", 6);
    expected.set_coeff(0, 0, Scalar(1));
    expected.set_coeff(1, 1, Scalar(3));
    expected.set_coeff(2, 2, Scalar(3));
    expected.set_coeff(3, 3, Scalar(1));
    CHECK(cube == expected);
}

TEST_CASE("variable mismatch is rejected") {
    UniSeries a = UniSeries::identity("x", 3);
    UniSeries b = UniSeries::identity("t", 3);
    CHECK_THROWS_AS(a + b, WebError);
    CHECK_THROWS_AS(a * b, WebError);
}

TEST_CASE("power-rule calculus") {
    // d/dx (x^2 y) = 2xy
    BiSeries f = BiSeries::monomial("x", "y", 2, 1, Scalar(1), 5);
    CHECK(derivative_x(f) == BiSeries::monomial("x", "y", 1, 1, Scalar(2), 4));

    // d/dy (xy + 3 x^2 y + 5 x y^2) = x + 3 x^2 + 10 x y
    BiSeries g("x", "y", 4);
    g.set_coeff(1, 1, Scalar(1));
    g.set_coeff(2, 1, Scalar(3));
    g.set_coeff(1, 2, Scalar(5));
    BiSeries expected("x", "y", 3);
    expected.set_coeff(1, 0, Scalar(1));
    expected.set_coeff(2, 0, Scalar(3));
    expected.set_coeff(1, 1, Scalar(10));
    CHECK(derivative_y(g) == expected);

    // integral of 1 + t^2 from 0: t + t^3/3
    UniSeries h = uni_from("t", {Scalar(1), Scalar(0), Scalar(1)});
    UniSeries hi = integrate(h);
    CHECK(hi.coeff(0) == Scalar(0));
    CHECK(hi.coeff(1) == Scalar(1));
    CHECK(hi.coeff(2) == Scalar(0));
    CHECK(hi.coeff(3) == Scalar(1, 3));
    CHECK(hi.order() == 3);
}

TEST_CASE("valid order bookkeeping") {
    std::mt19937 rng(7);
    UniSeries f = random_uni(rng, "x", 5);
    CHECK(derivative(f).order() == 4);
    CHECK(integrate(f).order() == 6);
    UniSeries g = random_uni(rng, "x", 3);
    CHECK((f + g).order() == 3);
    CHECK((f * g).order() == 3);
    CHECK_THROWS_AS(f.coeff(6), WebError);
    CHECK_THROWS_AS(derivative(UniSeries::constant("x", Scalar(1), 0)), WebError);
}

TEST_CASE("geometric reciprocals") {
    UniSeries f = uni_from("x", {Scalar(1), Scalar(1), Scalar(0), Scalar(0)});
    CHECK(reciprocal(f) ==
          uni_from("x", {Scalar(1), Scalar(-1), Scalar(1), Scalar(-1)}));

    BiSeries g("x", "y", 6);
    g.set_coeff(0, 0, Scalar(1));
    g.set_coeff(1, 1, Scalar(1));
    BiSeries ginv = reciprocal(g);
    BiSeries expected("x", "y", 6);
    expected.set_coeff(0, 0, Scalar(1));
    expected.set_coeff(1, 1, Scalar(-1));
    expected.set_coeff(2, 2, Scalar(1));
    expected.set_coeff(3, 3, Scalar(-1));
    CHECK(ginv == expected);

    UniSeries h = uni_from("x", {Scalar(2), Scalar(1), Scalar(0)});
    CHECK(reciprocal(h) == uni_from("x", {Scalar(1, 2), Scalar(-1, 4), Scalar(1, 8)}));

    CHECK_THROWS_AS(reciprocal(UniSeries::identity("x", 3)), WebError);
    CHECK_THROWS_AS(reciprocal(BiSeries::monomial("x", "y", 1, 0, Scalar(1), 3)), WebError);
}

TEST_CASE("reciprocal round-trip property") {
    std::mt19937 rng(41);
    for (int it = 0; it < 60; ++it) {
        UniSeries f = random_unit_uni(rng, "x", 8);
        CHECK((f * reciprocal(f)) == UniSeries::constant("x", Scalar(1), 8));
        BiSeries g = random_unit_bi(rng, "x", "y", 6);
        CHECK((g * reciprocal(g)) == BiSeries::constant("x", "y", Scalar(1), 6));
    }
}

TEST_CASE("substitution of a linear map into a jet") {
    // f(t) = 2 + t/4, g = xy -> 2 + xy/4
    UniSeries f = uni_from("t", {Scalar(2), Scalar(1, 4), Scalar(0), Scalar(0)});
    BiSeries g = BiSeries::monomial("x", "y", 1, 1, Scalar(1), 3);
    BiSeries composed = substitute(f, g);
    BiSeries expected("x", "y", 3);
    expected.set_coeff(0, 0, Scalar(2));
    expected.set_coeff(1, 1, Scalar(1, 4));
    CHECK(composed == expected);
}

TEST_CASE("substitution expands polynomials") {
    // f(t) = t + t^2, g(t) = 2t at order 2 -> 2t + 4t^2
    UniSeries f = uni_from("t", {Scalar(0), Scalar(1), Scalar(1)});
    UniSeries g = uni_from("t", {Scalar(0), Scalar(2), Scalar(0)});
    CHECK(substitute(f, g) == uni_from("t", {Scalar(0), Scalar(2), Scalar(4)}));

    // embedding x into the plane: t^2 at x -> x^2
    UniSeries sq = uni_from("t", {Scalar(0), Scalar(0), Scalar(1)});
    BiSeries x_embed = BiSeries::monomial("x", "y", 1, 0, Scalar(1), 2);
    CHECK(substitute(sq, x_embed) == BiSeries::monomial("x", "y", 2, 0, Scalar(1), 2));

    UniSeries bad = uni_from("t", {Scalar(1), Scalar(1)});
    CHECK_THROWS_AS(substitute(f, bad), WebError);
}

TEST_CASE("functional inversion on the book examples") {
    UniSeries lin = UniSeries::monomial("x", 1, Scalar(3), 4);
    UniSeries lin_inv = invert_functional(lin);
    CHECK(lin_inv.coeff(1) == Scalar(1, 3));

    // x + x^2 -> x - x^2 + 2x^3 - 5x^4
    UniSeries f("x", 4);
    f.set_coeff(1, Scalar(1));
    f.set_coeff(2, Scalar(1));
    UniSeries g = invert_functional(f);
    CHECK(g == uni_from("x", {Scalar(0), Scalar(1), Scalar(-1), Scalar(2), Scalar(-5)}));

    // x + x^3 -> x - x^3
    UniSeries h("x", 4);
    h.set_coeff(1, Scalar(1));
    h.set_coeff(3, Scalar(1));
    UniSeries hinv = invert_functional(h);
    CHECK(hinv == uni_from("x", {Scalar(0), Scalar(1), Scalar(0), Scalar(-1), Scalar(0)}));

    CHECK_THROWS_AS(invert_functional(UniSeries::monomial("x", 2, Scalar(1), 4)), WebError);
}

TEST_CASE("reversion round-trip property at order 12") {
    std::mt19937 rng(1729);
    const UniSeries id = UniSeries::identity("x", 12);
    for (int it = 0; it < 100; ++it) {
        UniSeries f = random_invertible_uni(rng, "x", 12);
        CHECK(substitute(f, invert_functional(f)) == id);
    }
}

TEST_CASE("ring axioms hold exactly on truncations") {
    std::mt19937 rng(99);
    for (int it = 0; it < 40; ++it) {
        BiSeries a = random_bi(rng, "x", "y", 5);
        BiSeries b = random_bi(rng, "x", "y", 5);
        BiSeries c = random_bi(rng, "x", "y", 5);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("bivariate composition agrees with direct expansion") {
    // f(x, y) = 1 + x + y^2 composed with gx = x + y^2, gy = y - x^2.
    BiSeries f("x", "y", 4);
    f.set_coeff(0, 0, Scalar(1));
    f.set_coeff(1, 0, Scalar(1));
    f.set_coeff(0, 2, Scalar(1));
    BiSeries gx("x", "y", 4);
    gx.set_coeff(1, 0, Scalar(1));
    gx.set_coeff(0, 2, Scalar(1));
    BiSeries gy("x", "y", 4);
    gy.set_coeff(0, 1, Scalar(1));
    gy.set_coeff(2, 0, Scalar(-1));
    // 1 + (x + y^2) + (y - x^2)^2 = 1 + x + y^2 + y^2 - 2x^2 y + x^4
    BiSeries expected("x", "y", 4);
    expected.set_coeff(0, 0, Scalar(1));
    expected.set_coeff(1, 0, Scalar(1));
    expected.set_coeff(0, 2, Scalar(2));
    expected.set_coeff(2, 1, Scalar(-2));
    expected.set_coeff(4, 0, Scalar(1));
    CHECK(substitute(f, gx, gy) == expected);
}

TEST_CASE("sqrt with prescribed root") {
    std::mt19937 rng(5);
    for (int it = 0; it < 30; ++it) {
        UniSeries g = random_unit_uni(rng, "x", 7);
        UniSeries f = g * g;
        UniSeries root = sqrt_with_root(f, g.constant_term());
        CHECK(root == g);
    }
}

TEST_CASE("axis slices and swaps") {
    BiSeries f("x", "y", 3);
    f.set_coeff(0, 0, Scalar(1));
    f.set_coeff(2, 1, Scalar(5));
    CHECK(f.x_slice(2).coeff(1) == Scalar(5));
    CHECK(f.on_x_axis().coeff(0) == Scalar(1));
    BiSeries swapped = f.swapped_vars();
    CHECK(swapped.coeff(1, 2) == Scalar(5));
    CHECK(swapped.coeff(0, 0) == Scalar(1));
}

TEST_CASE("log mixed partial of a separable slope vanishes") {
    // p = (1+x)(1+y)
    BiSeries p("x", "y", 6);
    p.set_coeff(0, 0, Scalar(1));
    p.set_coeff(1, 0, Scalar(1));
    p.set_coeff(0, 1, Scalar(1));
    p.set_coeff(1, 1, Scalar(1));
    CHECK(log_mixed_partial(p).is_zero());

    BiSeries q("x", "y", 6);
    q.set_coeff(0, 0, Scalar(1));
    q.set_coeff(1, 1, Scalar(1));
    BiSeries k = log_mixed_partial(q);
    CHECK(k.constant_term() == Scalar(1));
    CHECK(k.order() == 4);
}

}  // TEST_SUITE
