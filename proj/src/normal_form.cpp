#include "webrank/normal_form.hpp"

#include <algorithm>

#include "webrank/web.hpp"

namespace webrank {

BiSeries transform_slope(const BiSeries& p, const UniSeries& X, const UniSeries& Y) {
    if (X.var() != p.var_x() || Y.var() != p.var_y())
        fail(errc::variable_mismatch, "coordinate changes must match the slope variables");
    if (p.constant_term().is_zero())
        fail(errc::not_transverse, "slope vanishes at the origin");

    const UniSeries xp = derivative(X);
    const UniSeries yp = derivative(Y);
    if (!X.constant_term().is_zero() || xp.constant_term().is_zero() ||
        !Y.constant_term().is_zero() || yp.constant_term().is_zero())
        fail(errc::not_invertible_at_origin, "coordinate change is not a local diffeomorphism");

    // q(x, y) = Y'(y) p(x, y) / X'(x), then pull back through the inverse
    // changes to express the new slope in the new coordinates.
    const BiSeries q =
        embed_y(yp, p.var_x()) * p * embed_x(reciprocal(xp), p.var_y());
    const UniSeries xinv = invert_functional(X);
    const UniSeries yinv = invert_functional(Y);
    return substitute(q, embed_x(xinv, p.var_y()), embed_y(yinv, p.var_x()));
}

namespace {

// p1 = 1 + c*xy*(1 + h): peel the normal-form shell off an axis-flat slope.
BiSeries peel_h(const BiSeries& p1, const Scalar& c) {
    const Scalar cinv = c.inverse();
    BiSeries h(p1.var_x(), p1.var_y(), p1.order() - 2);
    for (int d = 0; d <= h.order(); ++d)
        for (int j = 0; j <= d; ++j) {
            int i = d - j;
            h.set_coeff(i, j, p1.coeff(i + 1, j + 1) * cinv);
        }
    h.set_coeff(0, 0, h.coeff(0, 0) - Scalar(1));
    return h;
}

BiSeries assemble_normal(const BiSeries& h, const Scalar& c) {
    BiSeries p(h.var_x(), h.var_y(), h.order() + 2);
    p.set_coeff(0, 0, Scalar(1));
    for (int d = 0; d <= h.order(); ++d)
        for (int j = 0; j <= d; ++j) {
            int i = d - j;
            Scalar value = h.coeff(i, j);
            if (i == 0 && j == 0) value += Scalar(1);
            p.set_coeff(i + 1, j + 1, c * value);
        }
    return p;
}

}  // namespace

NormalizedWeb normalize(const BiSeries& p_in, int order, ScalarField field) {
    if (order < 3 || p_in.order() < order)
        fail(errc::invalid_parameter, "normalize needs a slope valid to order >= 3");
    const BiSeries p = p_in.truncated(order);
    if (p.constant_term().is_zero())
        fail(errc::not_transverse, "slope vanishes at the origin");
    if (log_mixed_partial(p).constant_term().is_zero())
        fail(errc::not_curved_at_origin, "Blaschke curvature vanishes at the origin");

    // Stage 1: quadratures flatten the slope to 1 on both axes.
    const UniSeries X = integrate(p.on_x_axis());
    const UniSeries Y = p.constant_term() * integrate(reciprocal(p.on_y_axis()));
    const BiSeries p1 = transform_slope(p, X, Y);

    const std::string& vx = p.var_x();
    const std::string& vy = p.var_y();
    const UniSeries one_x = UniSeries::constant(vx, Scalar(1), p1.order());
    const UniSeries one_y = UniSeries::constant(vy, Scalar(1), p1.order());
    if (p1.on_x_axis() != one_x || p1.on_y_axis() != one_y)
        fail(errc::internal_invariant_violation, "axis flattening failed");

    NormalizedWeb nw{BiSeries(vx, vy, p1.order() - 2),
                     p1.coeff(1, 1),
                     X,
                     Y,
                     Scalar(1),
                     false,
                     false,
                     p1,
                     p1};
    if (nw.c.is_zero())
        fail(errc::internal_invariant_violation, "flat form lost the curvature coefficient");

    // Orientation: the square class of the xy-coefficient is invariant
    // under changes (X(x), Y(y)), so a negative coefficient can only be
    // repaired by exchanging the two coordinate foliations, which maps
    // the slope to 1/p(y, x).
    BiSeries oriented = p1;
    Scalar c_eff = nw.c;
    if (nw.c.is_rational() && nw.c.rat_a() < 0) {
        oriented = reciprocal(p1.swapped_vars());
        c_eff = oriented.coeff(1, 1);
        nw.swapped = true;
    }

    BiSeries h_weak = peel_h(oriented, c_eff);

    // Scaling: substitute (x, y) -> (x/mu, y/mu) with mu^2 = c_eff.
    Scalar mu(1);
    bool strict = false;
    if (c_eff.is_one()) {
        strict = true;
    } else if (c_eff.is_rational_square()) {
        mu = c_eff.rational_sqrt();
        strict = true;
    } else if (field == ScalarField::quadratic && c_eff.is_rational()) {
        mu = c_eff.sqrt_in_extension();
        strict = true;
    }

    if (strict) {
        const Scalar mu_inv = mu.inverse();
        BiSeries h(vx, vy, h_weak.order());
        Scalar pw(1);
        std::vector<Scalar> inv_pow(h.order() + 1, Scalar(1));
        for (int d = 1; d <= h.order(); ++d) {
            pw = pw * mu_inv;
            inv_pow[d] = pw;
        }
        for (int d = 0; d <= h.order(); ++d)
            for (int j = 0; j <= d; ++j) h.set_coeff(d - j, j, h_weak.coeff(d - j, j) * inv_pow[d]);
        nw.h = h;
        nw.mu = mu;
        nw.achieved_strict = true;
        nw.p_normal = assemble_normal(h, Scalar(1));
    } else {
        nw.h = h_weak;
        nw.mu = Scalar(1);
        nw.achieved_strict = false;
        nw.p_normal = oriented;
    }
    return nw;
}

std::pair<Scalar, Scalar> invariants_3jet(const NormalizedWeb& nw) {
    if (!nw.achieved_strict)
        fail(errc::strict_form_required, "3-jet invariants need the strict normal form");
    if (nw.h.order() < 1)
        fail(errc::invalid_parameter, "h is not valid to order 1");
    return {nw.h.coeff(1, 0), nw.h.coeff(0, 1)};
}

}  // namespace webrank
