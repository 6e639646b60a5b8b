#include "webrank/nakai.hpp"

#include <algorithm>

#include "webrank/web.hpp"

namespace webrank {

const std::array<const char*, 5> kBundleCertificates = {
    "exact_relation", "harmonic_identity", "origin_curvature", "reciprocal_ode",
    "abelian_relation"};

BiSeries solve_p(const BuildSpec& spec) {
    const int n = spec.order;
    if (n < 1) fail(errc::invalid_parameter, "solve_p needs order >= 1");
    if (spec.r.order() < n || spec.s.order() < n || spec.trace.order() < n)
        fail(errc::invalid_parameter, "r, s, trace must be valid to the build order");
    if (spec.C.is_zero() || spec.C.is_one())
        fail(errc::degenerate_cross_ratio, "C must differ from 0 and 1");
    if (spec.r.constant_term().is_zero() && spec.s.constant_term().is_zero())
        fail(errc::no_unit_direction, "r(0) = s(0) = 0 admits no marching direction");
    if (spec.trace.constant_term().is_zero())
        fail(errc::not_transverse, "trace vanishes at the origin");

    const std::string& vx = spec.r.var();
    const std::string& vy = spec.s.var();
    const UniSeries r = spec.r.truncated(n);
    const UniSeries s = spec.s.truncated(n);
    BiSeries p(vx, vy, n);

    if (spec.side == BuildSpec::Side::x_march) {
        if (r.constant_term().is_zero())
            fail(errc::invalid_parameter, "x-march needs r(0) != 0");
        if (spec.trace.var() != vy)
            fail(errc::variable_mismatch, "x-march trace is p(0, y)");
        for (int j = 0; j <= n; ++j) p.set_coeff(0, j, spec.trace.coeff(j));
        const Scalar r0_inv = r.constant_term().inverse();
        for (int m = 0; m + 1 <= n; ++m) {
            // With the slices above x-degree m still zero, the x^m slice of
            // the residual is the inhomogeneity; the unknown slice enters as
            // -(m+1) r(0) p_{m+1}.
            const UniSeries g = star_residual(r, s, p, spec.C).x_slice(m);
            const Scalar factor = r0_inv / Scalar(m + 1);
            for (int j = 0; j + m + 1 <= n; ++j)
                p.set_coeff(m + 1, j, g.coeff(j) * factor);
        }
    } else {
        if (s.constant_term().is_zero())
            fail(errc::invalid_parameter, "y-march needs s(0) != 0");
        if (spec.trace.var() != vx)
            fail(errc::variable_mismatch, "y-march trace is p(x, 0)");
        for (int i = 0; i <= n; ++i) p.set_coeff(i, 0, spec.trace.coeff(i));
        // The unknown slice enters as (m+1) C s(0) trace(x)^2 p_{m+1}(x).
        const UniSeries trace2 = spec.trace.truncated(n) * spec.trace.truncated(n);
        const UniSeries lead_inv = reciprocal((spec.C * s.constant_term()) * trace2);
        for (int m = 0; m + 1 <= n; ++m) {
            const UniSeries g = star_residual(r, s, p, spec.C).y_slice(m);
            const UniSeries update =
                Scalar(-1, m + 1) * (g * lead_inv.truncated(g.order()));
            for (int i = 0; i + m + 1 <= n; ++i) p.set_coeff(i, m + 1, update.coeff(i));
        }
    }

    if (!star_residual(r, s, p, spec.C).is_zero())
        fail(errc::internal_invariant_violation, "march left a nonzero residual");
    return p;
}

NakaiReport check_nakai(const BiSeries& p, const Scalar& C, int order) {
    if (order < 2 || p.order() < order)
        fail(errc::invalid_parameter, "check_nakai needs a slope valid to order >= 2");
    const BiSeries pn = p.truncated(order);
    if (pn.constant_term().is_zero())
        fail(errc::not_transverse, "slope vanishes at the origin");

    NakaiReport report{log_mixed_partial(pn).constant_term(), false, C, {}};
    report.nakai = !report.K0.is_zero();

    const PlanarWeb web = make_wc(pn, C).to_web();
    const std::array<std::array<int, 3>, 4> subs = {
        {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};
    for (int i = 0; i < 4; ++i)
        report.hexagonal[i] = is_hexagonal(web.subweb(subs[i][0], subs[i][1], subs[i][2]));
    return report;
}

UniSeries ode_u(const Scalar& a, int order) {
    if (a.is_zero()) fail(errc::invalid_parameter, "u(0) must be nonzero");
    if (order < 1) fail(errc::invalid_parameter, "ode_u needs order >= 1");
    const std::string var = "t";
    UniSeries u(var, order);
    u.set_coeff(0, a);
    const UniSeries t = UniSeries::identity(var, order);
    const UniSeries half = UniSeries::constant(var, Scalar(1, 2), order);
    const Scalar a_inv = a.inverse();
    for (int k = 0; k + 1 <= order; ++k) {
        const UniSeries up = derivative(u);
        const UniSeries residual = t * (up * up) + u * up - half;
        // residual_k = (k+1) a u_{k+1} + (known terms); u_{k+1} is zero so far.
        u.set_coeff(k + 1, -(residual.coeff(k) * a_inv / Scalar(k + 1)));
    }
    {
        const UniSeries up = derivative(u);
        if (!(t * (up * up) + u * up - half).is_zero())
            fail(errc::internal_invariant_violation, "ODE residual did not vanish");
    }
    return u;
}

bool ExampleBundle::all_pass() const {
    for (const auto& [name, cert] : certificates)
        if (!cert.pass) return false;
    return true;
}

ExampleBundle harmonic_example(const Scalar& a, int order) {
    if (a.is_zero()) fail(errc::invalid_parameter, "the parameter a must be nonzero");
    if (order < 4) fail(errc::invalid_parameter, "harmonic_example needs order >= 4");
    const int m = order + 1;  // internal cushion: slopes eat one derivative
    const std::string vx = "x", vy = "y";

    const UniSeries u = ode_u(a, m);
    const BiSeries xy = BiSeries::monomial(vx, vy, 1, 1, Scalar(1), m);
    const BiSeries x_mono = BiSeries::monomial(vx, vy, 1, 0, Scalar(1), m);
    const BiSeries xu = x_mono * substitute(u, xy);
    BiSeries base(vx, vy, m);  // x^3/6 + y
    base.set_coeff(3, 0, Scalar(1, 6));
    base.set_coeff(0, 1, Scalar(1));
    const BiSeries f = base + xu;
    const BiSeries g = base - xu;

    const BiSeries fx = derivative_x(f), fy = derivative_y(f);
    const BiSeries gx = derivative_x(g), gy = derivative_y(g);

    // Lemma behind the rank witness: 2 u'(xy) f_x = f_y.
    {
        const BiSeries up_xy = substitute(derivative(u), xy.truncated(m - 1));
        if (Scalar(2) * up_xy * fx != fy)
            fail(errc::internal_invariant_violation, "2 u' f_x = f_y failed");
    }

    ExampleBundle bundle{a,
                         order,
                         u.truncated(order),
                         f.truncated(order),
                         g.truncated(order),
                         BiSeries(vx, vy, order),
                         AbelianRelation{UniSeries(vx, 0), UniSeries(vy, 0), BiSeries(vx, vy, 0),
                                         BiSeries(vx, vy, 0), Scalar(-1)},
                         Scalar(0),
                         {}};

    const BiSeries p = -(fx * reciprocal(fy));
    bundle.p = p.truncated(order);

    // (i) the evident relation x^3/3 + 2y - f - g = 0.
    {
        BiSeries lhs(vx, vy, m);
        lhs.set_coeff(3, 0, Scalar(1, 3));
        lhs.set_coeff(0, 1, Scalar(2));
        lhs = lhs - f - g;
        bundle.certificates["exact_relation"] = {lhs.truncated(order).is_zero(), order};
    }
    // (ii) harmonicity: f_x g_y + g_x f_y = 0.
    {
        const BiSeries residual = fx * gy + gx * fy;
        bundle.certificates["harmonic_identity"] = {residual.truncated(order).is_zero(), order};
    }
    // (iii) curvature 1/a^2 of the (x, y, f) subweb at the origin.
    {
        const BiSeries one = BiSeries::constant(vx, vy, Scalar(1), m - 1);
        const BiSeries zero = BiSeries(vx, vy, m - 1);
        const PlanarWeb sub({Foliation(one, zero), Foliation(zero, one),
                             Foliation(fx, fy)});
        const BiSeries curv = blaschke_curvature(sub);
        bundle.origin_curvature = curv.constant_term();
        const Scalar expected = (a * a).inverse();
        bundle.certificates["origin_curvature"] = {bundle.origin_curvature == expected,
                                                   curv.order()};
    }
    // (iv) the reciprocal function t(u) solves (dt/du)^2 - 2u dt/du - 2t = 0.
    {
        const UniSeries w = u - UniSeries::constant("t", a, m);  // u - a, still in t
        const UniSeries t_of_w = invert_functional(w.renamed("w"));
        const UniSeries dt_du = derivative(t_of_w);
        const UniSeries u_of_w =
            UniSeries::constant("w", a, m - 1) + UniSeries::identity("w", m - 1);
        const UniSeries residual = dt_du * dt_du - Scalar(2) * (u_of_w * dt_du) -
                                   Scalar(2) * t_of_w.truncated(m - 1);
        bundle.certificates["reciprocal_ode"] = {residual.is_zero(), residual.order()};
    }
    // (v) the attached abelian relation (r, s) = (x^2, 2) for C = -1.
    {
        const UniSeries r = UniSeries::monomial(vx, 2, Scalar(1), order);
        const UniSeries s = UniSeries::constant(vy, Scalar(2), order);
        bundle.relation = reconstruct_relation(r, s, bundle.p, Scalar(-1));
        const bool star_ok = star_residual(r, s, bundle.p, Scalar(-1)).is_zero();
        bundle.certificates["abelian_relation"] = {bundle.relation.valid() && star_ok, order - 1};
    }
    return bundle;
}

}  // namespace webrank
