#include "webrank/web.hpp"

#include <algorithm>

namespace webrank {

namespace {

void require_transverse(const Foliation& l, const Foliation& r, const char* who) {
    if (transversality(l, r).constant_term().is_zero())
        fail(errc::not_transverse, std::string(who) + ": foliations tangent at the origin");
}

}  // namespace

Foliation::Foliation(BiSeries a, BiSeries b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.var_x() != b_.var_x() || a_.var_y() != b_.var_y())
        fail(errc::variable_mismatch, "1-form coefficients in different variables");
    const int n = std::min(a_.order(), b_.order());
    a_ = a_.truncated(n);
    b_ = b_.truncated(n);
    if (a_.constant_term().is_zero() && b_.constant_term().is_zero())
        fail(errc::singular_foliation, "defining 1-form vanishes at the origin");
}

BiSeries Foliation::slope() const {
    if (b_.constant_term().is_zero())
        fail(errc::division_by_non_unit, "vertical foliation has no slope chart");
    return -(a_ * reciprocal(b_));
}

BiSeries transversality(const Foliation& l, const Foliation& r) {
    return l.a() * r.b() - r.a() * l.b();
}

Foliation foliation_from_first_integral(const BiSeries& first_integral) {
    if (first_integral.order() < 1)
        fail(errc::invalid_parameter, "first integral needs order >= 1");
    BiSeries fx = derivative_x(first_integral);
    BiSeries fy = derivative_y(first_integral);
    if (fx.constant_term().is_zero() && fy.constant_term().is_zero())
        fail(errc::singular_foliation, "first integral has critical point at the origin");
    return Foliation(std::move(fx), std::move(fy));
}

Foliation foliation_from_slope(const BiSeries& slope) {
    // Leaves of dy - slope dx.
    return Foliation(-slope, BiSeries::constant(slope.var_x(), slope.var_y(), Scalar(1),
                                                slope.order()));
}

PlanarWeb::PlanarWeb(std::vector<Foliation> foliations) : fols_(std::move(foliations)) {
    if (fols_.size() != 3 && fols_.size() != 4)
        fail(errc::invalid_parameter, "a planar web here has 3 or 4 foliations");
    order_ = fols_[0].order();
    for (const auto& f : fols_) order_ = std::min(order_, f.order());
    for (size_t i = 0; i < fols_.size(); ++i)
        for (size_t j = i + 1; j < fols_.size(); ++j)
            require_transverse(fols_[i], fols_[j], "PlanarWeb");
}

PlanarWeb PlanarWeb::subweb(int i, int j, int k) const {
    return PlanarWeb({fols_.at(i), fols_.at(j), fols_.at(k)});
}

SlopeWeb4::SlopeWeb4(BiSeries p, Scalar c) : p_(std::move(p)), c_(std::move(c)) {}

SlopeWeb4 make_wc(const BiSeries& p, const Scalar& c) {
    if (c.is_zero() || c.is_one())
        fail(errc::degenerate_cross_ratio, "C must differ from 0 and 1");
    if (p.constant_term().is_zero())
        fail(errc::not_transverse, "slope p vanishes at the origin");
    SlopeWeb4 w(p, c);
    w.to_web();  // validates pairwise transversality
    return w;
}

PlanarWeb SlopeWeb4::to_web() const {
    const std::string& vx = p_.var_x();
    const std::string& vy = p_.var_y();
    const int n = p_.order();
    const BiSeries one = BiSeries::constant(vx, vy, Scalar(1), n);
    const BiSeries zero = BiSeries(vx, vy, n);
    return PlanarWeb({Foliation(one, zero),            // dx
                      Foliation(zero, one),            // dy
                      Foliation(-p_, one),             // dy - p dx
                      Foliation(-(c_ * p_), one)});    // dy - C p dx
}

SlopeWeb4 to_slope_form(const PlanarWeb& web) {
    if (web.size() != 4) fail(errc::invalid_parameter, "slope form needs a 4-web");
    const Foliation& f1 = web.foliation(0);
    const Foliation& f2 = web.foliation(1);
    if (!f1.b().is_zero() || !f2.a().is_zero())
        fail(errc::not_adapted, "first two foliations are not the coordinate axes");
    const BiSeries p = web.foliation(2).slope();
    if (p.constant_term().is_zero())
        fail(errc::not_transverse, "third slope vanishes at the origin");
    const BiSeries ratio = web.foliation(3).slope() * reciprocal(p);
    if (!ratio.is_constant())
        fail(errc::non_constant_cross_ratio, "fourth slope is not a constant multiple of p");
    return make_wc(p, ratio.constant_term());
}

BiSeries cross_ratio(const PlanarWeb& web) {
    if (web.size() != 4) fail(errc::invalid_parameter, "cross-ratio needs a 4-web");
    // With tangent vectors v_i = (b_i, -a_i), det(v_i, v_j) equals the
    // transversality bracket of the forms.
    auto det = [&](int i, int j) {
        BiSeries d = transversality(web.foliation(i), web.foliation(j));
        if (d.constant_term().is_zero())
            fail(errc::not_transverse, "coincident tangent directions");
        return d;
    };
    return det(0, 2) * det(1, 3) * reciprocal(det(0, 3) * det(1, 2));
}

BiSeries blaschke_curvature(const PlanarWeb& web) {
    if (web.size() != 3) fail(errc::invalid_parameter, "Blaschke curvature needs a 3-web");
    if (web.order() < 2)
        fail(errc::invalid_parameter, "curvature needs jets of order >= 2");

    const BiSeries& a1 = web.foliation(0).a();
    const BiSeries& b1 = web.foliation(0).b();
    const BiSeries& a2 = web.foliation(1).a();
    const BiSeries& b2 = web.foliation(1).b();
    const BiSeries& a3 = web.foliation(2).a();
    const BiSeries& b3 = web.foliation(2).b();

    // Rescale so the three forms sum to zero.
    const BiSeries f1 = a2 * b3 - a3 * b2;
    const BiSeries f2 = a3 * b1 - a1 * b3;
    const BiSeries f3 = a1 * b2 - a2 * b1;

    const BiSeries A1 = f1 * a1, B1 = f1 * b1;
    const BiSeries A2 = f2 * a2, B2 = f2 * b2;
    const BiSeries A3 = f3 * a3, B3 = f3 * b3;

    // d(A dx + B dy) = (B_x - A_y) dx ^ dy.
    const BiSeries c1 = derivative_x(B1) - derivative_y(A1);
    const BiSeries c2 = derivative_x(B2) - derivative_y(A2);
    const BiSeries c3 = derivative_x(B3) - derivative_y(A3);

    // Solve alpha B_i - beta A_i = c_i from the first two equations.
    const int n = c1.order();
    const BiSeries det = (A1 * B2 - A2 * B1).truncated(n);
    const BiSeries det_inv = reciprocal(det);
    const BiSeries alpha = (A1.truncated(n) * c2 - A2.truncated(n) * c1) * det_inv;
    const BiSeries beta = (B1.truncated(n) * c2 - B2.truncated(n) * c1) * det_inv;

    // The third equation is implied by the normalization; assert it.
    const BiSeries residual = alpha * B3.truncated(n) - beta * A3.truncated(n) - c3;
    if (!residual.is_zero())
        fail(errc::internal_invariant_violation, "connection fails the third structure equation");

    return derivative_x(beta) - derivative_y(alpha);
}

bool is_hexagonal(const PlanarWeb& web) { return blaschke_curvature(web).is_zero(); }

}  // namespace webrank
