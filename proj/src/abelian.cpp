#include "webrank/abelian.hpp"

#include <algorithm>

namespace webrank {

namespace {

void require_web_data(const BiSeries& p, const Scalar& C) {
    if (p.constant_term().is_zero())
        fail(errc::not_transverse, "slope p vanishes at the origin");
    if (C.is_zero() || C.is_one())
        fail(errc::degenerate_cross_ratio, "C must differ from 0 and 1");
}

}  // namespace

BiSeries star_residual(const UniSeries& r, const UniSeries& s, const BiSeries& p,
                       const Scalar& C) {
    const std::string& vx = p.var_x();
    const std::string& vy = p.var_y();
    if (r.var() != vx || s.var() != vy)
        fail(errc::variable_mismatch, "r must live in x, s in y");
    const BiSeries rp = embed_x(derivative(r), vy) * p - embed_x(r, vy) * derivative_x(p);
    const BiSeries p2 = p * p;
    const BiSeries sp =
        embed_y(derivative(s), vx) * (p2 * p) + embed_y(s, vx) * (p2 * derivative_y(p));
    return rp + C * sp;
}

Matrix build_system(const BiSeries& p_in, const Scalar& C, int order) {
    require_web_data(p_in, C);
    if (order < 1) fail(errc::invalid_parameter, "build_system needs order >= 1");
    if (p_in.order() < order)
        fail(errc::invalid_parameter, "slope jet shorter than the requested order");
    const BiSeries p = p_in.truncated(order);
    const BiSeries px = derivative_x(p);
    const BiSeries py = derivative_y(p);
    const BiSeries p2 = p * p;
    const BiSeries p3 = p2 * p;
    const BiSeries p2py = p2.truncated(order - 1) * py;

    const int n = order;
    const int unknowns = 2 * (n + 1);
    const int rows = n * (n + 1) / 2;
    Matrix m(rows, unknowns);

    auto cf = [](const BiSeries& f, int i, int j) -> Scalar {
        if (i < 0 || j < 0 || i + j > f.order()) return Scalar(0);
        return f.coeff(i, j);
    };

    int row = 0;
    for (int d = 0; d <= n - 1; ++d)
        for (int j = 0; j <= d; ++j, ++row) {
            const int i = d - j;
            // Coefficient of x^i y^j in the equation, as a linear form in
            // the unknowns.  r = x^k contributes k x^{k-1} p - x^k p_x;
            // s = y^k contributes C (k y^{k-1} p^3 + y^k p^2 p_y).
            for (int k = 0; k <= n; ++k) {
                Scalar from_r = Scalar(k) * cf(p, i - k + 1, j) - cf(px, i - k, j);
                m.at(row, k) = from_r;
                Scalar from_s = C * (Scalar(k) * cf(p3, i, j - k + 1) + cf(p2py, i, j - k));
                m.at(row, n + 1 + k) = from_s;
            }
        }
    return m;
}

RankReport rank_report(const BiSeries& p, const Scalar& C, int order) {
    require_web_data(p, C);
    if (order < 1) fail(errc::invalid_parameter, "rank needs order >= 1");
    RankReport report;
    report.order = order;
    report.dims.resize(order + 1);
    report.dims[0] = 2;  // no constraints below degree 0
    std::vector<std::vector<Scalar>> top_kernel;
    for (int k = 1; k <= order; ++k) {
        auto kernel = kernel_basis(build_system(p, C, k));
        report.dims[k] = static_cast<int>(kernel.size());
        if (k == order) top_kernel = std::move(kernel);
    }
    report.stabilized = report.dims[order] == report.dims[order - 1];
    report.rank = report.dims[order];

    const std::string& vx = p.var_x();
    const std::string& vy = p.var_y();
    for (const auto& v : top_kernel) {
        UniSeries r(vx, order), s(vy, order);
        for (int k = 0; k <= order; ++k) {
            r.set_coeff(k, v[k]);
            s.set_coeff(k, v[order + 1 + k]);
        }
        if (!star_residual(r, s, p.truncated(order), C).is_zero())
            fail(errc::internal_invariant_violation, "kernel vector fails the residual check");
        report.basis.emplace_back(std::move(r), std::move(s));
    }
    return report;
}

Degree3Report degree3_analysis(const Scalar& a, const Scalar& b, const Scalar& u, const Scalar& v,
                               const Scalar& w) {
    Matrix m(2, 2);
    m.at(0, 0) = Scalar(-5) * a * a + Scalar(6) * u;
    m.at(0, 1) = Scalar(3) - Scalar(5) * a * b + Scalar(4) * v;
    m.at(1, 0) = Scalar(-5) * a * b + Scalar(4) * v - Scalar(7);
    m.at(1, 1) = Scalar(6) * w - Scalar(5) * b * b;
    Scalar det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    return {m, det, !det.is_zero()};
}

AbelianRelation reconstruct_relation(const UniSeries& r, const UniSeries& s, const BiSeries& p,
                                     const Scalar& C) {
    require_web_data(p, C);
    const int n = std::min({p.order(), r.order(), s.order()});
    if (n < 1) fail(errc::invalid_parameter, "relation data needs order >= 1");
    const BiSeries pn = p.truncated(n);
    const std::string& vx = p.var_x();
    const std::string& vy = p.var_y();
    const BiSeries rb = embed_x(r.truncated(n), vy);
    const BiSeries sb = embed_y(s.truncated(n), vx);

    const Scalar one_minus_c_inv = (Scalar(1) - C).inverse();
    const BiSeries c = one_minus_c_inv * (C * sb + rb * reciprocal(pn));
    const BiSeries e = -sb - c;

    AbelianRelation rel{r.truncated(n), s.truncated(n), c, e, C};
    rel.residual_order = n - 1;
    rel.check_sum = (sb + c + e).is_zero();
    rel.check_collinear = (rb - pn * c - C * (pn * e)).is_zero();
    rel.check_closed_c = (derivative_x(c) + derivative_y(c * pn)).is_zero();
    rel.check_closed_e = (derivative_x(e) + C * derivative_y(e * pn)).is_zero();
    return rel;
}

AbelianRelation transfer_relation(const AbelianRelation& rel, const BiSeries& p, const Scalar& D) {
    if (D.is_zero() || D.is_one())
        fail(errc::degenerate_cross_ratio, "D must differ from 0 and 1");
    const Scalar factor = rel.C / D;
    return reconstruct_relation(rel.r, factor * rel.s, p, D);
}

}  // namespace webrank
