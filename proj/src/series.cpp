#include "webrank/series.hpp"

#include <algorithm>
#include <sstream>

namespace webrank {

namespace {

void require_order(int order, const char* what) {
    if (order < 0) fail(errc::invalid_parameter, std::string(what) + ": negative valid order");
}

void require_same_var(const UniSeries& l, const UniSeries& r) {
    if (l.var() != r.var())
        fail(errc::variable_mismatch, "'" + l.var() + "' vs '" + r.var() + "'");
}

void require_same_vars(const BiSeries& l, const BiSeries& r) {
    if (l.var_x() != r.var_x() || l.var_y() != r.var_y())
        fail(errc::variable_mismatch, "(" + l.var_x() + "," + l.var_y() + ") vs (" + r.var_x() +
                                          "," + r.var_y() + ")");
}

std::string monomial_str(const std::string& var, int k) {
    if (k == 0) return "";
    if (k == 1) return var;
    return var + "^" + std::to_string(k);
}

void append_term(std::ostringstream& os, bool& first, const Scalar& c, const std::string& mono) {
    if (c.is_zero()) return;
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-' && c.is_rational();
    if (first) {
        os << (neg ? "-" : "");
        first = false;
    } else {
        os << (neg ? " - " : " + ");
    }
    if (neg) cs = cs.substr(1);
    if (mono.empty()) {
        os << cs;
    } else if (cs == "1") {
        os << mono;
    } else {
        os << cs << "*" << mono;
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// UniSeries

UniSeries::UniSeries(std::string var, int order) : var_(std::move(var)), order_(order) {
    require_order(order, "UniSeries");
    c_.assign(order_ + 1, Scalar(0));
}

UniSeries UniSeries::constant(const std::string& var, const Scalar& value, int order) {
    UniSeries f(var, order);
    f.c_[0] = value;
    return f;
}

UniSeries UniSeries::identity(const std::string& var, int order) {
    return monomial(var, 1, Scalar(1), order);
}

UniSeries UniSeries::monomial(const std::string& var, int degree, const Scalar& coeff, int order) {
    UniSeries f(var, order);
    if (degree < 0 || degree > order)
        fail(errc::invalid_parameter, "monomial degree outside truncation");
    f.c_[degree] = coeff;
    return f;
}

const Scalar& UniSeries::coeff(int k) const {
    if (k < 0 || k > order_)
        fail(errc::invalid_parameter,
             "coefficient " + std::to_string(k) + " beyond valid order " + std::to_string(order_));
    return c_[k];
}

void UniSeries::set_coeff(int k, const Scalar& value) {
    if (k < 0 || k > order_)
        fail(errc::invalid_parameter, "coefficient beyond truncation order");
    c_[k] = value;
}

bool UniSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

UniSeries UniSeries::truncated(int new_order) const {
    if (new_order > order_)
        fail(errc::invalid_parameter, "cannot extend valid order by truncation");
    UniSeries f(var_, new_order);
    for (int k = 0; k <= new_order; ++k) f.c_[k] = c_[k];
    return f;
}

UniSeries UniSeries::renamed(const std::string& var) const {
    UniSeries f(*this);
    f.var_ = var;
    return f;
}

UniSeries UniSeries::operator-() const {
    UniSeries f(*this);
    for (auto& v : f.c_) v = -v;
    return f;
}

UniSeries operator+(const UniSeries& l, const UniSeries& r) {
    require_same_var(l, r);
    UniSeries f(l.var_, std::min(l.order_, r.order_));
    for (int k = 0; k <= f.order_; ++k) f.c_[k] = l.c_[k] + r.c_[k];
    return f;
}

UniSeries operator-(const UniSeries& l, const UniSeries& r) { return l + (-r); }

UniSeries operator*(const UniSeries& l, const UniSeries& r) {
    require_same_var(l, r);
    UniSeries f(l.var_, std::min(l.order_, r.order_));
    for (int k = 0; k <= f.order_; ++k) {
        Scalar acc(0);
        for (int i = 0; i <= k; ++i) acc += l.c_[i] * r.c_[k - i];
        f.c_[k] = acc;
    }
    return f;
}

UniSeries operator*(const Scalar& s, const UniSeries& f) {
    UniSeries g(f);
    for (auto& v : g.c_) v = s * v;
    return g;
}

bool operator==(const UniSeries& l, const UniSeries& r) {
    return l.var_ == r.var_ && l.order_ == r.order_ && l.c_ == r.c_;
}

std::string UniSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= order_; ++k) append_term(os, first, c_[k], monomial_str(var_, k));
    if (first) os << "0";
    os << " + O(" << var_ << "^" << order_ + 1 << ")";
    return os.str();
}

UniSeries derivative(const UniSeries& f) {
    if (f.order() == 0)
        fail(errc::invalid_parameter, "derivative exhausts the valid order");
    UniSeries g(f.var(), f.order() - 1);
    for (int k = 0; k <= g.order(); ++k) g.set_coeff(k, Scalar(k + 1) * f.coeff(k + 1));
    return g;
}

UniSeries integrate(const UniSeries& f) {
    UniSeries g(f.var(), f.order() + 1);
    for (int k = 0; k <= f.order(); ++k) g.set_coeff(k + 1, f.coeff(k) / Scalar(k + 1));
    return g;
}

UniSeries reciprocal(const UniSeries& f) {
    if (f.constant_term().is_zero())
        fail(errc::division_by_non_unit, "reciprocal of series with zero constant term");
    const Scalar inv0 = f.constant_term().inverse();
    UniSeries g(f.var(), f.order());
    g.set_coeff(0, inv0);
    for (int k = 1; k <= f.order(); ++k) {
        Scalar acc(0);
        for (int i = 0; i < k; ++i) acc += g.coeff(i) * f.coeff(k - i);
        g.set_coeff(k, -(acc * inv0));
    }
    return g;
}

UniSeries substitute(const UniSeries& f, const UniSeries& g) {
    if (!g.constant_term().is_zero())
        fail(errc::composition_not_local, "inner series has nonzero constant term");
    const int n = std::min(f.order(), g.order());
    UniSeries result = UniSeries::constant(g.var(), f.coeff(std::min(f.order(), n)), n);
    // Horner over the truncated outer coefficients.
    for (int k = std::min(f.order(), n) - 1; k >= 0; --k) {
        result = result * g.truncated(n);
        result.set_coeff(0, result.coeff(0) + f.coeff(k));
    }
    return result;
}

UniSeries invert_functional(const UniSeries& f) {
    if (!f.constant_term().is_zero())
        fail(errc::not_invertible_at_origin, "series does not vanish at the origin");
    if (f.order() < 1 || f.coeff(1).is_zero())
        fail(errc::not_invertible_at_origin, "vanishing linear term");
    const int n = f.order();
    const Scalar inv1 = f.coeff(1).inverse();
    UniSeries g(f.var(), n);
    g.set_coeff(1, inv1);
    for (int k = 2; k <= n; ++k) {
        // With g filled below degree k, the x^k coefficient of f(g) is
        // f'(0)*g_k plus terms free of g_k.
        UniSeries comp = substitute(f, g);
        g.set_coeff(k, -(comp.coeff(k) * inv1));
    }
    return g;
}

UniSeries sqrt_with_root(const UniSeries& f, const Scalar& r0) {
    if (r0 * r0 != f.constant_term())
        fail(errc::invalid_parameter, "r0^2 does not match the constant term");
    if (r0.is_zero()) fail(errc::invalid_parameter, "sqrt with vanishing unit root");
    const Scalar half_inv = (Scalar(2) * r0).inverse();
    UniSeries g(f.var(), f.order());
    g.set_coeff(0, r0);
    for (int k = 1; k <= f.order(); ++k) {
        Scalar acc(0);
        for (int i = 1; i < k; ++i) acc += g.coeff(i) * g.coeff(k - i);
        g.set_coeff(k, (f.coeff(k) - acc) * half_inv);
    }
    return g;
}

bool equal_up_to(const UniSeries& l, const UniSeries& r, int order) {
    require_same_var(l, r);
    if (order > l.order() || order > r.order())
        fail(errc::invalid_parameter, "comparison beyond valid order");
    for (int k = 0; k <= order; ++k)
        if (l.coeff(k) != r.coeff(k)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// BiSeries

BiSeries::BiSeries(std::string var_x, std::string var_y, int order)
    : vx_(std::move(var_x)), vy_(std::move(var_y)), order_(order) {
    require_order(order, "BiSeries");
    if (vx_ == vy_) fail(errc::invalid_parameter, "bivariate series needs distinct variables");
    c_.assign((order_ + 1) * (order_ + 2) / 2, Scalar(0));
}

BiSeries BiSeries::constant(const std::string& vx, const std::string& vy, const Scalar& value,
                            int order) {
    BiSeries f(vx, vy, order);
    f.c_[0] = value;
    return f;
}

BiSeries BiSeries::monomial(const std::string& vx, const std::string& vy, int i, int j,
                            const Scalar& coeff, int order) {
    BiSeries f(vx, vy, order);
    if (i < 0 || j < 0 || i + j > order)
        fail(errc::invalid_parameter, "monomial degree outside truncation");
    f.c_[f.idx(i, j)] = coeff;
    return f;
}

const Scalar& BiSeries::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i + j > order_)
        fail(errc::invalid_parameter, "coefficient (" + std::to_string(i) + "," +
                                          std::to_string(j) + ") beyond valid order " +
                                          std::to_string(order_));
    return c_[idx(i, j)];
}

void BiSeries::set_coeff(int i, int j, const Scalar& value) {
    if (i < 0 || j < 0 || i + j > order_)
        fail(errc::invalid_parameter, "coefficient beyond truncation order");
    c_[idx(i, j)] = value;
}

bool BiSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool BiSeries::is_constant() const {
    for (int d = 1; d <= order_; ++d)
        for (int j = 0; j <= d; ++j)
            if (!c_[idx(d - j, j)].is_zero()) return false;
    return true;
}

BiSeries BiSeries::truncated(int new_order) const {
    if (new_order > order_)
        fail(errc::invalid_parameter, "cannot extend valid order by truncation");
    BiSeries f(vx_, vy_, new_order);
    for (int d = 0; d <= new_order; ++d)
        for (int j = 0; j <= d; ++j) f.c_[f.idx(d - j, j)] = c_[idx(d - j, j)];
    return f;
}

BiSeries BiSeries::operator-() const {
    BiSeries f(*this);
    for (auto& v : f.c_) v = -v;
    return f;
}

BiSeries operator+(const BiSeries& l, const BiSeries& r) {
    require_same_vars(l, r);
    BiSeries f(l.vx_, l.vy_, std::min(l.order_, r.order_));
    for (int d = 0; d <= f.order_; ++d)
        for (int j = 0; j <= d; ++j) {
            int i = d - j;
            f.c_[f.idx(i, j)] = l.c_[l.idx(i, j)] + r.c_[r.idx(i, j)];
        }
    return f;
}

BiSeries operator-(const BiSeries& l, const BiSeries& r) { return l + (-r); }

BiSeries operator*(const BiSeries& l, const BiSeries& r) {
    require_same_vars(l, r);
    BiSeries f(l.vx_, l.vy_, std::min(l.order_, r.order_));
    const int n = f.order_;
    for (int dl = 0; dl <= n; ++dl)
        for (int jl = 0; jl <= dl; ++jl) {
            const Scalar& a = l.c_[l.idx(dl - jl, jl)];
            if (a.is_zero()) continue;
            for (int dr = 0; dr + dl <= n; ++dr)
                for (int jr = 0; jr <= dr; ++jr) {
                    const Scalar& b = r.c_[r.idx(dr - jr, jr)];
                    if (b.is_zero()) continue;
                    int i = dl - jl + dr - jr, j = jl + jr;
                    f.c_[f.idx(i, j)] += a * b;
                }
        }
    return f;
}

BiSeries operator*(const Scalar& s, const BiSeries& f) {
    BiSeries g(f);
    for (auto& v : g.c_) v = s * v;
    return g;
}

bool operator==(const BiSeries& l, const BiSeries& r) {
    return l.vx_ == r.vx_ && l.vy_ == r.vy_ && l.order_ == r.order_ && l.c_ == r.c_;
}

UniSeries BiSeries::x_slice(int k) const {
    if (k < 0 || k > order_) fail(errc::invalid_parameter, "slice beyond valid order");
    UniSeries f(vy_, order_ - k);
    for (int j = 0; j + k <= order_; ++j) f.set_coeff(j, coeff(k, j));
    return f;
}

UniSeries BiSeries::y_slice(int k) const {
    if (k < 0 || k > order_) fail(errc::invalid_parameter, "slice beyond valid order");
    UniSeries f(vx_, order_ - k);
    for (int i = 0; i + k <= order_; ++i) f.set_coeff(i, coeff(i, k));
    return f;
}

UniSeries BiSeries::on_x_axis() const {
    UniSeries f(vx_, order_);
    for (int i = 0; i <= order_; ++i) f.set_coeff(i, coeff(i, 0));
    return f;
}

UniSeries BiSeries::on_y_axis() const {
    UniSeries f(vy_, order_);
    for (int j = 0; j <= order_; ++j) f.set_coeff(j, coeff(0, j));
    return f;
}

BiSeries BiSeries::swapped_vars() const {
    BiSeries f(vx_, vy_, order_);
    for (int d = 0; d <= order_; ++d)
        for (int j = 0; j <= d; ++j) f.c_[f.idx(d - j, j)] = c_[idx(j, d - j)];
    return f;
}

std::string BiSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= order_; ++d)
        for (int i = d; i >= 0; --i) {
            int j = d - i;
            std::string mono = monomial_str(vx_, i);
            std::string my = monomial_str(vy_, j);
            if (!mono.empty() && !my.empty()) mono += "*";
            mono += my;
            append_term(os, first, c_[idx(i, j)], mono);
        }
    if (first) os << "0";
    os << " + O(deg " << order_ + 1 << ")";
    return os.str();
}

BiSeries derivative_x(const BiSeries& f) {
    if (f.order() == 0)
        fail(errc::invalid_parameter, "derivative exhausts the valid order");
    BiSeries g(f.var_x(), f.var_y(), f.order() - 1);
    for (int d = 0; d <= g.order(); ++d)
        for (int j = 0; j <= d; ++j) {
            int i = d - j;
            g.set_coeff(i, j, Scalar(i + 1) * f.coeff(i + 1, j));
        }
    return g;
}

BiSeries derivative_y(const BiSeries& f) {
    if (f.order() == 0)
        fail(errc::invalid_parameter, "derivative exhausts the valid order");
    BiSeries g(f.var_x(), f.var_y(), f.order() - 1);
    for (int d = 0; d <= g.order(); ++d)
        for (int j = 0; j <= d; ++j) {
            int i = d - j;
            g.set_coeff(i, j, Scalar(j + 1) * f.coeff(i, j + 1));
        }
    return g;
}

BiSeries integrate_x(const BiSeries& f) {
    BiSeries g(f.var_x(), f.var_y(), f.order() + 1);
    for (int d = 0; d <= f.order(); ++d)
        for (int j = 0; j <= d; ++j) {
            int i = d - j;
            g.set_coeff(i + 1, j, f.coeff(i, j) / Scalar(i + 1));
        }
    return g;
}

BiSeries integrate_y(const BiSeries& f) {
    BiSeries g(f.var_x(), f.var_y(), f.order() + 1);
    for (int d = 0; d <= f.order(); ++d)
        for (int j = 0; j <= d; ++j) {
            int i = d - j;
            g.set_coeff(i, j + 1, f.coeff(i, j) / Scalar(j + 1));
        }
    return g;
}

BiSeries reciprocal(const BiSeries& f) {
    if (f.constant_term().is_zero())
        fail(errc::division_by_non_unit, "reciprocal of series with zero constant term");
    const Scalar inv0 = f.constant_term().inverse();
    const int n = f.order();
    BiSeries g = BiSeries::constant(f.var_x(), f.var_y(), inv0, n);
    for (int d = 1; d <= n; ++d) {
        // With g filled below degree d, (f*g) at degree d is the defect.
        BiSeries prod = f * g;
        for (int j = 0; j <= d; ++j) {
            int i = d - j;
            g.set_coeff(i, j, -(prod.coeff(i, j) * inv0));
        }
    }
    return g;
}

BiSeries substitute(const UniSeries& f, const BiSeries& g) {
    if (!g.constant_term().is_zero())
        fail(errc::composition_not_local, "inner series has nonzero constant term");
    const int n = std::min(f.order(), g.order());
    const BiSeries gn = g.truncated(n);
    BiSeries result = BiSeries::constant(g.var_x(), g.var_y(), f.coeff(std::min(f.order(), n)), n);
    for (int k = std::min(f.order(), n) - 1; k >= 0; --k) {
        result = result * gn;
        result.set_coeff(0, 0, result.coeff(0, 0) + f.coeff(k));
    }
    return result;
}

namespace {

// Zero-pads the coefficient table up to `order`.  Only sound when every
// product against the padded series has a cofactor of valuation high
// enough to push the padded degrees past the truncation.
BiSeries zero_extended(const BiSeries& f, int order) {
    if (order <= f.order()) return f.truncated(order);
    BiSeries g(f.var_x(), f.var_y(), order);
    for (int d = 0; d <= f.order(); ++d)
        for (int j = 0; j <= d; ++j) g.set_coeff(d - j, j, f.coeff(d - j, j));
    return g;
}

}  // namespace

BiSeries substitute(const BiSeries& f, const BiSeries& gx, const BiSeries& gy) {
    require_same_vars(gx, gy);
    if (!gx.constant_term().is_zero() || !gy.constant_term().is_zero())
        fail(errc::composition_not_local, "inner series has nonzero constant term");
    const int n = std::min(f.order(), std::min(gx.order(), gy.order()));
    const BiSeries gxn = gx.truncated(n);
    const BiSeries gyn = gy.truncated(n);
    BiSeries result(gx.var_x(), gx.var_y(), n);
    BiSeries xpow = BiSeries::constant(gx.var_x(), gx.var_y(), Scalar(1), n);
    for (int i = 0; i <= n; ++i) {
        // f restricted to x-degree i, composed with gy in the y slot.  The
        // slice is only valid to degree n-i, but gx^i has valuation >= i,
        // so zero-extending it keeps the order-n product exact.
        UniSeries fi = f.x_slice(i);
        BiSeries fi_of_gy = substitute(fi.truncated(std::min(fi.order(), n)), gyn);
        result = result + xpow * zero_extended(fi_of_gy, n);
        if (i < n) xpow = xpow * gxn;
    }
    return result;
}

BiSeries embed_x(const UniSeries& f, const std::string& vy) {
    BiSeries g(f.var(), vy, f.order());
    for (int i = 0; i <= f.order(); ++i) g.set_coeff(i, 0, f.coeff(i));
    return g;
}

BiSeries embed_y(const UniSeries& f, const std::string& vx) {
    BiSeries g(vx, f.var(), f.order());
    for (int j = 0; j <= f.order(); ++j) g.set_coeff(0, j, f.coeff(j));
    return g;
}

bool equal_up_to(const BiSeries& l, const BiSeries& r, int order) {
    require_same_vars(l, r);
    if (order > l.order() || order > r.order())
        fail(errc::invalid_parameter, "comparison beyond valid order");
    for (int d = 0; d <= order; ++d)
        for (int j = 0; j <= d; ++j)
            if (l.coeff(d - j, j) != r.coeff(d - j, j)) return false;
    return true;
}

BiSeries log_mixed_partial(const BiSeries& f) {
    if (f.constant_term().is_zero())
        fail(errc::division_by_non_unit, "log of series with zero constant term");
    // (log f)_xy = d/dx (f_y / f); stays in the coefficient field.
    return derivative_x(derivative_y(f) * reciprocal(f.truncated(f.order() - 1)));
}

}  // namespace webrank
