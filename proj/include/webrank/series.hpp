#ifndef WEBRANK_SERIES_HPP
#define WEBRANK_SERIES_HPP

#include <string>
#include <vector>

#include "webrank/scalar.hpp"

namespace webrank {

/// Truncated power series in one variable with exact coefficients.
/// `order()` is the valid truncation order: coefficients 0..order() are
/// exact, nothing is stored beyond it.  Every operation computes the
/// valid order of its result (min of the inputs, shifted by calculus
/// rules), so a coefficient query past the valid order is always a bug
/// and throws.
class UniSeries {
  public:
    UniSeries(std::string var, int order);

    static UniSeries constant(const std::string& var, const Scalar& value, int order);
    static UniSeries identity(const std::string& var, int order);
    static UniSeries monomial(const std::string& var, int degree, const Scalar& coeff, int order);

    const std::string& var() const { return var_; }
    int order() const { return order_; }

    const Scalar& coeff(int k) const;
    void set_coeff(int k, const Scalar& value);

    bool is_zero() const;
    const Scalar& constant_term() const { return coeff(0); }

    UniSeries truncated(int new_order) const;
    UniSeries renamed(const std::string& var) const;

    UniSeries operator-() const;
    friend UniSeries operator+(const UniSeries& l, const UniSeries& r);
    friend UniSeries operator-(const UniSeries& l, const UniSeries& r);
    friend UniSeries operator*(const UniSeries& l, const UniSeries& r);
    friend UniSeries operator*(const Scalar& s, const UniSeries& f);
    friend bool operator==(const UniSeries& l, const UniSeries& r);
    friend bool operator!=(const UniSeries& l, const UniSeries& r) { return !(l == r); }

    std::string str() const;

  private:
    std::string var_;
    int order_;
    std::vector<Scalar> c_;
};

UniSeries derivative(const UniSeries& f);
UniSeries integrate(const UniSeries& f);
/// 1/f; DivisionByNonUnit when f(0) = 0.
UniSeries reciprocal(const UniSeries& f);
/// f(g) for g with g(0) = 0; result carries g's variable.
UniSeries substitute(const UniSeries& f, const UniSeries& g);
/// Compositional inverse: f(0) = 0, f'(0) != 0; substitute(f, result) = id.
UniSeries invert_functional(const UniSeries& f);
/// Square root with prescribed constant term r0 (r0^2 = f(0)).
UniSeries sqrt_with_root(const UniSeries& f, const Scalar& r0);
bool equal_up_to(const UniSeries& l, const UniSeries& r, int order);

/// Truncated power series in two variables, dense triangular table over
/// total degree <= order().  Same valid-order discipline as UniSeries.
class BiSeries {
  public:
    BiSeries(std::string var_x, std::string var_y, int order);

    static BiSeries constant(const std::string& vx, const std::string& vy, const Scalar& value,
                             int order);
    /// x^i y^j with unit coefficient.
    static BiSeries monomial(const std::string& vx, const std::string& vy, int i, int j,
                             const Scalar& coeff, int order);

    const std::string& var_x() const { return vx_; }
    const std::string& var_y() const { return vy_; }
    int order() const { return order_; }

    const Scalar& coeff(int i, int j) const;
    void set_coeff(int i, int j, const Scalar& value);

    bool is_zero() const;
    /// All positive-degree coefficients vanish up to the valid order.
    bool is_constant() const;
    const Scalar& constant_term() const { return coeff(0, 0); }

    BiSeries truncated(int new_order) const;

    BiSeries operator-() const;
    friend BiSeries operator+(const BiSeries& l, const BiSeries& r);
    friend BiSeries operator-(const BiSeries& l, const BiSeries& r);
    friend BiSeries operator*(const BiSeries& l, const BiSeries& r);
    friend BiSeries operator*(const Scalar& s, const BiSeries& f);
    friend bool operator==(const BiSeries& l, const BiSeries& r);
    friend bool operator!=(const BiSeries& l, const BiSeries& r) { return !(l == r); }

    /// Coefficient of x^k as a series in y, to the degrees the triangle holds.
    UniSeries x_slice(int k) const;
    /// Coefficient of y^k as a series in x.
    UniSeries y_slice(int k) const;
    /// Restriction to the x-axis (y = 0) / y-axis (x = 0).
    UniSeries on_x_axis() const;
    UniSeries on_y_axis() const;
    /// Swaps the two variables: result(x, y) = this(y, x) with names kept.
    BiSeries swapped_vars() const;

    std::string str() const;

  private:
    int idx(int i, int j) const { return (i + j) * (i + j + 1) / 2 + j; }

    std::string vx_, vy_;
    int order_;
    std::vector<Scalar> c_;
};

BiSeries derivative_x(const BiSeries& f);
BiSeries derivative_y(const BiSeries& f);
BiSeries integrate_x(const BiSeries& f);
BiSeries integrate_y(const BiSeries& f);
BiSeries reciprocal(const BiSeries& f);
/// f(g) for univariate f and bivariate g with g(0,0) = 0.
BiSeries substitute(const UniSeries& f, const BiSeries& g);
/// f(gx, gy) for bivariate f; gx, gy vanish at the origin.
BiSeries substitute(const BiSeries& f, const BiSeries& gx, const BiSeries& gy);

/// Embeds a univariate series as a bivariate one in the x (resp. y) slot.
BiSeries embed_x(const UniSeries& f, const std::string& vy);
BiSeries embed_y(const UniSeries& f, const std::string& vx);

bool equal_up_to(const BiSeries& l, const BiSeries& r, int order);
/// Mixed partial of log f, valid to order f.order() - 2; f(0,0) must be a unit.
BiSeries log_mixed_partial(const BiSeries& f);

}  // namespace webrank

#endif
