#ifndef WEBRANK_SCALAR_HPP
#define WEBRANK_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "webrank/errors.hpp"

namespace webrank {

/// Exact coefficient field element: a rational number, or an element
/// a + b*sqrt(c) of the quadratic extension Q(sqrt(c)) for a fixed
/// nonzero non-square rational c.  Rational values are always kept in
/// lowest terms with positive denominator (mpq canonical form), and a
/// quadratic value with b = 0 demotes back to rational mode, so equality
/// is plain field-wise comparison.  Two quadratic values with different
/// c never interoperate (FieldMismatch).
class Scalar {
  public:
    Scalar() : a_(0), quad_(false) {}
    Scalar(long n) : a_(n), quad_(false) {}
    Scalar(long num, long den);
    explicit Scalar(const mpq_class& q) : a_(q), quad_(false) { a_.canonicalize(); }

    /// Parses "num", "num/den" (exact, decimal-free).
    static Scalar from_string(const std::string& text);
    /// a + b*sqrt(c); c must be a nonzero non-square rational.
    static Scalar quadratic(const mpq_class& a, const mpq_class& b, const mpq_class& c);

    bool is_rational() const { return !quad_; }
    bool is_zero() const { return !quad_ && a_ == 0; }
    bool is_one() const { return !quad_ && a_ == 1; }

    /// Rational part (the value itself when rational).
    const mpq_class& rat_a() const { return a_; }
    /// sqrt(c) coordinate; zero when rational.
    const mpq_class& rat_b() const { return b_; }
    /// The extension constant; only meaningful in quadratic mode.
    const mpq_class& ext_c() const { return c_; }

    /// The rational value; FieldMismatch when the value is irrational.
    const mpq_class& as_rational() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar l, const Scalar& r) { return l += r; }
    friend Scalar operator-(Scalar l, const Scalar& r) { return l -= r; }
    friend Scalar operator*(Scalar l, const Scalar& r) { return l *= r; }
    friend Scalar operator/(Scalar l, const Scalar& r) { return l /= r; }

    friend bool operator==(const Scalar& l, const Scalar& r) {
        if (l.quad_ != r.quad_) return false;
        if (!l.quad_) return l.a_ == r.a_;
        return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_;
    }
    friend bool operator!=(const Scalar& l, const Scalar& r) { return !(l == r); }

    Scalar inverse() const;

    /// Canonical text: "p/q" with q omitted when 1.  Quadratic values
    /// render as "p/q+r/s*sqrt(m/n)" (JSON uses the structured form).
    std::string str() const;

    /// True when the value is the square of a rational.
    bool is_rational_square() const;
    /// The nonnegative rational square root; precondition is_rational_square().
    Scalar rational_sqrt() const;
    /// sqrt of a rational: exact rational root when possible, otherwise
    /// the generator of Q(sqrt(c)).  InvalidParameter on zero input or
    /// quadratic input.
    Scalar sqrt_in_extension() const;

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

  private:
    void normalize();
    static void require_same_field(const Scalar& l, const Scalar& r);

    mpq_class a_;
    mpq_class b_;
    mpq_class c_;
    bool quad_ = false;
};

bool mpq_is_square(const mpq_class& q);
mpq_class mpq_sqrt_exact(const mpq_class& q);

}  // namespace webrank

#endif
