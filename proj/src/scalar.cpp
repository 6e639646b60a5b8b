#include "webrank/scalar.hpp"

#include <ostream>

namespace webrank {

Scalar::Scalar(long num, long den) : a_(num, den), quad_(false) {
    if (den == 0) fail(errc::invalid_parameter, "zero denominator");
    a_.canonicalize();
}

Scalar Scalar::from_string(const std::string& text) {
    if (text.empty()) fail(errc::parse_error, "empty scalar string");
    for (char ch : text) {
        if (!(ch == '-' || ch == '+' || ch == '/' || (ch >= '0' && ch <= '9')))
            fail(errc::parse_error, "bad character in scalar '" + text + "'");
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        fail(errc::parse_error, "unparsable scalar '" + text + "'");
    if (q.get_den() == 0) fail(errc::parse_error, "zero denominator in '" + text + "'");
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::quadratic(const mpq_class& a, const mpq_class& b, const mpq_class& c) {
    mpq_class cc(c);
    cc.canonicalize();
    if (cc == 0) fail(errc::invalid_parameter, "quadratic extension constant is zero");
    if (mpq_is_square(cc))
        fail(errc::invalid_parameter, "quadratic extension constant is a rational square");
    Scalar s;
    s.a_ = a;
    s.b_ = b;
    s.c_ = cc;
    s.a_.canonicalize();
    s.b_.canonicalize();
    s.quad_ = true;
    s.normalize();
    return s;
}

void Scalar::normalize() {
    if (quad_ && b_ == 0) {
        quad_ = false;
        b_ = 0;
        c_ = 0;
    }
}

void Scalar::require_same_field(const Scalar& l, const Scalar& r) {
    if (l.quad_ && r.quad_ && l.c_ != r.c_)
        fail(errc::field_mismatch, "mixing sqrt(" + mpq_class(l.c_).get_str() + ") with sqrt(" +
                                       mpq_class(r.c_).get_str() + ")");
}

const mpq_class& Scalar::as_rational() const {
    if (quad_) fail(errc::field_mismatch, "value " + str() + " is not rational");
    return a_;
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    s.a_ = -s.a_;
    s.b_ = -s.b_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same_field(*this, o);
    if (o.quad_ && !quad_) {
        quad_ = true;
        c_ = o.c_;
    }
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same_field(*this, o);
    const mpq_class c = quad_ ? c_ : o.c_;
    mpq_class na = a_ * o.a_ + b_ * o.b_ * c;
    mpq_class nb = a_ * o.b_ + b_ * o.a_;
    a_ = na;
    b_ = nb;
    if (o.quad_ && !quad_) {
        quad_ = true;
        c_ = o.c_;
    }
    normalize();
    return *this;
}

Scalar Scalar::inverse() const {
    if (!quad_) {
        if (a_ == 0) fail(errc::division_by_non_unit, "division by zero");
        return Scalar(mpq_class(1 / a_));
    }
    // 1/(a+b*sqrt(c)) = (a-b*sqrt(c))/(a^2-b^2 c); the norm cannot vanish
    // for nonzero values since c is not a square.
    mpq_class norm = a_ * a_ - b_ * b_ * c_;
    if (norm == 0) fail(errc::internal_invariant_violation, "zero norm in Q(sqrt(c))");
    return quadratic(a_ / norm, -b_ / norm, c_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string Scalar::str() const {
    if (!quad_) return a_.get_str();
    return a_.get_str() + "+" + b_.get_str() + "*sqrt(" + c_.get_str() + ")";
}

bool Scalar::is_rational_square() const { return !quad_ && mpq_is_square(a_); }

Scalar Scalar::rational_sqrt() const {
    if (!is_rational_square())
        fail(errc::invalid_parameter, "not a rational square: " + str());
    return Scalar(mpq_sqrt_exact(a_));
}

Scalar Scalar::sqrt_in_extension() const {
    if (quad_) fail(errc::invalid_parameter, "nested quadratic extension");
    if (a_ == 0) fail(errc::invalid_parameter, "sqrt of zero scale");
    if (mpq_is_square(a_)) return Scalar(mpq_sqrt_exact(a_));
    return quadratic(0, 1, a_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

bool mpq_is_square(const mpq_class& q) {
    if (q < 0) return false;
    return mpz_perfect_square_p(q.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(q.get_den().get_mpz_t());
}

mpq_class mpq_sqrt_exact(const mpq_class& q) {
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(den.get_mpz_t(), q.get_den().get_mpz_t());
    return mpq_class(num, den);
}

const char* errc_name(errc code) {
    switch (code) {
        case errc::variable_mismatch: return "VariableMismatch";
        case errc::division_by_non_unit: return "DivisionByNonUnit";
        case errc::composition_not_local: return "CompositionNotLocal";
        case errc::not_invertible_at_origin: return "NotInvertibleAtOrigin";
        case errc::singular_foliation: return "SingularFoliation";
        case errc::not_transverse: return "NotTransverse";
        case errc::degenerate_cross_ratio: return "DegenerateCrossRatio";
        case errc::not_adapted: return "NotAdapted";
        case errc::non_constant_cross_ratio: return "NonConstantCrossRatio";
        case errc::internal_invariant_violation: return "InternalInvariantViolation";
        case errc::not_curved_at_origin: return "NotCurvedAtOrigin";
        case errc::strict_form_required: return "StrictFormRequired";
        case errc::no_unit_direction: return "NoUnitDirection";
        case errc::invalid_parameter: return "InvalidParameter";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

bool errc_is_degeneracy(errc code) {
    switch (code) {
        case errc::not_transverse:
        case errc::not_curved_at_origin:
        case errc::no_unit_direction:
        case errc::singular_foliation:
        case errc::not_adapted:
        case errc::non_constant_cross_ratio:
        case errc::not_invertible_at_origin:
        case errc::division_by_non_unit:
            return true;
        default:
            return false;
    }
}

}  // namespace webrank
