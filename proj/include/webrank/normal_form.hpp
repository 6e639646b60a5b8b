#ifndef WEBRANK_NORMAL_FORM_HPP
#define WEBRANK_NORMAL_FORM_HPP

#include "webrank/series.hpp"

namespace webrank {

/// Result of reducing a curved 3-web (dx, dy, dy - p dx) to the normal
/// form 1 + xy(1 + h).
///
/// `X`, `Y` are the axis-flattening changes: replaying transform_slope
/// with them on the input gives the weak form 1 + c*xy(1 + h_weak).
/// When `swapped` is set the two axes were then exchanged (slope q(x,y) =
/// 1/p_weak(y,x)), which flips the sign of the xy-coefficient; `mu` is
/// the diagonal scale applied last, with mu^2 equal to the oriented
/// coefficient.  `h` always belongs to the final `p_normal`.
struct NormalizedWeb {
    BiSeries h;
    Scalar c;        // xy-coefficient of the weak form (curvature at the origin)
    UniSeries X;
    UniSeries Y;
    Scalar mu;
    bool swapped = false;
    bool achieved_strict = false;
    BiSeries p_weak;    // 1 + c*xy*(1 + h_weak), before orientation/scaling
    BiSeries p_normal;  // final slope: strict 1 + xy(1+h), else the oriented weak form
};

enum class ScalarField { rational, quadratic };

/// Slope of the same foliation after the coordinate change
/// (x, y) -> (X(x), Y(y)): result(X(x), Y(y)) = Y'(y) p(x, y) / X'(x).
BiSeries transform_slope(const BiSeries& p, const UniSeries& X, const UniSeries& Y);

/// Lemma-style reduction of (dx, dy, dy - p dx), p a unit with nonzero
/// curvature at the origin.  Stage 1 flattens p to 1 on both axes by
/// quadratures; an axis swap reorients a negative xy-coefficient; the
/// final diagonal scale reaches 1 + xy(1 + h) exactly over Q when the
/// oriented coefficient is a rational square, over Q(sqrt(c)) in
/// quadratic mode, and is skipped otherwise (weak form, strict = false).
NormalizedWeb normalize(const BiSeries& p, int order,
                        ScalarField field = ScalarField::quadratic);

/// Coefficients (a, b) of x and y in h; requires the strict form.
std::pair<Scalar, Scalar> invariants_3jet(const NormalizedWeb& nw);

}  // namespace webrank

#endif
