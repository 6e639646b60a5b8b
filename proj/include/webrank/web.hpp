#ifndef WEBRANK_WEB_HPP
#define WEBRANK_WEB_HPP

#include <vector>

#include "webrank/series.hpp"

namespace webrank {

/// A foliation germ given by the coefficients of a defining 1-form
/// a dx + b dy; defined up to multiplication by a unit series, with
/// (a, b) not both vanishing at the origin.
class Foliation {
  public:
    Foliation(BiSeries a, BiSeries b);

    const BiSeries& a() const { return a_; }
    const BiSeries& b() const { return b_; }
    int order() const { return a_.order(); }

    /// Slope chart -a/b; DivisionByNonUnit when b(0,0) = 0 (vertical leaf).
    BiSeries slope() const;

  private:
    BiSeries a_, b_;
};

/// a_l * b_r - a_r * b_l; a unit series exactly when the two foliations
/// are transverse at the origin.
BiSeries transversality(const Foliation& l, const Foliation& r);

Foliation foliation_from_first_integral(const BiSeries& first_integral);
Foliation foliation_from_slope(const BiSeries& slope);

/// Ordered germ of 3 or 4 pairwise transverse foliations.
class PlanarWeb {
  public:
    explicit PlanarWeb(std::vector<Foliation> foliations);

    int size() const { return static_cast<int>(fols_.size()); }
    const Foliation& foliation(int i) const { return fols_.at(i); }
    int order() const { return order_; }

    /// The 3-subweb on foliations i < j < k (0-based), order preserved.
    PlanarWeb subweb(int i, int j, int k) const;

  private:
    std::vector<Foliation> fols_;
    int order_;
};

/// The 4-web (dx, dy, dy - p dx, dy - C p dx) in slope coordinates.
class SlopeWeb4 {
  public:
    SlopeWeb4(BiSeries p, Scalar c);

    const BiSeries& p() const { return p_; }
    const Scalar& C() const { return c_; }
    PlanarWeb to_web() const;

  private:
    BiSeries p_;
    Scalar c_;
};

SlopeWeb4 make_wc(const BiSeries& p, const Scalar& c);

/// Inverse of make_wc for adapted 4-webs: the first two foliations must
/// be proportional to dx and dy, and the cross-ratio jet must be constant.
SlopeWeb4 to_slope_form(const PlanarWeb& web);

/// Cross-ratio jet of a 4-web, calibrated so cross_ratio(make_wc(p, C)) = C.
BiSeries cross_ratio(const PlanarWeb& web);

/// Blaschke curvature jet of a 3-web, valid to order N-2; calibrated so
/// the web (dx, dy, dy - p dx) has K = (log p)_xy.
BiSeries blaschke_curvature(const PlanarWeb& web);

/// True when the curvature jet vanishes identically up to its valid order.
bool is_hexagonal(const PlanarWeb& web);

}  // namespace webrank

#endif
