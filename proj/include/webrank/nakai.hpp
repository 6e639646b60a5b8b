#ifndef WEBRANK_NAKAI_HPP
#define WEBRANK_NAKAI_HPP

#include <array>
#include <map>
#include <string>

#include "webrank/abelian.hpp"
#include "webrank/series.hpp"

namespace webrank {

/// Data for the universal rank-1 construction: fix r(x), s(y) and one
/// trace of the unknown slope, then march the abelian-relation equation
/// order by order.
struct BuildSpec {
    enum class Side { x_march, y_march };

    UniSeries r;      // in x
    UniSeries s;      // in y
    UniSeries trace;  // p(0, y) for the x-march, p(x, 0) for the y-march
    Side side = Side::x_march;
    Scalar C = Scalar(-1);
    int order = 6;
};

/// Unique slope with the given trace solving the abelian-relation
/// equation for (r, s, C); the residual vanishes to order - 1.  The
/// x-march needs r(0) != 0, the y-march s(0) != 0; NoUnitDirection when
/// both vanish.
BiSeries solve_p(const BuildSpec& spec);

struct NakaiReport {
    Scalar K0;  // (log p)_xy at the origin
    bool nakai = false;
    Scalar C;
    std::array<bool, 4> hexagonal{};  // 3-subwebs, indexed by the omitted foliation
};

NakaiReport check_nakai(const BiSeries& p, const Scalar& C, int order);

/// Series solution of t u'^2 + u u' - 1/2 = 0 with u(0) = a != 0; the
/// constant term forces u(0) u'(0) = 1/2 and every higher coefficient is
/// determined linearly with leading factor (k+1) a.
UniSeries ode_u(const Scalar& a, int order);

struct Certificate {
    bool pass = false;
    int residual_order = 0;
};

/// The harmonic 4-web (x, y, f, g) with f = x^3/6 + y + x u(xy) and
/// g = x^3/6 + y - x u(xy), packaged with its exactness certificates.
struct ExampleBundle {
    Scalar a;
    int order = 0;
    UniSeries u;
    BiSeries f, g;
    BiSeries p;  // slope of the f-foliation
    AbelianRelation relation;
    Scalar origin_curvature;  // of the (x, y, f) subweb
    std::map<std::string, Certificate> certificates;

    bool all_pass() const;
};

ExampleBundle harmonic_example(const Scalar& a, int order);

/// Names of the bundle certificates, in report order.
extern const std::array<const char*, 5> kBundleCertificates;

}  // namespace webrank

#endif
