#ifndef WEBRANK_ABELIAN_HPP
#define WEBRANK_ABELIAN_HPP

#include <utility>
#include <vector>

#include "webrank/linalg.hpp"
#include "webrank/series.hpp"

namespace webrank {

/// An abelian relation of the 4-web (dx, dy, dy - p dx, dy - C p dx),
/// encoded by the four coefficient functions r(x), s(y), c, e with
/// r dx + s dy + c (dy - p dx) + e (dy - C p dx) = 0 and all four forms
/// closed.  The check_* flags report which identities hold at jet level
/// (evaluated to `residual_order`); reconstruct_relation accepts any
/// (r, s) pair and reports rather than rejects.
struct AbelianRelation {
    UniSeries r;
    UniSeries s;
    BiSeries c;
    BiSeries e;
    Scalar C;
    int residual_order = 0;
    bool check_sum = false;       // s + c + e = 0
    bool check_collinear = false; // r - p c - C p e = 0
    bool check_closed_c = false;  // c_x + (c p)_y = 0
    bool check_closed_e = false;  // e_x + C (e p)_y = 0

    bool valid() const { return check_sum && check_collinear && check_closed_c && check_closed_e; }
};

struct RankReport {
    int order = 0;
    std::vector<int> dims;  // kernel dimension at each order 0..order
    bool stabilized = false;
    int rank = 0;
    std::vector<std::pair<UniSeries, UniSeries>> basis;  // (r, s) pairs
};

struct Degree3Report {
    Matrix m;
    Scalar det;
    bool generic;
};

/// Left-hand side of the abelian-relation equation:
/// r'(x) p - r(x) p_x + C (s'(y) p^3 + s(y) p^2 p_y),
/// valid to one order below the inputs.
BiSeries star_residual(const UniSeries& r, const UniSeries& s, const BiSeries& p, const Scalar& C);

/// Linear system on the Taylor coefficients (r_0..r_N, s_0..s_N): one row
/// per monomial x^i y^j with i+j <= N-1 of the equation above.  Rows of
/// degree <= N-1 are exact constraints: truncation tails of r and s only
/// enter at degree >= N.
Matrix build_system(const BiSeries& p, const Scalar& C, int order);

/// Kernel dimensions of build_system at every order up to `order`; the
/// rank is the dimension at the top order together with a stabilization
/// flag (dim_N == dim_{N-1}).
RankReport rank_report(const BiSeries& p, const Scalar& C, int order);

/// The degree-3 coefficient matrix in (r_0, s_0) for a strict normal form
/// with h-2-jet a x + b y + u x^2 + v x y + w y^2.
Degree3Report degree3_analysis(const Scalar& a, const Scalar& b, const Scalar& u, const Scalar& v,
                               const Scalar& w);

AbelianRelation reconstruct_relation(const UniSeries& r, const UniSeries& s, const BiSeries& p,
                                     const Scalar& C);

/// Carries a relation of W_C to one of W_D on the same p.  The working
/// map is (r, s) -> (r, (C/D) s): it is the one that annihilates the
/// residual of the equation with C replaced by D, and it round-trips.
AbelianRelation transfer_relation(const AbelianRelation& rel, const BiSeries& p, const Scalar& D);

}  // namespace webrank

#endif
