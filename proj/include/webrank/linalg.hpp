#ifndef WEBRANK_LINALG_HPP
#define WEBRANK_LINALG_HPP

#include <vector>

#include "webrank/scalar.hpp"

namespace webrank {

/// Dense matrix of exact scalars.
class Matrix {
  public:
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {
        if (rows < 0 || cols < 0) fail(errc::invalid_parameter, "negative matrix dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Scalar& at(int i, int j) const { return a_[i * cols_ + j]; }
    Scalar& at(int i, int j) { return a_[i * cols_ + j]; }

    friend bool operator==(const Matrix& l, const Matrix& r) {
        return l.rows_ == r.rows_ && l.cols_ == r.cols_ && l.a_ == r.a_;
    }

  private:
    int rows_, cols_;
    std::vector<Scalar> a_;
};

int rank(const Matrix& m);

/// Exact basis of the right null space.  Each vector is normalized so its
/// first nonzero entry is 1; vectors are ordered by their free-column
/// index, so the output is deterministic.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

std::vector<Scalar> mat_vec(const Matrix& m, const std::vector<Scalar>& v);

/// True when v lies in the row space of m (exact rank comparison).
bool row_space_contains(const Matrix& m, const std::vector<Scalar>& v);

}  // namespace webrank

#endif
