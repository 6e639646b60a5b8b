#include "webrank/linalg.hpp"

namespace webrank {

namespace {

struct Echelon {
    Matrix r;
    std::vector<int> pivot_cols;
};

// Gauss-Jordan over the exact coefficient field; first nonzero entry in
// column order picks the pivot, which keeps the reduction deterministic.
Echelon reduce(Matrix m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<int> pivots;
    int lead = 0;
    for (int col = 0; col < cols && lead < rows; ++col) {
        int pivot = -1;
        for (int i = lead; i < rows; ++i)
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != lead)
            for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(lead, j));
        const Scalar inv = m.at(lead, col).inverse();
        for (int j = 0; j < cols; ++j) m.at(lead, j) = m.at(lead, j) * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == lead || m.at(i, col).is_zero()) continue;
            const Scalar factor = m.at(i, col);
            for (int j = 0; j < cols; ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(lead, j);
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(m), std::move(pivots)};
}

}  // namespace

int rank(const Matrix& m) { return static_cast<int>(reduce(m).pivot_cols.size()); }

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
    const Echelon e = reduce(m);
    const int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(cols, Scalar(0));
        v[f] = Scalar(1);
        for (size_t k = 0; k < e.pivot_cols.size(); ++k)
            v[e.pivot_cols[k]] = -e.r.at(static_cast<int>(k), f);
        // Normalize the first nonzero entry to 1.
        for (const Scalar& entry : v) {
            if (!entry.is_zero()) {
                const Scalar inv = entry.inverse();
                for (Scalar& x : v) x = x * inv;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Scalar> mat_vec(const Matrix& m, const std::vector<Scalar>& v) {
    if (static_cast<int>(v.size()) != m.cols())
        fail(errc::invalid_parameter, "matrix-vector size mismatch");
    std::vector<Scalar> out(m.rows(), Scalar(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

bool row_space_contains(const Matrix& m, const std::vector<Scalar>& v) {
    if (static_cast<int>(v.size()) != m.cols())
        fail(errc::invalid_parameter, "row vector size mismatch");
    Matrix ext(m.rows() + 1, m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) ext.at(i, j) = m.at(i, j);
    for (int j = 0; j < m.cols(); ++j) ext.at(m.rows(), j) = v[j];
    return rank(ext) == rank(m);
}

}  // namespace webrank
