#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fastmix {

// Dense row-major square matrix; everything in this project is desk-scale.
struct DenseMatrix {
    int n = 0;
    std::vector<double> a;

    DenseMatrix() = default;
    explicit DenseMatrix(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0.0) {}

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    static DenseMatrix identity(int n_) {
        DenseMatrix m(n_);
        for (int i = 0; i < n_; ++i) m.at(i, i) = 1.0;
        return m;
    }
};

inline DenseMatrix multiply(const DenseMatrix& x, const DenseMatrix& y) {
    if (x.n != y.n) throw std::invalid_argument("matrix size mismatch");
    DenseMatrix z(x.n);
    for (int i = 0; i < x.n; ++i) {
        for (int k = 0; k < x.n; ++k) {
            double v = x.at(i, k);
            if (v == 0.0) continue;
            for (int j = 0; j < x.n; ++j) z.at(i, j) += v * y.at(k, j);
        }
    }
    return z;
}

// Row vector times matrix.
inline std::vector<double> multiply_left(const std::vector<double>& mu, const DenseMatrix& m) {
    if (static_cast<int>(mu.size()) != m.n) throw std::invalid_argument("vector size mismatch");
    std::vector<double> out(mu.size(), 0.0);
    for (int i = 0; i < m.n; ++i) {
        double v = mu[i];
        if (v == 0.0) continue;
        for (int j = 0; j < m.n; ++j) out[j] += v * m.at(i, j);
    }
    return out;
}

// Solves A x = b by Gaussian elimination with partial pivoting.
inline std::vector<double> solve_linear_system(DenseMatrix a, std::vector<double> b) {
    int n = a.n;
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("rhs size mismatch");
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(a.at(r, col)) > std::fabs(a.at(pivot, col))) pivot = r;
        if (std::fabs(a.at(pivot, col)) < 1e-300)
            throw std::domain_error("singular linear system");
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            std::swap(b[pivot], b[col]);
        }
        for (int r = col + 1; r < n; ++r) {
            double factor = a.at(r, col) / a.at(col, col);
            if (factor == 0.0) continue;
            for (int j = col; j < n; ++j) a.at(r, j) -= factor * a.at(col, j);
            b[r] -= factor * b[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < n; ++j) s -= a.at(i, j) * x[j];
        x[i] = s / a.at(i, i);
    }
    return x;
}

}  // namespace fastmix
