#include "netobs/matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "netobs/kernels.hpp"

namespace netobs {

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

std::vector<double> DenseMatrix::apply(std::span<const double> x) const {
    if (x.size() != cols_) throw std::invalid_argument("DenseMatrix::apply: size mismatch");
    std::vector<double> y(rows_, 0.0);
    kernels::matvec(data_.data(), rows_, cols_, x.data(), y.data());
    return y;
}

DenseMatrix DenseMatrix::matmul(const DenseMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("DenseMatrix::matmul: size mismatch");
    DenseMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        double* out_row = out.data() + i * rhs.cols_;
        for (std::size_t k = 0; k < cols_; ++k) {
            const double aik = (*this)(i, k);
            if (aik != 0.0) kernels::axpy(aik, rhs.row(k), out_row, rhs.cols_);
        }
    }
    return out;
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

bool DenseMatrix::is_symmetric(double tol) const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (std::fabs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    return true;
}

double DenseMatrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::fabs(v));
    return m;
}

}  // namespace netobs
