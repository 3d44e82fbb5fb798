#pragma once

// Row-major dense matrix of doubles. All graph matrices in this project are
// small and dense; heavy decompositions live in the oracle module.

#include <cstddef>
#include <span>
#include <vector>

namespace netobs {

class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }
    std::span<double> row_span(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

    std::vector<double> apply(std::span<const double> x) const;  // A x
    DenseMatrix matmul(const DenseMatrix& rhs) const;
    DenseMatrix transposed() const;
    bool is_symmetric(double tol = 1e-12) const;
    double max_abs() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

}  // namespace netobs
