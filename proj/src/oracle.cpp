#include "netobs/oracle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace netobs::oracle {

namespace {

Eigen::MatrixXd to_eigen(const DenseMatrix& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
    return out;
}

// Eigenvalues within this gap are treated as one eigenspace. Solver noise on
// these families sits near 1e-13 while true gaps stay above 1e-4 for n <= 200.
constexpr double kClusterGap = 1e-8;
constexpr double kKernelTol = 1e-8;

struct Decomposition {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};

Decomposition decompose(const DenseMatrix& l) {
    if (!l.is_symmetric(1e-12)) throw std::invalid_argument("oracle: matrix is not symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(l));
    if (solver.info() != Eigen::Success) throw std::runtime_error("oracle: eigendecomposition failed");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

// PBH characterization: n minus the summed kernel dimensions of C restricted
// to each eigenspace of L.
std::size_t pbh_route_rank(const DenseMatrix& l, const DenseMatrix& c) {
    const auto n = static_cast<Eigen::Index>(l.rows());
    const Decomposition dec = decompose(l);
    const Eigen::MatrixXd cm = to_eigen(c);
    std::size_t rank = static_cast<std::size_t>(n);
    Eigen::Index i = 0;
    while (i < n) {
        Eigen::Index j = i;
        while (j + 1 < n && dec.values(j + 1) - dec.values(i) < kClusterGap) ++j;
        const Eigen::Index dim = j - i + 1;
        const Eigen::MatrixXd cv = cm * dec.vectors.middleCols(i, dim);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(cv);
        Eigen::Index nonzero = 0;
        for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
            if (svd.singularValues()(k) > kKernelTol) ++nonzero;
        rank -= static_cast<std::size_t>(dim - nonzero);
        i = j + 1;
    }
    return rank;
}

}  // namespace

std::vector<NumericEigenPair> symmetric_eigen(const DenseMatrix& a) {
    const Decomposition dec = decompose(a);
    const auto n = static_cast<std::size_t>(dec.values.size());
    std::vector<NumericEigenPair> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k].eigenvalue = dec.values(static_cast<Eigen::Index>(k));
        out[k].vector.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            out[k].vector[i] = dec.vectors(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
    }
    // Residual guard; the solver is trusted only this far.
    for (const auto& p : out) {
        std::vector<double> av = a.apply(p.vector);
        for (std::size_t i = 0; i < n; ++i)
            if (std::fabs(av[i] - p.eigenvalue * p.vector[i]) > 1e-9)
                throw std::runtime_error("oracle: eigenpair residual exceeds 1e-9");
    }
    return out;
}

DenseMatrix observability_matrix(const DenseMatrix& l, const DenseMatrix& c) {
    if (c.cols() != l.rows() || l.rows() != l.cols())
        throw std::invalid_argument("observability_matrix: dimension mismatch");
    const std::size_t n = l.rows();
    const std::size_t m = c.rows();
    DenseMatrix o(n * m, n);
    DenseMatrix block = c;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t j = 0; j < n; ++j) o(k * m + r, j) = block(r, j);
        if (k + 1 < n) block = block.matmul(l);
    }
    return o;
}

DenseMatrix reachability_matrix(const DenseMatrix& l, const DenseMatrix& b) {
    if (b.rows() != l.rows() || l.rows() != l.cols())
        throw std::invalid_argument("reachability_matrix: dimension mismatch");
    const std::size_t n = l.rows();
    const std::size_t m = b.cols();
    DenseMatrix r(n, n * m);
    DenseMatrix block = b;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) r(i, k * m + j) = block(i, j);
        if (k + 1 < n) block = l.matmul(block);
    }
    return r;
}

RankResult rank_svd(const DenseMatrix& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(m));
    RankResult out;
    out.singular_values.assign(svd.singularValues().data(),
                               svd.singularValues().data() + svd.singularValues().size());
    const double sigma_max = out.singular_values.empty() ? 0.0 : out.singular_values.front();
    // 64x safety factor: powers of L in the Krylov stack inflate conditioning.
    out.threshold = sigma_max * static_cast<double>(std::max(m.rows(), m.cols())) *
                    std::pow(2.0, -52.0) * 64.0;
    for (double s : out.singular_values)
        if (s > out.threshold) ++out.rank;
    return out;
}

RankResult pbh_rank(const DenseMatrix& l, const DenseMatrix& b_or_c, double lambda,
                    bool observability) {
    const std::size_t n = l.rows();
    if (observability) {
        const std::size_t m = b_or_c.rows();
        DenseMatrix stacked(n + m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) stacked(i, j) = b_or_c(i, j);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                stacked(m + i, j) = l(i, j) - (i == j ? lambda : 0.0);
        return rank_svd(stacked);
    }
    const std::size_t m = b_or_c.cols();
    DenseMatrix wide(n, n + m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) wide(i, j) = l(i, j) - (i == j ? lambda : 0.0);
        for (std::size_t j = 0; j < m; ++j) wide(i, n + j) = b_or_c(i, j);
    }
    return rank_svd(wide);
}

std::size_t observability_rank(const DenseMatrix& l, const DenseMatrix& c, RankRoute route) {
    if (route == RankRoute::Auto) route = l.rows() <= 12 ? RankRoute::KrylovSvd : RankRoute::Pbh;
    if (route == RankRoute::KrylovSvd) return rank_svd(observability_matrix(l, c)).rank;
    return pbh_route_rank(l, c);
}

std::size_t reachability_rank(const DenseMatrix& l, const DenseMatrix& b, RankRoute route) {
    if (route == RankRoute::Auto) route = l.rows() <= 12 ? RankRoute::KrylovSvd : RankRoute::Pbh;
    if (route == RankRoute::KrylovSvd) return rank_svd(reachability_matrix(l, b)).rank;
    return pbh_route_rank(l, b.transposed());
}

std::vector<UnobservableSpace> unobservable_eigenspace(const DenseMatrix& l,
                                                       const DenseMatrix& c) {
    const auto n = static_cast<Eigen::Index>(l.rows());
    const Decomposition dec = decompose(l);
    const Eigen::MatrixXd cm = to_eigen(c);
    std::vector<UnobservableSpace> out;
    Eigen::Index i = 0;
    while (i < n) {
        Eigen::Index j = i;
        while (j + 1 < n && dec.values(j + 1) - dec.values(i) < kClusterGap) ++j;
        const Eigen::Index dim = j - i + 1;
        const Eigen::MatrixXd block = dec.vectors.middleCols(i, dim);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(cm * block, Eigen::ComputeFullV);
        Eigen::Index nonzero = 0;
        for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
            if (svd.singularValues()(k) > kKernelTol) ++nonzero;
        if (nonzero < dim) {
            UnobservableSpace space;
            space.eigenvalue = 0.5 * (dec.values(i) + dec.values(j));
            for (Eigen::Index k = nonzero; k < dim; ++k) {
                const Eigen::VectorXd v = block * svd.matrixV().col(k);
                space.basis.emplace_back(v.data(), v.data() + v.size());
            }
            out.push_back(std::move(space));
        }
        i = j + 1;
    }
    return out;
}

std::vector<std::vector<double>> stacked_kernel(const DenseMatrix& l, const DenseMatrix& c,
                                                double lambda) {
    const std::size_t n = l.rows();
    const std::size_t m = c.rows();
    Eigen::MatrixXd stacked(n + m, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            stacked(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                l(i, j) - (i == j ? lambda : 0.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            stacked(static_cast<Eigen::Index>(n + i), static_cast<Eigen::Index>(j)) = c(i, j);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeFullV);
    std::vector<std::vector<double>> out;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
        if (svd.singularValues()(k) > kKernelTol) continue;
        const Eigen::VectorXd v = svd.matrixV().col(k);
        out.emplace_back(v.data(), v.data() + v.size());
    }
    return out;
}

}  // namespace netobs::oracle
