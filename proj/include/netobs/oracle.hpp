#pragma once

// Independent numerical ground truth: dense symmetric eigendecomposition,
// Kalman observability/reachability matrix ranks, PBH rank tests, kernel
// bases. Never consults the number-theoretic modules.

#include <cstddef>
#include <vector>

#include "netobs/matrix.hpp"

namespace netobs::oracle {

struct RankResult {
    std::size_t rank = 0;
    std::vector<double> singular_values;  // descending
    double threshold = 0.0;
};

struct NumericEigenPair {
    double eigenvalue = 0.0;
    std::vector<double> vector;
};

// Full spectral decomposition, eigenvalues ascending; input must be symmetric
// within 1e-12. Residual asserted to 1e-9 per pair.
std::vector<NumericEigenPair> symmetric_eigen(const DenseMatrix& a);

// O = [C; CL; ...; C L^{n-1}]  ((n m) x n), rows built iteratively.
DenseMatrix observability_matrix(const DenseMatrix& l, const DenseMatrix& c);
// R = [B | LB | ... | L^{n-1} B]  (n x (n m)).
DenseMatrix reachability_matrix(const DenseMatrix& l, const DenseMatrix& b);

// SVD rank with threshold sigma_max * max(rows, cols) * 2^-52 * 64.
RankResult rank_svd(const DenseMatrix& m);

// Rank of [C; L - lambda I] (observability) or [L - lambda I | B] (reachability).
RankResult pbh_rank(const DenseMatrix& l, const DenseMatrix& b_or_c, double lambda,
                    bool observability = true);

// The Krylov SVD route loses rank digits once powers of L pile up; measured
// reliable through n = 13 on these families, so Auto switches to the PBH
// characterization above n = 12.
enum class RankRoute { Auto, KrylovSvd, Pbh };

std::size_t observability_rank(const DenseMatrix& l, const DenseMatrix& c,
                               RankRoute route = RankRoute::Auto);
std::size_t reachability_rank(const DenseMatrix& l, const DenseMatrix& b,
                              RankRoute route = RankRoute::Auto);

struct UnobservableSpace {
    double eigenvalue = 0.0;
    std::vector<std::vector<double>> basis;  // orthonormal
};

// For each eigenvalue of L, the basis of {v : Lv = lambda v, Cv = 0}; the
// union spans the unobservable subspace.
std::vector<UnobservableSpace> unobservable_eigenspace(const DenseMatrix& l,
                                                       const DenseMatrix& c);

// Orthonormal kernel basis of the stacked [L - lambda I; C].
std::vector<std::vector<double>> stacked_kernel(const DenseMatrix& l, const DenseMatrix& c,
                                                double lambda);

}  // namespace netobs::oracle
