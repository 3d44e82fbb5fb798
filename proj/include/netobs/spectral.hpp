#pragma once

// Closed-form eigenvalues and eigenvectors of the N_nu / M_mu blocks, the
// path and cycle Laplacians, and the path adjacency matrix. Eigenvalue
// identities between families are decided on exact reduced angles a/b
// (lambda = 2 - 2 cos(a pi / b)), never on floating comparisons.

#include <cstdint>
#include <vector>

#include "netobs/matrix.hpp"

namespace netobs::spectral {

// Reduced fraction a/b in [0, 1] with value = 2 - 2 cos(a pi / b) in [0, 4].
// Two CosEigenvalues are equal iff their reduced fractions are equal.
struct CosEigenvalue {
    std::int64_t num = 0;
    std::int64_t den = 1;
    double value = 0.0;

    friend bool operator==(const CosEigenvalue& x, const CosEigenvalue& y) {
        return x.num == y.num && x.den == y.den;
    }
    // Angle order; coincides with eigenvalue order within the 2-2cos family.
    friend bool operator<(const CosEigenvalue& x, const CosEigenvalue& y) {
        return x.num * y.den < y.num * x.den;
    }
};

CosEigenvalue make_cos_eigenvalue(std::int64_t a, std::int64_t b);

struct EigenPair {
    CosEigenvalue lambda;        // exact angle
    double eigenvalue = 0.0;     // numeric eigenvalue of the owning matrix
    std::vector<double> vector;  // unit 2-norm, first nonzero component positive
};

// ||A v - eigenvalue v||_inf for the owning matrix A.
double residual_inf(const DenseMatrix& a, const EigenPair& p);

// Unit 2-norm with the first nonzero component positive.
std::vector<double> normalized(std::vector<double> v);

// Spectra as exact angles only, ascending. spec(N_nu) are the reduced a/b
// with a, b odd and b | 2nu+1; spec(M_mu) the reduced a/b with b | mu+1.
std::vector<CosEigenvalue> angles_N(std::int64_t nu);
std::vector<CosEigenvalue> angles_M(std::int64_t mu);

// lambda_k = 2 - 2 cos((2k-1) pi / (2nu+1)), (v_k)_j ~ sin((nu+j)(2k-1)pi/(2nu+1)).
std::vector<EigenPair> eigen_N(std::int64_t nu);
// lambda_k = 2 - 2 cos(k pi / (mu+1)), (w_k)_j ~ sin(j k pi / (mu+1)); mu = 0 -> {}.
std::vector<EigenPair> eigen_M(std::int64_t mu);
// lambda_k = 2 - 2 cos((k-1) pi / n); eigenvectors computed numerically from
// L_n and matched to the closed-form eigenvalues.
std::vector<EigenPair> eigen_path_laplacian(std::int64_t n);
// lambda_j = 2 - 2 cos(2 pi j / n) with multiplicities (0 simple, 4 simple for
// even n, all others doubled); real cos/sin eigenvector basis.
std::vector<EigenPair> eigen_cycle_laplacian(std::int64_t n);
// Adjacency of a path: eigenvalue = 2 cos(a pi / b) with a/b = k/(n+1); the
// stored CosEigenvalue keeps the 2-2cos convention, so eigenvalue = 2 - lambda.value.
std::vector<EigenPair> eigen_path_adjacency(std::int64_t n);

// Verifies the determinant recursions tying N_mu, M_mu and the path Laplacian
// char polynomials at sample points s in {-1, 0.5, 2.7, 5}; mu >= 3.
bool charpoly_recursion_check(std::int64_t mu);

// Every eigenvalue of N_nu appears in spec(M_{2nu}) exactly, with stacked
// eigenvector [Pi v; v].
bool N_embeds_in_M2nu_check(std::int64_t nu);

}  // namespace netobs::spectral
