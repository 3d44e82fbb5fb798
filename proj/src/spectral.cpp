#include "netobs/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "netobs/graph.hpp"
#include "netobs/kernels.hpp"
#include "netobs/oracle.hpp"

namespace netobs::spectral {

namespace {

constexpr double kPi = std::numbers::pi;

void normalize(std::vector<double>& v) {
    double norm2 = kernels::dot(v.data(), v.data(), v.size());
    if (norm2 == 0.0) throw std::logic_error("spectral: zero eigenvector");
    kernels::scal(1.0 / std::sqrt(norm2), v.data(), v.size());
    double max_abs = 0.0;
    for (double x : v) max_abs = std::max(max_abs, std::fabs(x));
    for (double x : v) {
        if (std::fabs(x) > 1e-9 * max_abs) {
            if (x < 0.0) kernels::scal(-1.0, v.data(), v.size());
            break;
        }
    }
}

EigenPair make_pair(std::int64_t a, std::int64_t b, std::vector<double> vec) {
    EigenPair p;
    p.lambda = make_cos_eigenvalue(a, b);
    p.eigenvalue = p.lambda.value;
    normalize(vec);
    p.vector = std::move(vec);
    return p;
}

// Characteristic polynomial of sI - T for a tridiagonal T with off-diagonals
// -1, via the continuant recurrence D_j = (s - d_j) D_{j-1} - D_{j-2}.
double tridiag_charpoly(double s, std::int64_t dim, double first_diag) {
    double prev2 = 1.0;
    double prev1 = 1.0;
    for (std::int64_t j = 1; j <= dim; ++j) {
        const double d = (j == 1) ? first_diag : 2.0;
        const double cur = (s - d) * prev1 - ((j >= 2) ? prev2 : 0.0);
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

double charpoly_N(double s, std::int64_t nu) { return tridiag_charpoly(s, nu, 1.0); }
double charpoly_M(double s, std::int64_t mu) { return tridiag_charpoly(s, mu, 2.0); }

double charpoly_path_laplacian(double s, std::int64_t n) {
    // det(sI - L_n) with L_n having diagonal (1, 2, ..., 2, 1).
    double prev2 = 1.0;
    double prev1 = 1.0;
    for (std::int64_t j = 1; j <= n; ++j) {
        const double d = (j == 1 || j == n) ? 1.0 : 2.0;
        const double cur = (s - d) * prev1 - ((j >= 2) ? prev2 : 0.0);
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

bool rel_close(double a, double b, double scale, double tol) {
    return std::fabs(a - b) <= tol * std::max({std::fabs(a), std::fabs(b), scale});
}

}  // namespace

CosEigenvalue make_cos_eigenvalue(std::int64_t a, std::int64_t b) {
    if (b < 1 || a < 0 || a > b)
        throw std::invalid_argument("CosEigenvalue: angle must lie in [0, 1]");
    const std::int64_t g = std::gcd(a, b);  // >= 1, and gcd(0, b) = b reduces 0/b to 0/1
    CosEigenvalue e;
    e.num = a / g;
    e.den = b / g;
    e.value = 2.0 - 2.0 * std::cos(static_cast<double>(e.num) * kPi / static_cast<double>(e.den));
    return e;
}

std::vector<double> normalized(std::vector<double> v) {
    normalize(v);
    return v;
}

double residual_inf(const DenseMatrix& a, const EigenPair& p) {
    std::vector<double> av = a.apply(p.vector);
    double r = 0.0;
    for (std::size_t i = 0; i < av.size(); ++i)
        r = std::max(r, std::fabs(av[i] - p.eigenvalue * p.vector[i]));
    return r;
}

std::vector<CosEigenvalue> angles_N(std::int64_t nu) {
    if (nu < 1) throw std::invalid_argument("angles_N: dimension must be >= 1");
    std::vector<CosEigenvalue> out;
    out.reserve(static_cast<std::size_t>(nu));
    for (std::int64_t k = 1; k <= nu; ++k) out.push_back(make_cos_eigenvalue(2 * k - 1, 2 * nu + 1));
    return out;
}

std::vector<CosEigenvalue> angles_M(std::int64_t mu) {
    if (mu < 0) throw std::invalid_argument("angles_M: dimension must be >= 0");
    std::vector<CosEigenvalue> out;
    out.reserve(static_cast<std::size_t>(mu));
    for (std::int64_t k = 1; k <= mu; ++k) out.push_back(make_cos_eigenvalue(k, mu + 1));
    return out;
}

std::vector<EigenPair> eigen_N(std::int64_t nu) {
    if (nu < 1) throw std::invalid_argument("eigen_N: dimension must be >= 1");
    std::vector<EigenPair> out;
    out.reserve(static_cast<std::size_t>(nu));
    const double denom = static_cast<double>(2 * nu + 1);
    for (std::int64_t k = 1; k <= nu; ++k) {
        std::vector<double> v(static_cast<std::size_t>(nu));
        for (std::int64_t j = 1; j <= nu; ++j)
            v[static_cast<std::size_t>(j - 1)] =
                std::sin(static_cast<double>((nu + j) * (2 * k - 1)) * kPi / denom);
        out.push_back(make_pair(2 * k - 1, 2 * nu + 1, std::move(v)));
    }
    return out;
}

std::vector<EigenPair> eigen_M(std::int64_t mu) {
    if (mu < 0) throw std::invalid_argument("eigen_M: dimension must be >= 0");
    std::vector<EigenPair> out;
    out.reserve(static_cast<std::size_t>(mu));
    const double denom = static_cast<double>(mu + 1);
    for (std::int64_t k = 1; k <= mu; ++k) {
        std::vector<double> w(static_cast<std::size_t>(mu));
        for (std::int64_t j = 1; j <= mu; ++j)
            w[static_cast<std::size_t>(j - 1)] = std::sin(static_cast<double>(j * k) * kPi / denom);
        out.push_back(make_pair(k, mu + 1, std::move(w)));
    }
    return out;
}

std::vector<EigenPair> eigen_path_laplacian(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("eigen_path_laplacian: n must be >= 1");
    const DenseMatrix L = laplacian(GraphTopology::path(n));
    auto numeric = oracle::symmetric_eigen(L);  // ascending
    std::vector<EigenPair> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::int64_t k = 1; k <= n; ++k) {
        EigenPair p;
        p.lambda = make_cos_eigenvalue(k - 1, n);
        p.eigenvalue = p.lambda.value;
        p.vector = std::move(numeric[static_cast<std::size_t>(k - 1)].vector);
        normalize(p.vector);
        if (std::fabs(numeric[static_cast<std::size_t>(k - 1)].eigenvalue - p.eigenvalue) > 1e-9)
            throw std::logic_error("eigen_path_laplacian: closed form and numeric spectrum diverge");
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<EigenPair> eigen_cycle_laplacian(std::int64_t n) {
    if (n < 3) throw std::invalid_argument("eigen_cycle_laplacian: n must be >= 3");
    std::vector<EigenPair> out;
    out.reserve(static_cast<std::size_t>(n));
    // j = 0..n-1 with the real basis: cos mode for j <= n/2, sin mode for the
    // doubled partner j > n/2 (angle taken from the partner n - j).
    for (std::int64_t j = 0; j < n; ++j) {
        const bool sin_mode = 2 * j > n;
        const std::int64_t freq = sin_mode ? n - j : j;
        std::vector<double> v(static_cast<std::size_t>(n));
        for (std::int64_t l = 0; l < n; ++l) {
            const double theta = 2.0 * kPi * static_cast<double>(freq * l) / static_cast<double>(n);
            v[static_cast<std::size_t>(l)] = sin_mode ? std::sin(theta) : std::cos(theta);
        }
        out.push_back(make_pair(2 * freq, n, std::move(v)));
    }
    std::sort(out.begin(), out.end(),
              [](const EigenPair& x, const EigenPair& y) { return x.lambda < y.lambda; });
    return out;
}

std::vector<EigenPair> eigen_path_adjacency(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("eigen_path_adjacency: n must be >= 1");
    std::vector<EigenPair> out;
    out.reserve(static_cast<std::size_t>(n));
    const double denom = static_cast<double>(n + 1);
    for (std::int64_t k = 1; k <= n; ++k) {
        EigenPair p;
        p.lambda = make_cos_eigenvalue(k, n + 1);
        p.eigenvalue = 2.0 * std::cos(static_cast<double>(k) * kPi / denom);
        std::vector<double> v(static_cast<std::size_t>(n));
        for (std::int64_t i = 1; i <= n; ++i)
            v[static_cast<std::size_t>(i - 1)] = std::sin(static_cast<double>(i * k) * kPi / denom);
        normalize(v);
        p.vector = std::move(v);
        out.push_back(std::move(p));
    }
    return out;
}

bool charpoly_recursion_check(std::int64_t mu) {
    if (mu < 3) throw std::invalid_argument("charpoly_recursion_check: mu must be >= 3");
    constexpr double kSamples[] = {-1.0, 0.5, 2.7, 5.0};
    constexpr double kTol = 1e-8;
    for (double s : kSamples) {
        const double n_mu = charpoly_N(s, mu);
        const double n_mu1 = charpoly_N(s, mu - 1);
        const double n_mu2 = charpoly_N(s, mu - 2);
        const double m_mu = charpoly_M(s, mu);
        const double m_mu1 = charpoly_M(s, mu - 1);
        const double m_mu2 = charpoly_M(s, mu - 2);
        if (!rel_close(n_mu, (s - 1.0) * m_mu1 - m_mu2, 1.0, kTol)) return false;
        if (!rel_close(n_mu, (s - 2.0) * n_mu1 - n_mu2, 1.0, kTol)) return false;
        if (!rel_close(m_mu, (s - 2.0) * m_mu1 - m_mu2, 1.0, kTol)) return false;
        if (!rel_close(charpoly_path_laplacian(s, mu), s * charpoly_M(s, mu - 1), 1.0, kTol))
            return false;
    }
    return true;
}

bool N_embeds_in_M2nu_check(std::int64_t nu) {
    if (nu < 1) throw std::invalid_argument("N_embeds_in_M2nu_check: nu must be >= 1");
    const auto n_pairs = eigen_N(nu);
    const auto m_angles = angles_M(2 * nu);
    const DenseMatrix m2 = submatrix_M(2 * nu);
    for (const auto& p : n_pairs) {
        if (!std::binary_search(m_angles.begin(), m_angles.end(), p.lambda)) return false;
        // Stacked eigenvector [Pi v; v].
        EigenPair stacked;
        stacked.lambda = p.lambda;
        stacked.eigenvalue = p.eigenvalue;
        stacked.vector.resize(static_cast<std::size_t>(2 * nu));
        for (std::size_t j = 0; j < p.vector.size(); ++j) {
            stacked.vector[j] = p.vector[p.vector.size() - 1 - j];
            stacked.vector[p.vector.size() + j] = p.vector[j];
        }
        if (residual_inf(m2, stacked) > 1e-9 * std::sqrt(2.0)) return false;
    }
    return true;
}

}  // namespace netobs::spectral
