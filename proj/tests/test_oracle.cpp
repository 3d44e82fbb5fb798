#include <doctest.h>

#include <algorithm>

#include <stdexcept>

#include <cmath>

#include "netobs/graph.hpp"
#include "netobs/oracle.hpp"

using namespace netobs;

namespace {

DenseMatrix selector_rows(std::int64_t n, const std::vector<std::int64_t>& nodes) {
    return output_matrix(GraphTopology::path(n), NodeSet(nodes, n));
}

}  // namespace

TEST_CASE("observability matrix by hand for the 2-node path") {
    const DenseMatrix l = laplacian(GraphTopology::path(2));
    const DenseMatrix c = selector_rows(2, {1});
    const DenseMatrix o = oracle::observability_matrix(l, c);
    CHECK(o.rows() == 2);
    CHECK(o(0, 0) == 1.0);
    CHECK(o(0, 1) == 0.0);
    CHECK(o(1, 0) == 1.0);
    CHECK(o(1, 1) == -1.0);
    CHECK(oracle::rank_svd(o).rank == 2);
}

TEST_CASE("rank deficiencies match the shared-eigenvalue structure") {
    const DenseMatrix p6 = laplacian(GraphTopology::path(6));
    CHECK(oracle::observability_rank(p6, selector_rows(6, {2}), oracle::RankRoute::KrylovSvd) == 5);
    CHECK(oracle::observability_rank(p6, selector_rows(6, {2}), oracle::RankRoute::Pbh) == 5);

    const DenseMatrix c15 = laplacian(GraphTopology::cycle(15));
    const DenseMatrix c = output_matrix(GraphTopology::cycle(15), NodeSet({4, 13}, 15));
    CHECK(oracle::observability_rank(c15, c, oracle::RankRoute::Pbh) == 14);
}

TEST_CASE("PBH single-eigenvalue ranks") {
    const DenseMatrix p6 = laplacian(GraphTopology::path(6));
    const DenseMatrix c2 = selector_rows(6, {2});
    CHECK(oracle::pbh_rank(p6, c2, 1.0).rank == 5);
    CHECK(oracle::pbh_rank(p6, c2, 0.0).rank == 6);
    CHECK(oracle::pbh_rank(p6, c2, 0.5).rank == 6);  // not an eigenvalue
}

TEST_CASE("unobservable eigenspaces") {
    const DenseMatrix p3 = laplacian(GraphTopology::path(3));
    const auto spaces = oracle::unobservable_eigenspace(p3, selector_rows(3, {2}));
    REQUIRE(spaces.size() == 1);
    CHECK(spaces[0].eigenvalue == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(spaces[0].basis.size() == 1);
    const auto& v = spaces[0].basis[0];
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::fabs(std::fabs(v[0]) - s) < 1e-12);
    CHECK(std::fabs(v[1]) < 1e-12);
    CHECK(std::fabs(std::fabs(v[2]) - s) < 1e-12);
    CHECK(v[0] * v[2] < 0.0);  // opposite signs

    const DenseMatrix p4 = laplacian(GraphTopology::path(4));
    CHECK(oracle::unobservable_eigenspace(p4, selector_rows(4, {2})).empty());

    const DenseMatrix c4 = laplacian(GraphTopology::cycle(4));
    const DenseMatrix e1 = output_matrix(GraphTopology::cycle(4), NodeSet({1}, 4));
    const auto c4_spaces = oracle::unobservable_eigenspace(c4, e1);
    REQUIRE(c4_spaces.size() == 1);
    CHECK(c4_spaces[0].eigenvalue == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(c4_spaces[0].basis.size() == 1);
}

TEST_CASE("symmetric eigendecomposition basics") {
    const auto n1 = oracle::symmetric_eigen(submatrix_N(1));
    REQUIRE(n1.size() == 1);
    CHECK(n1[0].eigenvalue == doctest::Approx(1.0));
    CHECK(std::fabs(std::fabs(n1[0].vector[0]) - 1.0) < 1e-12);

    const auto m2 = oracle::symmetric_eigen(submatrix_M(2));
    CHECK(m2[0].eigenvalue == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m2[1].eigenvalue == doctest::Approx(3.0).epsilon(1e-12));

    DenseMatrix bad(2, 2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(oracle::symmetric_eigen(bad), std::invalid_argument);
}

TEST_CASE("PBH deficiency occurs exactly at the unobservable eigenvalues") {
    for (std::int64_t n : {5, 6, 9, 12}) {
        const DenseMatrix l = laplacian(GraphTopology::path(n));
        for (std::int64_t node : {2L, 3L}) {
            const DenseMatrix c = selector_rows(n, {node});
            std::vector<double> deficient;
            for (const auto& space : oracle::unobservable_eigenspace(l, c))
                deficient.push_back(space.eigenvalue);
            for (const auto& pair : oracle::symmetric_eigen(l)) {
                const bool is_deficient =
                    oracle::pbh_rank(l, c, pair.eigenvalue).rank < static_cast<std::size_t>(n);
                const bool listed = std::any_of(
                    deficient.begin(), deficient.end(),
                    [&](double lambda) { return std::fabs(lambda - pair.eigenvalue) < 1e-8; });
                CHECK(is_deficient == listed);
            }
        }
    }
}

TEST_CASE("observability rank is stable under extra Krylov blocks") {
    // Cayley-Hamilton: appending C L^n, C L^{n+1}, ... cannot change the rank.
    for (std::int64_t n : {4, 6, 9}) {
        const DenseMatrix l = laplacian(GraphTopology::path(n));
        const DenseMatrix c = selector_rows(n, {2});
        const DenseMatrix o = oracle::observability_matrix(l, c);
        DenseMatrix extended(o.rows() + 3, o.cols());
        for (std::size_t i = 0; i < o.rows(); ++i)
            for (std::size_t j = 0; j < o.cols(); ++j) extended(i, j) = o(i, j);
        DenseMatrix block = c;
        for (std::int64_t k = 0; k < n; ++k) block = block.matmul(l);
        for (std::size_t extra = 0; extra < 3; ++extra) {
            for (std::size_t j = 0; j < o.cols(); ++j) extended(o.rows() + extra, j) = block(0, j);
            block = block.matmul(l);
        }
        CHECK(oracle::rank_svd(extended).rank == oracle::rank_svd(o).rank);
    }
}

TEST_CASE("rank(O) plus unobservable dimension equals n") {
    for (std::int64_t n = 2; n <= 10; ++n) {
        const DenseMatrix l = laplacian(GraphTopology::path(n));
        for (std::int64_t i = 1; i <= n; ++i) {
            const DenseMatrix c = selector_rows(n, {i});
            std::size_t dim = 0;
            for (const auto& space : oracle::unobservable_eigenspace(l, c))
                dim += space.basis.size();
            CHECK(oracle::observability_rank(l, c) + dim == static_cast<std::size_t>(n));
        }
    }
    for (std::int64_t n = 3; n <= 10; ++n) {
        const DenseMatrix l = laplacian(GraphTopology::cycle(n));
        for (std::int64_t i = 1; i < n; ++i) {
            const DenseMatrix c = output_matrix(GraphTopology::cycle(n), NodeSet({i, i + 1}, n));
            std::size_t dim = 0;
            for (const auto& space : oracle::unobservable_eigenspace(l, c))
                dim += space.basis.size();
            CHECK(oracle::observability_rank(l, c) + dim == static_cast<std::size_t>(n));
        }
    }
}

TEST_CASE("Krylov and PBH rank routes agree through n = 12") {
    for (std::int64_t n = 2; n <= 12; ++n) {
        const DenseMatrix lp = laplacian(GraphTopology::path(n));
        for (std::int64_t i = 1; i <= n; ++i)
            for (std::int64_t j = i; j <= n; ++j) {
                std::vector<std::int64_t> nodes{i};
                if (j > i) nodes.push_back(j);
                const DenseMatrix c = selector_rows(n, nodes);
                CHECK(oracle::observability_rank(lp, c, oracle::RankRoute::KrylovSvd) ==
                      oracle::observability_rank(lp, c, oracle::RankRoute::Pbh));
            }
        if (n < 3) continue;
        const DenseMatrix lc = laplacian(GraphTopology::cycle(n));
        for (std::int64_t i = 1; i <= n; ++i)
            for (std::int64_t j = i + 1; j <= n; ++j) {
                const DenseMatrix c = output_matrix(GraphTopology::cycle(n), NodeSet({i, j}, n));
                CHECK(oracle::observability_rank(lc, c, oracle::RankRoute::KrylovSvd) ==
                      oracle::observability_rank(lc, c, oracle::RankRoute::Pbh));
            }
    }
}

TEST_CASE("reachability and observability ranks coincide (duality)") {
    for (std::int64_t n = 2; n <= 12; ++n) {
        const DenseMatrix l = laplacian(GraphTopology::path(n));
        for (std::int64_t i = 1; i <= n; ++i) {
            const DenseMatrix b = input_matrix(GraphTopology::path(n), NodeSet({i}, n));
            const DenseMatrix c = b.transposed();
            CHECK(oracle::reachability_rank(l, b, oracle::RankRoute::KrylovSvd) ==
                  oracle::observability_rank(l, c, oracle::RankRoute::KrylovSvd));
            CHECK(oracle::reachability_rank(l, b, oracle::RankRoute::Pbh) ==
                  oracle::observability_rank(l, c, oracle::RankRoute::Pbh));
        }
    }
}
