#include "netobs/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace netobs::kernels {

namespace scalar {

double dot(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scal(double alpha, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

void matvec(const double* a, std::size_t rows, std::size_t cols,
            const double* x, double* y) {
    for (std::size_t i = 0; i < rows; ++i) y[i] = dot(a + i * cols, x, cols);
}

double max_abs_diff(const double* a, const double* b, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

}  // namespace scalar

#ifndef NETOBS_WITH_AVX2
namespace avx2 {
bool supported() { return false; }
double dot(const double* a, const double* b, std::size_t n) { return scalar::dot(a, b, n); }
void axpy(double alpha, const double* x, double* y, std::size_t n) { scalar::axpy(alpha, x, y, n); }
void scal(double alpha, double* x, std::size_t n) { scalar::scal(alpha, x, n); }
void matvec(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y) {
    scalar::matvec(a, rows, cols, x, y);
}
double max_abs_diff(const double* a, const double* b, std::size_t n) {
    return scalar::max_abs_diff(a, b, n);
}
}  // namespace avx2
#endif

namespace {

Isa detect_isa() {
    if (const char* env = std::getenv("NETOBS_KERNELS");
        env && std::strcmp(env, "scalar") == 0)
        return Isa::Scalar;
    return avx2::supported() ? Isa::Avx2 : Isa::Scalar;
}

}  // namespace

Isa active_isa() {
    static const Isa isa = detect_isa();
    return isa;
}

std::string_view isa_name(Isa isa) {
    return isa == Isa::Avx2 ? "avx2" : "scalar";
}

double dot(const double* a, const double* b, std::size_t n) {
    return active_isa() == Isa::Avx2 ? avx2::dot(a, b, n) : scalar::dot(a, b, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    active_isa() == Isa::Avx2 ? avx2::axpy(alpha, x, y, n) : scalar::axpy(alpha, x, y, n);
}

void scal(double alpha, double* x, std::size_t n) {
    active_isa() == Isa::Avx2 ? avx2::scal(alpha, x, n) : scalar::scal(alpha, x, n);
}

void matvec(const double* a, std::size_t rows, std::size_t cols,
            const double* x, double* y) {
    active_isa() == Isa::Avx2 ? avx2::matvec(a, rows, cols, x, y)
                              : scalar::matvec(a, rows, cols, x, y);
}

double max_abs_diff(const double* a, const double* b, std::size_t n) {
    return active_isa() == Isa::Avx2 ? avx2::max_abs_diff(a, b, n)
                                     : scalar::max_abs_diff(a, b, n);
}

}  // namespace netobs::kernels
