#pragma once

// Dense vector/matrix arithmetic used in the inner loops (simulation steps,
// Gramian assembly, observability-matrix build, residual sweeps).
//
// Every operation has a scalar reference implementation and an AVX2/FMA
// variant; the dispatched entry points pick one at startup from cpuid.
// Set NETOBS_KERNELS=scalar to force the reference path.

#include <cstddef>
#include <string_view>

namespace netobs::kernels {

enum class Isa { Scalar, Avx2 };

Isa active_isa();
std::string_view isa_name(Isa isa);

// Dispatched entry points.
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);  // y += alpha x
void scal(double alpha, double* x, std::size_t n);                   // x *= alpha
void matvec(const double* a, std::size_t rows, std::size_t cols,
            const double* x, double* y);                             // y = A x (row-major)
double max_abs_diff(const double* a, const double* b, std::size_t n);

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scal(double alpha, double* x, std::size_t n);
void matvec(const double* a, std::size_t rows, std::size_t cols,
            const double* x, double* y);
double max_abs_diff(const double* a, const double* b, std::size_t n);
}  // namespace scalar

namespace avx2 {
// False when the binary was built without the AVX2 translation unit or the
// CPU lacks avx2+fma; the functions below then forward to scalar.
bool supported();
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scal(double alpha, double* x, std::size_t n);
void matvec(const double* a, std::size_t rows, std::size_t cols,
            const double* x, double* y);
double max_abs_diff(const double* a, const double* b, std::size_t n);
}  // namespace avx2

}  // namespace netobs::kernels
