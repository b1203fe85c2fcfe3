#include "rabi/kernels.hpp"

#include <stdexcept>

#ifdef RABI_HAVE_OPENMP
#include <omp.h>
#endif

namespace rabi::kernels {

namespace {

void check_dims(const Matrix& a, const Matrix& b)
{
    if (a.dim() != b.dim())
        throw std::invalid_argument("matrix dimension mismatch");
}

// Row i of C depends only on row i of A (or column i for the A^T variant),
// so rows distribute over threads without changing any accumulation order.

void multiply_row(const Matrix& a, const Matrix& b, Matrix& c, std::size_t i)
{
    const std::size_t n = a.dim();
    const double* brow = b.data();
    double* crow = c.data() + i * n;
    const double* arow = a.data() + i * n;
    for (std::size_t k = 0; k < n; ++k, brow += n) {
        const double aik = arow[k];
        if (aik == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
}

void multiply_at_b_row(const Matrix& a, const Matrix& b, Matrix& c, std::size_t i)
{
    const std::size_t n = a.dim();
    double* crow = c.data() + i * n;
    const double* arow = a.data();
    const double* brow = b.data();
    for (std::size_t k = 0; k < n; ++k, arow += n, brow += n) {
        const double aki = arow[i];
        if (aki == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) crow[j] += aki * brow[j];
    }
}

template <typename RowFn>
Matrix run_rows(const Matrix& a, const Matrix& b, ExecMode mode, RowFn row)
{
    check_dims(a, b);
    const std::size_t n = a.dim();
    Matrix c(n);
#ifdef RABI_HAVE_OPENMP
    if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
            row(a, b, c, static_cast<std::size_t>(i));
        return c;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < n; ++i) row(a, b, c, i);
    return c;
}

}  // namespace

Matrix multiply(const Matrix& a, const Matrix& b, ExecMode mode)
{
    return run_rows(a, b, mode, multiply_row);
}

Matrix multiply_at_b(const Matrix& a, const Matrix& b, ExecMode mode)
{
    return run_rows(a, b, mode, multiply_at_b_row);
}

Matrix conjugate(const Matrix& a, const Matrix& b, ExecMode mode)
{
    return multiply_at_b(b, multiply(a, b, mode), mode);
}

int max_threads()
{
#ifdef RABI_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace rabi::kernels
