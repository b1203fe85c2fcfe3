#include "rabi/model.hpp"

#include <cmath>
#include <stdexcept>

namespace rabi {

void ModelParams::validate() const
{
    if (!std::isfinite(omega0) || omega0 <= 0.0)
        throw std::invalid_argument("omega0 must be finite and > 0");
    if (!std::isfinite(Omega) || Omega < 0.0)
        throw std::invalid_argument("Omega must be finite and >= 0");
    if (!std::isfinite(lambda) || lambda < 0.0)
        throw std::invalid_argument("lambda must be finite and >= 0");
}

void Truncation::validate() const
{
    if (nmax < 2) throw std::invalid_argument("nmax must be >= 2");
}

Matrix build_hamiltonian(const ModelParams& p, const Truncation& t)
{
    p.validate();
    t.validate();
    const int nmax = t.nmax;
    Matrix h(2 * static_cast<std::size_t>(nmax));
    for (int N = 0; N < nmax; ++N) {
        h(2 * N, 2 * N) = N * p.omega0 - 0.5 * p.Omega;
        h(2 * N + 1, 2 * N + 1) = N * p.omega0 + 0.5 * p.Omega;
    }
    for (int N = 0; N + 1 < nmax; ++N) {
        const double c = p.lambda * std::sqrt(N + 1.0);
        for (int s = 0; s < 2; ++s) {
            h(2 * N + s, 2 * (N + 1) + (1 - s)) = c;
            h(2 * (N + 1) + (1 - s), 2 * N + s) = c;
        }
    }
    return h;
}

namespace {

// exp of an antisymmetric matrix by scaling and squaring with a Taylor
// series; the result is orthogonal up to rounding.
Matrix expm_antisymmetric(const Matrix& k)
{
    const std::size_t n = k.dim();

    double norm1 = 0.0;  // max column abs sum
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += std::fabs(k(i, j));
        norm1 = std::max(norm1, s);
    }

    int squarings = 0;
    double scale = 1.0;
    while (norm1 * scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }

    Matrix x(n);
    for (std::size_t i = 0; i < n * n; ++i) x.data()[i] = k.data()[i] * scale;

    // ||x|| <= 1/2, so 20 terms put the truncation error far below rounding.
    Matrix sum = Matrix::identity(n);
    Matrix term = Matrix::identity(n);
    for (int j = 1; j <= 20; ++j) {
        term = kernels::multiply(term, x);
        const double inv = 1.0 / j;
        double tmax = 0.0;
        for (std::size_t i = 0; i < n * n; ++i) {
            term.data()[i] *= inv;
            tmax = std::max(tmax, std::fabs(term.data()[i]));
        }
        for (std::size_t i = 0; i < n * n; ++i) sum.data()[i] += term.data()[i];
        if (tmax < 1e-18) break;
    }

    for (int s = 0; s < squarings; ++s) sum = kernels::multiply(sum, sum);
    return sum;
}

}  // namespace

Matrix displacement_matrix(double g, int sign, const Truncation& t)
{
    t.validate();
    if (!std::isfinite(g) || g < 0.0)
        throw std::invalid_argument("displacement must be finite and >= 0");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("sign must be +1 or -1");

    const int nmax = t.nmax;
    // generator a^dag - a: (a^dag)_{N+1,N} = sqrt(N+1), a_{N,N+1} = sqrt(N+1)
    Matrix k(static_cast<std::size_t>(nmax));
    const double c = -static_cast<double>(sign) * g;
    for (int N = 0; N + 1 < nmax; ++N) {
        k(N + 1, N) = c * std::sqrt(N + 1.0);
        k(N, N + 1) = -c * std::sqrt(N + 1.0);
    }
    return expm_antisymmetric(k);
}

Matrix adiabatic_basis(const ModelParams& p, const Truncation& t)
{
    p.validate();
    t.validate();
    const double g = p.coupling_ratio();
    const Matrix dp = displacement_matrix(g, +1, t);
    const Matrix dm = displacement_matrix(g, -1, t);

    // |+-z> = (|+x> +- |-x>)/sqrt(2), so in the interleaved product basis
    //   Psi_{-,N}: -x component (Dp + Dm)/2, +x component (Dp - Dm)/2
    //   Psi_{+,N}: -x component (Dp - Dm)/2, +x component (Dp + Dm)/2
    const int nmax = t.nmax;
    Matrix b(2 * static_cast<std::size_t>(nmax));
    for (int M = 0; M < nmax; ++M)
        for (int N = 0; N < nmax; ++N) {
            const double plus = 0.5 * (dp(M, N) + dm(M, N));
            const double minus = 0.5 * (dp(M, N) - dm(M, N));
            b(2 * M, 2 * N) = plus;
            b(2 * M + 1, 2 * N) = minus;
            b(2 * M, 2 * N + 1) = minus;
            b(2 * M + 1, 2 * N + 1) = plus;
        }
    return b;
}

Matrix transformed_hamiltonian(const ModelParams& p, const Truncation& t,
                               kernels::ExecMode mode)
{
    const Matrix h = build_hamiltonian(p, t);
    const Matrix b = adiabatic_basis(p, t);
    Matrix c = kernels::conjugate(h, b, mode);
    c.symmetrize();
    return c;
}

}  // namespace rabi
