#include "rabi/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

namespace rabi {

namespace {

// Householder reduction to tridiagonal form (in place). On exit d holds the
// diagonal and e[1..n-1] the subdiagonal. With want_vectors, a is replaced
// by the accumulated orthogonal transform Q with Q^T A Q tridiagonal.
void householder_tridiag(Matrix& a, std::vector<double>& d, std::vector<double>& e,
                         bool want_vectors)
{
    const int n = static_cast<int>(a.dim());
    d.assign(n, 0.0);
    e.assign(n, 0.0);

    for (int i = n - 1; i > 0; --i) {
        const int l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (int k = 0; k <= l; ++k) scale += std::fabs(a(i, k));
            if (scale == 0.0) {
                e[i] = a(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    a(i, k) /= scale;
                    h += a(i, k) * a(i, k);
                }
                double f = a(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    if (want_vectors) a(j, i) = a(i, j) / h;
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += a(j, k) * a(i, k);
                    for (int k = j + 1; k <= l; ++k) g += a(k, j) * a(i, k);
                    e[j] = g / h;
                    f += e[j] * a(i, j);
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = a(i, j);
                    g = e[j] - hh * f;
                    e[j] = g;
                    for (int k = 0; k <= j; ++k)
                        a(j, k) -= f * e[k] + g * a(i, k);
                }
            }
        } else {
            e[i] = a(i, l);
        }
        d[i] = h;
    }

    if (want_vectors) d[0] = 0.0;
    e[0] = 0.0;

    for (int i = 0; i < n; ++i) {
        if (want_vectors) {
            if (d[i] != 0.0) {  // skip transforms that were skipped above
                for (int j = 0; j < i; ++j) {
                    double g = 0.0;
                    for (int k = 0; k < i; ++k) g += a(i, k) * a(k, j);
                    for (int k = 0; k < i; ++k) a(k, j) -= g * a(k, i);
                }
            }
            d[i] = a(i, i);
            a(i, i) = 1.0;
            for (int j = 0; j < i; ++j) a(j, i) = a(i, j) = 0.0;
        } else {
            d[i] = a(i, i);
        }
    }
}

// Implicit-shift QL on a tridiagonal matrix; d diagonal, e subdiagonal in
// e[1..n-1] (shifted internally). When z is non-null its columns are
// rotated along, turning the tridiagonalizing transform into eigenvectors.
void tridiag_ql(std::vector<double>& d, std::vector<double>& e, Matrix* z)
{
    const int n = static_cast<int>(d.size());
    if (n == 0) return;
    const double eps = std::numeric_limits<double>::epsilon();

    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m = l;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == 50)
                    throw std::runtime_error(
                        "eigenvalue iteration failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {  // deflate: split the problem here
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (z) {
                        for (int k = 0; k < n; ++k) {
                            f = (*z)(k, i + 1);
                            (*z)(k, i + 1) = s * (*z)(k, i) + c * f;
                            (*z)(k, i) = c * (*z)(k, i) - s * f;
                        }
                    }
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

void check_square_symmetric(const Matrix& a)
{
    if (a.dim() == 0) throw std::invalid_argument("empty matrix");
    const double tol = 1e-12 * std::max(a.max_abs(), 1e-300);
    if (a.max_asymmetry() > tol)
        throw std::invalid_argument("matrix is not symmetric");
}

}  // namespace

std::vector<double> symmetric_eigenvalues(const Matrix& a, int count)
{
    check_square_symmetric(a);
    const int n = static_cast<int>(a.dim());
    if (count < 1 || count > n)
        throw std::invalid_argument("eigenvalue count out of range");

    Matrix work = a;
    std::vector<double> d, e;
    householder_tridiag(work, d, e, false);
    tridiag_ql(d, e, nullptr);
    std::sort(d.begin(), d.end());
    d.resize(count);
    return d;
}

EigenSystem symmetric_eigensystem(const Matrix& a)
{
    check_square_symmetric(a);
    const int n = static_cast<int>(a.dim());

    Matrix z = a;
    std::vector<double> d, e;
    householder_tridiag(z, d, e, true);
    tridiag_ql(d, e, &z);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&d](int i, int j) { return d[i] < d[j]; });

    EigenSystem out;
    out.values.resize(n);
    out.vectors = Matrix(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        out.values[k] = d[order[k]];
        for (int i = 0; i < n; ++i) out.vectors(i, k) = z(i, order[k]);
    }
    return out;
}

ConvergenceError::ConvergenceError(const std::string& what, ConvergenceReport report)
    : std::runtime_error(what), report_(std::move(report))
{
}

ExactResult exact_levels(const ModelParams& p, int count, const ConvergencePolicy& policy)
{
    p.validate();
    if (count < 1) throw std::invalid_argument("level count must be >= 1");
    if (policy.initial_nmax < 2 || policy.max_solves < 1 ||
        !(policy.tol_factor > 0.0))
        throw std::invalid_argument("invalid convergence policy");
    if (2 * policy.initial_nmax < count)
        throw std::invalid_argument("initial truncation smaller than level count");

    ConvergenceReport report;
    std::vector<double> prev;
    std::vector<double> cur;
    int nmax = policy.initial_nmax;
    const double tol = policy.tol_factor * p.omega0;

    for (int solve = 0; solve < policy.max_solves; ++solve, nmax *= 2) {
        const Matrix h = build_hamiltonian(p, Truncation{nmax});
        cur = symmetric_eigenvalues(h, count);
        report.nmax_sequence.push_back(nmax);
        if (!prev.empty()) {
            report.level_drift.resize(count);
            double worst = 0.0;
            for (int k = 0; k < count; ++k) {
                report.level_drift[k] = std::fabs(cur[k] - prev[k]);
                worst = std::max(worst, report.level_drift[k]);
            }
            if (worst <= tol) {
                report.converged = true;
                report.final_nmax = nmax;
                break;
            }
        }
        prev = cur;
    }

    if (!report.converged)
        throw ConvergenceError("exact spectrum did not converge within the truncation schedule",
                               report);

    ExactResult out;
    out.report = std::move(report);
    out.levels.resize(count);
    for (int k = 0; k < count; ++k) {
        // rank 0 -> (minus, 0); ranks 2j-1, 2j -> (minus, j), (plus, j)
        const int block = (k + 1) / 2;
        out.levels[k] = LabeledLevel{
            (k % 2 == 1 || k == 0) ? Branch::minus : Branch::plus, block, cur[k]};
    }
    return out;
}

}  // namespace rabi
