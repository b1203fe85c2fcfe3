#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "rabi/analysis.hpp"
#include "rabi/kernels.hpp"

namespace {

using rabi::Matrix;
using rabi::kernels::ExecMode;

double seconds(const std::function<void()>& fn, int reps)
{
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

Matrix random_matrix(std::size_t n, unsigned seed)
{
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix m(n);
    for (std::size_t i = 0; i < n * n; ++i) m.data()[i] = u(rng);
    return m;
}

double max_diff(const Matrix& a, const Matrix& b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim() * a.dim(); ++i)
        m = std::max(m, std::fabs(a.data()[i] - b.data()[i]));
    return m;
}

void bench_multiply(std::size_t n)
{
    const Matrix a = random_matrix(n, 12345);
    const Matrix b = random_matrix(n, 67890);
    Matrix cs, cp;
    const double ts = seconds([&] { cs = rabi::kernels::multiply(a, b, ExecMode::serial); }, 3);
    const double tp = seconds([&] { cp = rabi::kernels::multiply(a, b, ExecMode::parallel); }, 3);
    std::printf("multiply      %5zu  %9.1f ms  %9.1f ms  %5.2fx  max|diff| %g\n",
                n, ts * 1e3, tp * 1e3, ts / tp, max_diff(cs, cp));
}

void bench_sweep()
{
    rabi::SweepSpec spec;
    spec.omega0 = 1.0;
    spec.Omega = 1.0;
    spec.gmin = 0.0;
    spec.gmax = 2.0;
    spec.steps = 21;
    spec.levels = 6;
    spec.methods = {rabi::ApproxMethod::exact, rabi::ApproxMethod::grwa};
    rabi::SweepTable ts_table, tp_table;
    const double ts = seconds([&] { ts_table = rabi::run_sweep(spec, ExecMode::serial); }, 1);
    const double tp = seconds([&] { tp_table = rabi::run_sweep(spec, ExecMode::parallel); }, 1);
    double worst = 0.0;
    for (std::size_t i = 0; i < ts_table.rows.size(); ++i)
        worst = std::max(worst, std::fabs(ts_table.rows[i].energy_over_omega0 -
                                          tp_table.rows[i].energy_over_omega0));
    std::printf("sweep 21x2x6        %9.1f ms  %9.1f ms  %5.2fx  max|diff| %g\n",
                ts * 1e3, tp * 1e3, ts / tp, worst);
}

}  // namespace

int main()
{
    std::printf("threads: %d\n", rabi::kernels::max_threads());
    std::printf("kernel          dim     serial      parallel  speedup\n");
    bench_multiply(200);
    bench_multiply(400);
    bench_sweep();
    return 0;
}
