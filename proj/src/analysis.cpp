#include "rabi/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>

namespace rabi {

void SweepSpec::validate() const
{
    ModelParams{omega0, Omega, 0.0}.validate();
    if (!std::isfinite(gmin) || !std::isfinite(gmax) || gmin < 0.0 || gmax < gmin)
        throw std::invalid_argument("need 0 <= gmin <= gmax, finite");
    if (steps < 1 || (steps == 1 && gmin != gmax))
        throw std::invalid_argument("steps must be >= 1 (== 1 only when gmin == gmax)");
    if (levels < 1) throw std::invalid_argument("levels must be >= 1");
    if (methods.empty()) throw std::invalid_argument("no methods selected");
    if (policy.initial_nmax < 2 || policy.max_solves < 1 || !(policy.tol_factor > 0.0))
        throw std::invalid_argument("invalid convergence policy");
}

double SweepSpec::g_at(int i) const
{
    if (steps == 1) return gmin;
    // endpoints exact; interior points on the affine grid
    if (i == 0) return gmin;
    if (i == steps - 1) return gmax;
    return gmin + (gmax - gmin) * (static_cast<double>(i) / (steps - 1));
}

std::vector<ApproxMethod> SweepSpec::normalized_methods() const
{
    std::vector<ApproxMethod> m = methods;
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    return m;
}

SweepConvergenceError::SweepConvergenceError(const ConvergenceError& inner, double g)
    : ConvergenceError(inner.what(), inner.report()), g_(g)
{
}

namespace {

std::vector<LabeledLevel> levels_for(const SweepSpec& spec, ApproxMethod method, double g)
{
    const ModelParams p{spec.omega0, spec.Omega, g * spec.omega0};
    switch (method) {
        case ApproxMethod::rwa: return rwa_levels(p, spec.levels);
        case ApproxMethod::adiabatic: return adiabatic_levels(p, spec.levels);
        case ApproxMethod::grwa: return grwa_levels(p, spec.levels);
        case ApproxMethod::exact: return exact_levels(p, spec.levels, spec.policy).levels;
    }
    throw std::invalid_argument("unknown method");
}

}  // namespace

SweepTable run_sweep(const SweepSpec& spec, kernels::ExecMode mode)
{
    spec.validate();
    const std::vector<ApproxMethod> methods = spec.normalized_methods();
    const int nm = static_cast<int>(methods.size());
    const int cells = spec.steps * nm;

    std::vector<std::vector<LabeledLevel>> slots(cells);
    std::optional<SweepConvergenceError> failure;
    std::exception_ptr other_failure;

    // one cell = one (g, method) pair; cell c -> slot c, so scheduling
    // cannot affect the assembled table; no exception may escape the loop
#ifdef _OPENMP
    const bool parallel = (mode == kernels::ExecMode::parallel);
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int c = 0; c < cells; ++c) {
        const int gi = c / nm;
        const ApproxMethod method = methods[c % nm];
        try {
            slots[c] = levels_for(spec, method, spec.g_at(gi));
        } catch (const ConvergenceError& err) {
            const SweepConvergenceError wrapped(err, spec.g_at(gi));
#ifdef _OPENMP
#pragma omp critical(rabi_sweep_failure)
#endif
            {
                if (!failure || wrapped.g() < failure->g()) failure = wrapped;
            }
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(rabi_sweep_failure)
#endif
            {
                if (!other_failure) other_failure = std::current_exception();
            }
        }
    }

    if (failure) throw *failure;
    if (other_failure) std::rethrow_exception(other_failure);

    SweepTable table;
    table.spec = spec;
    table.spec.methods = methods;
    table.rows.reserve(static_cast<std::size_t>(cells) * spec.levels);
    for (int c = 0; c < cells; ++c) {
        const int gi = c / nm;
        const ApproxMethod method = methods[c % nm];
        const double g = spec.g_at(gi);
        for (int rank = 0; rank < spec.levels; ++rank) {
            const LabeledLevel& lv = slots[c][rank];
            table.rows.push_back(SweepRow{g, method, rank, lv.branch, lv.n,
                                          method != ApproxMethod::exact,
                                          lv.energy / spec.omega0});
        }
    }
    return table;
}

std::vector<ErrorEntry> error_summary(const SweepTable& table, ApproxMethod reference)
{
    // reference energies by (g grid position, rank); rows arrive in table
    // order, so g positions are recovered by walking unique g values
    std::vector<double> gs;
    for (const SweepRow& r : table.rows)
        if (gs.empty() || gs.back() != r.g) gs.push_back(r.g);
    std::sort(gs.begin(), gs.end());
    gs.erase(std::unique(gs.begin(), gs.end()), gs.end());

    const auto gindex = [&gs](double g) {
        return static_cast<int>(std::lower_bound(gs.begin(), gs.end(), g) - gs.begin());
    };

    std::map<std::pair<int, int>, double> ref;  // (gi, rank) -> E/omega0
    for (const SweepRow& r : table.rows)
        if (r.method == reference) ref[{gindex(r.g), r.rank}] = r.energy_over_omega0;
    if (ref.empty()) throw std::invalid_argument("reference method absent from table");

    // the reference compares against itself too: those entries are exact zeros
    std::map<std::pair<ApproxMethod, int>, ErrorEntry> acc;
    for (const SweepRow& r : table.rows) {
        const auto it = ref.find({gindex(r.g), r.rank});
        if (it == ref.end())
            throw std::invalid_argument("reference method missing at a grid point");
        const double err = std::fabs(r.energy_over_omega0 - it->second);
        auto [slot, fresh] = acc.try_emplace({r.method, r.rank},
                                             ErrorEntry{r.method, r.rank, err, r.g});
        if (!fresh && err > slot->second.max_abs_error) {
            slot->second.max_abs_error = err;
            slot->second.argmax_g = r.g;
        }
    }

    std::vector<ErrorEntry> out;
    out.reserve(acc.size());
    for (const auto& [key, entry] : acc) out.push_back(entry);
    return out;
}

}  // namespace rabi
