#pragma once

#include <optional>
#include <vector>

#include "rabi/approximations.hpp"
#include "rabi/kernels.hpp"
#include "rabi/model.hpp"
#include "rabi/solver.hpp"

namespace rabi {

// A coupling sweep at fixed omega0, Omega: `steps` evenly spaced g values
// from gmin to gmax inclusive (steps == 1 requires gmin == gmax).
struct SweepSpec {
    double omega0 = 1.0;
    double Omega = 1.0;
    double gmin = 0.0;
    double gmax = 1.0;
    int steps = 2;
    int levels = 6;
    std::vector<ApproxMethod> methods;
    ConvergencePolicy policy;

    void validate() const;           // throws std::invalid_argument
    double g_at(int i) const;        // i in [0, steps)
    std::vector<ApproxMethod> normalized_methods() const;  // sorted, deduped
};

// One spectrum line. For approximate methods branch/n are the analytic
// labels; for the exact method they are synthesized from the rank and
// `labeled` is false (serializers emit them empty).
struct SweepRow {
    double g = 0.0;
    ApproxMethod method = ApproxMethod::rwa;
    int rank = 0;
    Branch branch = Branch::minus;
    int n = 0;
    bool labeled = true;
    double energy_over_omega0 = 0.0;
};

struct SweepTable {
    SweepSpec spec;
    std::vector<SweepRow> rows;  // ordered by (g ascending, method, rank)
};

// Computes every (g, method) cell, serially or with the cells distributed
// over OpenMP threads; each cell writes a preassigned slot, so both modes
// produce identical tables. Throws SweepConvergenceError (the offending g
// attached) if the exact method fails to converge at some point.
class SweepConvergenceError : public ConvergenceError {
public:
    SweepConvergenceError(const ConvergenceError& inner, double g);
    double g() const { return g_; }

private:
    double g_;
};
SweepTable run_sweep(const SweepSpec& spec,
                     kernels::ExecMode mode = kernels::ExecMode::parallel);

// Largest |E_method - E_reference| / omega0 per (method, rank) across the
// sweep, with the g that attains it (first one on ties). The reference
// method must be present at every grid point.
struct ErrorEntry {
    ApproxMethod method;
    int rank;
    double max_abs_error;  // in units of omega0
    double argmax_g;
};
std::vector<ErrorEntry> error_summary(const SweepTable& table,
                                      ApproxMethod reference);

}  // namespace rabi
