#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rabi/approximations.hpp"
#include "rabi/matrix.hpp"
#include "rabi/model.hpp"

namespace rabi {

// Lowest `count` eigenvalues of a symmetric matrix, ascending. Householder
// tridiagonalization followed by implicit-shift QL, values only. Throws
// std::invalid_argument for non-symmetric input (tolerance
// 1e-12 * max|a_ij|) or count outside [1, dim], std::runtime_error if the
// QL iteration cap is hit.
std::vector<double> symmetric_eigenvalues(const Matrix& a, int count);

struct EigenSystem {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column k belongs to values[k]
};
EigenSystem symmetric_eigensystem(const Matrix& a);

// Truncation control for the exact spectrum: solve at nmax, double it,
// and accept once no requested level moves by more than
// tol_factor * omega0 between consecutive solves.
struct ConvergencePolicy {
    int initial_nmax = 100;
    int max_solves = 3;
    double tol_factor = 1e-8;
};

struct ConvergenceReport {
    std::vector<int> nmax_sequence;       // truncations actually solved
    std::vector<double> level_drift;      // |dE| per level, last comparison
    bool converged = false;
    int final_nmax = 0;
};

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, ConvergenceReport report);
    const ConvergenceReport& report() const { return report_; }

private:
    ConvergenceReport report_;
};

// Lowest `count` exact levels with truncation raised until converged.
// Labels are synthesized from the rank: the ground state is (minus, 0) and
// successive pairs are (minus, k), (plus, k) for k = 1, 2, ... (the pattern
// every limit of this model follows). Throws ConvergenceError if the policy
// is exhausted.
struct ExactResult {
    std::vector<LabeledLevel> levels;
    ConvergenceReport report;
};
ExactResult exact_levels(const ModelParams& p, int count,
                         const ConvergencePolicy& policy = {});

}  // namespace rabi
