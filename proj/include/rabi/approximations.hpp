#pragma once

#include <array>
#include <string>
#include <vector>

#include "rabi/model.hpp"

namespace rabi {

enum class ApproxMethod { rwa, adiabatic, grwa, exact };

// Fixed method order used everywhere output ordering matters.
std::string method_name(ApproxMethod m);
ApproxMethod method_from_name(const std::string& s);  // throws std::invalid_argument

struct LabeledLevel {
    Branch branch = Branch::minus;
    int n = 0;  // oscillator / block label
    double energy = 0.0;
};

// Adiabatic pair energies for oscillator label n >= 0, in formula order
// (minus first, not sorted):
//   E_{+-,n} = -+ (Omega/2) exp(-2g^2) L_n(4g^2) + omega0 (n - g^2).
std::array<double, 2> adiabatic_pair(const ModelParams& p, int n);

// 2x2 block over (Psi_{+,n-1}, Psi_{-,n}), n >= 1: adiabatic energies on
// the diagonal, (Omega/2) <n-1_-|n_+> off it.
struct SymmetricBlock {
    double d0 = 0.0, d1 = 0.0, off = 0.0;
    std::array<double, 2> eigenvalues() const;  // ascending
};
SymmetricBlock grwa_block(const ModelParams& p, int n);

// Closed form for the same pair, n >= 1, ascending: written directly in
// Laguerre terms (independent of grwa_block, which it must reproduce).
std::array<double, 2> grwa_pair(const ModelParams& p, int n);

// Lowest `count` levels per method, sorted ascending (ties keep smaller n,
// minus before plus). Ground states: rwa -Omega/2; adiabatic and grwa share
// E_{-,0} exactly.
std::vector<LabeledLevel> rwa_levels(const ModelParams& p, int count);
std::vector<LabeledLevel> adiabatic_levels(const ModelParams& p, int count);
std::vector<LabeledLevel> grwa_levels(const ModelParams& p, int count);

}  // namespace rabi
