#pragma once

#include "rabi/kernels.hpp"
#include "rabi/matrix.hpp"

namespace rabi {

// hbar = 1 throughout; energies are reported in units of omega0 at the
// output layer, but the model itself carries plain energy units.
struct ModelParams {
    double omega0 = 1.0;  // oscillator frequency, > 0
    double Omega = 1.0;   // spin splitting, >= 0
    double lambda = 0.0;  // coupling, >= 0

    double coupling_ratio() const { return lambda / omega0; }  // g
    void validate() const;  // throws std::invalid_argument
};

// Number of Fock levels kept (occupations 0 .. nmax-1); the product basis
// has dimension 2*nmax.
struct Truncation {
    int nmax = 100;
    void validate() const;  // throws std::invalid_argument (nmax >= 2)
};

enum class Branch { minus, plus };

// H = omega0 a^dag a + (Omega/2) sigma_x + lambda sigma_z (a^dag + a)
// on the product basis |-x,0>, |+x,0>, |-x,1>, |+x,1>, ... : index 2N + s
// with s = 0 for sigma_x = -1 and s = 1 for sigma_x = +1. sigma_z flips s,
// so the only off-diagonal entries are lambda sqrt(N+1) between (N, s) and
// (N+1, 1-s). The returned matrix is exactly symmetric.
Matrix build_hamiltonian(const ModelParams& p, const Truncation& t);

// exp(-sign * g (a^dag - a)) on the truncated Fock space (sign = +1 or -1).
// Column N is the displaced state |N_sign> in the bare number basis. The
// generator is antisymmetric, so the result is orthogonal up to rounding.
Matrix displacement_matrix(double g, int sign, const Truncation& t);

// Columns are |Psi_-,0>, |Psi_+,0>, |Psi_-,1>, ... with
// |Psi_{+-,N}> = (|+z,N_+> +- |-z,N_->)/sqrt(2), expressed in the product
// basis above (|+-z> = (|+x> +- |-x>)/sqrt(2)).
Matrix adiabatic_basis(const ModelParams& p, const Truncation& t);

// B^T H B with B = adiabatic_basis, symmetrized after the product. In this
// basis the oscillator part is diagonal and the spin term obeys a parity
// selection rule: same-branch entries vanish for odd |dN|, opposite-branch
// entries for even |dN| (including dN = 0).
Matrix transformed_hamiltonian(const ModelParams& p, const Truncation& t,
                               kernels::ExecMode mode = kernels::ExecMode::parallel);

}  // namespace rabi
