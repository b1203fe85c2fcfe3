#pragma once

namespace rabi {

// Associated Laguerre polynomial L_n^alpha(x), integer n >= 0, alpha >= 0,
// x >= 0, by the forward three-term recurrence in n (exact for n = 0, 1).
// Throws std::domain_error outside the domain.
double laguerre(int n, int alpha, double x);

// Overlap <m_-|n_+> of oppositely displaced Fock states at dimensionless
// displacement g >= 0: exp(-2g^2) (2g)^{n-m} sqrt(m!/n!) L_m^{n-m}(4g^2)
// for m <= n, symmetric under exchange of m and n. The prefactor is
// accumulated as a running product to avoid factorial overflow.
// Throws std::domain_error for negative indices or non-finite/negative g.
double displaced_overlap(int m, int n, double g);

}  // namespace rabi
