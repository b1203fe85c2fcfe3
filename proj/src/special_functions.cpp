#include "rabi/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace rabi {

double laguerre(int n, int alpha, double x)
{
    if (n < 0 || alpha < 0)
        throw std::domain_error("laguerre: negative degree or order");
    if (!std::isfinite(x) || x < 0.0)
        throw std::domain_error("laguerre: argument must be finite and >= 0");

    // (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}
    double lm = 1.0;  // L_0
    if (n == 0) return lm;
    double l = 1.0 + alpha - x;  // L_1
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 + alpha - x) * l - (k + alpha) * lm) / (k + 1.0);
        lm = l;
        l = next;
    }
    return l;
}

double displaced_overlap(int m, int n, double g)
{
    if (m < 0 || n < 0)
        throw std::domain_error("displaced_overlap: negative Fock index");
    if (!std::isfinite(g) || g < 0.0)
        throw std::domain_error("displaced_overlap: displacement must be finite and >= 0");

    if (m > n) std::swap(m, n);  // symmetric in (m, n) by construction

    // exp(-2g^2) (2g)^{n-m} sqrt(m!/n!) as a running product: the k-th
    // factor 2g/sqrt(k) keeps intermediates in range for any n that could
    // ever matter here.
    double pref = std::exp(-2.0 * g * g);
    for (int k = m + 1; k <= n; ++k) pref *= 2.0 * g / std::sqrt(static_cast<double>(k));
    return pref * laguerre(m, n - m, 4.0 * g * g);
}

}  // namespace rabi
