#pragma once

// |sum_k a_k e^{i k phi}| at many angles at once. Chunks of kLanes angles run as
// independent Horner chains so the inner loop pipelines and vectorizes.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <type_traits>

namespace hermspace::detail {

inline constexpr std::size_t kLanes = 8;

template <class Coeff>
void trig_modulus(std::span<const Coeff> a, std::span<const double> phi, std::span<double> out) {
    for (std::size_t base = 0; base < phi.size(); base += kLanes) {
        const std::size_t m = std::min(kLanes, phi.size() - base);
        double c[kLanes] = {};
        double s[kLanes] = {};
        double re[kLanes] = {};
        double im[kLanes] = {};
        for (std::size_t j = 0; j < m; ++j) {
            c[j] = std::cos(phi[base + j]);
            s[j] = std::sin(phi[base + j]);
        }
        for (std::size_t k = a.size(); k-- > 0;) {
            double ar;
            double ai;
            if constexpr (std::is_same_v<Coeff, double>) {
                ar = a[k];
                ai = 0.0;
            } else {
                ar = a[k].real();
                ai = a[k].imag();
            }
            for (std::size_t j = 0; j < kLanes; ++j) {
                const double nr = re[j] * c[j] - im[j] * s[j] + ar;
                im[j] = re[j] * s[j] + im[j] * c[j] + ai;
                re[j] = nr;
            }
        }
        for (std::size_t j = 0; j < m; ++j) out[base + j] = std::hypot(re[j], im[j]);
    }
}

}  // namespace hermspace::detail
