#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "gft/series.hpp"

namespace testutil {

using gft::Complex;
using gft::TruncatedSeries;

inline double u01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline Complex unit_disk(std::mt19937_64& rng) {
    const double r = std::sqrt(u01(rng));
    return std::polar(r, 2.0 * std::numbers::pi * u01(rng));
}

// Random series with coefficients in the closed unit bidisk.
inline TruncatedSeries random_series(std::mt19937_64& rng, int order) {
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    for (Complex& x : c) x = unit_disk(rng);
    return TruncatedSeries(std::move(c));
}

// Same but with unit constant term (pow_real input).
inline TruncatedSeries random_unit_series(std::mt19937_64& rng, int order) {
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    c[0] = Complex(1.0, 0.0);
    for (std::size_t k = 1; k < c.size(); ++k) c[k] = unit_disk(rng);
    return TruncatedSeries(std::move(c));
}

// Random normalized function with geometrically decaying coefficients (stays
// well-conditioned under the operator pipeline; not necessarily a class
// member).
inline gft::NormalizedFunction random_normalized(std::mt19937_64& rng, int order) {
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    c[1] = Complex(1.0, 0.0);
    double damp = 0.5;
    for (int k = 2; k <= order; ++k, damp *= 0.7) c[static_cast<std::size_t>(k)] = damp * unit_disk(rng);
    return gft::NormalizedFunction(TruncatedSeries(std::move(c)));
}

// Max per-coefficient difference over the common order (absolute).
inline double max_abs_diff(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    double m = 0.0;
    for (int k = 0; k <= n; ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

inline double sup_norm(const TruncatedSeries& a) {
    double sup = 0.0;
    for (int k = 0; k <= a.order(); ++k) sup = std::max(sup, std::abs(a[k]));
    return sup;
}

// Per-coefficient difference scaled by max(1, sup|a|, sup|b|, extra): behaves
// like the absolute comparison for O(1) series and stays meaningful when the
// compared series -- or the intermediates that produced them, passed via
// `extra` -- grow large.
inline double scaled_diff(const TruncatedSeries& a, const TruncatedSeries& b, double extra = 0.0) {
    const double sup = std::max({1.0, sup_norm(a), sup_norm(b), extra});
    return max_abs_diff(a, b) / sup;
}

}  // namespace testutil
