#include "gft/series.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace gft {

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

void check_finite(const std::vector<Complex>& coeffs) {
    for (const Complex& c : coeffs)
        if (!finite(c)) throw std::invalid_argument("TruncatedSeries: non-finite coefficient");
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient vector");
    check_finite(coeffs_);
}

TruncatedSeries TruncatedSeries::zero(int order) {
    return TruncatedSeries(std::vector<Complex>(static_cast<std::size_t>(order) + 1));
}

TruncatedSeries TruncatedSeries::constant(Complex value, int order) {
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    c[0] = value;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::geometric(int order) {
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1, Complex(1.0, 0.0));
    return TruncatedSeries(std::move(c));
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = a[k] + b[k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = a[k] - b[k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries scale(const TruncatedSeries& a, Complex factor) {
    std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
    for (Complex& x : c) x *= factor;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Complex s(0.0, 0.0);
        for (int j = 0; j <= k; ++j) s += a[j] * b[k - j];
        c[static_cast<std::size_t>(k)] = s;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries mul_z(const TruncatedSeries& a) {
    std::vector<Complex> c(static_cast<std::size_t>(a.order()) + 2);
    for (int k = 0; k <= a.order(); ++k) c[static_cast<std::size_t>(k) + 1] = a[k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries div_z(const TruncatedSeries& a) {
    if (a[0] != Complex(0.0, 0.0))
        throw std::invalid_argument("div_z: constant term must be exactly zero");
    if (a.order() == 0) return TruncatedSeries::zero(0);
    std::vector<Complex> c(static_cast<std::size_t>(a.order()));
    for (int k = 1; k <= a.order(); ++k) c[static_cast<std::size_t>(k) - 1] = a[k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries pow_real(const TruncatedSeries& g, double alpha) {
    if (g[0] != Complex(1.0, 0.0))
        throw NonUnitConstantTerm("pow_real: constant term must be exactly 1");
    const int n = g.order();
    std::vector<Complex> h(static_cast<std::size_t>(n) + 1);
    h[0] = Complex(1.0, 0.0);
    // Extended-precision accumulation: the recurrence feeds each h_k back into
    // all later ones, so summation error at high orders would otherwise
    // dominate the round-trip defect of h^a -> h^(1/a) chains.
    for (int k = 1; k <= n; ++k) {
        long double sre = 0.0L, sim = 0.0L;
        for (int j = 1; j <= k; ++j) {
            const long double w = (static_cast<long double>(alpha) + 1.0L) * j - k;
            const long double gr = g[j].real(), gi = g[j].imag();
            const Complex& hk = h[static_cast<std::size_t>(k - j)];
            const long double hr = hk.real(), hi = hk.imag();
            sre += w * (gr * hr - gi * hi);
            sim += w * (gr * hi + gi * hr);
        }
        h[static_cast<std::size_t>(k)] = Complex(static_cast<double>(sre / k),
                                                 static_cast<double>(sim / k));
    }
    return TruncatedSeries(std::move(h));
}

TruncatedSeries derivative(const TruncatedSeries& a) {
    if (a.order() == 0) return TruncatedSeries::zero(0);
    std::vector<Complex> c(static_cast<std::size_t>(a.order()));
    for (int k = 1; k <= a.order(); ++k)
        c[static_cast<std::size_t>(k) - 1] = static_cast<double>(k) * a[k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries apply_coefficient_weights(const TruncatedSeries& a, std::span<const double> weights) {
    if (weights.size() < a.coeffs().size())
        throw std::invalid_argument("apply_coefficient_weights: weight vector too short");
    std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] *= weights[k];
    return TruncatedSeries(std::move(c));
}

Complex eval(const TruncatedSeries& a, Complex z) {
    Complex acc(0.0, 0.0);
    for (int k = a.order(); k >= 0; --k) acc = a[k] + z * acc;
    return acc;
}

double tail_bound(const TruncatedSeries& a, double r) {
    assert(r >= 0.0 && r < 1.0);
    double m = 0.0;
    const int lo = std::max(0, a.order() - 2);
    for (int k = lo; k <= a.order(); ++k) m = std::max(m, std::abs(a[k]));
    return m * ipow(r, a.order() + 1) / (1.0 - r);
}

NormalizedFunction::NormalizedFunction(TruncatedSeries series) : series_(std::move(series)) {
    if (series_.order() < 1 || series_[0] != Complex(0.0, 0.0) || series_[1] != Complex(1.0, 0.0))
        throw std::invalid_argument("NormalizedFunction: requires c0 == 0 and c1 == 1 exactly");
}

TruncatedSeries salagean_normalized(const NormalizedFunction& f, const ClassParams& params) {
    const TruncatedSeries h = pow_real(div_z(f.series()), params.alpha);
    std::vector<double> w(static_cast<std::size_t>(h.order()) + 1);
    for (int k = 0; k <= h.order(); ++k)
        w[static_cast<std::size_t>(k)] = ipow((params.alpha + k) / params.alpha, params.n);
    return apply_coefficient_weights(h, w);
}

}  // namespace gft
