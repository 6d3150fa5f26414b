#pragma once

#include <complex>
#include <span>
#include <vector>

#include "gft/params.hpp"

namespace gft {

using Complex = std::complex<double>;

// Truncated power series sum_{k=0..N} c_k z^k with complex coefficients.
// Values are immutable after construction; every operation returns a fresh
// series. Binary operations truncate to the smaller operand order -- there is
// no silent zero-padding.
class TruncatedSeries {
  public:
    // Takes ownership of the coefficient vector; order is coeffs.size()-1.
    // All entries must be finite.
    explicit TruncatedSeries(std::vector<Complex> coeffs);

    static TruncatedSeries zero(int order);
    static TruncatedSeries constant(Complex value, int order);
    // 1 + z + z^2 + ... + z^order
    static TruncatedSeries geometric(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Complex& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    std::span<const Complex> coeffs() const { return coeffs_; }

  private:
    std::vector<Complex> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, Complex factor);

// Cauchy product truncated to min(order a, order b).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Multiply by z (order grows by one) / divide by z (requires c_0 == 0).
TruncatedSeries mul_z(const TruncatedSeries& a);
TruncatedSeries div_z(const TruncatedSeries& a);

// g^alpha for a series with unit constant term, principal branch h(0) = 1.
// Coefficient recurrence (from h' g = alpha g' h):
//   k h_k = sum_{j=1..k} ((alpha+1) j - k) g_j h_{k-j}
// Throws NonUnitConstantTerm unless g_0 == 1 exactly.
TruncatedSeries pow_real(const TruncatedSeries& g, double alpha);

// Term-wise derivative; order drops by one (derivative of a constant is the
// zero series of order 0).
TruncatedSeries derivative(const TruncatedSeries& a);

// c_k -> weights[k] * c_k. weights must cover every coefficient. This is the
// series side of the operator family acting diagonally on coefficients
// (Salagean weights, Bernardi integral weights).
TruncatedSeries apply_coefficient_weights(const TruncatedSeries& a, std::span<const double> weights);

// Horner evaluation of the truncated polynomial.
Complex eval(const TruncatedSeries& a, Complex z);

// Heuristic truncation-error estimate at radius r < 1:
//   max(|c_{N-2}|, |c_{N-1}|, |c_N|) * r^{N+1} / (1 - r)
double tail_bound(const TruncatedSeries& a, double r);

// Normalized function f = z + a_2 z^2 + ...: c_0 == 0 and c_1 == 1 exactly.
class NormalizedFunction {
  public:
    explicit NormalizedFunction(TruncatedSeries series);

    const TruncatedSeries& series() const { return series_; }
    int order() const { return series_.order(); }
    // Coefficient a_k of z^k (a_1 == 1).
    Complex a(int k) const { return series_[k]; }

  private:
    TruncatedSeries series_;
};

// L_n(f) = D^n[f^alpha] / (alpha^n z^alpha) as a series in z: with
// h = (f/z)^alpha, coefficient k is ((alpha+k)/alpha)^n h_k. The constant
// term is exactly 1; the unnormalized operator value is alpha^n * L_n.
TruncatedSeries salagean_normalized(const NormalizedFunction& f, const ClassParams& params);

}  // namespace gft
