#pragma once

#include <string>
#include <vector>

#include "gft/series.hpp"

namespace gft {

// Finite description of an analytic phi with sup_{|z|<=1} |phi| <= 1. The
// realized series parameterizes class members through the half-plane
// representation S = (2*beta - 1) + 2(1 - beta)/(1 + z*phi).
class SchwarzSpec {
  public:
    enum class Kind { Constant, Monomial, Polynomial };

    // phi(z) = c, |c| <= 1.
    static SchwarzSpec constant(Complex c);
    // phi(z) = c z^m, |c| <= 1, m >= 0.
    static SchwarzSpec monomial(Complex c, int degree);
    // phi(z) = scale * sum raw_j z^j with scale chosen so the boundary
    // sup-norm estimate (720 samples of |phi(e^{i theta})|) is <= 1.
    static SchwarzSpec normalized_polynomial(std::vector<Complex> raw);

    Kind kind() const { return kind_; }
    Complex coefficient() const { return c_; }
    int degree() const { return degree_; }
    const std::vector<Complex>& raw() const { return raw_; }
    double scale() const { return scale_; }

    TruncatedSeries realize(int order) const;
    // Max of |phi| over 720 boundary samples; <= 1 + 1e-9 for every valid spec.
    double boundary_sup_estimate() const;

  private:
    SchwarzSpec() = default;
    Kind kind_ = Kind::Constant;
    Complex c_{0.0, 0.0};
    int degree_ = 0;
    std::vector<Complex> raw_;
    double scale_ = 1.0;
};

// Herglotz atom measure: p(z) = sum_j w_j (1 + z e^{-i t_j})/(1 - z e^{-i t_j}),
// giving c_k = 2 sum_j w_j e^{-i k t_j} and hence |c_k| <= 2.
// Throws BadMeasure unless w_j >= 0 and sum w_j == 1 within 1e-12.
TruncatedSeries caratheodory_from_atoms(std::span<const double> weights,
                                        std::span<const double> angles, int order);

struct MembershipReport {
    ClassParams params;
    std::vector<double> radii;
    int angles = 0;
    double min_real_part = 0.0;
    double margin = 0.0;         // min_real_part - beta
    double tail_estimate = 0.0;  // truncation-error estimate at the largest radius
    enum class Verdict { member, boundary, violation } verdict = Verdict::boundary;
};

const char* to_string(MembershipReport::Verdict v);

// Member construction from an already-realized phi series (|phi| <= 1 on the
// disk). Builds S = (2b-1) + 2(1-b)/(1+z*phi), divides out the operator
// weights and takes the 1/alpha power:
//   h_k = S_k / ((alpha+k)/alpha)^n,   f = z * h^{1/alpha}.
// Postcondition: salagean_normalized(f, params) == S within 1e-10 per
// coefficient. Throws InversionDivergence when the reciprocal expansion's
// trailing coefficients exceed the unit bound and its tail estimate at radius
// 0.95 exceeds 1e-6 (i.e. phi was not actually bounded by 1).
NormalizedFunction member_from_phi_series(const TruncatedSeries& phi, const ClassParams& params,
                                          int order);

NormalizedFunction member_from_schwarz(const SchwarzSpec& phi, const ClassParams& params,
                                       int order);

// Same pipeline with S = beta + (1-beta) p for a Caratheodory series p
// (p_0 == 1 exactly, Re p > 0 as produced by caratheodory_from_atoms).
NormalizedFunction member_from_caratheodory(const TruncatedSeries& p, const ClassParams& params,
                                            int order);

// Evaluates Re{L_n(f)} on the polar grid radii x angles and compares the
// minimum against beta and the truncation tail estimate. Radii must lie in
// (0, 0.95].
MembershipReport check_membership(const NormalizedFunction& f, const ClassParams& params,
                                  std::span<const double> radii, int angles_count);

inline constexpr double kDefaultMembershipRadii[] = {0.3, 0.6, 0.9};
inline constexpr int kDefaultMembershipAngles = 256;
// Grid checks need small tails at the outer radius; constructions get by
// with less.
inline constexpr int kDefaultConstructionOrder = 32;
inline constexpr int kDefaultGridOrder = 64;

// K(z) = z/(1-z)^2 = sum k z^k and its rotations a_k = k e^{i(k-1)xi}.
NormalizedFunction koebe(int order);
NormalizedFunction rotated_koebe(double xi, int order);

// Integral transform F with F^alpha = (alpha+c)/z^c * Integral_0^z t^{c-1} f(t)^alpha dt,
// acting on h = (f/z)^alpha as H_k = h_k (alpha+c)/(alpha+c+k). Requires
// alpha + c > 0.
NormalizedFunction bernardi_transform(const NormalizedFunction& f, double c,
                                      const ClassParams& params);

}  // namespace gft
