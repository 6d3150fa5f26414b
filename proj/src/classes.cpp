#include "gft/classes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace gft {

namespace {

constexpr int kBoundarySamples = 720;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double polynomial_boundary_sup(const std::vector<Complex>& coeffs) {
    double sup = 0.0;
    for (int s = 0; s < kBoundarySamples; ++s) {
        const double theta = kTwoPi * s / kBoundarySamples;
        const Complex z = std::polar(1.0, theta);
        Complex acc(0.0, 0.0);
        for (std::size_t k = coeffs.size(); k-- > 0;) acc = coeffs[k] + z * acc;
        sup = std::max(sup, std::abs(acc));
    }
    return sup;
}

}  // namespace

SchwarzSpec SchwarzSpec::constant(Complex c) {
    if (std::abs(c) > 1.0 + 1e-9)
        throw std::invalid_argument("SchwarzSpec::constant: |c| must be <= 1");
    SchwarzSpec s;
    s.kind_ = Kind::Constant;
    s.c_ = c;
    return s;
}

SchwarzSpec SchwarzSpec::monomial(Complex c, int degree) {
    if (std::abs(c) > 1.0 + 1e-9)
        throw std::invalid_argument("SchwarzSpec::monomial: |c| must be <= 1");
    if (degree < 0) throw std::invalid_argument("SchwarzSpec::monomial: degree must be >= 0");
    SchwarzSpec s;
    s.kind_ = Kind::Monomial;
    s.c_ = c;
    s.degree_ = degree;
    return s;
}

SchwarzSpec SchwarzSpec::normalized_polynomial(std::vector<Complex> raw) {
    if (raw.empty()) raw.push_back(Complex(0.0, 0.0));
    SchwarzSpec s;
    s.kind_ = Kind::Polynomial;
    s.raw_ = std::move(raw);
    const double sup = polynomial_boundary_sup(s.raw_);
    s.scale_ = sup > 0.0 ? 1.0 / sup : 1.0;
    return s;
}

TruncatedSeries SchwarzSpec::realize(int order) const {
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    switch (kind_) {
        case Kind::Constant:
            c[0] = c_;
            break;
        case Kind::Monomial:
            if (degree_ <= order) c[static_cast<std::size_t>(degree_)] = c_;
            break;
        case Kind::Polynomial:
            for (std::size_t k = 0; k < raw_.size() && k <= static_cast<std::size_t>(order); ++k)
                c[k] = raw_[k] * scale_;
            break;
    }
    return TruncatedSeries(std::move(c));
}

double SchwarzSpec::boundary_sup_estimate() const {
    switch (kind_) {
        case Kind::Constant:
        case Kind::Monomial:
            return std::abs(c_);
        case Kind::Polynomial: {
            std::vector<Complex> scaled(raw_);
            for (Complex& x : scaled) x *= scale_;
            return polynomial_boundary_sup(scaled);
        }
    }
    return 0.0;
}

TruncatedSeries caratheodory_from_atoms(std::span<const double> weights,
                                        std::span<const double> angles, int order) {
    if (weights.size() != angles.size() || weights.empty())
        throw BadMeasure("caratheodory_from_atoms: weights/angles size mismatch");
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw BadMeasure("caratheodory_from_atoms: negative weight");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw BadMeasure("caratheodory_from_atoms: weights must sum to 1");

    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    c[0] = Complex(1.0, 0.0);
    for (int k = 1; k <= order; ++k) {
        Complex s(0.0, 0.0);
        for (std::size_t j = 0; j < weights.size(); ++j)
            s += weights[j] * std::polar(1.0, -static_cast<double>(k) * angles[j]);
        c[static_cast<std::size_t>(k)] = 2.0 * s;
    }
    return TruncatedSeries(std::move(c));
}

const char* to_string(MembershipReport::Verdict v) {
    switch (v) {
        case MembershipReport::Verdict::member: return "member";
        case MembershipReport::Verdict::boundary: return "boundary";
        case MembershipReport::Verdict::violation: return "violation";
    }
    return "?";
}

namespace {

// Shared tail of the construction pipeline: S is the target for L_n(f),
// with S_0 == 1 exactly.
NormalizedFunction member_from_target(const TruncatedSeries& s, const ClassParams& params) {
    std::vector<Complex> h(s.coeffs().begin(), s.coeffs().end());
    for (int k = 1; k <= s.order(); ++k)
        h[static_cast<std::size_t>(k)] /= ipow((params.alpha + k) / params.alpha, params.n);
    const TruncatedSeries g = pow_real(TruncatedSeries(std::move(h)), 1.0 / params.alpha);
    return NormalizedFunction(mul_z(g));
}

}  // namespace

NormalizedFunction member_from_phi_series(const TruncatedSeries& phi, const ClassParams& params,
                                          int order) {
    if (order < 2) throw DomainError("member_from_phi_series: order must be >= 2");
    const int m = order - 1;  // order of S and h; f gains one from mul_z

    // u = 1 + z*phi truncated to order m, then q = u^{-1}.
    std::vector<Complex> u(static_cast<std::size_t>(m) + 1);
    u[0] = Complex(1.0, 0.0);
    for (int k = 1; k <= m; ++k)
        u[static_cast<std::size_t>(k)] = phi.order() >= k - 1 ? phi[k - 1] : Complex(0.0, 0.0);
    const TruncatedSeries q = pow_real(TruncatedSeries(std::move(u)), -1.0);

    // For a genuine Schwarz phi, 1/(1+z*phi) has Re > 1/2, so |q_k| <= 1 for
    // every k >= 1. Trailing coefficients above that bound mean the expansion
    // diverges inside the disk.
    double trail = 0.0;
    for (int k = std::max(1, m - 2); k <= m; ++k) trail = std::max(trail, std::abs(q[k]));
    if (trail > 1.0 + 1e-6 && tail_bound(q, 0.95) > 1e-6)
        throw InversionDivergence("member_from_phi_series: 1/(1+z*phi) expansion diverges");

    std::vector<Complex> s(static_cast<std::size_t>(m) + 1);
    s[0] = Complex(1.0, 0.0);
    for (int k = 1; k <= m; ++k) s[static_cast<std::size_t>(k)] = 2.0 * (1.0 - params.beta) * q[k];
    return member_from_target(TruncatedSeries(std::move(s)), params);
}

NormalizedFunction member_from_schwarz(const SchwarzSpec& phi, const ClassParams& params,
                                       int order) {
    return member_from_phi_series(phi.realize(std::max(0, order - 2)), params, order);
}

NormalizedFunction member_from_caratheodory(const TruncatedSeries& p, const ClassParams& params,
                                            int order) {
    if (order < 2) throw DomainError("member_from_caratheodory: order must be >= 2");
    if (p[0] != Complex(1.0, 0.0))
        throw NonUnitConstantTerm("member_from_caratheodory: p(0) must be exactly 1");
    const int m = order - 1;
    std::vector<Complex> s(static_cast<std::size_t>(m) + 1);
    s[0] = Complex(1.0, 0.0);
    for (int k = 1; k <= m; ++k)
        s[static_cast<std::size_t>(k)] = p.order() >= k ? (1.0 - params.beta) * p[k] : Complex(0.0, 0.0);
    return member_from_target(TruncatedSeries(std::move(s)), params);
}

MembershipReport check_membership(const NormalizedFunction& f, const ClassParams& params,
                                  std::span<const double> radii, int angles_count) {
    if (radii.empty() || angles_count < 1)
        throw DomainError("check_membership: empty evaluation grid");
    double r_max = 0.0;
    for (double r : radii) {
        if (!(r > 0.0 && r <= 0.95))
            throw DomainError("check_membership: radii must lie in (0, 0.95]");
        r_max = std::max(r_max, r);
    }

    const TruncatedSeries L = salagean_normalized(f, params);
    double min_real = std::numeric_limits<double>::infinity();
    for (double r : radii) {
        for (int j = 0; j < angles_count; ++j) {
            const double theta = kTwoPi * j / angles_count;
            min_real = std::min(min_real, eval(L, std::polar(r, theta)).real());
        }
    }

    MembershipReport rep;
    rep.params = params;
    rep.radii.assign(radii.begin(), radii.end());
    rep.angles = angles_count;
    rep.min_real_part = min_real;
    rep.margin = min_real - params.beta;
    rep.tail_estimate = tail_bound(L, r_max);
    if (rep.margin > rep.tail_estimate)
        rep.verdict = MembershipReport::Verdict::member;
    else if (rep.margin < -rep.tail_estimate)
        rep.verdict = MembershipReport::Verdict::violation;
    else
        rep.verdict = MembershipReport::Verdict::boundary;
    return rep;
}

NormalizedFunction koebe(int order) {
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    for (int k = 1; k <= order; ++k) c[static_cast<std::size_t>(k)] = Complex(k, 0.0);
    return NormalizedFunction(TruncatedSeries(std::move(c)));
}

NormalizedFunction rotated_koebe(double xi, int order) {
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    c[1] = Complex(1.0, 0.0);
    for (int k = 2; k <= order; ++k)
        c[static_cast<std::size_t>(k)] = static_cast<double>(k) * std::polar(1.0, (k - 1) * xi);
    return NormalizedFunction(TruncatedSeries(std::move(c)));
}

NormalizedFunction bernardi_transform(const NormalizedFunction& f, double c,
                                      const ClassParams& params) {
    if (!(params.alpha + c > 0.0)) throw DomainError("bernardi_transform: requires alpha + c > 0");
    const TruncatedSeries h = pow_real(div_z(f.series()), params.alpha);
    std::vector<double> w(static_cast<std::size_t>(h.order()) + 1);
    for (int k = 0; k <= h.order(); ++k)
        w[static_cast<std::size_t>(k)] = (params.alpha + c) / (params.alpha + c + k);
    const TruncatedSeries H = apply_coefficient_weights(h, w);
    return NormalizedFunction(mul_z(pow_real(H, 1.0 / params.alpha)));
}

}  // namespace gft
