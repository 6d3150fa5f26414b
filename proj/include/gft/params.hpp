#pragma once

#include <cmath>

#include "gft/errors.hpp"

namespace gft {

// Parameters (alpha, beta, n) of the operator class: functions f with
// Re{ D^n[f^alpha] / (alpha^n z^alpha) } > beta on the unit disk, where D is
// the Salagean operator D g = z g'. beta = 1 is rejected as degenerate (the
// class would contain only f = z).
struct ClassParams {
    double alpha = 1.0;
    double beta = 0.0;
    int n = 0;

    ClassParams() = default;
    ClassParams(double alpha_, double beta_, int n_) : alpha(alpha_), beta(beta_), n(n_) {
        if (!(alpha > 0.0) || !std::isfinite(alpha))
            throw DomainError("ClassParams: alpha must be positive and finite");
        if (!(beta >= 0.0 && beta < 1.0))
            throw DomainError("ClassParams: beta must lie in [0, 1)");
        if (n < 0) throw DomainError("ClassParams: n must be nonnegative");
    }
};

// x^k for integer k, by repeated multiplication. Used everywhere a formula
// carries an integer exponent (n, 2n, 3n, ...) so results do not depend on
// libm pow rounding.
inline double ipow(double x, int k) {
    if (k < 0) return 1.0 / ipow(x, -k);
    double r = 1.0;
    while (k-- > 0) r *= x;
    return r;
}

}  // namespace gft
