#include "gft/bounds.hpp"

#include <cmath>

namespace gft {

namespace {

// E = alpha^{n-1} (1 - beta); the common scale of all coefficient bounds.
double scale_E(const ClassParams& p) { return ipow(p.alpha, p.n - 1) * (1.0 - p.beta); }

}  // namespace

const char* to_string(Provenance p) { return p == Provenance::printed ? "printed" : "derived"; }

double bound_a2(const ClassParams& p) {
    return 2.0 * (1.0 - p.beta) * ipow(p.alpha, p.n - 1) / ipow(p.alpha + 1.0, p.n);
}

double bound_a3(const ClassParams& p, Provenance prov) {
    const double a = p.alpha;
    const double E = scale_E(p);
    if (a >= 1.0) return 2.0 * E / ipow(a + 2.0, p.n);
    if (prov == Provenance::printed) {
        // Published 0 < alpha <= 1 branch, kept verbatim: (alpha+2)^2 in the
        // denominator and a trailing (alpha-2) where the proof's own line has
        // (alpha+2)^n.
        const double num = ipow(a + 1.0, 2 * p.n)
                           - (a - 1.0) * ipow(a, p.n - 1) * (1.0 - p.beta) * (a - 2.0);
        return 2.0 * E * num / ((a + 2.0) * (a + 2.0) * ipow(a + 1.0, 2 * p.n));
    }
    return 2.0 * E / ipow(a + 2.0, p.n) + 2.0 * (1.0 - a) * E * E / ipow(a + 1.0, 2 * p.n);
}

double bound_a4(const ClassParams& p, Provenance prov) {
    const double a = p.alpha;
    const double E = scale_E(p);
    if (a >= 1.0) return 2.0 * E / ipow(a + 3.0, p.n);
    if (prov == Provenance::printed) {
        // Published A1..A4 verbatim, including the (alpha+2)^3 factor in A4
        // and the first-power (1-beta) in A2 and A3.
        const double omb = 1.0 - p.beta;
        const double A1 = 6.0 * ipow(a, p.n - 1) * omb * ipow(a + 2.0, p.n) * ipow(a + 1.0, 3 * p.n);
        const double A2 = 12.0 * (a - 1.0) * ipow(a, 2 * p.n - 2) * omb * ipow(a + 1.0, 2 * p.n)
                          * ipow(a + 3.0, p.n);
        const double A3 = 12.0 * (a - 1.0) * (a - 1.0) * ipow(a, 3 * p.n - 3) * omb
                          * ipow(a + 2.0, p.n) * ipow(a + 3.0, p.n);
        const double A4 = 2.0 * (a - 1.0) * (a - 2.0) * ipow(a, 2 * p.n - 2) * omb
                          * ipow(a + 2.0, 3) * ipow(a + 3.0, p.n);
        return (A1 - A2 + A3 - A4)
               / (3.0 * ipow(a + 3.0, p.n) * ipow(a + 2.0, p.n) * ipow(a + 1.0, 3 * p.n));
    }
    return 2.0 * E / ipow(a + 3.0, p.n)
           + 4.0 * (1.0 - a) * E * E / (ipow(a + 1.0, p.n) * ipow(a + 2.0, p.n))
           + (4.0 / 3.0) * (1.0 - a) * std::abs(2.0 * a - 1.0) * E * E * E
                 / ipow(a + 1.0, 3 * p.n);
}

double fekete_szego_bound(const ClassParams& p, double mu, Provenance prov) {
    const double a = p.alpha;
    const double E = scale_E(p);
    const double A = E / ipow(a + 2.0, p.n);
    const double B = E * E / ipow(a + 1.0, 2 * p.n);
    if (prov == Provenance::printed) {
        if (mu <= (a - 1.0) / 2.0) return 2.0 * A;
        return 2.0 * A + 2.0 * B * (a - 1.0) * (2.0 * mu - (a - 1.0));
    }
    return 2.0 * A + 2.0 * B * std::abs(2.0 * mu + (a - 1.0));
}

DistortionPair distortion_bounds(const ClassParams& p, double r, Provenance prov) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("distortion_bounds: r must lie in (0, 1)");
    DistortionPair out;
    if (prov == Provenance::printed) {
        const double an = ipow(p.alpha, p.n);
        out.lower = ((r - 1.0) * (r - 1.0) - an * (1.0 + r) * (1.0 + r)) / (2.0 * r * (1.0 + r));
        out.upper = an * (1.0 + r) / (1.0 - r);
    } else {
        out.lower = (2.0 * p.beta - 1.0) + 2.0 * (1.0 - p.beta) / (1.0 + r);
        out.upper = p.beta + (1.0 - p.beta) * (1.0 + r) / (1.0 - r);
    }
    return out;
}

}  // namespace gft
