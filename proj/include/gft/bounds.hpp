#pragma once

#include <string>

#include "gft/params.hpp"

namespace gft {

// Every closed-form bound exists in two variants. "printed" evaluates the
// published statement verbatim, misprints included; "derived" evaluates the
// expression this library re-derives from the coefficient identities
//   a2 = E c1/(alpha+1)^n
//   a3 = E c2/(alpha+2)^n - (alpha-1) E^2 c1^2 / (2 (alpha+1)^{2n})
//   a4 = E c3/(alpha+3)^n - (alpha-1) E^2 c1 c2 / ((alpha+1)^n (alpha+2)^n)
//        + (alpha-1)(2 alpha - 1) E^3 c1^3 / (6 (alpha+1)^{3n})
// with E = alpha^{n-1} (1-beta) and |c_i| <= 2. The audit engine decides which
// variant the data supports; neither is silently corrected.
enum class Provenance { printed, derived };

const char* to_string(Provenance p);

// |a2| <= 2(1-beta) alpha^{n-1} / (alpha+1)^n. Both variants agree.
double bound_a2(const ClassParams& params);

// |a3| bound; branches at alpha = 1. The derived 0 < alpha <= 1 branch is
//   2E/(alpha+2)^n + 2(1-alpha) E^2/(alpha+1)^{2n},
// the alpha >= 1 branch 2E/(alpha+2)^n for both variants.
double bound_a3(const ClassParams& params, Provenance prov);

// |a4| bound; branches at alpha = 1. The derived 0 < alpha <= 1 branch is the
// term-by-term worst case |c_i| = 2 of the a4 identity above:
//   2E/(alpha+3)^n + 4(1-alpha) E^2/((alpha+1)^n (alpha+2)^n)
//   + (4/3)(1-alpha)|2 alpha - 1| E^3/(alpha+1)^{3n}.
double bound_a4(const ClassParams& params, Provenance prov);

// |a3 - mu a2^2| bound. With A = E/(alpha+2)^n and B = E^2/(alpha+1)^{2n} the
// derived variant is 2A + 2B |2 mu + (alpha - 1)| for every real mu; the
// printed variant keeps the published branch at mu = (alpha-1)/2 and the
// (alpha-1) prefactor of its second term.
double fekete_szego_bound(const ClassParams& params, double mu, Provenance prov);

struct DistortionPair {
    double lower = 0.0;
    double upper = 0.0;
};

// Bounds for the operator value on |z| = r, 0 < r < 1. The derived pair is
// stated for the normalized L_n:
//   (2 beta - 1) + 2(1-beta)/(1+r)  <=  Re L_n  <=  beta + (1-beta)(1+r)/(1-r);
// the printed pair is stated for the unnormalized alpha^n L_n:
//   ((r-1)^2 - alpha^n (1+r)^2) / (2r(1+r))  and  alpha^n (1+r)/(1-r).
// Scale the derived pair by alpha^n to compare the two. Throws DomainError
// for r outside (0, 1).
DistortionPair distortion_bounds(const ClassParams& params, double r, Provenance prov);

}  // namespace gft
