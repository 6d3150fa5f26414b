#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "gft/bounds.hpp"
#include "test_util.hpp"

using namespace gft;
using Cx = std::complex<double>;

namespace {

// Inverse of the coefficient identities: (c1, c2, c3) -> (a2, a3, a4). Built
// straight from the comparison of series coefficients, independent of the
// closed forms in bounds.cpp.
struct CoeffsFromC {
    Cx a2, a3, a4;
    CoeffsFromC(const ClassParams& p, Cx c1, Cx c2, Cx c3) {
        const double E = ipow(p.alpha, p.n - 1) * (1.0 - p.beta);
        a2 = E * c1 / ipow(p.alpha + 1.0, p.n);
        a3 = E * c2 / ipow(p.alpha + 2.0, p.n) - (p.alpha - 1.0) / 2.0 * a2 * a2;
        a4 = E * c3 / ipow(p.alpha + 3.0, p.n) - (p.alpha - 1.0) * a2 * a3
             - (p.alpha - 1.0) * (p.alpha - 2.0) / 6.0 * a2 * a2 * a2;
    }
};

// a4 = T1 c3 + T2 c1 c2 + T3 c1^3; extract the monomial coefficients
// numerically and apply |c_i| <= 2 with aligned phases. This is the
// brute-force elimination oracle for the derived 0 < alpha <= 1 branch.
double a4_elimination_oracle(const ClassParams& p) {
    const double T1 = CoeffsFromC(p, 0, 0, 1).a4.real();
    const double T3 = CoeffsFromC(p, 1, 0, 0).a4.real();
    const double T2 = CoeffsFromC(p, 1, 1, 0).a4.real() - T3;
    return 2.0 * std::abs(T1) + 4.0 * std::abs(T2) + 8.0 * std::abs(T3);
}

// Same elimination for a3 = U1 c2 + U2 c1^2.
double a3_elimination_oracle(const ClassParams& p) {
    const double U1 = CoeffsFromC(p, 0, 1, 0).a3.real();
    const double U2 = CoeffsFromC(p, 1, 0, 0).a3.real();
    return 2.0 * std::abs(U1) + 4.0 * std::abs(U2);
}

// And for a3 - mu a2^2 = U1 c2 + (U2 - mu V) c1^2.
double fekete_elimination_oracle(const ClassParams& p, double mu) {
    const double U1 = CoeffsFromC(p, 0, 1, 0).a3.real();
    const double U2 = CoeffsFromC(p, 1, 0, 0).a3.real();
    const Cx a2_unit = CoeffsFromC(p, 1, 0, 0).a2;
    const double V = (a2_unit * a2_unit).real();
    return 2.0 * std::abs(U1) + 4.0 * std::abs(U2 - mu * V);
}

// The derived 0 < alpha <= 1 closed form for a3/a4, evaluated at arbitrary
// alpha (used for the branch-continuity check at alpha = 1).
double a3_low_branch(const ClassParams& p) {
    const double E = ipow(p.alpha, p.n - 1) * (1.0 - p.beta);
    return 2.0 * E / ipow(p.alpha + 2.0, p.n)
           + 2.0 * (1.0 - p.alpha) * E * E / ipow(p.alpha + 1.0, 2 * p.n);
}

double a4_low_branch(const ClassParams& p) {
    const double E = ipow(p.alpha, p.n - 1) * (1.0 - p.beta);
    return 2.0 * E / ipow(p.alpha + 3.0, p.n)
           + 4.0 * (1.0 - p.alpha) * E * E / (ipow(p.alpha + 1.0, p.n) * ipow(p.alpha + 2.0, p.n))
           + (4.0 / 3.0) * (1.0 - p.alpha) * std::abs(2.0 * p.alpha - 1.0) * E * E * E
                 / ipow(p.alpha + 1.0, 3 * p.n);
}

}  // namespace

TEST_CASE("the monomial model of a4 is complete") {
    // If a4 had any monomial in (c1, c2, c3) beyond {c3, c1 c2, c1^3}, random
    // phase probes would disagree with the three-term reconstruction.
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const ClassParams p(0.1 + 2.9 * testutil::u01(rng), 0.9 * testutil::u01(rng),
                            static_cast<int>(testutil::u01(rng) * 4.0));
        const Cx T1 = CoeffsFromC(p, 0, 0, 1).a4;
        const Cx T3 = CoeffsFromC(p, 1, 0, 0).a4;
        const Cx T2 = CoeffsFromC(p, 1, 1, 0).a4 - T3;
        const Cx c1 = 2.0 * std::polar(1.0, 6.28 * testutil::u01(rng));
        const Cx c2 = 2.0 * std::polar(1.0, 6.28 * testutil::u01(rng));
        const Cx c3 = 2.0 * std::polar(1.0, 6.28 * testutil::u01(rng));
        const Cx direct = CoeffsFromC(p, c1, c2, c3).a4;
        const Cx model = T1 * c3 + T2 * c1 * c2 + T3 * c1 * c1 * c1;
        CHECK(std::abs(direct - model) <= 1e-12 * std::max(1.0, std::abs(direct)));
    }
}

TEST_CASE("derived a3/a4 agree with the elimination oracles for 0 < alpha <= 1") {
    for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9, 1.0})
        for (int n : {0, 1, 2, 3})
            for (double beta : {0.0, 0.25, 0.6}) {
                const ClassParams p(alpha, beta, n);
                CHECK(bound_a3(p, Provenance::derived)
                      == doctest::Approx(a3_elimination_oracle(p)).epsilon(1e-9));
                CHECK(bound_a4(p, Provenance::derived)
                      == doctest::Approx(a4_elimination_oracle(p)).epsilon(1e-9));
            }
}

TEST_CASE("derived fekete-szego agrees with its elimination oracle for every mu") {
    for (double alpha : {0.25, 0.5, 1.0, 1.5, 3.0})
        for (int n : {0, 1, 2})
            for (double beta : {0.0, 0.5})
                for (double mu : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0}) {
                    const ClassParams p(alpha, beta, n);
                    CHECK(fekete_szego_bound(p, mu, Provenance::derived)
                          == doctest::Approx(fekete_elimination_oracle(p, mu)).epsilon(1e-12));
                }
}

TEST_CASE("a2 bound: frozen values and degenerate limit") {
    CHECK(bound_a2(ClassParams(1.0, 0.0, 0)) == 2.0);
    CHECK(bound_a2(ClassParams(1.0, 0.0, 1)) == 1.0);
    CHECK(bound_a2(ClassParams(1.0, 1.0 - 1e-9, 0)) <= 2.1e-9);
}

TEST_CASE("a3 bound: frozen values") {
    // (n=1, alpha=1, beta=0): classical Re f' > 0 class, both variants 2/3.
    CHECK(bound_a3(ClassParams(1, 0, 1), Provenance::printed) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(bound_a3(ClassParams(1, 0, 1), Provenance::derived) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    // (n=0, alpha=1, beta=0): S_0 reduction, both 2.
    CHECK(bound_a3(ClassParams(1, 0, 0), Provenance::printed) == 2.0);
    CHECK(bound_a3(ClassParams(1, 0, 0), Provenance::derived) == 2.0);
    // (n=1, alpha=1/2, beta=0) derived: 2/2.5 + 2*(1/2)/2.25 = 56/45.
    CHECK(bound_a3(ClassParams(0.5, 0, 1), Provenance::derived)
          == doctest::Approx(56.0 / 45.0).epsilon(1e-15));
}

TEST_CASE("printed a3 goes negative at (n=0, alpha=1/2, beta=0): a surfaced misprint") {
    // The published 0 < alpha <= 1 branch evaluates to -0.32 here, which no
    // coefficient bound can be; the audit counterexamples it with any member.
    const double v = bound_a3(ClassParams(0.5, 0.0, 0), Provenance::printed);
    CHECK(v == doctest::Approx(-0.32).epsilon(1e-14));
}

TEST_CASE("a4 bound: frozen values and the mandated elimination cell") {
    CHECK(bound_a4(ClassParams(1, 0, 1), Provenance::printed) == 0.5);
    CHECK(bound_a4(ClassParams(1, 0, 1), Provenance::derived) == 0.5);
    CHECK(bound_a4(ClassParams(1, 0, 0), Provenance::derived) == 2.0);
    // (n=2, alpha=1/2, beta=1/4): E = 0.375, the c1^3 term vanishes (2a-1=0):
    // 2E/12.25 + 4*(1/2)E^2/(2.25*6.25) = 0.75/12.25 + 0.02.
    const ClassParams cell(0.5, 0.25, 2);
    CHECK(bound_a4(cell, Provenance::derived)
          == doctest::Approx(0.08122448979591836).epsilon(1e-15));
    CHECK(bound_a4(cell, Provenance::derived)
          == doctest::Approx(a4_elimination_oracle(cell)).epsilon(1e-12));
}

TEST_CASE("fekete-szego bound: frozen values and the analytic zero") {
    for (double alpha : {0.5, 1.0, 2.0}) {
        const ClassParams p(alpha, 0.25, 1);
        const double E = ipow(alpha, 0) * 0.75;
        const double A = E / (alpha + 2.0);
        CHECK(fekete_szego_bound(p, -(alpha - 1.0) / 2.0, Provenance::derived)
              == doctest::Approx(2.0 * A).epsilon(1e-15));
    }
    CHECK(fekete_szego_bound(ClassParams(1, 0, 0), 0.0, Provenance::derived) == 2.0);
    CHECK(fekete_szego_bound(ClassParams(1, 0, 1), 1.0, Provenance::derived)
          == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
    // At alpha = 1 the printed second term vanishes for every mu.
    CHECK(fekete_szego_bound(ClassParams(1, 0, 0), 2.0, Provenance::printed) == 2.0);
    CHECK(fekete_szego_bound(ClassParams(1, 0, 0), 50.0, Provenance::printed) == 2.0);
}

TEST_CASE("distortion bounds: frozen values and domain errors") {
    // r -> 0: both derived ends approach L_n(0) = 1.
    const DistortionPair near0 = distortion_bounds(ClassParams(2, 0.3, 1), 1e-9, Provenance::derived);
    CHECK(near0.lower == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(near0.upper == doctest::Approx(1.0).epsilon(1e-8));

    const DistortionPair d = distortion_bounds(ClassParams(1, 0, 0), 0.5, Provenance::derived);
    CHECK(d.lower == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(d.upper == doctest::Approx(3.0).epsilon(1e-15));

    for (int n : {0, 1, 5}) {
        const DistortionPair pr = distortion_bounds(ClassParams(1, 0, n), 0.5, Provenance::printed);
        CHECK(pr.lower == doctest::Approx(-4.0 / 3.0).epsilon(1e-15));
        CHECK(pr.upper == doctest::Approx(3.0).epsilon(1e-15));
    }

    for (double r : {0.0, 1.0, -0.5, 1.5})
        CHECK_THROWS_AS(distortion_bounds(ClassParams(1, 0, 0), r, Provenance::derived),
                        DomainError);
}

TEST_CASE("nonnegativity and beta-monotonicity of a2 and the derived bounds") {
    for (double alpha : {0.25, 0.5, 1.0, 2.0, 3.0})
        for (int n : {0, 1, 2, 3}) {
            double prev_a2 = 1e300, prev_a3 = 1e300, prev_a4 = 1e300, prev_fs = 1e300;
            for (double beta : {0.0, 0.1, 0.25, 0.5, 0.75, 0.9}) {
                const ClassParams p(alpha, beta, n);
                const double v2 = bound_a2(p);
                const double v3 = bound_a3(p, Provenance::derived);
                const double v4 = bound_a4(p, Provenance::derived);
                const double vf = fekete_szego_bound(p, 1.5, Provenance::derived);
                for (double v : {v2, v3, v4, vf}) CHECK(v >= 0.0);
                CHECK(v2 <= prev_a2 + 1e-15);
                CHECK(v3 <= prev_a3 + 1e-15);
                CHECK(v4 <= prev_a4 + 1e-15);
                CHECK(vf <= prev_fs + 1e-15);
                prev_a2 = v2;
                prev_a3 = v3;
                prev_a4 = v4;
                prev_fs = vf;
            }
        }
}

TEST_CASE("derived branches are continuous across alpha = 1") {
    for (int n : {0, 1, 2, 3})
        for (double beta : {0.0, 0.25, 0.5}) {
            const ClassParams p(1.0, beta, n);
            CHECK(std::abs(a3_low_branch(p) - bound_a3(p, Provenance::derived)) <= 1e-12);
            CHECK(std::abs(a4_low_branch(p) - bound_a4(p, Provenance::derived)) <= 1e-12);
        }
}

TEST_CASE("derived fekete-szego at mu = 0 vs the derived a3 bound") {
    for (int n : {0, 1, 2})
        for (double beta : {0.0, 0.25}) {
            // Equality at alpha = 1.
            const ClassParams at1(1.0, beta, n);
            CHECK(fekete_szego_bound(at1, 0.0, Provenance::derived)
                  == doctest::Approx(bound_a3(at1, Provenance::derived)).epsilon(1e-15));
            // For alpha > 1 the fekete bound adds 2B(alpha-1) on top of 2A;
            // the a3 branch keeps only 2A. Record the gap.
            const ClassParams at2(2.0, beta, n);
            const double fs = fekete_szego_bound(at2, 0.0, Provenance::derived);
            const double a3 = bound_a3(at2, Provenance::derived);
            CHECK(fs >= a3);
            MESSAGE("fekete(mu=0) - a3 gap at alpha=2, beta=", beta, ", n=", n, ": ", fs - a3);
        }
}

TEST_CASE("finiteness across a wide parameter sweep") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        const ClassParams p(0.05 + 5.0 * testutil::u01(rng), 0.999 * testutil::u01(rng),
                            static_cast<int>(testutil::u01(rng) * 8.0));
        for (Provenance prov : {Provenance::printed, Provenance::derived}) {
            CHECK(std::isfinite(bound_a3(p, prov)));
            CHECK(std::isfinite(bound_a4(p, prov)));
            CHECK(std::isfinite(fekete_szego_bound(p, -3.0 + 6.0 * testutil::u01(rng), prov)));
            const DistortionPair d = distortion_bounds(p, 0.05 + 0.9 * testutil::u01(rng), prov);
            CHECK(std::isfinite(d.lower));
            CHECK(std::isfinite(d.upper));
        }
        CHECK(std::isfinite(bound_a2(p)));
    }
}
