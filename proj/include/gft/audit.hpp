#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gft/bounds.hpp"
#include "gft/classes.hpp"

namespace gft {

enum class Functional { a2, a3, a4, fekete_szego, distortion };

// A functional instance: the coefficient functionals need no parameter,
// fekete_szego carries mu, distortion carries the radius r.
struct FunctionalSpec {
    Functional kind = Functional::a2;
    double extra = 0.0;

    std::string label() const;  // "|a2|", "fekete_szego(1)", "distortion(0.5)"
};

// Serializable description of one sampled class member: either a Schwarz
// function phi or a Herglotz atom measure. Replaying the string through
// realize() reproduces the member (and hence any functional value) exactly.
struct MemberSpec {
    enum class Kind { SchwarzConstant, SchwarzMonomial, SchwarzPolynomial, Atoms };

    Kind kind = Kind::SchwarzConstant;
    Complex c{0.0, 0.0};          // constant / monomial coefficient
    int degree = 0;               // monomial degree
    std::vector<Complex> raw;     // polynomial raw coefficients (pre-normalization)
    std::vector<double> weights;  // atom weights (sum to 1)
    std::vector<double> angles;   // atom angles

    std::string to_string() const;
    static MemberSpec parse(const std::string& text);

    SchwarzSpec to_schwarz() const;  // Schwarz kinds only
    NormalizedFunction realize(const ClassParams& params, int order) const;
};

// Deterministic member sampler. Mix: 21% unit-circle constants, 21% rotated
// monomials, 28% sup-normalized random polynomials (degree <= 6), 30% atom
// measures (2..6 atoms, uniform-simplex weights). Invalid draws are resampled
// up to 10 times, then the construction error propagates.
MemberSpec sample_member_spec(std::uint64_t trial_seed);
NormalizedFunction random_member(const ClassParams& params, std::uint64_t seed, int order);

// Value of a coefficient functional (|a2|, |a3|, |a4|, |a3 - mu a2^2|) read
// from the member's series.
double eval_coefficient_functional(const NormalizedFunction& f, const FunctionalSpec& fn);
// (min, max) of Re{L_n(f)} over kDefaultMembershipAngles points of |z| = r.
std::pair<double, double> eval_distortion_range(const NormalizedFunction& f,
                                                const ClassParams& params, double r);

enum class Exec { serial, parallel };
enum class VariantFilter { printed, derived, both };

struct AuditOptions {
    int order = 0;  // 0 -> 32 for coefficient functionals, 64 for distortion
    Exec exec = Exec::parallel;
    VariantFilter variants = VariantFilter::both;
    int climb_steps = 200;
};

enum class Verdict { validated, sharp, counterexample, inconclusive };
const char* to_string(Verdict v);

struct BoundLine {
    std::string name;  // a2 | a3 | a4 | fekete_szego | distortion_lower | distortion_upper
    Provenance variant = Provenance::derived;
    enum class Sense { upper, lower } sense = Sense::upper;
    double bound = 0.0;
    double empirical = 0.0;  // the extreme this line is judged against
    double margin = 0.0;     // slack: bound - empirical (upper), empirical - bound (lower)
    Verdict verdict = Verdict::inconclusive;
};

struct AuditRecord {
    ClassParams params;
    FunctionalSpec functional;
    int trials = 0;
    int order = 0;
    std::uint64_t seed = 0;

    double sampled_hi = 0.0;    // max over the raw trials (monotone in trials)
    double empirical_hi = 0.0;  // after hill-climb refinement
    MemberSpec hi_witness;

    bool has_lo = false;  // distortion only
    double sampled_lo = 0.0;
    double empirical_lo = 0.0;
    MemberSpec lo_witness;

    std::vector<BoundLine> lines;
};

// Randomized extremal search for one (params, functional) cell: trials
// independent members (per-trial streams derived from seed, so serial and
// parallel execution agree exactly and prefixes are stable as trials grow),
// then a 200-step shrinking-jitter hill climb from the argmax. Verdict per
// bound variant; sharp/counterexample verdicts re-check the serialized
// witness before being assigned.
AuditRecord empirical_max(const ClassParams& params, const FunctionalSpec& functional, int trials,
                          std::uint64_t seed, const AuditOptions& opts = {});

// Replay a serialized witness: the functional value it produces (for
// distortion, the (min, max) range).
double replay_coefficient(const MemberSpec& spec, const ClassParams& params,
                          const FunctionalSpec& fn, int order);
std::pair<double, double> replay_distortion(const MemberSpec& spec, const ClassParams& params,
                                            double r, int order);

struct AuditGrid {
    std::vector<int> ns{0, 1, 2, 3};
    std::vector<double> alphas{0.5, 1.0, 2.0};
    std::vector<double> betas{0.0, 0.25, 0.5};
    std::vector<double> mus{-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
    std::vector<double> rs{0.25, 0.5, 0.75};
    std::vector<Functional> functionals{Functional::a2, Functional::a3, Functional::a4,
                                        Functional::fekete_szego, Functional::distortion};
};

struct AuditSummary {
    int records = 0;
    int validated = 0;
    int sharp = 0;
    int counterexample = 0;
    int inconclusive = 0;
};

// Cross product of the grid's parameter cells and functional instances; each
// cell audits with its own stream derived from (seed, cell index).
std::vector<AuditRecord> audit_suite(const AuditGrid& grid, int trials_per_cell,
                                     std::uint64_t seed, const AuditOptions& opts = {},
                                     AuditSummary* summary = nullptr);

}  // namespace gft
