#include "gft/audit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdio>
#include <cstring>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace gft {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kValidationTol = 1e-9;
constexpr double kSharpTol = 1e-6;
constexpr std::uint64_t kClimbHiTag = 0x636c696d625f6869ULL;
constexpr std::uint64_t kClimbLoTag = 0x636c696d625f6c6fULL;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t t) {
    return splitmix64(seed + 0x9E3779B97F4A7C15ULL * (t + 1));
}

// Uniform in [0, 1) from the generator's full 64-bit output; avoids the
// implementation-defined std distributions so streams are portable.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Complex uniform_disk(std::mt19937_64& rng) {
    const double r = std::sqrt(uniform01(rng));
    return std::polar(r, kTwoPi * uniform01(rng));
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt_short(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

}  // namespace

std::string FunctionalSpec::label() const {
    switch (kind) {
        case Functional::a2: return "|a2|";
        case Functional::a3: return "|a3|";
        case Functional::a4: return "|a4|";
        case Functional::fekete_szego: return "fekete_szego(" + fmt_short(extra) + ")";
        case Functional::distortion: return "distortion(" + fmt_short(extra) + ")";
    }
    return "?";
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::validated: return "validated";
        case Verdict::sharp: return "sharp";
        case Verdict::counterexample: return "counterexample";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string MemberSpec::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::SchwarzConstant:
            out << "const:" << fmt17(c.real()) << "," << fmt17(c.imag());
            break;
        case Kind::SchwarzMonomial:
            out << "mono:" << fmt17(c.real()) << "," << fmt17(c.imag()) << "," << degree;
            break;
        case Kind::SchwarzPolynomial:
            out << "poly:";
            for (std::size_t j = 0; j < raw.size(); ++j) {
                if (j) out << ";";
                out << fmt17(raw[j].real()) << "," << fmt17(raw[j].imag());
            }
            break;
        case Kind::Atoms:
            out << "atoms:";
            for (std::size_t j = 0; j < weights.size(); ++j) {
                if (j) out << ";";
                out << fmt17(weights[j]) << "@" << fmt17(angles[j]);
            }
            break;
    }
    return out.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_double(const std::string& s) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("MemberSpec: bad number '" + s + "'");
    return v;
}

}  // namespace

MemberSpec MemberSpec::parse(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("MemberSpec: missing kind prefix");
    const std::string head = text.substr(0, colon);
    const std::string body = text.substr(colon + 1);
    MemberSpec spec;
    if (head == "const") {
        const auto parts = split(body, ',');
        if (parts.size() != 2) throw std::invalid_argument("MemberSpec: const needs re,im");
        spec.kind = Kind::SchwarzConstant;
        spec.c = Complex(parse_double(parts[0]), parse_double(parts[1]));
    } else if (head == "mono") {
        const auto parts = split(body, ',');
        if (parts.size() != 3) throw std::invalid_argument("MemberSpec: mono needs re,im,degree");
        spec.kind = Kind::SchwarzMonomial;
        spec.c = Complex(parse_double(parts[0]), parse_double(parts[1]));
        spec.degree = static_cast<int>(parse_double(parts[2]));
    } else if (head == "poly") {
        spec.kind = Kind::SchwarzPolynomial;
        for (const std::string& term : split(body, ';')) {
            const auto parts = split(term, ',');
            if (parts.size() != 2) throw std::invalid_argument("MemberSpec: poly term needs re,im");
            spec.raw.emplace_back(parse_double(parts[0]), parse_double(parts[1]));
        }
    } else if (head == "atoms") {
        spec.kind = Kind::Atoms;
        for (const std::string& atom : split(body, ';')) {
            const auto parts = split(atom, '@');
            if (parts.size() != 2) throw std::invalid_argument("MemberSpec: atom needs w@t");
            spec.weights.push_back(parse_double(parts[0]));
            spec.angles.push_back(parse_double(parts[1]));
        }
    } else {
        throw std::invalid_argument("MemberSpec: unknown kind '" + head + "'");
    }
    return spec;
}

SchwarzSpec MemberSpec::to_schwarz() const {
    switch (kind) {
        case Kind::SchwarzConstant: return SchwarzSpec::constant(c);
        case Kind::SchwarzMonomial: return SchwarzSpec::monomial(c, degree);
        case Kind::SchwarzPolynomial: return SchwarzSpec::normalized_polynomial(raw);
        case Kind::Atoms: break;
    }
    throw std::logic_error("MemberSpec::to_schwarz: atom measure is not a Schwarz function");
}

NormalizedFunction MemberSpec::realize(const ClassParams& params, int order) const {
    if (kind == Kind::Atoms)
        return member_from_caratheodory(caratheodory_from_atoms(weights, angles, order - 1),
                                        params, order);
    return member_from_schwarz(to_schwarz(), params, order);
}

MemberSpec sample_member_spec(std::uint64_t trial_seed_value) {
    std::mt19937_64 rng(trial_seed_value);
    const double u = uniform01(rng);
    MemberSpec spec;
    if (u < 0.21) {
        spec.kind = MemberSpec::Kind::SchwarzConstant;
        spec.c = std::polar(1.0, kTwoPi * uniform01(rng));
    } else if (u < 0.42) {
        spec.kind = MemberSpec::Kind::SchwarzMonomial;
        const double rho = uniform01(rng) < 0.5 ? 1.0 : uniform01(rng);
        spec.c = std::polar(rho, kTwoPi * uniform01(rng));
        spec.degree = static_cast<int>(uniform01(rng) * 7.0);
    } else if (u < 0.70) {
        spec.kind = MemberSpec::Kind::SchwarzPolynomial;
        const int deg = 1 + static_cast<int>(uniform01(rng) * 6.0);
        for (int j = 0; j <= deg; ++j) spec.raw.push_back(uniform_disk(rng));
    } else {
        spec.kind = MemberSpec::Kind::Atoms;
        const int atoms = 2 + static_cast<int>(uniform01(rng) * 5.0);
        double total = 0.0;
        for (int j = 0; j < atoms; ++j) {
            const double e = -std::log(1.0 - uniform01(rng));
            spec.weights.push_back(e);
            spec.angles.push_back(kTwoPi * uniform01(rng));
            total += e;
        }
        for (double& w : spec.weights) w /= total;
    }
    return spec;
}

namespace {

// One trial's draw, with up to 10 deterministic resamples on construction
// failure. Argmax regeneration replays the identical process.
std::pair<MemberSpec, NormalizedFunction> sample_realizable(std::uint64_t seed, std::uint64_t t,
                                                            const ClassParams& params, int order) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        const MemberSpec spec = sample_member_spec(
            splitmix64(trial_seed(seed, t) + 0x9E3779B97F4A7C15ULL * attempt));
        try {
            return {spec, spec.realize(params, order)};
        } catch (const InversionDivergence&) {
            if (attempt >= 9) throw;
        }
    }
}

}  // namespace

NormalizedFunction random_member(const ClassParams& params, std::uint64_t seed, int order) {
    return sample_realizable(seed, 0, params, order).second;
}

double eval_coefficient_functional(const NormalizedFunction& f, const FunctionalSpec& fn) {
    switch (fn.kind) {
        case Functional::a2: return std::abs(f.a(2));
        case Functional::a3: return std::abs(f.a(3));
        case Functional::a4: return std::abs(f.a(4));
        case Functional::fekete_szego: return std::abs(f.a(3) - fn.extra * f.a(2) * f.a(2));
        case Functional::distortion: break;
    }
    throw std::logic_error("eval_coefficient_functional: not a coefficient functional");
}

std::pair<double, double> eval_distortion_range(const NormalizedFunction& f,
                                                const ClassParams& params, double r) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("eval_distortion_range: r must lie in (0, 1)");
    const TruncatedSeries L = salagean_normalized(f, params);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int j = 0; j < kDefaultMembershipAngles; ++j) {
        const double re = eval(L, std::polar(r, kTwoPi * j / kDefaultMembershipAngles)).real();
        lo = std::min(lo, re);
        hi = std::max(hi, re);
    }
    return {lo, hi};
}

double replay_coefficient(const MemberSpec& spec, const ClassParams& params,
                          const FunctionalSpec& fn, int order) {
    return eval_coefficient_functional(spec.realize(params, order), fn);
}

std::pair<double, double> replay_distortion(const MemberSpec& spec, const ClassParams& params,
                                            double r, int order) {
    return eval_distortion_range(spec.realize(params, order), params, r);
}

namespace {

int resolve_order(const FunctionalSpec& fn, const AuditOptions& opts) {
    if (opts.order > 0) return opts.order;
    return fn.kind == Functional::distortion ? kDefaultGridOrder : kDefaultConstructionOrder;
}

// Objective for the climb and the trial loop. For distortion, `maximize_low`
// selects -min (so the climb always maximizes).
double objective(const MemberSpec& spec, const ClassParams& params, const FunctionalSpec& fn,
                 int order, bool maximize_low) {
    const NormalizedFunction f = spec.realize(params, order);
    if (fn.kind != Functional::distortion) return eval_coefficient_functional(f, fn);
    const auto [lo, hi] = eval_distortion_range(f, params, fn.extra);
    return maximize_low ? -lo : hi;
}

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

MemberSpec perturb(const MemberSpec& spec, double sigma, std::mt19937_64& rng) {
    MemberSpec out = spec;
    switch (spec.kind) {
        case MemberSpec::Kind::SchwarzConstant:
        case MemberSpec::Kind::SchwarzMonomial: {
            const double mod = clamp01(std::abs(spec.c) + sigma * (2.0 * uniform01(rng) - 1.0));
            const double ang = std::arg(spec.c) + sigma * std::numbers::pi * (2.0 * uniform01(rng) - 1.0);
            out.c = std::polar(mod, ang);
            break;
        }
        case MemberSpec::Kind::SchwarzPolynomial: {
            for (Complex& coeff : out.raw) coeff += sigma * uniform_disk(rng);
            break;
        }
        case MemberSpec::Kind::Atoms: {
            double total = 0.0;
            for (std::size_t j = 0; j < out.weights.size(); ++j) {
                out.angles[j] += sigma * std::numbers::pi * (2.0 * uniform01(rng) - 1.0);
                out.weights[j] *= std::exp(sigma * (2.0 * uniform01(rng) - 1.0));
                total += out.weights[j];
            }
            for (double& w : out.weights) w /= total;
            break;
        }
    }
    return out;
}

struct ClimbResult {
    MemberSpec spec;
    double value = 0.0;
};

ClimbResult hill_climb(const MemberSpec& start, double start_value, const ClassParams& params,
                       const FunctionalSpec& fn, int order, bool maximize_low,
                       std::uint64_t climb_seed, int steps) {
    ClimbResult best{start, start_value};
    std::mt19937_64 rng(climb_seed);
    double sigma = 0.3;
    for (int s = 0; s < steps; ++s, sigma *= 0.96) {
        const MemberSpec candidate = perturb(best.spec, sigma, rng);
        double value;
        try {
            value = objective(candidate, params, fn, order, maximize_low);
        } catch (const InversionDivergence&) {
            continue;  // jitter pushed the spec out of the admissible family
        }
        if (value > best.value) best = {candidate, value};
    }
    return best;
}

Verdict judge(double slack_signed, double empirical, double replayed) {
    // slack_signed: bound - empirical for an upper bound, empirical - bound
    // for a lower one; negative means the bound is exceeded.
    const bool replay_ok = std::abs(replayed - empirical) <= kValidationTol;
    if (std::abs(slack_signed) <= kSharpTol) return replay_ok ? Verdict::sharp : Verdict::inconclusive;
    if (slack_signed > 0.0) return Verdict::validated;
    return replay_ok ? Verdict::counterexample : Verdict::inconclusive;
}

void add_line(AuditRecord& rec, std::string name, Provenance prov, BoundLine::Sense sense,
              double bound, double empirical, double replayed) {
    BoundLine line;
    line.name = std::move(name);
    line.variant = prov;
    line.sense = sense;
    line.bound = bound;
    line.empirical = empirical;
    line.margin = sense == BoundLine::Sense::upper ? bound - empirical : empirical - bound;
    line.verdict = judge(line.margin, empirical, replayed);
    rec.lines.push_back(std::move(line));
}

bool want(Provenance prov, VariantFilter filter) {
    return filter == VariantFilter::both
           || (filter == VariantFilter::printed) == (prov == Provenance::printed);
}

}  // namespace

AuditRecord empirical_max(const ClassParams& params, const FunctionalSpec& fn, int trials,
                          std::uint64_t seed, const AuditOptions& opts) {
    if (trials < 1) throw DomainError("empirical_max: trials must be >= 1");
    const int order = resolve_order(fn, opts);
    if (order < 8) throw DomainError("empirical_max: order must be >= 8");
    const bool is_distortion = fn.kind == Functional::distortion;
    if (is_distortion && !(fn.extra > 0.0 && fn.extra < 1.0))
        throw DomainError("empirical_max: distortion radius must lie in (0, 1)");

    // Trial loop. Values are stored per trial and reduced serially afterwards,
    // so the parallel path is bit-identical to the serial reference.
    std::vector<double> hi(static_cast<std::size_t>(trials));
    std::vector<double> lo(is_distortion ? static_cast<std::size_t>(trials) : 0);
    int failed_trial = -1;

    auto run_trial = [&](int t) {
        const NormalizedFunction f =
            sample_realizable(seed, static_cast<std::uint64_t>(t), params, order).second;
        if (is_distortion) {
            const auto [mn, mx] = eval_distortion_range(f, params, fn.extra);
            lo[static_cast<std::size_t>(t)] = mn;
            hi[static_cast<std::size_t>(t)] = mx;
        } else {
            hi[static_cast<std::size_t>(t)] = eval_coefficient_functional(f, fn);
        }
    };

    if (opts.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (int t = 0; t < trials; ++t) {
            try {
                run_trial(t);
            } catch (...) {
#pragma omp critical
                failed_trial = failed_trial < 0 ? t : std::min(failed_trial, t);
            }
        }
    } else {
        for (int t = 0; t < trials; ++t) {
            try {
                run_trial(t);
            } catch (...) {
                failed_trial = t;
                break;
            }
        }
    }
    if (failed_trial >= 0)
        throw std::runtime_error("empirical_max: trial " + std::to_string(failed_trial)
                                 + " failed to construct a member");

    int t_hi = 0;
    for (int t = 1; t < trials; ++t)
        if (hi[static_cast<std::size_t>(t)] > hi[static_cast<std::size_t>(t_hi)]) t_hi = t;

    AuditRecord rec;
    rec.params = params;
    rec.functional = fn;
    rec.trials = trials;
    rec.order = order;
    rec.seed = seed;
    rec.sampled_hi = hi[static_cast<std::size_t>(t_hi)];

    const ClimbResult best_hi =
        hill_climb(sample_realizable(seed, static_cast<std::uint64_t>(t_hi), params, order).first,
                   rec.sampled_hi, params, fn, order, false, splitmix64(seed ^ kClimbHiTag),
                   opts.climb_steps);
    rec.empirical_hi = best_hi.value;
    rec.hi_witness = best_hi.spec;

    if (is_distortion) {
        int t_lo = 0;
        for (int t = 1; t < trials; ++t)
            if (lo[static_cast<std::size_t>(t)] < lo[static_cast<std::size_t>(t_lo)]) t_lo = t;
        rec.has_lo = true;
        rec.sampled_lo = lo[static_cast<std::size_t>(t_lo)];
        const ClimbResult best_lo = hill_climb(
            sample_realizable(seed, static_cast<std::uint64_t>(t_lo), params, order).first,
            -rec.sampled_lo, params, fn, order, true, splitmix64(seed ^ kClimbLoTag),
            opts.climb_steps);
        rec.empirical_lo = -best_lo.value;
        rec.lo_witness = best_lo.spec;
    }

    // Sampling soundness: every constructed member must lie in the class.
    // A violation verdict here is a construction bug, not a math finding.
    const auto assert_sound = [&](const MemberSpec& spec) {
        const NormalizedFunction f = spec.realize(params, std::max(order, kDefaultGridOrder));
        const auto report =
            check_membership(f, params, kDefaultMembershipRadii, kDefaultMembershipAngles);
        if (report.verdict == MembershipReport::Verdict::violation)
            throw std::logic_error("empirical_max: sampled witness failed membership");
    };
    assert_sound(rec.hi_witness);
    if (rec.has_lo) assert_sound(rec.lo_witness);

    // Witness replay through the serialized form, as the verdicts require.
    const MemberSpec hi_replayed = MemberSpec::parse(rec.hi_witness.to_string());
    if (!is_distortion) {
        const double replay = replay_coefficient(hi_replayed, params, fn, order);
        const auto bound_of = [&](Provenance prov) {
            switch (fn.kind) {
                case Functional::a2: return bound_a2(params);
                case Functional::a3: return bound_a3(params, prov);
                case Functional::a4: return bound_a4(params, prov);
                case Functional::fekete_szego: return fekete_szego_bound(params, fn.extra, prov);
                default: throw std::logic_error("unexpected functional");
            }
        };
        const char* name = fn.kind == Functional::a2   ? "a2"
                           : fn.kind == Functional::a3 ? "a3"
                           : fn.kind == Functional::a4 ? "a4"
                                                       : "fekete_szego";
        for (Provenance prov : {Provenance::printed, Provenance::derived})
            if (want(prov, opts.variants))
                add_line(rec, name, prov, BoundLine::Sense::upper, bound_of(prov),
                         rec.empirical_hi, replay);
    } else {
        const auto [replay_lo, replay_hi] = replay_distortion(hi_replayed, params, fn.extra, order);
        const MemberSpec lo_replayed = MemberSpec::parse(rec.lo_witness.to_string());
        const auto [replay_lo2, replay_hi2] =
            replay_distortion(lo_replayed, params, fn.extra, order);
        (void)replay_lo;
        (void)replay_hi2;
        // Distortion lines compare in unnormalized alpha^n * L_n units; the
        // derived pair is scaled up accordingly.
        const double an = ipow(params.alpha, params.n);
        const DistortionPair printed = distortion_bounds(params, fn.extra, Provenance::printed);
        const DistortionPair derived = distortion_bounds(params, fn.extra, Provenance::derived);
        if (want(Provenance::derived, opts.variants)) {
            add_line(rec, "distortion_lower", Provenance::derived, BoundLine::Sense::lower,
                     an * derived.lower, an * rec.empirical_lo, an * replay_lo2);
            add_line(rec, "distortion_upper", Provenance::derived, BoundLine::Sense::upper,
                     an * derived.upper, an * rec.empirical_hi, an * replay_hi);
        }
        if (want(Provenance::printed, opts.variants)) {
            add_line(rec, "distortion_lower", Provenance::printed, BoundLine::Sense::lower,
                     printed.lower, an * rec.empirical_lo, an * replay_lo2);
            add_line(rec, "distortion_upper", Provenance::printed, BoundLine::Sense::upper,
                     printed.upper, an * rec.empirical_hi, an * replay_hi);
        }
    }
    return rec;
}

std::vector<AuditRecord> audit_suite(const AuditGrid& grid, int trials_per_cell,
                                     std::uint64_t seed, const AuditOptions& opts,
                                     AuditSummary* summary) {
    std::vector<FunctionalSpec> instances;
    for (Functional kind : grid.functionals) {
        if (kind == Functional::fekete_szego)
            for (double mu : grid.mus) instances.push_back({kind, mu});
        else if (kind == Functional::distortion)
            for (double r : grid.rs) instances.push_back({kind, r});
        else
            instances.push_back({kind, 0.0});
    }

    std::vector<AuditRecord> records;
    std::uint64_t cell_index = 0;
    for (int n : grid.ns)
        for (double alpha : grid.alphas)
            for (double beta : grid.betas) {
                const ClassParams params(alpha, beta, n);
                for (const FunctionalSpec& fn : instances) {
                    const std::uint64_t cell_seed = splitmix64(seed + 0x9E3779B97F4A7C15ULL * (cell_index + 1));
                    records.push_back(empirical_max(params, fn, trials_per_cell, cell_seed, opts));
                    ++cell_index;
                }
            }

    if (summary) {
        *summary = AuditSummary{};
        summary->records = static_cast<int>(records.size());
        for (const AuditRecord& rec : records)
            for (const BoundLine& line : rec.lines) switch (line.verdict) {
                    case Verdict::validated: ++summary->validated; break;
                    case Verdict::sharp: ++summary->sharp; break;
                    case Verdict::counterexample: ++summary->counterexample; break;
                    case Verdict::inconclusive: ++summary->inconclusive; break;
                }
    }
    return records;
}

}  // namespace gft
