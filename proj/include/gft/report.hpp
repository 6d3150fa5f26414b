#pragma once

#include <string>
#include <vector>

#include "gft/audit.hpp"

namespace gft {

// Doubles are serialized with 17 significant digits so a parsed value is
// bit-identical to the original.
std::string fmt17(double x);

// One flat JSON line per bound variant. Fixed key order:
//   type, params{alpha,beta,n}, functional, mu, r, sense, variant, bound,
//   empirical_max, margin, verdict, trials, order, seed, argmax
// mu / r are null except for the functionals that carry them. Distortion
// lines are stated in unnormalized alpha^n * L_n units; lower-sense lines
// carry the sampled minimum in empirical_max and the minimizing witness in
// argmax. margin >= 0 means the bound holds with that slack.
std::vector<std::string> record_to_lines(const AuditRecord& rec);

std::string summary_to_line(const AuditSummary& summary, std::uint64_t seed);

std::string membership_to_line(const MembershipReport& report);

// Flat view of one parsed record line (tests and downstream tooling).
struct ParsedRecordLine {
    ClassParams params;
    std::string functional;
    double mu = 0.0;
    bool has_mu = false;
    double r = 0.0;
    bool has_r = false;
    std::string name;
    std::string sense;
    std::string variant;
    double bound = 0.0;
    double empirical_max = 0.0;
    double margin = 0.0;
    std::string verdict;
    int trials = 0;
    int order = 0;
    std::uint64_t seed = 0;
    std::string argmax;
};

ParsedRecordLine parse_record_line(const std::string& line);

}  // namespace gft
