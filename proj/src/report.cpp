#include "gft/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace gft {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

void append_params(std::ostringstream& out, const ClassParams& p) {
    out << "\"params\":{\"alpha\":" << fmt17(p.alpha) << ",\"beta\":" << fmt17(p.beta)
        << ",\"n\":" << p.n << "}";
}

std::string quoted(const std::string& s) {
    // Witness strings contain only [-0-9a-z.,;:@+e]; no JSON escaping needed
    // beyond the quotes.
    return "\"" + s + "\"";
}

}  // namespace

std::vector<std::string> record_to_lines(const AuditRecord& rec) {
    std::vector<std::string> lines;
    lines.reserve(rec.lines.size());
    for (const BoundLine& line : rec.lines) {
        const bool lower = line.sense == BoundLine::Sense::lower;
        const MemberSpec& witness = lower ? rec.lo_witness : rec.hi_witness;
        std::ostringstream out;
        out << "{\"type\":\"audit\",";
        append_params(out, rec.params);
        out << ",\"functional\":" << quoted(rec.functional.label());
        out << ",\"mu\":";
        if (rec.functional.kind == Functional::fekete_szego)
            out << fmt17(rec.functional.extra);
        else
            out << "null";
        out << ",\"r\":";
        if (rec.functional.kind == Functional::distortion)
            out << fmt17(rec.functional.extra);
        else
            out << "null";
        out << ",\"name\":" << quoted(line.name);
        out << ",\"sense\":" << quoted(lower ? "lower" : "upper");
        out << ",\"variant\":" << quoted(to_string(line.variant));
        out << ",\"bound\":" << fmt17(line.bound);
        out << ",\"empirical_max\":" << fmt17(line.empirical);
        out << ",\"margin\":" << fmt17(line.margin);
        out << ",\"verdict\":" << quoted(to_string(line.verdict));
        out << ",\"trials\":" << rec.trials;
        out << ",\"order\":" << rec.order;
        out << ",\"seed\":" << rec.seed;
        out << ",\"argmax\":" << quoted(witness.to_string());
        out << "}";
        lines.push_back(out.str());
    }
    return lines;
}

std::string summary_to_line(const AuditSummary& s, std::uint64_t seed) {
    std::ostringstream out;
    out << "{\"type\":\"summary\",\"records\":" << s.records << ",\"validated\":" << s.validated
        << ",\"sharp\":" << s.sharp << ",\"counterexample\":" << s.counterexample
        << ",\"inconclusive\":" << s.inconclusive << ",\"seed\":" << seed << "}";
    return out.str();
}

std::string membership_to_line(const MembershipReport& rep) {
    std::ostringstream out;
    out << "{\"type\":\"membership\",";
    append_params(out, rep.params);
    out << ",\"radii\":[";
    for (std::size_t i = 0; i < rep.radii.size(); ++i) {
        if (i) out << ",";
        out << fmt17(rep.radii[i]);
    }
    out << "],\"angles\":" << rep.angles;
    out << ",\"min_real_part\":" << fmt17(rep.min_real_part);
    out << ",\"margin\":" << fmt17(rep.margin);
    out << ",\"tail_estimate\":" << fmt17(rep.tail_estimate);
    out << ",\"verdict\":" << quoted(to_string(rep.verdict));
    out << "}";
    return out.str();
}

ParsedRecordLine parse_record_line(const std::string& line) {
    const nlohmann::json j = nlohmann::json::parse(line);
    ParsedRecordLine out;
    out.params = ClassParams(j.at("params").at("alpha").get<double>(),
                             j.at("params").at("beta").get<double>(),
                             j.at("params").at("n").get<int>());
    out.functional = j.at("functional").get<std::string>();
    if (!j.at("mu").is_null()) {
        out.mu = j.at("mu").get<double>();
        out.has_mu = true;
    }
    if (!j.at("r").is_null()) {
        out.r = j.at("r").get<double>();
        out.has_r = true;
    }
    out.name = j.at("name").get<std::string>();
    out.sense = j.at("sense").get<std::string>();
    out.variant = j.at("variant").get<std::string>();
    out.bound = j.at("bound").get<double>();
    out.empirical_max = j.at("empirical_max").get<double>();
    out.margin = j.at("margin").get<double>();
    out.verdict = j.at("verdict").get<std::string>();
    out.trials = j.at("trials").get<int>();
    out.order = j.at("order").get<int>();
    out.seed = j.at("seed").get<std::uint64_t>();
    out.argmax = j.at("argmax").get<std::string>();
    return out;
}

}  // namespace gft
