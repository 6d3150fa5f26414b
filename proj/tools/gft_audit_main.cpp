// Command-line front end: construct class members, evaluate the bound
// catalog, check membership, and run seeded extremal-search audits that
// emit line-delimited JSON records.

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gft/audit.hpp"
#include "gft/bounds.hpp"
#include "gft/classes.hpp"
#include "gft/report.hpp"

namespace {

using namespace gft;

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;
constexpr int kExitUsage = 2;

// Writes every record line to stdout and, when --out is given, to the file.
class Emitter {
  public:
    explicit Emitter(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary | std::ios::trunc);
            if (!file_) throw DomainError("cannot open output file: " + path);
        }
    }
    void line(const std::string& s) {
        std::cout << s << "\n";
        if (file_.is_open()) file_ << s << "\n";
    }

  private:
    std::ofstream file_;
};

struct CommonFlags {
    double alpha = 1.0;
    double beta = 0.0;
    int n = 0;
    int order = 0;  // 0 = command default
    std::uint64_t seed = 0;
    int trials = 10000;
    std::string variant = "both";
    std::string out;
};

void add_param_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--alpha", f.alpha, "Class parameter alpha > 0")->capture_default_str();
    cmd->add_option("--beta", f.beta, "Class parameter beta in [0,1)")->capture_default_str();
    cmd->add_option("--n", f.n, "Operator iteration count n >= 0")->capture_default_str();
}

void add_common_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->fallthrough();  // lets --config (an app-level flag) follow the subcommand
    add_param_flags(cmd, f);
    cmd->add_option("--order", f.order,
                    "Series truncation order (default 32; membership/distortion grids 64)");
    cmd->add_option("--seed", f.seed, "Random seed")->capture_default_str();
    cmd->add_option("--trials", f.trials, "Trials per audit cell")->capture_default_str();
    cmd->add_option("--variant", f.variant, "Bound variant: printed|derived|both")
        ->check(CLI::IsMember({"printed", "derived", "both"}))
        ->capture_default_str();
    cmd->add_option("--out", f.out, "Also write records to this file");
}

VariantFilter variant_filter(const std::string& v) {
    if (v == "printed") return VariantFilter::printed;
    if (v == "derived") return VariantFilter::derived;
    return VariantFilter::both;
}

bool want(Provenance prov, const std::string& variant) {
    return variant == "both" || variant == to_string(prov);
}

// Function specs accepted by expand/check:
//   z | koebe | rotated-koebe:<xi> | const:re,im | mono:re,im,deg |
//   poly:re,im;re,im;... | atoms:w@t;w@t;...
NormalizedFunction parse_function_spec(const std::string& text, const ClassParams& params,
                                       int order) {
    if (text == "z") {
        std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
        c[1] = Complex(1.0, 0.0);
        return NormalizedFunction(TruncatedSeries(std::move(c)));
    }
    if (text == "koebe") return koebe(order);
    if (text.rfind("rotated-koebe:", 0) == 0)
        return rotated_koebe(std::stod(text.substr(14)), order);
    return MemberSpec::parse(text).realize(params, order);
}

std::string params_json(const ClassParams& p) {
    std::ostringstream out;
    out << "{\"alpha\":" << fmt17(p.alpha) << ",\"beta\":" << fmt17(p.beta) << ",\"n\":" << p.n
        << "}";
    return out.str();
}

void print_series_table(const std::string& title, const TruncatedSeries& s, std::ostream& os) {
    os << "# " << title << "\n";
    os << "#   k            re                       im                      abs\n";
    char buf[160];
    for (int k = 0; k <= s.order(); ++k) {
        std::snprintf(buf, sizeof buf, "%5d  %24.16e  %24.16e  %24.16e\n", k, s[k].real(),
                      s[k].imag(), std::abs(s[k]));
        os << buf;
    }
}

int cmd_expand(const CommonFlags& f, const std::string& fspec) {
    const ClassParams params(f.alpha, f.beta, f.n);
    const int order = f.order > 0 ? f.order : kDefaultConstructionOrder;
    const NormalizedFunction fn = parse_function_spec(fspec, params, order);
    std::ostringstream table;
    print_series_table("f", fn.series(), table);
    print_series_table("(f/z)^alpha", pow_real(div_z(fn.series()), params.alpha), table);
    print_series_table("L_n(f) = D^n[f^alpha]/(alpha^n z^alpha)", salagean_normalized(fn, params),
                       table);
    Emitter emit(f.out);
    std::istringstream lines(table.str());
    for (std::string line; std::getline(lines, line);) emit.line(line);
    return kExitOk;
}

int cmd_member(const CommonFlags& f, const std::string& phi) {
    const ClassParams params(f.alpha, f.beta, f.n);
    const int order = f.order > 0 ? f.order : kDefaultConstructionOrder;
    const MemberSpec spec = MemberSpec::parse(phi);
    const NormalizedFunction fn = spec.realize(params, order);

    // Round-trip defect: max |salagean_normalized(f) - S| over coefficients.
    const TruncatedSeries back = salagean_normalized(fn, params);
    double roundtrip = 0.0;
    {
        const TruncatedSeries target = [&] {
            if (spec.kind == MemberSpec::Kind::Atoms) {
                const TruncatedSeries p =
                    caratheodory_from_atoms(spec.weights, spec.angles, order - 1);
                std::vector<Complex> s(static_cast<std::size_t>(order));
                s[0] = Complex(1.0, 0.0);
                for (int k = 1; k <= order - 1; ++k) s[k] = (1.0 - params.beta) * p[k];
                return TruncatedSeries(std::move(s));
            }
            const TruncatedSeries phi_series = spec.to_schwarz().realize(order - 2);
            std::vector<Complex> u(static_cast<std::size_t>(order));
            u[0] = Complex(1.0, 0.0);
            for (int k = 1; k <= order - 1; ++k)
                u[k] = phi_series.order() >= k - 1 ? phi_series[k - 1] : Complex(0.0, 0.0);
            const TruncatedSeries q = pow_real(TruncatedSeries(std::move(u)), -1.0);
            std::vector<Complex> s(static_cast<std::size_t>(order));
            s[0] = Complex(1.0, 0.0);
            for (int k = 1; k <= order - 1; ++k) s[k] = 2.0 * (1.0 - params.beta) * q[k];
            return TruncatedSeries(std::move(s));
        }();
        for (int k = 0; k <= std::min(back.order(), target.order()); ++k)
            roundtrip = std::max(roundtrip, std::abs(back[k] - target[k]));
    }

    std::ostringstream out;
    out << "{\"type\":\"member\",\"params\":" << params_json(params) << ",\"phi\":\"" << phi
        << "\",\"order\":" << order << ",\"roundtrip_error\":" << fmt17(roundtrip)
        << ",\"coeffs\":[";
    for (int k = 0; k <= fn.order(); ++k) {
        if (k) out << ",";
        out << "[" << fmt17(fn.a(k).real()) << "," << fmt17(fn.a(k).imag()) << "]";
    }
    out << "]}";
    Emitter emit(f.out);
    emit.line(out.str());
    return kExitOk;
}

int cmd_check(const CommonFlags& f, const std::string& fspec, std::vector<double> radii,
              int angles) {
    const ClassParams params(f.alpha, f.beta, f.n);
    const int order = f.order > 0 ? f.order : kDefaultGridOrder;
    if (radii.empty()) radii.assign(std::begin(kDefaultMembershipRadii),
                                    std::end(kDefaultMembershipRadii));
    const NormalizedFunction fn = parse_function_spec(fspec, params, order);
    const MembershipReport rep = check_membership(fn, params, radii, angles);
    Emitter emit(f.out);
    emit.line(membership_to_line(rep));
    return rep.verdict == MembershipReport::Verdict::violation ? kExitFinding : kExitOk;
}

void emit_bound_line(Emitter& emit, const ClassParams& params, const std::string& name,
                     Provenance prov, double value, const char* extra_key = nullptr,
                     double extra = 0.0, const char* units = nullptr) {
    std::ostringstream out;
    out << "{\"type\":\"bound\",\"params\":" << params_json(params) << ",\"name\":\"" << name
        << "\"";
    if (extra_key) out << ",\"" << extra_key << "\":" << fmt17(extra);
    out << ",\"variant\":\"" << to_string(prov) << "\"";
    if (units) out << ",\"units\":\"" << units << "\"";
    out << ",\"value\":" << fmt17(value) << "}";
    emit.line(out.str());
}

int cmd_bounds(const CommonFlags& f) {
    const ClassParams params(f.alpha, f.beta, f.n);
    Emitter emit(f.out);
    for (Provenance prov : {Provenance::printed, Provenance::derived}) {
        if (!want(prov, f.variant)) continue;
        emit_bound_line(emit, params, "a2", prov, bound_a2(params));
        emit_bound_line(emit, params, "a3", prov, bound_a3(params, prov));
        emit_bound_line(emit, params, "a4", prov, bound_a4(params, prov));
    }
    return kExitOk;
}

int cmd_fekete(const CommonFlags& f, const std::vector<double>& mus) {
    const ClassParams params(f.alpha, f.beta, f.n);
    Emitter emit(f.out);
    for (double mu : mus)
        for (Provenance prov : {Provenance::printed, Provenance::derived})
            if (want(prov, f.variant))
                emit_bound_line(emit, params, "fekete_szego", prov,
                                fekete_szego_bound(params, mu, prov), "mu", mu);
    return kExitOk;
}

int cmd_distortion(const CommonFlags& f, const std::vector<double>& rs) {
    const ClassParams params(f.alpha, f.beta, f.n);
    Emitter emit(f.out);
    for (double r : rs)
        for (Provenance prov : {Provenance::printed, Provenance::derived}) {
            if (!want(prov, f.variant)) continue;
            const DistortionPair pair = distortion_bounds(params, r, prov);
            const char* units = prov == Provenance::printed ? "alpha^n*L_n" : "L_n";
            emit_bound_line(emit, params, "distortion_lower", prov, pair.lower, "r", r, units);
            emit_bound_line(emit, params, "distortion_upper", prov, pair.upper, "r", r, units);
        }
    return kExitOk;
}

// Grid files are plain text `key = values` lines; '#' starts a comment.
// Keys: n, alpha, beta, mu, r, functionals, trials. Values are separated by
// commas or spaces.
AuditGrid parse_grid_file(const std::string& path, int* trials) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open grid file: " + path);
    AuditGrid grid;
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t") + 1);
        std::string rest = line.substr(eq + 1);
        for (char& ch : rest)
            if (ch == ',') ch = ' ';
        std::istringstream values(rest);
        if (key == "n") {
            grid.ns.clear();
            for (int v; values >> v;) grid.ns.push_back(v);
        } else if (key == "alpha" || key == "beta" || key == "mu" || key == "r") {
            std::vector<double>* dst = key == "alpha"  ? &grid.alphas
                                       : key == "beta" ? &grid.betas
                                       : key == "mu"   ? &grid.mus
                                                       : &grid.rs;
            dst->clear();
            for (double v; values >> v;) dst->push_back(v);
        } else if (key == "functionals") {
            grid.functionals.clear();
            for (std::string name; values >> name;) {
                if (name == "a2") grid.functionals.push_back(Functional::a2);
                else if (name == "a3") grid.functionals.push_back(Functional::a3);
                else if (name == "a4") grid.functionals.push_back(Functional::a4);
                else if (name == "fekete") grid.functionals.push_back(Functional::fekete_szego);
                else if (name == "distortion") grid.functionals.push_back(Functional::distortion);
                else throw DomainError("grid file: unknown functional '" + name + "'");
            }
        } else if (key == "trials") {
            values >> *trials;
        } else {
            throw DomainError("grid file: unknown key '" + key + "'");
        }
    }
    return grid;
}

int cmd_audit(const CommonFlags& f, const std::string& grid_file,
              const std::vector<double>& alphas, const std::vector<double>& betas,
              const std::vector<int>& ns, const std::vector<double>& mus,
              const std::vector<double>& rs, const std::vector<std::string>& functional_names,
              bool serial, bool trials_flag_given) {
    int trials = f.trials;
    AuditGrid grid;
    if (!grid_file.empty()) {
        int file_trials = trials;
        grid = parse_grid_file(grid_file, &file_trials);
        if (!trials_flag_given) trials = file_trials;  // flags override the file
    }
    if (!alphas.empty()) grid.alphas = alphas;
    if (!betas.empty()) grid.betas = betas;
    if (!ns.empty()) grid.ns = ns;
    if (!mus.empty()) grid.mus = mus;
    if (!rs.empty()) grid.rs = rs;
    if (!functional_names.empty()) {
        grid.functionals.clear();
        for (const std::string& name : functional_names) {
            if (name == "a2") grid.functionals.push_back(Functional::a2);
            else if (name == "a3") grid.functionals.push_back(Functional::a3);
            else if (name == "a4") grid.functionals.push_back(Functional::a4);
            else if (name == "fekete") grid.functionals.push_back(Functional::fekete_szego);
            else if (name == "distortion") grid.functionals.push_back(Functional::distortion);
            else throw CLI::ValidationError("--functionals", "unknown functional '" + name + "'");
        }
    }
    for (double a : grid.alphas) ClassParams(a, 0.0, 0);   // validate early
    for (double b : grid.betas) ClassParams(1.0, b, 0);
    for (int n : grid.ns) ClassParams(1.0, 0.0, n);

    AuditOptions opts;
    opts.order = f.order;
    opts.exec = serial ? Exec::serial : Exec::parallel;
    opts.variants = variant_filter(f.variant);

    Emitter emit(f.out);
    {
        std::ostringstream cfg;
        cfg << "{\"type\":\"config\",\"command\":\"audit\",\"trials\":" << trials
            << ",\"seed\":" << f.seed << ",\"order\":" << f.order << ",\"variant\":\""
            << f.variant << "\",\"exec\":\"" << (serial ? "serial" : "parallel")
            << "\",\"alpha\":[";
        for (std::size_t i = 0; i < grid.alphas.size(); ++i)
            cfg << (i ? "," : "") << fmt17(grid.alphas[i]);
        cfg << "],\"beta\":[";
        for (std::size_t i = 0; i < grid.betas.size(); ++i)
            cfg << (i ? "," : "") << fmt17(grid.betas[i]);
        cfg << "],\"n\":[";
        for (std::size_t i = 0; i < grid.ns.size(); ++i) cfg << (i ? "," : "") << grid.ns[i];
        cfg << "],\"mu\":[";
        for (std::size_t i = 0; i < grid.mus.size(); ++i)
            cfg << (i ? "," : "") << fmt17(grid.mus[i]);
        cfg << "],\"r\":[";
        for (std::size_t i = 0; i < grid.rs.size(); ++i) cfg << (i ? "," : "") << fmt17(grid.rs[i]);
        cfg << "]}";
        emit.line(cfg.str());
    }

    AuditSummary summary;
    const std::vector<AuditRecord> records = audit_suite(grid, trials, f.seed, opts, &summary);
    bool clean = true;
    for (const AuditRecord& rec : records) {
        for (const std::string& line : record_to_lines(rec)) emit.line(line);
        for (const BoundLine& line : rec.lines)
            if (line.verdict == Verdict::counterexample || line.verdict == Verdict::inconclusive)
                clean = false;
    }
    emit.line(summary_to_line(summary, f.seed));
    return clean ? kExitOk : kExitFinding;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Operator-class member construction and coefficient-bound auditing"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Config file with key = value lines ([section] per subcommand)");

    CommonFlags expand_f, member_f, check_f, bounds_f, fekete_f, distortion_f, audit_f;
    std::string expand_spec = "koebe", member_phi = "const:-1,0", check_spec = "z";
    std::vector<double> check_radii;
    int check_angles = kDefaultMembershipAngles;
    std::vector<double> fekete_mus{-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
    std::vector<double> distortion_rs{0.25, 0.5, 0.75};
    std::string audit_grid_file;
    std::vector<double> audit_alphas, audit_betas, audit_mus, audit_rs;
    std::vector<int> audit_ns;
    std::vector<std::string> audit_functionals;
    bool audit_serial = false;

    CLI::App* expand = app.add_subcommand(
        "expand", "Print coefficient tables of f, (f/z)^alpha and L_n(f)");
    add_common_flags(expand, expand_f);
    expand->add_option("--f", expand_spec,
                       "Function spec: z|koebe|rotated-koebe:<xi>|const:..|mono:..|poly:..|atoms:..")
        ->capture_default_str();

    CLI::App* member = app.add_subcommand("member", "Construct a class member and print it");
    add_common_flags(member, member_f);
    member->add_option("--phi", member_phi,
                       "Generator spec: const:re,im | mono:re,im,deg | poly:re,im;.. | atoms:w@t;..")
        ->capture_default_str();

    CLI::App* check = app.add_subcommand("check", "Check class membership on a polar grid");
    add_common_flags(check, check_f);
    check->add_option("--f", check_spec, "Function spec (see expand)")->capture_default_str();
    check->add_option("--radii", check_radii, "Grid radii in (0, 0.95]")->delimiter(',');
    check->add_option("--angles", check_angles, "Angles per circle")->capture_default_str();

    CLI::App* bounds = app.add_subcommand("bounds", "Evaluate the a2/a3/a4 bounds");
    add_common_flags(bounds, bounds_f);

    CLI::App* fekete = app.add_subcommand("fekete", "Evaluate the Fekete-Szego bound");
    add_common_flags(fekete, fekete_f);
    fekete->add_option("--mu", fekete_mus, "mu values")->delimiter(',')->capture_default_str();

    CLI::App* distortion = app.add_subcommand("distortion", "Evaluate the distortion bounds");
    add_common_flags(distortion, distortion_f);
    distortion->add_option("--r", distortion_rs, "Radii in (0,1)")
        ->delimiter(',')
        ->capture_default_str();

    CLI::App* audit = app.add_subcommand(
        "audit", "Randomized extremal search over a parameter grid, one record per bound");
    add_common_flags(audit, audit_f);
    audit->add_option("--grid", audit_grid_file, "Grid file (key = values lines)");
    audit->add_option("--alpha-grid", audit_alphas, "Override grid alphas")->delimiter(',');
    audit->add_option("--beta-grid", audit_betas, "Override grid betas")->delimiter(',');
    audit->add_option("--n-grid", audit_ns, "Override grid n values")->delimiter(',');
    audit->add_option("--mu", audit_mus, "Override grid mu values")->delimiter(',');
    audit->add_option("--r", audit_rs, "Override grid r values")->delimiter(',');
    audit->add_option("--functionals", audit_functionals,
                      "Subset of a2,a3,a4,fekete,distortion")
        ->delimiter(',');
    audit->add_flag("--serial", audit_serial, "Use the serial reference kernel");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (expand->parsed()) return cmd_expand(expand_f, expand_spec);
        if (member->parsed()) return cmd_member(member_f, member_phi);
        if (check->parsed()) return cmd_check(check_f, check_spec, check_radii, check_angles);
        if (bounds->parsed()) return cmd_bounds(bounds_f);
        if (fekete->parsed()) return cmd_fekete(fekete_f, fekete_mus);
        if (distortion->parsed()) return cmd_distortion(distortion_f, distortion_rs);
        if (audit->parsed())
            return cmd_audit(audit_f, audit_grid_file, audit_alphas, audit_betas, audit_ns,
                             audit_mus, audit_rs, audit_functionals, audit_serial,
                             audit->count("--trials") > 0);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
