// Times the extremal-search kernel in its serial reference and OpenMP
// configurations on a few representative cells, and verifies the two produce
// byte-identical records.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "gft/audit.hpp"
#include "gft/report.hpp"

using namespace gft;

namespace {

std::string serialize(const AuditRecord& rec) {
    std::string all;
    for (const std::string& line : record_to_lines(rec)) {
        all += line;
        all += '\n';
    }
    return all;
}

double time_run(const ClassParams& params, const FunctionalSpec& fn, int trials, Exec exec,
                std::string* out) {
    AuditOptions opts;
    opts.exec = exec;
    const auto t0 = std::chrono::steady_clock::now();
    const AuditRecord rec = empirical_max(params, fn, trials, 1234, opts);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    *out = serialize(rec);
    return secs;
}

}  // namespace

int main(int argc, char** argv) {
    int trials = argc > 1 ? std::atoi(argv[1]) : 20000;
#if defined(_OPENMP)
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run the serial kernel\n");
#endif
    std::printf("%-34s %8s %10s %10s %9s %6s\n", "cell", "trials", "serial[s]", "openmp[s]",
                "speedup", "match");

    struct Bench {
        ClassParams params;
        FunctionalSpec fn;
        int trials;
    };
    const std::vector<Bench> cells = {
        {ClassParams(1.0, 0.0, 1), {Functional::a3, 0.0}, trials},
        {ClassParams(0.5, 0.25, 2), {Functional::a4, 0.0}, trials},
        {ClassParams(2.0, 0.0, 0), {Functional::fekete_szego, 2.0}, trials},
        {ClassParams(2.0, 0.3, 1), {Functional::distortion, 0.5}, trials / 4},
    };

    bool all_match = true;
    for (const Bench& b : cells) {
        std::string serial_out, parallel_out;
        const double ts = time_run(b.params, b.fn, b.trials, Exec::serial, &serial_out);
        const double tp = time_run(b.params, b.fn, b.trials, Exec::parallel, &parallel_out);
        const bool match = serial_out == parallel_out;
        all_match = all_match && match;
        char label[64];
        std::snprintf(label, sizeof label, "%s a=%g b=%g n=%d", b.fn.label().c_str(),
                      b.params.alpha, b.params.beta, b.params.n);
        std::printf("%-34s %8d %10.3f %10.3f %8.2fx %6s\n", label, b.trials, ts, tp, ts / tp,
                    match ? "yes" : "NO");
    }
    if (!all_match) {
        std::printf("MISMATCH between serial and parallel records\n");
        return 1;
    }
    return 0;
}
