// Runs every acceptance criterion and prints one line per criterion.
// Exit status is nonzero if any criterion fails; waived criteria do not fail.
#include "slspec/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <string>

int main(int argc, char** argv)
{
    slspec::AcceptanceOptions opts;
    for (int i = 1; i < argc; ++i) opts.only.insert(argv[i]);
    bool failed = false;
    opts.on_result = [&](const slspec::CriterionResult& r) {
        std::printf("%s\n", slspec::format_result(r).c_str());
        std::fflush(stdout);
        failed = failed || r.verdict == slspec::Verdict::Fail;
    };
    const auto t0 = std::chrono::steady_clock::now();
    try {
        slspec::run_acceptance(opts);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance: %s\n", e.what());
        return 2;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("acceptance %s in %.1f s\n", failed ? "FAILED" : "passed", secs);
    return failed ? 1 : 0;
}
