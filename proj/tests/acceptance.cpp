// Release gate: one line per shipped claim.  Each check can be run on its
// own with --only N; the slow feasibility example needs --slow.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

#include "g3/selftest.hpp"

int main(int argc, char** argv) {
    g3::SelftestOptions opt;
    opt.jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (opt.jobs < 1) opt.jobs = 1;
    opt.checkpoint_dir = "acceptance-checkpoints";

    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        auto next = [&](const char* flag) -> const char* {
            if (i + 1 >= argc) {
                std::fprintf(stderr, "%s needs a value\n", flag);
                std::exit(2);
            }
            return argv[++i];
        };
        if (arg == "--slow") {
            opt.include_slow = true;
        } else if (arg == "--only") {
            opt.only.push_back(std::atoi(next("--only")));
        } else if (arg == "--jobs") {
            opt.jobs = std::atoi(next("--jobs"));
        } else if (arg == "--checkpoints") {
            opt.checkpoint_dir = next("--checkpoints");
        } else {
            std::fprintf(stderr, "usage: acceptance [--slow] [--only N]... [--jobs N] "
                                 "[--checkpoints DIR]\n");
            return 2;
        }
    }
    if (!opt.checkpoint_dir.empty())
        std::filesystem::create_directories(opt.checkpoint_dir);

    opt.on_result = [](const g3::CheckResult& r) {
        const char* verdict = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
        std::printf("%s %d %s (%.2fs): %s\n", verdict, r.id, r.name.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
    };
    std::vector<g3::CheckResult> results = g3::run_selftest(opt);
    if (results.empty()) {
        std::fprintf(stderr, "no such check\n");
        return 2;
    }
    return g3::all_passed(results) ? 0 : 1;
}
