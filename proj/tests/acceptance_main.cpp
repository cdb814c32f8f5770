// Acceptance suite: runs the ten structural checks end to end and prints one
// verdict line per criterion. Exit code 0 iff everything passed.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "descent3/verify.hpp"

int main(int argc, char** argv) {
    descent3::AcceptanceOptions opt;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc) opt.jobs = std::atoi(argv[++i]);
        if (std::strcmp(argv[i], "--order-cap") == 0 && i + 1 < argc)
            opt.order_cap = std::atoi(argv[++i]);
    }
    auto results = descent3::run_acceptance(opt);
    bool ok = true;
    for (const auto& r : results) {
        std::printf("criterion %2d: %s  [%s]  (%s, %.2fs)\n", r.number,
                    r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str(), r.seconds);
        ok = ok && r.pass;
    }
    std::printf("acceptance: %s\n", ok ? "ALL PASS" : "FAILURES PRESENT");
    return ok ? 0 : 1;
}
