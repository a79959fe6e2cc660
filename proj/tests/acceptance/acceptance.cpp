#include <cstdio>

#include "sintk/acceptance.hpp"

int main() {
    int failed = 0;
    for (const auto& r : sintk::acceptance::run_all()) {
        std::printf("[%s] %2d. %-36s %8.3f s", r.pass() ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds);
        if (r.limit_seconds > 0) std::printf(" (limit %.0f s)", r.limit_seconds);
        std::printf("\n");
        for (const auto& f : r.failures) std::printf("       - %s\n", f.c_str());
        if (r.checks_pass && !r.pass()) std::printf("       - over the time limit\n");
        failed += !r.pass();
    }
    std::printf("%d of 10 criteria passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
