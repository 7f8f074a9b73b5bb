#include <adcat/acceptance.hpp>

#include <cstdio>
#include <cstdlib>

/* one line per criterion; the exit status counts the failures */
int main(int argc, char** argv) {
    std::uint64_t seed = 0;
    int trials = 25;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
    if (argc > 2) trials = std::atoi(argv[2]);

    int failed = 0;
    for (const adcat::criterion_result& r : adcat::run_acceptance(seed, trials)) {
        std::printf("criterion %2d %-32s %s (%s)\n", r.id, r.name.c_str(),
                    r.pass ? "PASS" : "FAIL", r.detail.c_str());
        if (!r.pass) ++failed;
    }
    std::printf("%d criteria, %d failed\n", 12, failed);
    return failed;
}
