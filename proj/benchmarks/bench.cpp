// Serial reference vs OpenMP kernels: projective enumeration and the direct
// hypergeometric sum.  Counts are asserted equal while timing.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hypcount/counting.hpp"

using namespace hypcount;
using clock_type = std::chrono::steady_clock;

static double seconds(clock_type::time_point a, clock_type::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

int main(int argc, char** argv) try {
    i64 p = argc > 1 ? std::atoll(argv[1]) : 331;
    i64 d = argc > 2 ? std::atoll(argv[2]) : 3;
    i64 n = argc > 3 ? std::atoll(argv[3]) : 4;

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (compiled without OpenMP)\n");
#endif

    FieldSpec spec = make_field(p, 1);
    std::vector<i64> h(size_t(n), 0);
    // h = (1, ..., 1, d-n+1, 0, ...) keeps sum h = d
    for (i64 i = 0; i < std::min(n - 1, d - 1); ++i) h[size_t(i)] = 1;
    h[size_t(std::min(n - 1, d - 1))] = d - std::min(n - 1, d - 1);
    DeformationFamily fam{d, n, h, 2};
    fam.validate();

    {
        auto t0 = clock_type::now();
        const i64 serial = brute_count_serial(fam, spec);
        auto t1 = clock_type::now();
        const i64 parallel = brute_count(fam, spec);
        auto t2 = clock_type::now();
        if (serial != parallel) {
            std::printf("MISMATCH: serial %lld vs parallel %lld\n", (long long)serial,
                        (long long)parallel);
            return 1;
        }
        const double ts = seconds(t0, t1), tp = seconds(t1, t2);
        std::printf("brute_count p=%lld d=%lld n=%lld N=%lld: serial %.3fs, parallel %.3fs, speedup %.2fx\n",
                    (long long)p, (long long)d, (long long)n, (long long)serial, ts, tp,
                    ts / tp);
    }

    {
        FieldSpec f31 = make_field(31, 1);
        HypParams hp{{0, 10, 20}, {5, 15}, 3};
        auto t0 = clock_type::now();
        const complexd serial = hyp_direct_serial(f31, hp);
        auto t1 = clock_type::now();
        const complexd parallel = hyp_direct(f31, hp);
        auto t2 = clock_type::now();
        if (std::abs(serial - parallel) > 1e-6) {
            std::printf("MISMATCH: hypergeometric sums differ by %g\n",
                        std::abs(serial - parallel));
            return 1;
        }
        const double ts = seconds(t0, t1), tp = seconds(t1, t2);
        std::printf("hyp_direct q=31 n+m=5: serial %.3fs, parallel %.3fs, speedup %.2fx\n",
                    ts, tp, ts / tp);
    }
    return 0;
} catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
}
