// Serial reference vs OpenMP Monte Carlo kernels on one price.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "cgmy/mc.hpp"

using namespace cgmy;

int main(int argc, char** argv)
{
    const std::size_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1000000;
    const int reps = argc > 2 ? std::atoi(argv[2]) : 3;
    const auto p = CgmyParams::validate(0.0244, 0.0765, 7.5515, 1.2945, 0.0);
    const double t = 1.0 / 12;

    auto time_it = [&](auto&& f) {
        double best = 1e300;
        mc::McEstimate e;
        for (int r = 0; r < reps; ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            e = f();
            best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        }
        return std::make_pair(best, e);
    };

    const int threads = omp_get_max_threads();
    std::printf("paths %zu, threads available %d\n", n, threads);
    auto [ts, es] = time_it([&] { return mc::mc_price_serial(p, t, 0.0, {n, 7, 1}); });
    std::printf("%-10s %10.4f s  mean %.17g\n", "serial", ts, es.mean);
    for (int k : {1, 2, 4, 8}) {
        if (k > 2 * threads) break;
        auto [tp, ep] = time_it([&] { return mc::mc_price(p, t, 0.0, {n, 7, k}); });
        std::printf("omp x%-5d %10.4f s  mean %.17g  speedup %.2f%s\n", k, tp, ep.mean, ts / tp,
                    ep.mean == es.mean ? "" : "  MISMATCH");
    }
}
