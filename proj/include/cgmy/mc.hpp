#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cgmy/model.hpp"
#include "cgmy/rng.hpp"

namespace cgmy::mc {

struct McConfig {
    std::size_t n_paths = 100000;
    std::uint64_t seed = 20240101;
    int n_chunks = 1;  // parallel workers; never changes the numbers

    void validate() const;
};

struct McEstimate {
    double mean = 0;
    double se = 0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
};

enum class Exec { parallel, serial };

// Paths are grouped into fixed blocks; block b draws from substream (seed, b).
// Block statistics are merged in block order, so the result is bit-identical
// for any thread count and for serial execution.
inline constexpr std::size_t kBlock = 4096;

struct BlockStats {
    double n = 0, mean = 0, m2 = 0;
};

template <class Sample>
BlockStats run_block(std::uint64_t seed, std::size_t b, std::size_t count, Sample& sample)
{
    auto g = rng::make_engine(seed, b);
    BlockStats s;
    for (std::size_t i = 0; i < count; ++i) {
        const double x = sample(g);
        s.n += 1;
        const double d = x - s.mean;
        s.mean += d / s.n;
        s.m2 += d * (x - s.mean);
    }
    return s;
}

template <class Sample>
McEstimate run(std::size_t n, std::uint64_t seed, int n_chunks, Exec exec, Sample sample)
{
    const std::size_t nb = (n + kBlock - 1) / kBlock;
    std::vector<BlockStats> blocks(nb);
    auto count = [&](std::size_t b) { return std::min(kBlock, n - b * kBlock); };

    if (exec == Exec::parallel) {
        const long long nbl = static_cast<long long>(nb);
#pragma omp parallel for schedule(static) num_threads(std::max(n_chunks, 1))
        for (long long b = 0; b < nbl; ++b) {
            Sample local = sample;
            blocks[b] = run_block(seed, b, count(b), local);
        }
    } else {
        for (std::size_t b = 0; b < nb; ++b) blocks[b] = run_block(seed, b, count(b), sample);
    }

    BlockStats acc;
    for (const auto& s : blocks) {
        const double nn = acc.n + s.n;
        const double d = s.mean - acc.mean;
        acc.mean += d * s.n / nn;
        acc.m2 += s.m2 + d * d * acc.n * s.n / nn;
        acc.n = nn;
    }
    McEstimate e;
    e.mean = acc.mean;
    e.se = n > 1 ? std::sqrt(acc.m2 / (acc.n - 1) / acc.n) : 0.0;
    e.n = n;
    e.seed = seed;
    return e;
}

// Normalized call price E[(S_t - e^kappa)^+] under the stable change of measure.
McEstimate mc_price(const CgmyParams& p, double t, double kappa, const McConfig& cfg);
McEstimate mc_price_serial(const CgmyParams& p, double t, double kappa, const McConfig& cfg);

// Sample mean of exp(-U~_t); expectation exp(eta t).
McEstimate mc_weight_identity_check(const CgmyParams& p, double t, std::size_t n, std::uint64_t seed);

} // namespace cgmy::mc
