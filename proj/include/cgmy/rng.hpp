#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace cgmy::rng {

using Engine = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// seed of substream `index`; depends only on (master, index)
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index)
{
    return splitmix64(master ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

inline Engine make_engine(std::uint64_t master, std::uint64_t index)
{
    return Engine(stream_seed(master, index));
}

// uniform on the open interval (0,1)
inline double uniform_open(Engine& g)
{
    return (static_cast<double>(g() >> 11) + 0.5) * 0x1.0p-53;
}

inline double exponential(Engine& g)
{
    return -std::log(uniform_open(g));
}

// Box-Muller, one variate per call so draw counts stay fixed
inline double normal(Engine& g)
{
    const double u1 = uniform_open(g), u2 = uniform_open(g);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace cgmy::rng
