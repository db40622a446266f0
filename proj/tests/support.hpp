#pragma once

#include "selfext/partitions.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace selfext::testing {

constexpr std::uint64_t default_seed = 20200511;

// Seed for randomized property tests: --seed N on the command line, then the
// SELFEXT_SEED environment variable, then default_seed.
std::uint64_t seed();
void set_seed(std::uint64_t s);

// Fresh generator per test case so cases stay independent of run order.
inline std::mt19937_64 rng(std::uint64_t salt)
{
    return std::mt19937_64(seed() ^ (salt * 0x9E3779B97F4A7C15ULL));
}

inline int uniform(std::mt19937_64& g, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(g);
}

// Uniform over the partitions of a size drawn uniformly from [lo, hi].
inline Partition random_partition(std::mt19937_64& g, int lo, int hi)
{
    auto all = partitions_of(uniform(g, lo, hi));
    return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(g)];
}

inline Partition random_regular(std::mt19937_64& g, int lo, int hi, int p)
{
    for (;;) {
        auto l = random_partition(g, lo, hi);
        if (is_p_regular(l, p))
            return l;
    }
}

inline std::vector<Partition> partitions_up_to(int n, bool (*keep)(const Partition&, int) = nullptr, int p = 0)
{
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k)
        for (auto& l : partitions_of(k))
            if (!keep || keep(l, p))
                out.push_back(std::move(l));
    return out;
}

} // namespace selfext::testing
