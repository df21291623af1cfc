#pragma once

#include <cstdint>
#include <map>

namespace tricolor {

// Ordered bucket -> count table. Walks that outran their budget are tallied
// separately so truncation can never masquerade as data.
struct Histogram {
    std::map<std::int64_t, std::uint64_t> bins;
    std::uint64_t truncated = 0;

    void add(std::int64_t bucket) { ++bins[bucket]; }
    std::uint64_t total() const {
        std::uint64_t t = truncated;
        for (const auto& [b, c] : bins) t += c;
        return t;
    }
};

}  // namespace tricolor
