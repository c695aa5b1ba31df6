#pragma once

#include <cstdint>
#include <string>
#include <thread>

#include "mills/primality.hpp"
#include "mills/sieve.hpp"

namespace mills {

// Reproducibility knobs recorded verbatim in every output artifact.
struct RunConfig {
    int prp_rounds = 5;
    std::uint64_t rng_seed = kDefaultRngSeed;
    unsigned threads = 0;  // 0 = auto
    std::uint64_t segment_size = kDefaultSegmentSize;
    enum class Format { Text, Structured } format = Format::Text;

    unsigned resolved_threads() const {
        if (threads != 0) return threads;
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : hw;
    }

    std::string format_name() const {
        return format == Format::Text ? "text" : "structured";
    }
};

}  // namespace mills
