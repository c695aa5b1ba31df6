#pragma once

#include <filesystem>
#include <stdexcept>

#include "mills/chain.hpp"

namespace mills {

// Chain files are line-oriented versioned text; offsets are the source of
// truth and terms are recomputed on load. Layout (canonical, diff-clean):
//
//   millschain 1
//   c 3
//   seed 2
//   prp-rounds 5
//   rng-seed 469853688947
//   term 1 provable-prime trial-division 0
//   step 1 3 provable-prime trial-division 0
//   step 2 30 provable-prime trial-division 0
//   ...
//
// `term 1` carries the seed's verdict; `step n  a_n  status method rounds`
// carries the offset and verdict of b_{n+1}. Status is one of
// provable-prime, probable-prime, composite, unchecked ("-" method and 0
// rounds for unchecked). Lines starting with '#' are ignored.
struct ChainFileMeta {
    int prp_rounds = 5;
    std::uint64_t rng_seed = kDefaultRngSeed;
};

struct LoadedChain {
    MillsChain chain;
    ChainFileMeta meta;
};

class ChainParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

LoadedChain load_chain(const std::filesystem::path& path);

// Serialization text of a chain file (exactly what save_chain writes).
std::string chain_file_text(const MillsChain& chain, const ChainFileMeta& meta);

// Atomic: writes a temp file in the target directory, then renames over.
void save_chain(const MillsChain& chain, const ChainFileMeta& meta,
                const std::filesystem::path& path);

}  // namespace mills
