#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace caper {

using Rng = std::mt19937_64;

/// Counter-based seed derivation: the seed for (`root`, `stream`, `index`) does not
/// depend on how many other indices are drawn, so adding scenes keeps earlier ones intact.
std::uint64_t derive_seed(std::uint64_t root, std::string_view stream, std::uint64_t index);

}  // namespace caper
