#pragma once

#include <cstdint>

#include "grm/measured_poset.hpp"

namespace grm {

/// Deterministic generator for valid measured posets: same seed, same poset.
/// Lengths are drawn from 1..max_length and relations only go from strictly
/// smaller to strictly larger lengths, so validate() always passes.
MeasuredPoset random_poset(std::uint64_t seed, std::size_t size, std::uint32_t max_length);

}  // namespace grm
