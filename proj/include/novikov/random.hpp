#pragma once

#include "novikov/element.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace novikov {

/// Engine for one trial of a sweep. Depends only on (seed, trial), so a
/// sweep gives the same instances however its trials are scheduled.
std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial);

/// Uniform integer in [lo, hi] by rejection sampling; portable across
/// standard libraries, unlike std::uniform_int_distribution.
std::int64_t uniform_int(std::mt19937_64& engine, std::int64_t lo, std::int64_t hi);

/// All basis symbols with index <= max_index in canonical order:
/// b_0, b_1, a_1, b_2, a_2, ...
std::vector<BasisSymbol> basis_up_to(std::int64_t max_index);

/// 1-4 terms, each a basis symbol with index <= max_index and a coefficient
/// drawn from {-3, ..., 3} \ {0}. Repeated symbols merge, so the result can
/// have fewer terms (or be zero).
Element random_element(std::mt19937_64& engine, std::int64_t max_index);

}  // namespace novikov
