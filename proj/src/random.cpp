#include "novikov/random.hpp"

#include <limits>
#include <stdexcept>

namespace novikov {

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

std::int64_t uniform_int(std::mt19937_64& engine, std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t draw = engine();
    while (draw >= limit) draw = engine();
    return lo + static_cast<std::int64_t>(draw % span);
}

std::vector<BasisSymbol> basis_up_to(std::int64_t max_index) {
    std::vector<BasisSymbol> out;
    for (std::int64_t k = 0; k <= max_index; ++k) {
        out.push_back(BasisSymbol::b(k));
        if (k > 0) out.push_back(BasisSymbol::a(k));
    }
    return out;
}

Element random_element(std::mt19937_64& engine, std::int64_t max_index) {
    // Symbol slot s in [0, 2K]: s = 0 is b_0, then b_1, a_1, b_2, a_2, ...
    const std::int64_t slots = 2 * max_index;
    const std::int64_t terms = uniform_int(engine, 1, 4);
    Element x;
    for (std::int64_t t = 0; t < terms; ++t) {
        const std::int64_t slot = uniform_int(engine, 0, slots);
        std::int64_t coeff = uniform_int(engine, -3, 2);
        if (coeff >= 0) ++coeff;
        const BasisSymbol s = slot == 0 ? BasisSymbol::b(0)
                              : (slot % 2 == 1) ? BasisSymbol::b((slot + 1) / 2)
                                                : BasisSymbol::a(slot / 2);
        x.add_term(s, Rational(coeff));
    }
    return x;
}

}  // namespace novikov
