#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fsr/complex.hpp"
#include "fsr/ideal.hpp"
#include "fsr/rational.hpp"
#include "fsr/ring.hpp"

namespace fsr {

// a_i(S/Q) for 0 <= i <= dim; nullopt is -infinity.
struct AInvariantTable {
    std::size_t dim = 0;
    std::vector<std::optional<std::int64_t>> values;
    bool zero_ring = false; // Q is the unit ideal; values is empty

    const std::optional<std::int64_t>& at(std::size_t i) const { return values.at(i); }
    // max_i a_i; nullopt for the zero ring.
    std::optional<std::int64_t> max_value() const;
    // max_i (a_i + i), the regularity of S/Q.
    std::optional<std::int64_t> regularity() const;
};

// Hochster: a_i = max{-|F| : F ∈ Δ, H̃^{i-|F|-1}(lk F; F_p) ≠ 0}.
AInvariantTable a_invariants_squarefree(const MonomialIdeal& q, std::uint64_t p);

struct RegularityWitness {
    VarSet alpha; // α ∈ {0,1}^n as its support
    std::size_t i = 0;
    std::int64_t a = 0; // a_i(S/(J_α + J))
};

struct RegularityLimitReport {
    std::int64_t limit = 0;
    std::vector<RegularityWitness> argmax;
    bool argmax_uses_h0 = false; // some maximizer has i = 0
    std::vector<std::pair<unsigned, RationalValue>> finite_levels;
};

// max over α ∈ {0,1}^n and 0 <= i <= dim of a_i(S/((I : x^α) + J)) + |α|;
// finite_levels holds the scaled regularity for e = 0..e_max.
RegularityLimitReport regularity_limit(const StanleyReisnerRing& r, const MonomialIdeal& j, unsigned e_max = 0);

// max over α, i of a_i(S/(J_α + J)) + |α|(q-1)/q + i/q.
RationalValue scaled_regularity_at_level(const StanleyReisnerRing& r, const MonomialIdeal& j,
                                         const FrobeniusLevel& level);

} // namespace fsr
