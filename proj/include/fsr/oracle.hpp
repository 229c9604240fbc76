#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>

#include "fsr/ideal.hpp"
#include "fsr/rational.hpp"
#include "fsr/ring.hpp"

namespace fsr {

// Brute-force reference implementations. They share no code path with the
// engines beyond ideal storage and refuse to run outside their budget.
struct OracleBudget {
    std::size_t max_n = 4;
    std::uint64_t max_p = 3;
    unsigned max_e = 2;
    std::uint64_t max_degree = 128; // largest power m expanded by bf_nu

    // "max_n=5,max_p=5,max_e=3,max_degree=200"; missing keys keep defaults.
    static OracleBudget parse(const std::string& text);
    // FSR_ORACLE_BUDGET if set, defaults otherwise.
    static OracleBudget from_env();

    // Throws BudgetExceeded naming the violated bound.
    void check(const StanleyReisnerRing& r, const FrobeniusLevel& level) const;
};

// Expands every product of m generators of a for m = 0, 1, ... and tests it
// against J^{[q]} + I by divisibility.
std::uint64_t bf_nu(const StanleyReisnerRing& r, const MonomialIdeal& a, const MonomialIdeal& j,
                    const FrobeniusLevel& level, const OracleBudget& budget = {});

// x^β ∈ J_e iff for every x^η ∈ (I^{[q]} : I) and every δ with
// η + β = qδ + (q-1)·1, x^δ ∈ J + I.
bool bf_contraction_trace(const StanleyReisnerRing& r, const MonomialIdeal& j, const FrobeniusLevel& level,
                          const Monomial& m, const OracleBudget& budget = {});

// max{t : a^t ⊄ J_e}, expanding products of a and testing each with the trace
// oracle.
std::uint64_t bf_b_value(const StanleyReisnerRing& r, const MonomialIdeal& a, const MonomialIdeal& j,
                         const FrobeniusLevel& level, const OracleBudget& budget = {});

// [ν/q, (ν + μ)/q] with ν from bf_nu at p^e and μ the generator count of a in R.
std::pair<RationalValue, RationalValue> bf_threshold_bracket(const StanleyReisnerRing& r, const MonomialIdeal& a,
                                                             const MonomialIdeal& j, unsigned e,
                                                             const OracleBudget& budget = {});

// reg(S/(I + J^{[q]})) from multigraded Betti numbers: β_{i,b} = dim H̃_{i-2}(K^b)
// with K^b = {F ⊆ Supp b : x^{b - F} ∈ M}, scanned over the lcm box.
std::int64_t bf_regularity(const StanleyReisnerRing& r, const MonomialIdeal& j, const FrobeniusLevel& level,
                           const OracleBudget& budget = {});

} // namespace fsr
