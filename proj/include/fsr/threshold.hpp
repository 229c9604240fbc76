#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fsr/ideal.hpp"
#include "fsr/rational.hpp"
#include "fsr/ring.hpp"

namespace fsr {

struct PrimeNu {
    FacePrime prime;
    std::uint64_t nu = 0;
    bool zero_image = false; // a vanishes in S/P
};

// nu = max{m : a^m ⊄ J^{[q]}} with a^0 = (1); scaled = nu/q.
struct NuRecord {
    FrobeniusLevel level;
    std::uint64_t nu = 0;
    RationalValue scaled;
    bool degenerate = false; // a is zero modulo every minimal prime
    std::vector<PrimeNu> per_prime;
};

// Throws PreconditionError unless J is proper in R and a ⊆ √(J + I).
void require_in_radical(const StanleyReisnerRing& r, const MonomialIdeal& a, const MonomialIdeal& j);

// Number of minimal generators of the image of a in R.
std::size_t generator_count_in_ring(const StanleyReisnerRing& r, const MonomialIdeal& a);

// nu in a polynomial ring by the staircase search: x^w ∈ J^{[q]} iff q·v <= w
// for some generator v.
std::uint64_t regular_nu(const MonomialIdeal& a, const MonomialIdeal& j, Exponent q);

// max over minimal primes P of the regular-quotient nu in S/P.
NuRecord nu_value(const StanleyReisnerRing& r, const MonomialIdeal& a, const MonomialIdeal& j,
                  const FrobeniusLevel& level);

// Maximize Σ λ_u subject to (Σ λ_u·u)_{σ(v)} <= v_{σ(v)} for every J-generator v.
struct SelectionLP {
    std::vector<ExponentVector> a_gens;
    std::vector<ExponentVector> j_gens;
    std::vector<std::size_t> selection; // coordinate chosen for each j-generator

    // Throws PreconditionError if the LP is unbounded.
    RationalValue optimum() const;
};

// c^J(a) in a polynomial ring: the maximum of SelectionLP over coordinate
// selections (each J-generator picks a coordinate in its support).
RationalValue disjunctive_lp_value(const std::vector<ExponentVector>& a_gens,
                                   const std::vector<ExponentVector>& j_gens);

struct PrimeThreshold {
    FacePrime prime;
    RationalValue value;
    bool zero_image = false;
};

struct FThresholdResult {
    RationalValue value;
    bool degenerate = false;
    std::vector<PrimeThreshold> per_prime;
};

FThresholdResult f_threshold(const StanleyReisnerRing& r, const MonomialIdeal& a, const MonomialIdeal& j);

struct ConvergenceTable {
    std::vector<NuRecord> rows; // e = 0..e_max
    std::size_t mu = 0;
    // [nu(p^e_max)/p^e_max, nu(p^e_max)/p^e_max + mu/p^e_max] contains c^J(a).
    RationalValue lower;
    RationalValue upper;
};

// Throws InternalInconsistency if monotonicity or the mu/p^e gap bound fails.
ConvergenceTable convergence_table(const StanleyReisnerRing& r, const MonomialIdeal& a, const MonomialIdeal& j,
                                   unsigned e_max);

} // namespace fsr
