#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fsr/ideal.hpp"
#include "fsr/rational.hpp"
#include "fsr/ring.hpp"

namespace fsr {

// J_e = {f : φ(f^{1/q}) ∈ J for every φ ∈ Hom_R(R^{1/q}, R)}.
struct ContractionQuery {
    StanleyReisnerRing ring;
    MonomialIdeal j;
    FrobeniusLevel level;
};

// (I : (I : x^N)): the image ideal of the summand S/(I : x^α) of R^{1/q} for
// any α with support N. Equals the unit ideal when I = 0.
MonomialIdeal compatibility_closure(const StanleyReisnerRing& r, VarSet support);

// Writing β = qθ + α with 0 <= α <= q-1: x^β ∈ J_e iff x^θ·(I : (I : x^α)) ⊆ J + I.
bool contraction_contains(const ContractionQuery& query, const Monomial& m);

// Minimal generators of J_e (as an ideal of S containing I).
MonomialIdeal contraction_ideal(const ContractionQuery& query);

struct CompatibilityWitness {
    ExponentVector generator;
    MonomialIdeal closure;
    bool closed = false; // closure ⊆ C + I
};

struct CompatibilityReport {
    bool compatible = false;
    std::vector<CompatibilityWitness> witnesses;
};

// A squarefree C is uniformly F-compatible iff every minimal generator x^N has
// (I : (I : x^N)) ⊆ C + I.
CompatibilityReport is_uniformly_compatible(const StanleyReisnerRing& r, const MonomialIdeal& c);

struct CoreResult {
    MonomialIdeal core; // squarefree, contains I
    std::vector<CompatibilityWitness> certificate;
    std::size_t rounds = 0;
};

// P(J): the largest uniformly F-compatible ideal inside J, by greatest-fixpoint
// pruning of the squarefree monomials of J + I.
CoreResult cartier_core(const StanleyReisnerRing& r, const MonomialIdeal& j);

// max{t : a^t ⊄ J_e}.
std::uint64_t b_value(const StanleyReisnerRing& r, const MonomialIdeal& a, const MonomialIdeal& j,
                      const FrobeniusLevel& level);

struct PrimeCartier {
    FacePrime prime;
    RationalValue value;
    StanleyReisnerRing localized_ring;
    MonomialIdeal localized_a;
    MonomialIdeal core;     // P of the localized maximal ideal
    bool a_in_core = false; // per-prime value is 0
    std::optional<StanleyReisnerRing> quotient; // localized ring modulo the core
    std::vector<std::size_t> kept_variables;
};

struct CtRecord {
    RationalValue value; // max of per_prime values
    std::vector<PrimeCartier> per_prime;
};

// ct_J(a) for squarefree J and a ⊆ J: per minimal prime q of J, localize at q,
// pass to the quotient by the Cartier core of the maximal ideal, and take the
// F-threshold of the image of a with respect to the image maximal ideal.
CtRecord cartier_threshold(const StanleyReisnerRing& r, const MonomialIdeal& a, const MonomialIdeal& j);

struct SandwichRow {
    unsigned e = 0;
    MonomialIdeal contraction;
    std::uint64_t b = 0;
    RationalValue scaled_b;
    RationalValue c_contraction; // c^{J_e}(a)
    RationalValue scaled_c;
};

struct SandwichTable {
    std::vector<SandwichRow> rows; // e = 1..e_max
    std::size_t mu = 0;
    RationalValue c_threshold; // c^J(a), the e = 0 column value
    RationalValue ct;
};

// Throws InternalInconsistency when 0 <= c^{J_e}/q - b/q <= mu/q, monotonicity
// of either column, or b/q <= ct <= c^{J_e}/q fails.
SandwichTable ct_sandwich_table(const StanleyReisnerRing& r, const MonomialIdeal& a, const MonomialIdeal& j,
                                unsigned e_max);

} // namespace fsr
