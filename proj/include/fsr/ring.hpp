#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "fsr/ideal.hpp"
#include "fsr/monomial.hpp"

namespace fsr {

// Prime ideal generated by a set of variables. The empty set is the zero prime.
struct FacePrime {
    VarSet variables;

    MonomialIdeal to_ideal(std::size_t n) const { return MonomialIdeal::variables(n, variables); }
    // True iff the prime contains the ideal A.
    bool contains(const MonomialIdeal& a) const;

    friend bool operator==(const FacePrime&, const FacePrime&) = default;
    friend auto operator<=>(const FacePrime& a, const FacePrime& b) { return a.variables <=> b.variables; }
};

struct PrimeDecomposition {
    std::vector<FacePrime> primes; // canonical order
    std::size_t dim = 0;           // n - (minimum transversal size)
};

// Minimal primes of a squarefree proper monomial ideal, i.e. the minimal
// transversals of the hypergraph of generator supports.
PrimeDecomposition minimal_primes(const MonomialIdeal& a);

// Image of A in S/P, as an ideal of the polynomial ring on the variables
// outside P (kept in their original order).
MonomialIdeal image_mod_face_prime(const MonomialIdeal& a, const FacePrime& p);

// S = F_p[x_1..x_n], R = S/I with I squarefree and proper.
class StanleyReisnerRing {
public:
    StanleyReisnerRing(std::size_t n, std::uint64_t p, MonomialIdeal defining_ideal);
    static StanleyReisnerRing polynomial(std::size_t n, std::uint64_t p) {
        return StanleyReisnerRing(n, p, MonomialIdeal::zero(n));
    }

    std::size_t n() const { return n_; }
    std::uint64_t p() const { return p_; }
    const MonomialIdeal& defining_ideal() const { return ideal_; }
    const std::vector<FacePrime>& minimal_primes() const { return primes_.primes; }
    std::size_t dim() const { return primes_.dim; }
    bool is_polynomial_ring() const { return ideal_.is_zero(); }

    MonomialIdeal maximal_ideal() const { return MonomialIdeal::variables(n_, VarSet::all(n_)); }
    // Preimage in S of the image of A in R, i.e. A + I.
    MonomialIdeal lift(const MonomialIdeal& a) const;
    FrobeniusLevel level(unsigned e) const { return FrobeniusLevel(p_, e); }
    // Same ring in characteristic p'.
    StanleyReisnerRing with_characteristic(std::uint64_t p) const { return StanleyReisnerRing(n_, p, ideal_); }

    // The regular quotient S/P for a minimal prime P.
    StanleyReisnerRing quotient_by(const FacePrime& p) const;

    friend bool operator==(const StanleyReisnerRing& a, const StanleyReisnerRing& b) {
        return a.n_ == b.n_ && a.p_ == b.p_ && a.ideal_ == b.ideal_;
    }

private:
    std::size_t n_;
    std::uint64_t p_;
    MonomialIdeal ideal_;
    PrimeDecomposition primes_;
};

struct Localization {
    StanleyReisnerRing ring;
    std::vector<MonomialIdeal> extras;
    std::vector<std::size_t> kept_variables; // original indices of the new variables
};

// Localization (and completion) of R at a face prime q containing I: variables
// outside q become units, so every ideal is restricted to the coordinates of q.
Localization localize_at_face_prime(const StanleyReisnerRing& r, const FacePrime& q,
                                    const std::vector<MonomialIdeal>& extras);

// Deletes the coordinates outside `keep` from every generator.
MonomialIdeal restrict_to(const MonomialIdeal& a, VarSet keep);

} // namespace fsr
