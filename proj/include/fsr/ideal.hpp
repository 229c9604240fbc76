#pragma once

#include <cstddef>
#include <vector>

#include "fsr/monomial.hpp"

namespace fsr {

// A monomial ideal given by its minimal generators in lexicographic order.
// No generators is the zero ideal; the single generator 0 is the unit ideal.
class MonomialIdeal {
public:
    explicit MonomialIdeal(std::size_t ambient_n = 0) : n_(ambient_n) {}

    static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
    static MonomialIdeal unit(std::size_t n);
    // Ideal generated by the variables in `vars`.
    static MonomialIdeal variables(std::size_t n, VarSet vars);
    static MonomialIdeal principal(const ExponentVector& g);

    std::size_t ambient_n() const { return n_; }
    const std::vector<ExponentVector>& generators() const { return gens_; }
    std::size_t mu() const { return gens_.size(); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().is_zero(); }
    bool is_squarefree() const;
    // Largest coordinate appearing in any generator.
    Exponent max_exponent() const;

    bool contains(const Monomial& m) const;
    bool contains(const ExponentVector& v) const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    friend MonomialIdeal normalize(std::vector<ExponentVector> gens, std::size_t n);

    std::size_t n_ = 0;
    std::vector<ExponentVector> gens_;
};

// Minimal generating set of the ideal generated by `gens`.
MonomialIdeal normalize(std::vector<ExponentVector> gens, std::size_t n);

bool contains(const MonomialIdeal& ideal, const Monomial& m);
// A ⊆ B.
bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, std::size_t m);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

// (A : x^alpha).
MonomialIdeal colon(const MonomialIdeal& a, const ExponentVector& alpha);
// (A : B); B must be nonzero.
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);

// Generators raised to the q-th power.
MonomialIdeal frobenius_power(const MonomialIdeal& a, const FrobeniusLevel& level);
MonomialIdeal frobenius_power(const MonomialIdeal& a, Exponent q);

MonomialIdeal radical(const MonomialIdeal& a);
bool contains_radical(const MonomialIdeal& a, const ExponentVector& v); // v ∈ √A

// Ideal generated by the squarefree monomials that lie in A.
MonomialIdeal squarefree_part(const MonomialIdeal& a);

} // namespace fsr
