#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "fsr/ideal.hpp"
#include "fsr/monomial.hpp"

namespace fsr {

// Downward-closed family of subsets of {0..vertex_count-1}, stored by facets.
// No facets is the void complex; the single empty facet is the irrelevant
// complex {∅}.
class SimplicialComplex {
public:
    SimplicialComplex(std::size_t vertex_count, std::vector<VarSet> generators);

    static SimplicialComplex void_complex(std::size_t n) { return SimplicialComplex(n, {}); }
    static SimplicialComplex irrelevant(std::size_t n) { return SimplicialComplex(n, {VarSet{}}); }
    static SimplicialComplex simplex(std::size_t n) { return SimplicialComplex(n, {VarSet::all(n)}); }

    std::size_t vertex_count() const { return n_; }
    const std::vector<VarSet>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }
    bool is_irrelevant() const { return facets_.size() == 1 && facets_.front().empty(); }
    bool contains(VarSet face) const;
    // Largest face size; 0 for {∅} and for the void complex.
    std::size_t max_face_size() const;

    // Every face, grouped by size (index k holds the faces with k vertices).
    std::vector<std::vector<VarSet>> faces_by_size() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::size_t n_;
    std::vector<VarSet> facets_;
};

// The Stanley-Reisner complex: faces F with x^F ∉ I. The unit ideal gives the
// void complex.
SimplicialComplex complex_of_ideal(const MonomialIdeal& i);

// { G : G ∪ F ∈ C, G ∩ F = ∅ }.
SimplicialComplex link(const SimplicialComplex& c, VarSet face);

// Faces of C contained in `subset`.
SimplicialComplex restriction(const SimplicialComplex& c, VarSet subset);

// Ranks of reduced simplicial cohomology over F_p, keyed by degree (from -1).
// Degrees with rank zero are omitted.
std::map<int, std::uint64_t> reduced_cohomology_ranks(const SimplicialComplex& c, std::uint64_t p);

// Σ_k (-1)^k f_k over faces of dimension k >= -1.
std::int64_t reduced_euler_characteristic(const SimplicialComplex& c);

// Rank of a matrix over F_p (entries already reduced mod p).
std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p);

} // namespace fsr
