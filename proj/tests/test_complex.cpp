#include <doctest.h>

#include "fsr/complex.hpp"
#include "fsr/errors.hpp"
#include "support.hpp"

using namespace fsr;
using fsr::test::ideal;

namespace {

SimplicialComplex two_points() { return SimplicialComplex(2, {VarSet::of({0}), VarSet::of({1})}); }

SimplicialComplex hollow_triangle() {
    return SimplicialComplex(3, {VarSet::of({0, 1}), VarSet::of({1, 2}), VarSet::of({0, 2})});
}

// Six-vertex real projective plane.
SimplicialComplex projective_plane() {
    const std::vector<std::vector<std::size_t>> tri = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                                       {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
    std::vector<VarSet> facets;
    for (const auto& t : tri)
        facets.push_back(VarSet::of({t[0], t[1], t[2]}));
    return SimplicialComplex(6, facets);
}

} // namespace

TEST_CASE("complex of an ideal") {
    CHECK(complex_of_ideal(ideal(2, {{1, 1}})) == two_points());
    CHECK(complex_of_ideal(MonomialIdeal::zero(2)) == SimplicialComplex::simplex(2));
    const auto three = complex_of_ideal(ideal(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
    CHECK(three.facets().size() == 3);
    CHECK(three.max_face_size() == 1);
    CHECK(complex_of_ideal(MonomialIdeal::unit(2)).is_void());
    CHECK(complex_of_ideal(ideal(1, {{1}})).is_irrelevant());
    CHECK_THROWS_AS((complex_of_ideal(ideal(2, {{2, 0}}))), PreconditionError);
}

TEST_CASE("faces agree with non-membership in random squarefree ideals") {
    test::Random rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = rng.uniform(1, 5);
        const auto i = rng.squarefree_ideal(n, 4);
        const auto c = complex_of_ideal(i);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            const VarSet f(bits);
            CHECK(c.contains(f) == !test::divides_some(i.generators(), ExponentVector::indicator(n, f)));
        }
    }
}

TEST_CASE("links and restrictions") {
    const auto t = hollow_triangle();
    CHECK(link(t, VarSet{}) == t);
    CHECK(link(two_points(), VarSet::of({0})).is_irrelevant());
    CHECK(link(t, VarSet::of({0})) == SimplicialComplex(3, {VarSet::of({1}), VarSet::of({2})}));
    CHECK_THROWS_AS((link(two_points(), VarSet::of({0, 1}))), PreconditionError);
    CHECK(restriction(t, VarSet::of({0, 1})) == SimplicialComplex(3, {VarSet::of({0, 1})}));
    CHECK(restriction(two_points(), VarSet{}).is_irrelevant());
}

TEST_CASE("reduced cohomology examples") {
    using Ranks = std::map<int, std::uint64_t>;
    CHECK(reduced_cohomology_ranks(two_points(), 2) == Ranks{{0, 1}});
    CHECK(reduced_cohomology_ranks(hollow_triangle(), 3) == Ranks{{1, 1}});
    CHECK(reduced_cohomology_ranks(SimplicialComplex::irrelevant(2), 2) == Ranks{{-1, 1}});
    CHECK(reduced_cohomology_ranks(SimplicialComplex::void_complex(2), 2).empty());
    CHECK(reduced_cohomology_ranks(SimplicialComplex::simplex(3), 5).empty());
    // Torsion shows up only in characteristic 2.
    CHECK(reduced_cohomology_ranks(projective_plane(), 2) == Ranks{{1, 1}, {2, 1}});
    CHECK(reduced_cohomology_ranks(projective_plane(), 3).empty());
    CHECK_THROWS_AS((reduced_cohomology_ranks(two_points(), 4)), InputError);
}

TEST_CASE("rank mod p") {
    CHECK(rank_mod_p({{1, 1}, {1, 1}}, 2) == 1);
    CHECK(rank_mod_p({{1, 1}, {1, 2}}, 3) == 2);
    CHECK(rank_mod_p({{2, 1}, {1, 2}}, 3) == 1);
    CHECK(rank_mod_p({}, 2) == 0);
}

TEST_CASE("Euler characteristic identity") {
    CHECK(reduced_euler_characteristic(SimplicialComplex::irrelevant(1)) == -1);
    CHECK(reduced_euler_characteristic(SimplicialComplex::void_complex(1)) == 0);
    CHECK(reduced_euler_characteristic(projective_plane()) == 0);
    test::Random rng(777);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = rng.uniform(1, 6);
        const auto c = complex_of_ideal(rng.monomial_ideal(n, 5, 1));
        for (std::uint64_t p : {2, 3, 5}) {
            std::int64_t alt = 0;
            for (const auto& [degree, rank] : reduced_cohomology_ranks(c, p))
                alt += (degree % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(rank);
            CHECK(alt == reduced_euler_characteristic(c));
        }
    }
}
