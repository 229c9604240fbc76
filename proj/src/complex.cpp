#include "fsr/complex.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "fsr/errors.hpp"
#include "fsr/ring.hpp"

namespace fsr {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    // Fermat: a^(p-2).
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1U)
            result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        e >>= 1U;
    }
    return result;
}

template <class F>
void for_each_subset(VarSet set, F&& f) {
    // Enumerates all submasks including the empty set.
    const std::uint64_t full = set.bits();
    std::uint64_t sub = full;
    for (;;) {
        f(VarSet(sub));
        if (sub == 0)
            break;
        sub = (sub - 1) & full;
    }
}

} // namespace

SimplicialComplex::SimplicialComplex(std::size_t vertex_count, std::vector<VarSet> generators) : n_(vertex_count) {
    const VarSet all = VarSet::all(vertex_count);
    for (auto g : generators)
        if (!g.subset_of(all))
            throw InputError("face uses a vertex outside the vertex set");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (auto g : generators) {
        const bool dominated = std::any_of(generators.begin(), generators.end(),
                                           [&](VarSet h) { return h != g && g.subset_of(h); });
        if (!dominated)
            facets_.push_back(g);
    }
}

bool SimplicialComplex::contains(VarSet face) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](VarSet f) { return face.subset_of(f); });
}

std::size_t SimplicialComplex::max_face_size() const {
    std::size_t m = 0;
    for (auto f : facets_)
        m = std::max(m, f.size());
    return m;
}

std::vector<std::vector<VarSet>> SimplicialComplex::faces_by_size() const {
    std::vector<std::vector<VarSet>> out;
    if (is_void())
        return out;
    std::unordered_set<std::uint64_t> seen;
    out.resize(max_face_size() + 1);
    for (auto facet : facets_)
        for_each_subset(facet, [&](VarSet s) {
            if (seen.insert(s.bits()).second)
                out[s.size()].push_back(s);
        });
    for (auto& level : out)
        std::sort(level.begin(), level.end());
    return out;
}

SimplicialComplex complex_of_ideal(const MonomialIdeal& i) {
    if (!i.is_squarefree())
        throw PreconditionError("Stanley-Reisner complex needs a squarefree ideal");
    if (i.is_unit())
        return SimplicialComplex::void_complex(i.ambient_n());
    const VarSet all = VarSet::all(i.ambient_n());
    std::vector<VarSet> facets;
    for (const auto& prime : minimal_primes(i).primes)
        facets.push_back(all.minus(prime.variables));
    return SimplicialComplex(i.ambient_n(), std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& c, VarSet face) {
    if (!c.contains(face))
        throw PreconditionError("link of a set that is not a face");
    std::vector<VarSet> facets;
    for (auto f : c.facets())
        if (face.subset_of(f))
            facets.push_back(f.minus(face));
    return SimplicialComplex(c.vertex_count(), std::move(facets));
}

SimplicialComplex restriction(const SimplicialComplex& c, VarSet subset) {
    if (c.is_void())
        return c;
    std::vector<VarSet> facets;
    for (auto f : c.facets())
        facets.push_back(f & subset);
    return SimplicialComplex(c.vertex_count(), std::move(facets));
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
    if (m.empty())
        return 0;
    const std::size_t rows = m.size(), cols = m.front().size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[rank]);
        const std::uint64_t inv = inverse_mod(m[rank][col], p);
        for (auto& x : m[rank])
            x = mul_mod(x, inv, p);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0)
                continue;
            const std::uint64_t f = m[r][col];
            for (std::size_t k = col; k < cols; ++k)
                m[r][k] = (m[r][k] + p - mul_mod(f, m[rank][k], p)) % p;
        }
        ++rank;
    }
    return rank;
}

std::map<int, std::uint64_t> reduced_cohomology_ranks(const SimplicialComplex& c, std::uint64_t p) {
    std::map<int, std::uint64_t> out;
    if (!is_prime(p))
        throw InputError("cohomology coefficients need a prime characteristic");
    if (c.is_void())
        return out;
    const auto faces = c.faces_by_size(); // faces[k]: dimension k-1

    // boundary_rank[k] = rank of ∂: C(size k) -> C(size k-1), for k >= 1.
    std::vector<std::size_t> boundary_rank(faces.size() + 1, 0);
    for (std::size_t k = 1; k < faces.size(); ++k) {
        std::unordered_map<std::uint64_t, std::size_t> index;
        for (std::size_t r = 0; r < faces[k - 1].size(); ++r)
            index.emplace(faces[k - 1][r].bits(), r);
        std::vector<std::vector<std::uint64_t>> m(faces[k - 1].size(), std::vector<std::uint64_t>(faces[k].size(), 0));
        for (std::size_t col = 0; col < faces[k].size(); ++col) {
            const auto verts = faces[k][col].indices();
            for (std::size_t pos = 0; pos < verts.size(); ++pos) {
                const VarSet facet_face(faces[k][col].bits() & ~(std::uint64_t{1} << verts[pos]));
                m[index.at(facet_face.bits())][col] = (pos % 2 == 0) ? 1 % p : p - 1;
            }
        }
        boundary_rank[k] = rank_mod_p(std::move(m), p);
    }
    for (std::size_t k = 0; k < faces.size(); ++k) {
        const std::uint64_t rank = faces[k].size() - boundary_rank[k] - boundary_rank[k + 1];
        if (rank > 0)
            out.emplace(static_cast<int>(k) - 1, rank);
    }
    return out;
}

std::int64_t reduced_euler_characteristic(const SimplicialComplex& c) {
    std::int64_t chi = 0;
    const auto faces = c.faces_by_size();
    for (std::size_t k = 0; k < faces.size(); ++k) {
        const auto count = static_cast<std::int64_t>(faces[k].size());
        // size k means dimension k-1
        chi += (k % 2 == 1) ? count : -count;
    }
    return chi;
}

} // namespace fsr
