#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "fsr/ideal.hpp"
#include "fsr/ring.hpp"

namespace fsr::test {

inline MonomialIdeal ideal(std::size_t n, std::vector<ExponentVector> gens) { return normalize(std::move(gens), n); }

inline StanleyReisnerRing ring(std::size_t n, std::uint64_t p, std::vector<ExponentVector> relations) {
    return StanleyReisnerRing(n, p, ideal(n, std::move(relations)));
}

inline MonomialIdeal face(std::size_t n, std::initializer_list<std::size_t> vars) {
    return MonomialIdeal::variables(n, VarSet::of(vars));
}

// Visits every exponent vector with entries in [0, bound).
inline void for_each_in_box(std::size_t n, Exponent bound, const std::function<void(const ExponentVector&)>& f) {
    ExponentVector v(n);
    for (;;) {
        f(v);
        std::size_t k = 0;
        while (k < n && v[k] + 1 == bound)
            v[k++] = 0;
        if (k == n)
            return;
        ++v[k];
    }
}

// Naive divisibility test kept apart from MonomialIdeal::contains.
inline bool divides_some(const std::vector<ExponentVector>& gens, const ExponentVector& w) {
    for (const auto& g : gens) {
        bool ok = true;
        for (std::size_t i = 0; i < w.size(); ++i)
            ok = ok && g[i] <= w[i];
        if (ok)
            return true;
    }
    return false;
}

// Minimal face primes containing A, by scanning all subsets.
inline std::vector<VarSet> naive_minimal_primes(const MonomialIdeal& a) {
    const std::size_t n = a.ambient_n();
    std::vector<VarSet> covers;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        const VarSet s(bits);
        bool hits = true;
        for (const auto& g : a.generators())
            hits = hits && g.support().intersects(s);
        if (hits)
            covers.push_back(s);
    }
    std::vector<VarSet> minimal;
    for (auto s : covers) {
        bool is_min = true;
        for (auto t : covers)
            is_min = is_min && !(t != s && t.subset_of(s));
        if (is_min)
            minimal.push_back(s);
    }
    return minimal;
}

class Random {
public:
    explicit Random(std::uint32_t seed) : gen_(seed) {}

    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(gen_);
    }
    bool coin() { return uniform(0, 1) == 1; }

    ExponentVector vector(std::size_t n, Exponent max_entry, bool nonzero = true) {
        for (;;) {
            ExponentVector v(n);
            for (std::size_t i = 0; i < n; ++i)
                v[i] = uniform(0, max_entry);
            if (!nonzero || !v.is_zero())
                return v;
        }
    }

    MonomialIdeal monomial_ideal(std::size_t n, std::size_t max_gens, Exponent max_entry) {
        std::vector<ExponentVector> gens;
        const auto count = uniform(1, max_gens);
        for (std::size_t k = 0; k < count; ++k)
            gens.push_back(vector(n, max_entry));
        return normalize(std::move(gens), n);
    }

    // Squarefree, proper, possibly zero.
    MonomialIdeal squarefree_ideal(std::size_t n, std::size_t max_gens, bool allow_zero = true) {
        if (allow_zero && uniform(0, 3) == 0)
            return MonomialIdeal::zero(n);
        return monomial_ideal(n, max_gens, 1);
    }

    StanleyReisnerRing sr_ring(std::size_t n, std::uint64_t p, std::size_t max_gens) {
        // Relations of degree >= 2 keep every variable alive in some quotient.
        for (;;) {
            auto i = squarefree_ideal(n, max_gens);
            bool ok = true;
            for (const auto& g : i.generators())
                ok = ok && g.degree() >= 2;
            if (ok)
                return StanleyReisnerRing(n, p, i);
        }
    }

    std::mt19937& engine() { return gen_; }

private:
    std::mt19937 gen_;
};

} // namespace fsr::test
