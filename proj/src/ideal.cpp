#include "fsr/ideal.hpp"

#include <algorithm>

#include "fsr/errors.hpp"

namespace fsr {

namespace {

void require_same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.ambient_n() != b.ambient_n())
        throw InputError("ideals live in rings with " + std::to_string(a.ambient_n()) + " and " +
                         std::to_string(b.ambient_n()) + " variables");
}

} // namespace

MonomialIdeal normalize(std::vector<ExponentVector> gens, std::size_t n) {
    for (const auto& g : gens)
        if (g.size() != n)
            throw InputError("generator of length " + std::to_string(g.size()) + " in a ring with " +
                             std::to_string(n) + " variables");
    // Low degree first: a generator can only be divided by one of no larger degree.
    std::sort(gens.begin(), gens.end(), [](const ExponentVector& a, const ExponentVector& b) {
        const auto da = a.degree(), db = b.degree();
        return da != db ? da < db : a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<ExponentVector> minimal;
    for (auto& g : gens) {
        const bool redundant =
            std::any_of(minimal.begin(), minimal.end(), [&](const ExponentVector& m) { return m.divides(g); });
        if (!redundant)
            minimal.push_back(std::move(g));
    }
    std::sort(minimal.begin(), minimal.end());
    MonomialIdeal out(n);
    out.gens_ = std::move(minimal);
    return out;
}

MonomialIdeal MonomialIdeal::unit(std::size_t n) { return normalize({ExponentVector(n)}, n); }

MonomialIdeal MonomialIdeal::variables(std::size_t n, VarSet vars) {
    std::vector<ExponentVector> gens;
    for (auto i : vars.indices()) {
        if (i >= n)
            throw InputError("variable index out of range");
        gens.push_back(ExponentVector::unit(n, i));
    }
    return normalize(std::move(gens), n);
}

MonomialIdeal MonomialIdeal::principal(const ExponentVector& g) { return normalize({g}, g.size()); }

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const ExponentVector& g) { return g.is_squarefree(); });
}

Exponent MonomialIdeal::max_exponent() const {
    Exponent m = 0;
    for (const auto& g : gens_)
        m = std::max(m, g.max_entry());
    return m;
}

bool MonomialIdeal::contains(const ExponentVector& v) const {
    if (v.size() != n_)
        throw InputError("monomial of length " + std::to_string(v.size()) + " tested against an ideal in " +
                         std::to_string(n_) + " variables");
    return std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& g) { return g.divides(v); });
}

bool MonomialIdeal::contains(const Monomial& m) const { return contains(m.exponents()); }

bool contains(const MonomialIdeal& ideal, const Monomial& m) { return ideal.contains(m); }

bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ambient(a, b);
    return std::all_of(a.generators().begin(), a.generators().end(),
                       [&](const ExponentVector& g) { return b.contains(g); });
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ambient(a, b);
    std::vector<ExponentVector> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return normalize(std::move(gens), a.ambient_n());
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ambient(a, b);
    std::vector<ExponentVector> gens;
    gens.reserve(a.mu() * b.mu());
    for (const auto& x : a.generators())
        for (const auto& y : b.generators())
            gens.push_back(x + y);
    return normalize(std::move(gens), a.ambient_n());
}

MonomialIdeal power(const MonomialIdeal& a, std::size_t m) {
    MonomialIdeal result = MonomialIdeal::unit(a.ambient_n());
    for (std::size_t i = 0; i < m; ++i)
        result = product(result, a);
    return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ambient(a, b);
    std::vector<ExponentVector> gens;
    gens.reserve(a.mu() * b.mu());
    for (const auto& x : a.generators())
        for (const auto& y : b.generators())
            gens.push_back(lcm(x, y));
    return normalize(std::move(gens), a.ambient_n());
}

MonomialIdeal colon(const MonomialIdeal& a, const ExponentVector& alpha) {
    if (alpha.size() != a.ambient_n())
        throw InputError("colon by a monomial of the wrong length");
    // For squarefree A this is x^{Supp(λ) \ Supp(α)} over the generators x^λ.
    std::vector<ExponentVector> gens;
    gens.reserve(a.mu());
    for (const auto& g : a.generators())
        gens.push_back(g.saturating_minus(alpha));
    return normalize(std::move(gens), a.ambient_n());
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ambient(a, b);
    if (b.is_zero())
        throw InputError("colon by the zero ideal is undefined");
    MonomialIdeal result = colon(a, b.generators().front());
    for (std::size_t i = 1; i < b.generators().size(); ++i)
        result = intersect(result, colon(a, b.generators()[i]));
    return result;
}

MonomialIdeal frobenius_power(const MonomialIdeal& a, Exponent q) {
    std::vector<ExponentVector> gens;
    gens.reserve(a.mu());
    for (const auto& g : a.generators())
        gens.push_back(g.scaled(q));
    return normalize(std::move(gens), a.ambient_n());
}

MonomialIdeal frobenius_power(const MonomialIdeal& a, const FrobeniusLevel& level) {
    return frobenius_power(a, level.q_exponent());
}

MonomialIdeal radical(const MonomialIdeal& a) {
    std::vector<ExponentVector> gens;
    gens.reserve(a.mu());
    for (const auto& g : a.generators())
        gens.push_back(ExponentVector::indicator(a.ambient_n(), g.support()));
    return normalize(std::move(gens), a.ambient_n());
}

bool contains_radical(const MonomialIdeal& a, const ExponentVector& v) {
    if (v.size() != a.ambient_n())
        throw InputError("monomial of the wrong length");
    const VarSet s = v.support();
    return std::any_of(a.generators().begin(), a.generators().end(),
                       [&](const ExponentVector& g) { return g.support().subset_of(s); });
}

MonomialIdeal squarefree_part(const MonomialIdeal& a) {
    std::vector<ExponentVector> gens;
    for (const auto& g : a.generators())
        if (g.is_squarefree())
            gens.push_back(g);
    return normalize(std::move(gens), a.ambient_n());
}

} // namespace fsr
