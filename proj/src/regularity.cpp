#include "fsr/regularity.hpp"

#include <algorithm>
#include <map>

#include "fsr/errors.hpp"

namespace fsr {

namespace {

constexpr std::size_t kMaxAlphaEnumeration = 20;

struct Term {
    VarSet alpha;
    std::size_t i;
    std::int64_t a;
};

void require_squarefree_proper(const StanleyReisnerRing& r, const MonomialIdeal& j) {
    if (j.ambient_n() != r.n())
        throw InputError("ideal does not live in the ambient ring");
    if (!j.is_squarefree())
        throw PreconditionError("regularity requires a squarefree monomial J");
    if (r.lift(j).is_unit())
        throw PreconditionError("J must be a proper ideal of R");
    if (r.n() > kMaxAlphaEnumeration)
        throw InputError("alpha enumeration is limited to " + std::to_string(kMaxAlphaEnumeration) + " variables");
}

// Every finite a_i(S/(J_α + J)) over α ∈ {0,1}^n.
std::vector<Term> collect_terms(const StanleyReisnerRing& r, const MonomialIdeal& j) {
    require_squarefree_proper(r, j);
    std::map<std::vector<ExponentVector>, AInvariantTable> cache;
    std::vector<Term> terms;
    const std::uint64_t subsets = std::uint64_t{1} << r.n();
    for (std::uint64_t bits = 0; bits < subsets; ++bits) {
        const VarSet alpha(bits);
        const auto quotient =
            sum(colon(r.defining_ideal(), ExponentVector::indicator(r.n(), alpha)), j);
        auto it = cache.find(quotient.generators());
        if (it == cache.end())
            it = cache.emplace(quotient.generators(), a_invariants_squarefree(quotient, r.p())).first;
        const auto& table = it->second;
        for (std::size_t i = 0; i < table.values.size(); ++i)
            if (table.values[i])
                terms.push_back({alpha, i, *table.values[i]});
    }
    if (terms.empty())
        throw InternalInconsistency("no nonvanishing local cohomology although R/J is nonzero");
    return terms;
}

} // namespace

std::optional<std::int64_t> AInvariantTable::max_value() const {
    std::optional<std::int64_t> best;
    for (const auto& v : values)
        if (v && (!best || *v > *best))
            best = v;
    return best;
}

std::optional<std::int64_t> AInvariantTable::regularity() const {
    std::optional<std::int64_t> best;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i]) {
            const auto v = *values[i] + static_cast<std::int64_t>(i);
            if (!best || v > *best)
                best = v;
        }
    return best;
}

AInvariantTable a_invariants_squarefree(const MonomialIdeal& q, std::uint64_t p) {
    if (!q.is_squarefree())
        throw PreconditionError("Hochster's formula needs a squarefree ideal");
    AInvariantTable table;
    if (q.is_unit()) {
        table.zero_ring = true;
        return table;
    }
    const auto delta = complex_of_ideal(q);
    table.dim = delta.max_face_size();
    table.values.assign(table.dim + 1, std::nullopt);
    // Smaller faces give larger degrees, so the first hit per index wins.
    for (const auto& level : delta.faces_by_size())
        for (auto face : level) {
            const auto size = static_cast<std::int64_t>(face.size());
            for (const auto& [degree, rank] : reduced_cohomology_ranks(link(delta, face), p)) {
                const std::int64_t i = degree + size + 1;
                if (i < 0 || i > static_cast<std::int64_t>(table.dim))
                    throw InternalInconsistency("Hochster contribution outside [0, dim]");
                auto& slot = table.values[static_cast<std::size_t>(i)];
                if (!slot || *slot < -size)
                    slot = -size;
            }
        }
    return table;
}

RegularityLimitReport regularity_limit(const StanleyReisnerRing& r, const MonomialIdeal& j, unsigned e_max) {
    const auto terms = collect_terms(r, j);
    RegularityLimitReport report;
    bool first = true;
    for (const auto& t : terms) {
        const std::int64_t v = t.a + static_cast<std::int64_t>(t.alpha.size());
        if (first || v > report.limit) {
            report.limit = v;
            report.argmax.clear();
            first = false;
        }
        if (v == report.limit)
            report.argmax.push_back({t.alpha, t.i, t.a});
    }
    report.argmax_uses_h0 =
        std::any_of(report.argmax.begin(), report.argmax.end(), [](const RegularityWitness& w) { return w.i == 0; });
    for (unsigned e = 0; e <= e_max; ++e)
        report.finite_levels.emplace_back(e, scaled_regularity_at_level(r, j, r.level(e)));
    return report;
}

RationalValue scaled_regularity_at_level(const StanleyReisnerRing& r, const MonomialIdeal& j,
                                         const FrobeniusLevel& level) {
    if (level.p() != r.p())
        throw InputError("Frobenius level characteristic differs from the ring's");
    const auto terms = collect_terms(r, j);
    const RationalValue q(mpq_class(level.q()));
    std::optional<RationalValue> best;
    for (const auto& t : terms) {
        // At q = 1 the only exponent 0 <= α <= q-1 is α = 0.
        if (level.e() == 0 && !t.alpha.empty())
            continue;
        const RationalValue size(static_cast<std::int64_t>(t.alpha.size()));
        const RationalValue v = RationalValue(t.a) + size * (q - RationalValue(1)) / q +
                                RationalValue(static_cast<std::int64_t>(t.i)) / q;
        if (!best || *best < v)
            best = v;
    }
    return *best;
}

} // namespace fsr
