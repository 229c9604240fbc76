#include "fsr/cartier.hpp"

#include <algorithm>
#include <string>

#include "fsr/errors.hpp"
#include "fsr/threshold.hpp"

namespace fsr {

namespace {

constexpr std::size_t kMaxSupportEnumeration = 20;

void require_enumerable(std::size_t n) {
    if (n > kMaxSupportEnumeration)
        throw InputError("support enumeration is limited to " + std::to_string(kMaxSupportEnumeration) +
                         " variables");
}

void require_proper(const StanleyReisnerRing& r, const MonomialIdeal& j) {
    if (j.ambient_n() != r.n())
        throw InputError("ideal does not live in the ambient ring");
    if (r.lift(j).is_unit())
        throw PreconditionError("J must be a proper ideal of R");
}

// x^θ · K ⊆ target
bool shifted_subset(const ExponentVector& theta, const MonomialIdeal& k, const MonomialIdeal& target) {
    return std::all_of(k.generators().begin(), k.generators().end(),
                       [&](const ExponentVector& g) { return target.contains(theta + g); });
}

RationalValue ratio(std::uint64_t num, const mpz_class& den) {
    return RationalValue(mpq_class(mpz_class(static_cast<unsigned long>(num)), den));
}

} // namespace

MonomialIdeal compatibility_closure(const StanleyReisnerRing& r, VarSet support) {
    const auto& i = r.defining_ideal();
    if (i.is_zero())
        return MonomialIdeal::unit(r.n());
    return colon(i, colon(i, ExponentVector::indicator(r.n(), support)));
}

bool contraction_contains(const ContractionQuery& query, const Monomial& m) {
    const auto& r = query.ring;
    require_proper(r, query.j);
    if (m.ambient() != r.n())
        throw InputError("monomial does not live in the ambient ring");
    if (query.level.p() != r.p())
        throw InputError("Frobenius level characteristic differs from the ring's");
    const Exponent q = query.level.q_exponent();
    ExponentVector theta(r.n()), alpha(r.n());
    for (std::size_t i = 0; i < r.n(); ++i) {
        theta[i] = m.exponents()[i] / q;
        alpha[i] = m.exponents()[i] % q;
    }
    // Only Supp(α) matters for (I : x^α).
    return shifted_subset(theta, compatibility_closure(r, alpha.support()), r.lift(query.j));
}

MonomialIdeal contraction_ideal(const ContractionQuery& query) {
    const auto& r = query.ring;
    require_proper(r, query.j);
    if (query.level.p() != r.p())
        throw InputError("Frobenius level characteristic differs from the ring's");
    const Exponent q = query.level.q_exponent();
    const MonomialIdeal target = r.lift(query.j);
    if (q == 1)
        return target;
    require_enumerable(r.n());
    std::vector<ExponentVector> gens;
    const std::uint64_t subsets = std::uint64_t{1} << r.n();
    for (std::uint64_t bits = 0; bits < subsets; ++bits) {
        const VarSet support(bits);
        const auto indicator = ExponentVector::indicator(r.n(), support);
        const auto thetas = colon(target, compatibility_closure(r, support));
        for (const auto& theta : thetas.generators())
            gens.push_back(theta.scaled(q) + indicator);
    }
    return normalize(std::move(gens), r.n());
}

CompatibilityReport is_uniformly_compatible(const StanleyReisnerRing& r, const MonomialIdeal& c) {
    if (c.ambient_n() != r.n())
        throw InputError("ideal does not live in the ambient ring");
    if (!c.is_squarefree())
        throw PreconditionError("uniformly F-compatible ideals are squarefree; got a non-squarefree ideal");
    require_proper(r, c);
    const MonomialIdeal target = r.lift(c);
    CompatibilityReport report{true, {}};
    for (const auto& g : c.generators()) {
        auto closure = compatibility_closure(r, g.support());
        const bool closed = is_subset(closure, target);
        report.compatible = report.compatible && closed;
        report.witnesses.push_back({g, std::move(closure), closed});
    }
    return report;
}

CoreResult cartier_core(const StanleyReisnerRing& r, const MonomialIdeal& j) {
    require_proper(r, j);
    require_enumerable(r.n());
    const MonomialIdeal lifted = r.lift(j);

    struct Candidate {
        VarSet support;
        MonomialIdeal closure;
    };
    std::vector<Candidate> alive;
    const std::uint64_t subsets = std::uint64_t{1} << r.n();
    for (std::uint64_t bits = 0; bits < subsets; ++bits) {
        const VarSet s(bits);
        if (lifted.contains(ExponentVector::indicator(r.n(), s)))
            alive.push_back({s, compatibility_closure(r, s)});
    }

    auto ideal_of = [&](const std::vector<Candidate>& set) {
        std::vector<ExponentVector> gens;
        gens.reserve(set.size());
        for (const auto& c : set)
            gens.push_back(ExponentVector::indicator(r.n(), c.support));
        return normalize(std::move(gens), r.n());
    };

    // Removing x^N when its closure escapes C + I is monotone in C, so the
    // iteration reaches the greatest fixpoint.
    CoreResult result{ideal_of(alive), {}, 0};
    for (;;) {
        ++result.rounds;
        const MonomialIdeal target = sum(result.core, r.defining_ideal());
        std::vector<Candidate> kept;
        for (auto& c : alive)
            if (is_subset(c.closure, target))
                kept.push_back(std::move(c));
        const bool stable = kept.size() == alive.size();
        alive = std::move(kept);
        result.core = ideal_of(alive);
        if (stable)
            break;
    }
    for (const auto& g : result.core.generators())
        result.certificate.push_back({g, compatibility_closure(r, g.support()), true});
    return result;
}

std::uint64_t b_value(const StanleyReisnerRing& r, const MonomialIdeal& a, const MonomialIdeal& j,
                      const FrobeniusLevel& level) {
    require_in_radical(r, a, j);
    const auto nu = nu_value(r, a, j, level).nu;
    const MonomialIdeal je = contraction_ideal(ContractionQuery{r, j, level});
    if (a.is_zero())
        return 0;
    std::vector<ExponentVector> frontier{ExponentVector(r.n())};
    std::uint64_t t = 0;
    for (;;) {
        std::vector<ExponentVector> next;
        for (const auto& s : frontier)
            for (const auto& u : a.generators()) {
                auto w = s + u;
                if (!je.contains(w))
                    next.push_back(std::move(w));
            }
        if (next.empty())
            break;
        ++t;
        if (t > nu)
            throw InternalInconsistency("b-value exceeds nu although J^{[q]} ⊆ J_e");
        frontier = normalize(std::move(next), r.n()).generators();
    }
    return t;
}

CtRecord cartier_threshold(const StanleyReisnerRing& r, const MonomialIdeal& a, const MonomialIdeal& j) {
    if (a.ambient_n() != r.n() || j.ambient_n() != r.n())
        throw InputError("ideal does not live in the ambient ring");
    const MonomialIdeal lifted = r.lift(j);
    if (lifted.is_unit())
        throw PreconditionError("J must be a proper ideal of R");
    if (!(radical(lifted) == lifted))
        throw PreconditionError("Cartier threshold requires a radical J; for general monomial J use "
                                "contraction_ideal at a fixed level");
    if (!is_subset(a, lifted))
        throw PreconditionError("a is not contained in J");

    CtRecord record{RationalValue(0), {}};
    for (const auto& prime : minimal_primes(lifted).primes) {
        auto loc = localize_at_face_prime(r, prime, {a});
        const MonomialIdeal maximal = loc.ring.maximal_ideal();
        auto core = cartier_core(loc.ring, maximal).core;
        PrimeCartier entry{prime,    RationalValue(0), loc.ring, loc.extras.front(), core, false, std::nullopt,
                           loc.kept_variables};
        entry.a_in_core = is_subset(entry.localized_a, core);
        if (!entry.a_in_core) {
            StanleyReisnerRing quotient(loc.ring.n(), loc.ring.p(), core);
            entry.value = f_threshold(quotient, entry.localized_a, maximal).value;
            entry.quotient = std::move(quotient);
        }
        record.value = max(record.value, entry.value);
        record.per_prime.push_back(std::move(entry));
    }
    return record;
}

SandwichTable ct_sandwich_table(const StanleyReisnerRing& r, const MonomialIdeal& a, const MonomialIdeal& j,
                                unsigned e_max) {
    SandwichTable table;
    table.ct = cartier_threshold(r, a, j).value;
    table.c_threshold = f_threshold(r, a, j).value;
    table.mu = generator_count_in_ring(r, a);
    const RationalValue mu(static_cast<std::int64_t>(table.mu));

    RationalValue previous_c = table.c_threshold;
    RationalValue previous_b(0);
    for (unsigned e = 1; e <= e_max; ++e) {
        const auto level = r.level(e);
        SandwichRow row;
        row.e = e;
        row.contraction = contraction_ideal(ContractionQuery{r, j, level});
        if (row.contraction.is_unit())
            throw PreconditionError("J_e is not proper");
        row.b = b_value(r, a, j, level);
        row.scaled_b = ratio(row.b, level.q());
        row.c_contraction = f_threshold(r, a, row.contraction).value;
        row.scaled_c = row.c_contraction / RationalValue(mpq_class(level.q()));

        const auto where = " at e = " + std::to_string(e);
        const auto gap = row.scaled_c - row.scaled_b;
        if (gap < RationalValue(0) || gap > mu / RationalValue(mpq_class(level.q())))
            throw InternalInconsistency("c^{J_e}/q - b/q outside [0, mu/q]" + where);
        if (row.scaled_c > previous_c)
            throw InternalInconsistency("c^{J_e}/q increased" + where);
        if (row.scaled_b < previous_b)
            throw InternalInconsistency("b/q decreased" + where);
        if (table.ct < row.scaled_b || table.ct > row.scaled_c)
            throw InternalInconsistency("ct outside [b/q, c^{J_e}/q]" + where);
        previous_c = row.scaled_c;
        previous_b = row.scaled_b;
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace fsr
