#include "fsr/threshold.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>

#include "fsr/errors.hpp"
#include "fsr/simplex.hpp"

namespace fsr {

namespace {

bool in_frobenius_power(const MonomialIdeal& j, Exponent q, const ExponentVector& w) {
    for (const auto& v : j.generators()) {
        bool divides = true;
        for (std::size_t i = 0; i < w.size() && divides; ++i)
            divides = checked_mul(v[i], q) <= w[i];
        if (divides)
            return true;
    }
    return false;
}

void require_lp_radical(const std::vector<ExponentVector>& a_gens, const std::vector<ExponentVector>& j_gens) {
    for (const auto& u : a_gens) {
        const VarSet su = u.support();
        const bool ok = std::any_of(j_gens.begin(), j_gens.end(),
                                    [&](const ExponentVector& v) { return v.support().subset_of(su); });
        if (!ok)
            throw PreconditionError("a is not contained in the radical of J");
    }
}

lp::Problem selection_problem(const std::vector<ExponentVector>& a_gens, const std::vector<Exponent>& bounds) {
    lp::Problem prob;
    prob.c.assign(a_gens.size(), 1);
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        if (bounds[i] == 0)
            continue;
        std::vector<mpq_class> row;
        row.reserve(a_gens.size());
        for (const auto& u : a_gens)
            row.emplace_back(static_cast<unsigned long>(u[i]));
        prob.a.push_back(std::move(row));
        prob.b.emplace_back(static_cast<unsigned long>(bounds[i]));
    }
    return prob;
}

RationalValue solve_selection(const std::vector<ExponentVector>& a_gens, const std::vector<Exponent>& bounds) {
    const auto result = lp::maximize(selection_problem(a_gens, bounds));
    if (result.status == lp::Status::unbounded)
        throw PreconditionError("selection LP is unbounded: a is not contained in the radical of J");
    if (result.status == lp::Status::infeasible)
        throw InternalInconsistency("selection LP with nonnegative bounds reported infeasible");
    return result.value;
}

} // namespace

void require_in_radical(const StanleyReisnerRing& r, const MonomialIdeal& a, const MonomialIdeal& j) {
    if (a.ambient_n() != r.n() || j.ambient_n() != r.n())
        throw InputError("ideal does not live in the ambient ring");
    const MonomialIdeal jr = r.lift(j);
    if (jr.is_unit())
        throw PreconditionError("J is the unit ideal of R");
    for (const auto& g : a.generators())
        if (!contains_radical(jr, g))
            throw PreconditionError("a is not contained in the radical of J + I");
}

std::size_t generator_count_in_ring(const StanleyReisnerRing& r, const MonomialIdeal& a) {
    return static_cast<std::size_t>(std::count_if(a.generators().begin(), a.generators().end(), [&](const ExponentVector& g) {
        return !r.defining_ideal().contains(g);
    }));
}

std::uint64_t regular_nu(const MonomialIdeal& a, const MonomialIdeal& j, Exponent q) {
    if (a.ambient_n() != j.ambient_n())
        throw InputError("ideals live in different rings");
    if (j.is_unit())
        throw PreconditionError("J is the unit ideal");
    if (a.is_zero())
        return 0;
    require_lp_radical(a.generators(), j.generators());

    Exponent bound = a.ambient_n();
    for (const auto& v : j.generators())
        bound = checked_add(bound, checked_mul(q, v.max_entry()));

    // Survivors: minimal generators of a^m outside J^{[q]}. Once a product lies
    // in J^{[q]} so do all its multiples, so only survivors are extended.
    std::vector<ExponentVector> frontier{ExponentVector(a.ambient_n())};
    std::uint64_t m = 0;
    for (;;) {
        std::vector<ExponentVector> next;
        for (const auto& s : frontier)
            for (const auto& u : a.generators()) {
                auto w = s + u;
                if (!in_frobenius_power(j, q, w))
                    next.push_back(std::move(w));
            }
        if (next.empty())
            return m;
        ++m;
        if (m > bound)
            throw InternalInconsistency("nu search exceeded its bound " + std::to_string(bound));
        frontier = normalize(std::move(next), a.ambient_n()).generators();
    }
}

NuRecord nu_value(const StanleyReisnerRing& r, const MonomialIdeal& a, const MonomialIdeal& j,
                  const FrobeniusLevel& level) {
    require_in_radical(r, a, j);
    if (level.p() != r.p())
        throw InputError("Frobenius level characteristic differs from the ring's");
    const Exponent q = level.q_exponent();
    NuRecord rec{level, 0, RationalValue(0), true, {}};
    for (const auto& prime : r.minimal_primes()) {
        const auto a_bar = image_mod_face_prime(a, prime);
        PrimeNu contribution{prime, 0, a_bar.is_zero()};
        if (!contribution.zero_image) {
            contribution.nu = regular_nu(a_bar, image_mod_face_prime(j, prime), q);
            rec.degenerate = false;
        }
        rec.nu = std::max(rec.nu, contribution.nu);
        rec.per_prime.push_back(contribution);
    }
    rec.scaled = RationalValue(mpq_class(mpz_class(static_cast<unsigned long>(rec.nu)), level.q()));
    return rec;
}

RationalValue SelectionLP::optimum() const {
    if (selection.size() != j_gens.size())
        throw InputError("selection must pick one coordinate per J-generator");
    const std::size_t n = j_gens.empty() ? 0 : j_gens.front().size();
    std::vector<Exponent> bounds(n, 0);
    for (std::size_t k = 0; k < j_gens.size(); ++k) {
        const auto i = selection[k];
        if (i >= n || j_gens[k][i] == 0)
            throw InputError("selected coordinate is outside the generator's support");
        bounds[i] = bounds[i] == 0 ? j_gens[k][i] : std::min(bounds[i], j_gens[k][i]);
    }
    return solve_selection(a_gens, bounds);
}

RationalValue disjunctive_lp_value(const std::vector<ExponentVector>& a_gens,
                                   const std::vector<ExponentVector>& j_gens) {
    if (a_gens.empty() || j_gens.empty())
        throw PreconditionError("disjunctive LP needs nonzero a and J");
    const std::size_t n = j_gens.front().size();
    for (const auto& g : a_gens)
        if (g.is_zero() || g.size() != n)
            throw PreconditionError("a must be a proper ideal of the same ring");
    for (const auto& v : j_gens)
        if (v.is_zero() || v.size() != n)
            throw PreconditionError("J must be a proper ideal of the same ring");
    require_lp_radical(a_gens, j_gens);

    // Selections collapse to per-coordinate bounds (0 = unconstrained); many
    // selections give the same LP.
    std::set<std::vector<Exponent>> distinct;
    std::vector<Exponent> bounds(n, 0);
    auto enumerate = [&](auto&& self, std::size_t k) -> void {
        if (k == j_gens.size()) {
            distinct.insert(bounds);
            return;
        }
        for (auto i : j_gens[k].support().indices()) {
            const Exponent saved = bounds[i];
            bounds[i] = saved == 0 ? j_gens[k][i] : std::min(saved, j_gens[k][i]);
            self(self, k + 1);
            bounds[i] = saved;
        }
    };
    enumerate(enumerate, 0);

    std::optional<RationalValue> best;
    for (const auto& b : distinct) {
        auto v = solve_selection(a_gens, b);
        if (!best || *best < v)
            best = v;
    }
    return *best;
}

FThresholdResult f_threshold(const StanleyReisnerRing& r, const MonomialIdeal& a, const MonomialIdeal& j) {
    require_in_radical(r, a, j);
    FThresholdResult out{RationalValue(0), true, {}};
    for (const auto& prime : r.minimal_primes()) {
        const auto a_bar = image_mod_face_prime(a, prime);
        PrimeThreshold contribution{prime, RationalValue(0), a_bar.is_zero()};
        if (!contribution.zero_image) {
            const auto j_bar = image_mod_face_prime(j, prime);
            contribution.value = disjunctive_lp_value(a_bar.generators(), j_bar.generators());
            out.degenerate = false;
        }
        out.value = max(out.value, contribution.value);
        out.per_prime.push_back(contribution);
    }
    return out;
}

ConvergenceTable convergence_table(const StanleyReisnerRing& r, const MonomialIdeal& a, const MonomialIdeal& j,
                                   unsigned e_max) {
    ConvergenceTable table;
    table.mu = generator_count_in_ring(r, a);
    for (unsigned e = 0; e <= e_max; ++e)
        table.rows.push_back(nu_value(r, a, j, r.level(e)));

    const RationalValue mu(static_cast<std::int64_t>(table.mu));
    for (std::size_t e = 0; e + 1 < table.rows.size(); ++e) {
        const auto& cur = table.rows[e];
        const auto& nxt = table.rows[e + 1];
        if (RationalValue(static_cast<std::int64_t>(r.p())) * RationalValue(static_cast<std::int64_t>(cur.nu)) >
            RationalValue(static_cast<std::int64_t>(nxt.nu)))
            throw InternalInconsistency("p*nu(p^e) > nu(p^(e+1)) at e = " + std::to_string(e));
    }
    for (std::size_t e = 0; e < table.rows.size(); ++e)
        for (std::size_t f = e + 1; f < table.rows.size(); ++f) {
            const auto gap = table.rows[f].scaled - table.rows[e].scaled;
            const auto allowed = mu / RationalValue(mpq_class(table.rows[e].level.q()));
            if (gap < RationalValue(0) || gap > allowed)
                throw InternalInconsistency("nu/q gap bound violated between e = " + std::to_string(e) +
                                            " and e = " + std::to_string(f));
        }
    const auto& last = table.rows.back();
    table.lower = last.scaled;
    table.upper = last.scaled + mu / RationalValue(mpq_class(last.level.q()));
    return table;
}

} // namespace fsr
