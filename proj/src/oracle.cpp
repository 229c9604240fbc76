#include "fsr/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "fsr/complex.hpp"
#include "fsr/errors.hpp"

namespace fsr {

namespace {

using Vec = std::vector<Exponent>;

// x^w divisible by x^(factor·g) for some generator g.
bool divisible_by_any(const Vec& w, const MonomialIdeal& ideal, Exponent factor) {
    for (const auto& g : ideal.generators()) {
        bool ok = true;
        for (std::size_t i = 0; i < w.size() && ok; ++i)
            ok = g[i] * factor <= w[i];
        if (ok)
            return true;
    }
    return false;
}

bool in_sum(const Vec& w, const MonomialIdeal& j, Exponent q, const MonomialIdeal& i) {
    return divisible_by_any(w, j, q) || divisible_by_any(w, i, 1);
}

std::uint64_t parse_number(const std::string& key, const std::string& value) {
    if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw InputError("oracle budget: malformed value '" + value + "' for " + key);
    return std::stoull(value);
}

void require_same_ring(const StanleyReisnerRing& r, const MonomialIdeal& x) {
    if (x.ambient_n() != r.n())
        throw InputError("ideal does not live in the ambient ring");
}

} // namespace

OracleBudget OracleBudget::parse(const std::string& text) {
    OracleBudget b;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw InputError("oracle budget: expected key=value, got '" + item + "'");
        const auto key = item.substr(0, eq);
        const auto value = parse_number(key, item.substr(eq + 1));
        if (key == "max_n")
            b.max_n = value;
        else if (key == "max_p")
            b.max_p = value;
        else if (key == "max_e")
            b.max_e = static_cast<unsigned>(value);
        else if (key == "max_degree")
            b.max_degree = value;
        else
            throw InputError("oracle budget: unknown key '" + key + "'");
    }
    return b;
}

OracleBudget OracleBudget::from_env() {
    const char* text = std::getenv("FSR_ORACLE_BUDGET");
    return text ? parse(text) : OracleBudget{};
}

void OracleBudget::check(const StanleyReisnerRing& r, const FrobeniusLevel& level) const {
    if (r.n() > max_n)
        throw BudgetExceeded("oracle budget: n = " + std::to_string(r.n()) + " exceeds max_n = " +
                             std::to_string(max_n));
    if (level.p() > max_p)
        throw BudgetExceeded("oracle budget: p = " + std::to_string(level.p()) + " exceeds max_p = " +
                             std::to_string(max_p));
    if (level.e() > max_e)
        throw BudgetExceeded("oracle budget: e = " + std::to_string(level.e()) + " exceeds max_e = " +
                             std::to_string(max_e));
}

std::uint64_t bf_nu(const StanleyReisnerRing& r, const MonomialIdeal& a, const MonomialIdeal& j,
                    const FrobeniusLevel& level, const OracleBudget& budget) {
    require_same_ring(r, a);
    require_same_ring(r, j);
    budget.check(r, level);
    if (level.p() != r.p())
        throw InputError("Frobenius level characteristic differs from the ring's");
    const Exponent q = level.q_exponent();
    const auto& i = r.defining_ideal();
    if (in_sum(Vec(r.n(), 0), j, q, i))
        throw PreconditionError("J is the unit ideal of R");

    // products[m] = {u_1 + ... + u_m}; a^0 = (1) is never inside a proper ideal.
    std::set<Vec> products{Vec(r.n(), 0)};
    std::uint64_t last_failing = 0;
    for (std::uint64_t m = 1;; ++m) {
        if (m > budget.max_degree)
            throw BudgetExceeded("oracle budget: power " + std::to_string(m) + " exceeds max_degree = " +
                                 std::to_string(budget.max_degree));
        std::set<Vec> next;
        for (const auto& s : products)
            for (const auto& u : a.generators()) {
                Vec w = s;
                for (std::size_t k = 0; k < w.size(); ++k)
                    w[k] += u[k];
                next.insert(std::move(w));
            }
        const bool escapes = std::any_of(next.begin(), next.end(), [&](const Vec& w) { return !in_sum(w, j, q, i); });
        if (!escapes)
            return last_failing;
        last_failing = m;
        products = std::move(next);
    }
}

bool bf_contraction_trace(const StanleyReisnerRing& r, const MonomialIdeal& j, const FrobeniusLevel& level,
                          const Monomial& m, const OracleBudget& budget) {
    require_same_ring(r, j);
    if (m.ambient() != r.n())
        throw InputError("monomial does not live in the ambient ring");
    budget.check(r, level);
    if (level.p() != r.p())
        throw InputError("Frobenius level characteristic differs from the ring's");
    const Exponent q = level.q_exponent();
    const auto& i = r.defining_ideal();
    const std::size_t n = r.n();
    const auto& beta = m.exponents();

    // x^η ∈ (I^{[q]} : I): x^η·g ∈ I^{[q]} for every generator g of I.
    auto in_colon = [&](const Vec& eta) {
        for (const auto& g : i.generators()) {
            Vec w = eta;
            for (std::size_t k = 0; k < n; ++k)
                w[k] += g[k];
            if (!divisible_by_any(w, i, q))
                return false;
        }
        return true;
    };

    // η_k ≡ q-1-β_k (mod q). The colon has generators with coordinates <= q,
    // so every admissible η dominates one with η_k < 2q, and δ only grows.
    Vec residue(n);
    for (std::size_t k = 0; k < n; ++k)
        residue[k] = (q - 1 - beta[k] % q) % q;
    Vec eta(n);
    const std::uint64_t choices = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < choices; ++mask) {
        for (std::size_t k = 0; k < n; ++k)
            eta[k] = residue[k] + (((mask >> k) & 1U) ? q : 0);
        if (!in_colon(eta))
            continue;
        Vec delta(n);
        for (std::size_t k = 0; k < n; ++k)
            delta[k] = (eta[k] + beta[k] - (q - 1)) / q;
        if (!in_sum(delta, j, 1, i))
            return false;
    }
    return true;
}

std::uint64_t bf_b_value(const StanleyReisnerRing& r, const MonomialIdeal& a, const MonomialIdeal& j,
                         const FrobeniusLevel& level, const OracleBudget& budget) {
    require_same_ring(r, a);
    budget.check(r, level);
    if (bf_contraction_trace(r, j, level, Monomial(ExponentVector(r.n())), budget))
        throw PreconditionError("J_e is the unit ideal");
    std::set<Vec> products{Vec(r.n(), 0)};
    std::uint64_t last_failing = 0;
    for (std::uint64_t m = 1;; ++m) {
        if (m > budget.max_degree)
            throw BudgetExceeded("oracle budget: power " + std::to_string(m) + " exceeds max_degree = " +
                                 std::to_string(budget.max_degree));
        std::set<Vec> next;
        for (const auto& s : products)
            for (const auto& u : a.generators()) {
                Vec w = s;
                for (std::size_t k = 0; k < w.size(); ++k)
                    w[k] += u[k];
                next.insert(std::move(w));
            }
        const bool escapes = std::any_of(next.begin(), next.end(), [&](const Vec& w) {
            return !bf_contraction_trace(r, j, level, Monomial(ExponentVector(w)), budget);
        });
        if (!escapes)
            return last_failing;
        last_failing = m;
        products = std::move(next);
    }
}

std::pair<RationalValue, RationalValue> bf_threshold_bracket(const StanleyReisnerRing& r, const MonomialIdeal& a,
                                                             const MonomialIdeal& j, unsigned e,
                                                             const OracleBudget& budget) {
    const auto level = r.level(e);
    const auto nu = bf_nu(r, a, j, level, budget);
    std::int64_t mu = 0;
    for (const auto& g : a.generators())
        if (!divisible_by_any(g.entries(), r.defining_ideal(), 1))
            ++mu;
    const RationalValue q(mpq_class(level.q()));
    const RationalValue low = RationalValue(static_cast<std::int64_t>(nu)) / q;
    return {low, low + RationalValue(mu) / q};
}

std::int64_t bf_regularity(const StanleyReisnerRing& r, const MonomialIdeal& j, const FrobeniusLevel& level,
                           const OracleBudget& budget) {
    require_same_ring(r, j);
    budget.check(r, level);
    if (level.p() != r.p())
        throw InputError("Frobenius level characteristic differs from the ring's");
    const Exponent q = level.q_exponent();
    const auto& i = r.defining_ideal();
    const std::size_t n = r.n();
    if (in_sum(Vec(n, 0), j, q, i))
        throw PreconditionError("J is the unit ideal of R");

    Vec top(n, 0);
    for (const auto& g : i.generators())
        for (std::size_t k = 0; k < n; ++k)
            top[k] = std::max(top[k], g[k]);
    for (const auto& g : j.generators())
        for (std::size_t k = 0; k < n; ++k)
            top[k] = std::max(top[k], g[k] * q);

    std::int64_t reg = 0; // β_{0,0}(S/M) = 1
    Vec b(n, 0);
    for (;;) {
        if (in_sum(b, j, q, i)) {
            VarSet support;
            for (std::size_t k = 0; k < n; ++k)
                if (b[k] > 0)
                    support = support.with(k);
            std::vector<VarSet> faces;
            const std::uint64_t full = support.bits();
            for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
                Vec shifted = b;
                for (std::size_t k = 0; k < n; ++k)
                    if ((sub >> k) & 1U)
                        --shifted[k];
                if (in_sum(shifted, j, q, i))
                    faces.push_back(VarSet(sub));
                if (sub == 0)
                    break;
            }
            std::int64_t degree = 0;
            for (auto x : b)
                degree += static_cast<std::int64_t>(x);
            for (const auto& [d, rank] : reduced_cohomology_ranks(SimplicialComplex(n, faces), r.p()))
                reg = std::max(reg, degree - d - 2);
        }
        std::size_t k = 0;
        while (k < n && b[k] == top[k]) {
            b[k] = 0;
            ++k;
        }
        if (k == n)
            break;
        ++b[k];
    }
    return reg;
}

} // namespace fsr
