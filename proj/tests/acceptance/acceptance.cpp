// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fsr/cartier.hpp"
#include "fsr/cli.hpp"
#include "fsr/errors.hpp"
#include "fsr/oracle.hpp"
#include "fsr/regularity.hpp"
#include "fsr/threshold.hpp"
#include "support.hpp"

using namespace fsr;
using fsr::test::face;
using fsr::test::ideal;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

class Checker {
public:
    void expect(bool cond, const std::string& what) {
        ++count_;
        if (!cond && failures_.size() < 5)
            failures_.push_back(what);
        if (!cond)
            ++failed_;
    }
    std::size_t count() const { return count_; }
    Outcome outcome(const std::string& summary) const {
        if (failed_ == 0)
            return {true, summary};
        std::string d = std::to_string(failed_) + " of " + std::to_string(count_) + " checks failed:";
        for (const auto& f : failures_)
            d += " [" + f + "]";
        return {false, d};
    }

private:
    std::size_t count_ = 0, failed_ = 0;
    std::vector<std::string> failures_;
};

StanleyReisnerRing r1() { return test::ring(2, 2, {{1, 1}}); }
StanleyReisnerRing r2() { return test::ring(3, 2, {{1, 1, 0}}); }
StanleyReisnerRing s2() { return StanleyReisnerRing::polynomial(2, 2); }

std::string str(const RationalValue& v) { return v.to_string(); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome exact_f_threshold() {
    Checker c;
    auto t0 = std::chrono::steady_clock::now();
    const auto v1 = f_threshold(s2(), ideal(2, {{2, 0}, {0, 2}}), face(2, {0, 1})).value;
    const double t1 = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    const auto v2 = f_threshold(r2(), ideal(3, {{1, 0, 1}}), face(3, {0, 2})).value;
    const double t2 = seconds_since(t0);
    c.expect(v1 == RationalValue(1), "k[x,y]: got " + str(v1));
    c.expect(v2 == RationalValue(1), "k[x,y,z]/(xy): got " + str(v2));
    c.expect(t1 < 1.0 && t2 < 1.0, "time limit");
    std::ostringstream d;
    d << "values " << v1 << ", " << v2 << " in " << t1 << "s, " << t2 << "s";
    return c.outcome(d.str());
}

// bf_nu in R, max of bf_nu over the regular quotients, and nu_value, compared exactly.
Outcome nu_by_minimal_primes() {
    Checker c;
    test::Random rng(100);
    int instances = 0;
    for (int trial = 0; instances < 150 && trial < 5000; ++trial) {
        const std::size_t n = rng.uniform(1, 4);
        const std::uint64_t p = rng.coin() ? 2 : 3;
        const auto r = rng.sr_ring(n, p, 3);
        const auto j = rng.monomial_ideal(n, 3, 2);
        const auto a = rng.monomial_ideal(n, 3, 2);
        if (r.lift(j).is_unit())
            continue;
        bool inside = true;
        for (const auto& g : a.generators())
            inside = inside && contains_radical(r.lift(j), g);
        if (!inside)
            continue;
        const auto level = r.level(static_cast<unsigned>(rng.uniform(0, 2)));
        std::uint64_t whole = 0;
        try {
            whole = bf_nu(r, a, j, level);
        } catch (const BudgetExceeded&) {
            continue;
        }
        std::uint64_t best = 0;
        for (const auto& prime : r.minimal_primes()) {
            const auto quotient = r.quotient_by(prime);
            const auto jq = image_mod_face_prime(j, prime);
            if (quotient.lift(jq).is_unit())
                continue;
            best = std::max(best, bf_nu(quotient, image_mod_face_prime(a, prime), jq, quotient.level(level.e())));
        }
        const auto engine = nu_value(r, a, j, level).nu;
        const std::string tag = "trial " + std::to_string(trial);
        c.expect(whole == best, tag + ": R " + std::to_string(whole) + " vs quotients " + std::to_string(best));
        c.expect(whole == engine, tag + ": oracle " + std::to_string(whole) + " vs engine " + std::to_string(engine));
        ++instances;
    }
    c.expect(instances >= 100, "too few instances");
    return c.outcome(std::to_string(instances) + " random instances, exact agreement");
}

Outcome contraction_dual_algorithms() {
    Checker c;
    test::Random rng(200);
    int pairs = 0;
    std::size_t monomials = 0;
    for (int trial = 0; pairs < 60 && trial < 1000; ++trial) {
        const std::size_t n = rng.uniform(1, 4);
        const auto r = rng.sr_ring(n, rng.coin() ? 2 : 3, 3);
        const auto j = rng.monomial_ideal(n, 3, 2);
        if (r.lift(j).is_unit())
            continue;
        const auto level = r.level(static_cast<unsigned>(rng.uniform(0, 2)));
        const ContractionQuery query{r, j, level};
        test::for_each_in_box(n, 2 * level.q_exponent(), [&](const ExponentVector& v) {
            const Monomial m(v);
            ++monomials;
            c.expect(contraction_contains(query, m) == bf_contraction_trace(r, j, level, m),
                     "trial " + std::to_string(trial));
        });
        ++pairs;
    }
    c.expect(pairs >= 50, "too few pairs");
    return c.outcome(std::to_string(pairs) + " random (R, J), " + std::to_string(monomials) +
                     " monomials, zero disagreements");
}

Outcome frobenius_plus_core() {
    Checker c;
    c.expect(contraction_ideal({r2(), r2().maximal_ideal(), r2().level(1)}) ==
                 ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}),
             "m_1 fixture");
    std::vector<StanleyReisnerRing> rings = {r1(), r2(), s2(), test::ring(3, 3, {{1, 1, 0}, {0, 1, 1}}),
                                             test::ring(4, 2, {{1, 1, 0, 0}, {0, 0, 1, 1}})};
    test::Random rng(300);
    for (int k = 0; k < 30; ++k)
        rings.push_back(rng.sr_ring(rng.uniform(1, 4), rng.coin() ? 2 : 3, 3));
    std::size_t primes = 0;
    for (const auto& r : rings)
        for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << r.n()); ++bits) {
            const FacePrime q{VarSet(bits)};
            if (!q.contains(r.defining_ideal()))
                continue;
            ++primes;
            const auto qi = q.to_ideal(r.n());
            const auto core = cartier_core(r, qi).core;
            for (unsigned e = 1; e <= 3; ++e)
                c.expect(contraction_ideal({r, qi, r.level(e)}) == sum(frobenius_power(qi, r.level(e)), core),
                         "prime " + std::to_string(bits) + " e = " + std::to_string(e));
        }
    return c.outcome(std::to_string(primes) + " face primes over " + std::to_string(rings.size()) +
                     " rings, e = 1..3, including (x, y, z^2)");
}

Outcome cartier_fixtures() {
    Checker c;
    const auto fpt = cartier_threshold(r2(), face(3, {2}), r2().maximal_ideal()).value;
    const auto ct_x = cartier_threshold(r1(), face(2, {0}), face(2, {0})).value;
    const auto xz = ideal(3, {{1, 0, 1}});
    const auto ct_xz = cartier_threshold(r2(), xz, face(3, {0, 2})).value;
    const auto c_xz = f_threshold(r2(), xz, face(3, {0, 2})).value;
    c.expect(fpt == RationalValue(1), "fpt((z)) = " + str(fpt));
    c.expect(ct_x == RationalValue(0), "ct_(x)((x)) = " + str(ct_x));
    c.expect(ct_xz == RationalValue(0), "ct_(x,z)((xz)) = " + str(ct_xz));
    c.expect(c_xz == RationalValue(1), "c^(x,z)((xz)) = " + str(c_xz));
    return c.outcome("fpt((z)) = " + str(fpt) + ", ct_(x)((x)) = " + str(ct_x) + ", ct_(x,z)((xz)) = " + str(ct_xz) +
                     " < c = " + str(c_xz));
}

struct Fixture {
    std::string name;
    StanleyReisnerRing ring;
    MonomialIdeal a;
    MonomialIdeal j;
};

std::vector<Fixture> threshold_fixtures() {
    return {
        {"R2 (z) m", r2(), face(3, {2}), r2().maximal_ideal()},
        {"R1 (x) (x)", r1(), face(2, {0}), face(2, {0})},
        {"R2 (xz) (x,z)", r2(), ideal(3, {{1, 0, 1}}), face(3, {0, 2})},
        {"R1 (x) m", r1(), face(2, {0}), r1().maximal_ideal()},
        {"S2 (x^2,y^2) m", s2(), ideal(2, {{2, 0}, {0, 2}}), s2().maximal_ideal()},
        {"R2 m m", r2(), r2().maximal_ideal(), r2().maximal_ideal()},
        {"R3 (y z) (y,z)", test::ring(3, 3, {{1, 1, 0}}), ideal(3, {{0, 1, 1}}), face(3, {1, 2})},
    };
}

Outcome sandwich_and_monotonicity() {
    Checker c;
    for (const auto& f : threshold_fixtures()) {
        const auto t = ct_sandwich_table(f.ring, f.a, f.j, 4);
        const RationalValue mu(static_cast<std::int64_t>(t.mu));
        std::optional<RationalValue> prev_c;
        for (const auto& row : t.rows) {
            const RationalValue q(static_cast<std::int64_t>(f.ring.level(row.e).q_exponent()));
            const auto gap = row.scaled_c - row.scaled_b;
            c.expect(RationalValue(0) <= gap && gap <= mu / q, f.name + " gap e = " + std::to_string(row.e));
            c.expect(!prev_c || row.scaled_c <= *prev_c, f.name + " c column e = " + std::to_string(row.e));
            prev_c = row.scaled_c;
        }
        const auto conv = convergence_table(f.ring, f.a, f.j, 4);
        for (std::size_t e = 1; e < conv.rows.size(); ++e)
            c.expect(conv.rows[e - 1].scaled <= conv.rows[e].scaled, f.name + " nu column e = " + std::to_string(e));
    }
    return c.outcome(std::to_string(threshold_fixtures().size()) + " fixtures, e <= 4, " + std::to_string(c.count()) +
                     " inequalities");
}

Outcome regularity_fixtures() {
    Checker c;
    const auto rep = regularity_limit(r1(), face(2, {0}));
    c.expect(rep.limit == 1, "limit = " + std::to_string(rep.limit));
    c.expect(rep.argmax.size() == 1 && rep.argmax[0].alpha == VarSet::of({0}) && rep.argmax[0].i == 0, "argmax");
    const auto scaled = scaled_regularity_at_level(r1(), face(2, {0}), r1().level(2));
    c.expect(scaled == RationalValue(3, 4), "scaled at q = 4 is " + str(scaled));
    const auto reg4 = bf_regularity(r1(), face(2, {0}), r1().level(2));
    c.expect(reg4 == 3, "reg(S/(xy, x^4)) = " + std::to_string(reg4));
    const auto a1 = a_invariants_squarefree(ideal(2, {{1, 1}}), 2).at(1);
    const auto ky = a_invariants_squarefree(MonomialIdeal::zero(1), 2).at(1);
    c.expect(a1 == std::optional<std::int64_t>(0), "a_1(k[x,y]/(xy))");
    c.expect(ky == std::optional<std::int64_t>(-1), "a_1(k[y])");
    return c.outcome("limit 1 at alpha = (1,0), i = 0; scaled(4) = " + str(scaled) + "; reg(S/(xy,x^4)) = " +
                     std::to_string(reg4) + "; a_1 = 0 and -1");
}

Outcome regularity_lower_bound() {
    Checker c;
    std::vector<std::pair<std::string, std::pair<StanleyReisnerRing, MonomialIdeal>>> cases = {
        {"R1 (x)", {r1(), face(2, {0})}},
        {"R1 m", {r1(), r1().maximal_ideal()}},
        {"R1 0", {r1(), MonomialIdeal::zero(2)}},
        {"R2 m", {r2(), r2().maximal_ideal()}},
        {"R2 (x,z)", {r2(), face(3, {0, 2})}},
        {"R2 (z)", {r2(), face(3, {2})}},
        {"S2 m", {s2(), s2().maximal_ideal()}},
        {"S2 (x)", {s2(), face(2, {0})}},
    };
    test::Random rng(800);
    for (int k = 0; k < 40; ++k) {
        const std::size_t n = rng.uniform(1, 4);
        const auto r = rng.sr_ring(n, 2, 3);
        const auto j = rng.squarefree_ideal(n, 3);
        if (!r.lift(j).is_unit())
            cases.push_back({"random " + std::to_string(k), {r, j}});
    }
    for (const auto& [name, data] : cases) {
        const auto& [r, j] = data;
        const auto m = r.maximal_ideal();
        const auto fpt = cartier_threshold(r, m, m).value;
        const auto top = a_invariants_squarefree(r.lift(j), r.p()).max_value().value();
        const auto limit = regularity_limit(r, j).limit;
        c.expect(RationalValue(limit) >= RationalValue(top) + fpt,
                 name + ": " + std::to_string(limit) + " < " + std::to_string(top) + " + " + str(fpt));
    }
    return c.outcome(std::to_string(cases.size()) + " (R, J) pairs satisfy limit >= max a_i(R/J) + fpt(R)");
}

Outcome determinism() {
    Checker c;
    const std::string dir = FSR_FIXTURE_DIR;
    const std::string r1f = dir + "/R1.json", r2f = dir + "/R2.json", s2f = dir + "/S2.json";
    const std::vector<std::vector<std::string>> commands = {
        {"min-primes", "--ring", r2f},
        {"min-primes", "--ring", r2f, "--ideal", "x*y,y*z,x*z"},
        {"colon", "--ring", r2f, "--a", "x*y,y*z", "--b", "y"},
        {"intersect", "--ring", r2f, "--a", "x,y", "--b", "x,z"},
        {"frobenius", "--ring", r2f, "--a", "x*y,y*z", "-e", "2"},
        {"nu", "--ring", s2f, "--a", "x^2,y^2", "--j", "x,y", "-e", "2", "--verify"},
        {"threshold", "--ring", r2f, "--a", "x*z", "--j", "x,z", "--table", "3", "--verify"},
        {"threshold", "--ring", s2f, "--a", "x^2,y^2", "--j", "x,y", "--table", "4", "--csv"},
        {"cartier", "contraction", "--ring", r2f, "--j", "x,y,z", "--verify"},
        {"cartier", "contraction", "--ring", r2f, "--j", "x,y,z", "--monomial", "z", "--verify"},
        {"cartier", "core", "--ring", r2f, "--j", "x,z", "--verify"},
        {"cartier", "compatible", "--ring", r2f, "--c", "z"},
        {"cartier", "b", "--ring", r2f, "--a", "z", "--j", "x,y,z", "-e", "2", "--verify"},
        {"cartier", "threshold", "--ring", r2f, "--a", "x*z", "--j", "x,z", "--verify"},
        {"cartier", "table", "--ring", r2f, "--a", "z", "--j", "x,y,z", "--emax", "3", "--verify"},
        {"cartier", "table", "--ring", r2f, "--a", "z", "--j", "x,y,z", "--emax", "3", "--csv"},
        {"reg", "limit", "--ring", r1f, "--j", "x", "--emax", "3", "--verify"},
        {"reg", "table", "--ring", r2f, "--j", "x,z", "--emax", "3", "--verify"},
        {"reg", "table", "--ring", r1f, "--j", "x", "--emax", "3", "--csv"},
        {"reg", "ainv", "--ring", r2f},
        {"oracle", "nu", "--ring", s2f, "--a", "x^2,y^2", "--j", "x,y", "-e", "2"},
        {"oracle", "je", "--ring", r2f, "--j", "x,y,z", "--monomial", "z"},
        {"oracle", "bracket", "--ring", s2f, "--a", "x^2,y^2", "--j", "x,y", "-e", "2"},
    };
    for (const auto& args : commands) {
        std::string outputs[2];
        int codes[2];
        for (int k = 0; k < 2; ++k) {
            std::ostringstream out, err;
            codes[k] = run_cli(args, out, err);
            outputs[k] = out.str() + err.str();
        }
        const std::string name = args[0] + (args.size() > 1 && args[1][0] != '-' ? " " + args[1] : "");
        c.expect(codes[0] == kExitOk, name + " exit " + std::to_string(codes[0]));
        c.expect(codes[0] == codes[1] && outputs[0] == outputs[1], name + " differs between runs");
        c.expect(outputs[0].find('.') == std::string::npos, name + " prints a decimal point");
    }
    return c.outcome(std::to_string(commands.size()) + " commands byte-identical across two runs, no decimal points");
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 exact F-thresholds", exact_f_threshold},
        {"2 nu through minimal primes", nu_by_minimal_primes},
        {"3 contraction membership vs trace oracle", contraction_dual_algorithms},
        {"4 q_e = q^[q] + P(q)", frobenius_plus_core},
        {"5 Cartier threshold fixtures", cartier_fixtures},
        {"6 sandwich and monotonicity", sandwich_and_monotonicity},
        {"7 regularity fixtures", regularity_fixtures},
        {"8 regularity lower bound", regularity_lower_bound},
        {"9 determinism", determinism},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& ex) {
            o = {false, std::string("exception: ") + ex.what()};
        }
        std::ostringstream line;
        line.precision(3);
        line << (o.ok ? "PASS" : "FAIL") << "  [" << name << "] " << o.detail << " (" << seconds_since(t0) << "s)";
        std::cout << line.str() << '\n';
        failed += o.ok ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
