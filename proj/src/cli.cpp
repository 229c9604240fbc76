#include "fsr/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fsr/cartier.hpp"
#include "fsr/errors.hpp"
#include "fsr/io.hpp"
#include "fsr/oracle.hpp"
#include "fsr/regularity.hpp"
#include "fsr/threshold.hpp"

namespace fsr {

using nlohmann::json;

namespace {

constexpr unsigned kApproxDigits = 12;

struct Options {
    std::string ring;
    std::uint64_t p = 0; // 0: keep the ring file's characteristic
    unsigned e = 1;
    unsigned emax = 0;
    int table = -1;
    std::string a, b, c, j, ideal, monomial;
    bool verify = false;
    bool approx = false;
    bool csv = false;
};

struct Context {
    const Options& opt;
    RingSpec spec;

    const StanleyReisnerRing& ring() const { return spec.ring; }
    const std::vector<std::string>& vars() const { return spec.variables; }
    MonomialIdeal ideal(const std::string& text, const char* flag) const {
        if (text.empty())
            throw InputError(std::string("missing ") + flag);
        return parse_ideal(text, vars());
    }
    void put(json& o, const std::string& key, const RationalValue& v) const {
        o[key] = v.to_string();
        if (opt.approx)
            o[key + "_approx"] = v.to_decimal(kApproxDigits);
    }
    json ideal_json(const MonomialIdeal& a) const { return ideal_to_json(a, vars()); }
    json prime_json(const FacePrime& p) const { return varset_to_json(p.variables, vars()); }
};

// Collects oracle comparisons; a budget refusal skips a check instead of failing it.
class Verification {
public:
    void run(const std::string& name, const std::function<std::pair<bool, json>()>& check) {
        try {
            auto [ok, detail] = check();
            detail["check"] = name;
            detail["status"] = ok ? "agreed" : "disagreed";
            disagreed_ = disagreed_ || !ok;
            agreed_ = agreed_ || ok;
            checks_.push_back(std::move(detail));
        } catch (const BudgetExceeded& e) {
            checks_.push_back({{"check", name}, {"status", "skipped"}, {"reason", e.what()}});
        }
    }
    bool disagreed() const { return disagreed_; }
    json to_json() const {
        const char* status = disagreed_ ? "disagreed" : agreed_ ? "agreed" : "skipped";
        return {{"status", status}, {"checks", checks_}};
    }

private:
    json checks_ = json::array();
    bool disagreed_ = false;
    bool agreed_ = false;
};

std::string csv_line(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            out += ',';
        out += cells[i];
    }
    return out + '\n';
}

OracleBudget budget() { return OracleBudget::from_env(); }

struct Output {
    Output() = default;
    Output(json b) : body(std::move(b)) {} // NOLINT
    json body;
    std::string csv; // replaces the JSON body when non-empty
    bool disagreed = false;
};

// --- monomial-core ---------------------------------------------------------

Output cmd_min_primes(const Context& ctx) {
    const MonomialIdeal target = ctx.opt.ideal.empty() ? ctx.ring().defining_ideal()
                                                       : ctx.ring().lift(ctx.ideal(ctx.opt.ideal, "--ideal"));
    const auto dec = minimal_primes(target);
    json primes = json::array();
    for (const auto& p : dec.primes)
        primes.push_back(ctx.prime_json(p));
    return {{{"primes", primes}, {"dim", dec.dim}}};
}

Output cmd_colon(const Context& ctx) {
    return {{{"ideal", ctx.ideal_json(colon(ctx.ideal(ctx.opt.a, "--a"), ctx.ideal(ctx.opt.b, "--b")))}}};
}

Output cmd_intersect(const Context& ctx) {
    return {{{"ideal", ctx.ideal_json(intersect(ctx.ideal(ctx.opt.a, "--a"), ctx.ideal(ctx.opt.b, "--b")))}}};
}

Output cmd_frobenius(const Context& ctx) {
    const auto level = ctx.ring().level(ctx.opt.e);
    return {{{"ideal", ctx.ideal_json(frobenius_power(ctx.ideal(ctx.opt.a, "--a"), level))},
             {"q", level.q().get_str()}}};
}

// --- threshold-engine ------------------------------------------------------

Output cmd_nu(const Context& ctx) {
    const auto a = ctx.ideal(ctx.opt.a, "--a");
    const auto j = ctx.ideal(ctx.opt.j, "--j");
    const auto level = ctx.ring().level(ctx.opt.e);
    auto rec = nu_value(ctx.ring(), a, j, level);
#ifdef FSR_FAULT_INJECTION
    rec.nu += 1;
#endif
    Output out;
    auto& o = out.body;
    o["nu"] = rec.nu;
    o["q"] = level.q().get_str();
    ctx.put(o, "scaled", RationalValue(mpq_class(mpz_class(static_cast<unsigned long>(rec.nu)), level.q())));
    o["degenerate"] = rec.degenerate;
    o["per_prime"] = json::array();
    for (const auto& pp : rec.per_prime)
        o["per_prime"].push_back({{"prime", ctx.prime_json(pp.prime)}, {"nu", pp.nu}, {"zero_image", pp.zero_image}});
    if (ctx.opt.verify) {
        Verification v;
        v.run("nu", [&] {
            const auto bf = bf_nu(ctx.ring(), a, j, level, budget());
            return std::pair<bool, json>{bf == rec.nu, {{"engine", rec.nu}, {"oracle", bf}}};
        });
        o["verification"] = v.to_json();
        out.disagreed = v.disagreed();
    }
    return out;
}

Output cmd_threshold(const Context& ctx) {
    const auto a = ctx.ideal(ctx.opt.a, "--a");
    const auto j = ctx.ideal(ctx.opt.j, "--j");
    const auto res = f_threshold(ctx.ring(), a, j);
    Output out;
    auto& o = out.body;
    ctx.put(o, "value", res.value);
    o["degenerate"] = res.degenerate;
    o["per_prime"] = json::array();
    for (const auto& pp : res.per_prime) {
        json e{{"prime", ctx.prime_json(pp.prime)}, {"zero_image", pp.zero_image}};
        ctx.put(e, "value", pp.value);
        o["per_prime"].push_back(std::move(e));
    }
    std::optional<ConvergenceTable> table;
    if (ctx.opt.table >= 0) {
        table = convergence_table(ctx.ring(), a, j, static_cast<unsigned>(ctx.opt.table));
        json t{{"mu", table->mu}, {"rows", json::array()}};
        ctx.put(t, "lower", table->lower);
        ctx.put(t, "upper", table->upper);
        std::string csv = csv_line({"e", "q", "nu", "scaled"});
        for (const auto& row : table->rows) {
            json r{{"e", row.level.e()}, {"q", row.level.q().get_str()}, {"nu", row.nu}};
            ctx.put(r, "scaled", row.scaled);
            t["rows"].push_back(std::move(r));
            csv += csv_line({std::to_string(row.level.e()), row.level.q().get_str(), std::to_string(row.nu),
                             row.scaled.to_string()});
        }
        o["table"] = std::move(t);
        if (ctx.opt.csv)
            out.csv = csv;
    } else if (ctx.opt.csv) {
        throw InputError("--csv needs --table");
    }
    if (ctx.opt.verify) {
        Verification v;
        for (unsigned e = 0; e <= budget().max_e; ++e)
            v.run("bracket e=" + std::to_string(e), [&] {
                const auto [low, high] = bf_threshold_bracket(ctx.ring(), a, j, e, budget());
                const bool ok = low <= res.value && res.value <= high;
                return std::pair<bool, json>{
                    ok, {{"engine", res.value.to_string()}, {"oracle", {low.to_string(), high.to_string()}}}};
            });
        if (table)
            for (const auto& row : table->rows)
                v.run("nu e=" + std::to_string(row.level.e()), [&] {
                    const auto bf = bf_nu(ctx.ring(), a, j, row.level, budget());
                    return std::pair<bool, json>{bf == row.nu, {{"engine", row.nu}, {"oracle", bf}}};
                });
        o["verification"] = v.to_json();
        out.disagreed = v.disagreed();
    }
    return out;
}

// --- cartier-engine --------------------------------------------------------

Output cmd_contraction(const Context& ctx) {
    const auto j = ctx.ideal(ctx.opt.j, "--j");
    const auto level = ctx.ring().level(ctx.opt.e);
    const ContractionQuery query{ctx.ring(), j, level};
    Output out;
    auto& o = out.body;
    o["q"] = level.q().get_str();
    std::optional<MonomialIdeal> je;
    std::optional<Monomial> m;
    if (!ctx.opt.monomial.empty()) {
        m = Monomial(parse_monomial(ctx.opt.monomial, ctx.vars()));
        o["member"] = contraction_contains(query, *m);
    } else {
        je = contraction_ideal(query);
        o["generators"] = ctx.ideal_json(*je);
    }
    if (ctx.opt.verify) {
        Verification v;
        if (m) {
            v.run("membership", [&] {
                const bool engine = contraction_contains(query, *m);
                const bool oracle = bf_contraction_trace(ctx.ring(), j, level, *m, budget());
                return std::pair<bool, json>{engine == oracle, {{"engine", engine}, {"oracle", oracle}}};
            });
        } else {
            v.run("box < 2q", [&] {
                const Exponent bound = 2 * level.q_exponent();
                budget().check(ctx.ring(), level);
                ExponentVector beta(ctx.ring().n());
                std::size_t tested = 0;
                for (;;) {
                    const Monomial mono(beta);
                    const bool oracle = bf_contraction_trace(ctx.ring(), j, level, mono, budget());
                    if (oracle != je->contains(beta) || oracle != contraction_contains(query, mono))
                        return std::pair<bool, json>{false, {{"tested", tested + 1},
                                                             {"counterexample", ctx.ideal_json(MonomialIdeal::principal(beta))},
                                                             {"oracle", oracle}}};
                    ++tested;
                    std::size_t k = 0;
                    while (k < beta.size() && beta[k] + 1 == bound)
                        beta[k++] = 0;
                    if (k == beta.size())
                        break;
                    ++beta[k];
                }
                return std::pair<bool, json>{true, {{"tested", tested}}};
            });
        }
        o["verification"] = v.to_json();
        out.disagreed = v.disagreed();
    }
    return out;
}

json witnesses_json(const Context& ctx, const std::vector<CompatibilityWitness>& ws) {
    json out = json::array();
    for (const auto& w : ws)
        out.push_back({{"generator", monomial_to_string(w.generator, ctx.vars())},
                       {"closure", ctx.ideal_json(w.closure)},
                       {"closed", w.closed}});
    return out;
}

Output cmd_core(const Context& ctx) {
    const auto j = ctx.ideal(ctx.opt.j, "--j");
    const auto res = cartier_core(ctx.ring(), j);
    Output out;
    auto& o = out.body;
    o["core"] = ctx.ideal_json(res.core);
    o["certificate"] = witnesses_json(ctx, res.certificate);
    o["rounds"] = res.rounds;
    if (ctx.opt.verify) {
        Verification v;
        for (unsigned e = 1; e <= budget().max_e; ++e)
            v.run("core ⊆ J_e, e=" + std::to_string(e), [&] {
                const auto level = ctx.ring().level(e);
                for (const auto& g : res.core.generators())
                    if (!bf_contraction_trace(ctx.ring(), j, level, Monomial(g), budget()))
                        return std::pair<bool, json>{false, {{"missing", monomial_to_string(g, ctx.vars())}}};
                return std::pair<bool, json>{true, json::object()};
            });
        o["verification"] = v.to_json();
        out.disagreed = v.disagreed();
    }
    return out;
}

Output cmd_compatible(const Context& ctx) {
    const auto c = ctx.ideal(ctx.opt.c, "--c");
    const auto rep = is_uniformly_compatible(ctx.ring(), c);
    Output out;
    auto& o = out.body;
    o["compatible"] = rep.compatible;
    o["witnesses"] = witnesses_json(ctx, rep.witnesses);
    if (ctx.opt.verify) {
        Verification v;
        // For squarefree C, x^N ∈ C_1 is exactly the closure condition.
        v.run("generators in C_1", [&] {
            const auto level = ctx.ring().level(1);
            bool all = true;
            for (const auto& g : c.generators())
                all = all && bf_contraction_trace(ctx.ring(), c, level, Monomial(g), budget());
            return std::pair<bool, json>{all == rep.compatible, {{"engine", rep.compatible}, {"oracle", all}}};
        });
        o["verification"] = v.to_json();
        out.disagreed = v.disagreed();
    }
    return out;
}

Output cmd_b(const Context& ctx) {
    const auto a = ctx.ideal(ctx.opt.a, "--a");
    const auto j = ctx.ideal(ctx.opt.j, "--j");
    const auto level = ctx.ring().level(ctx.opt.e);
    const auto b = b_value(ctx.ring(), a, j, level);
    Output out;
    auto& o = out.body;
    o["b"] = b;
    o["q"] = level.q().get_str();
    ctx.put(o, "scaled", RationalValue(mpq_class(mpz_class(static_cast<unsigned long>(b)), level.q())));
    if (ctx.opt.verify) {
        Verification v;
        v.run("b", [&] {
            const auto bf = bf_b_value(ctx.ring(), a, j, level, budget());
            return std::pair<bool, json>{bf == b, {{"engine", b}, {"oracle", bf}}};
        });
        o["verification"] = v.to_json();
        out.disagreed = v.disagreed();
    }
    return out;
}

Output cmd_cartier_threshold(const Context& ctx) {
    const auto a = ctx.ideal(ctx.opt.a, "--a");
    const auto j = ctx.ideal(ctx.opt.j, "--j");
    const auto rec = cartier_threshold(ctx.ring(), a, j);
    Output out;
    auto& o = out.body;
    ctx.put(o, "value", rec.value);
    o["per_prime"] = json::array();
    for (const auto& pp : rec.per_prime) {
        std::vector<std::string> local_vars;
        for (auto k : pp.kept_variables)
            local_vars.push_back(ctx.vars().at(k));
        json e{{"prime", ctx.prime_json(pp.prime)},
               {"localized_variables", local_vars},
               {"localized_relations", ideal_to_json(pp.localized_ring.defining_ideal(), local_vars)},
               {"localized_a", ideal_to_json(pp.localized_a, local_vars)},
               {"core", ideal_to_json(pp.core, local_vars)},
               {"a_in_core", pp.a_in_core}};
        ctx.put(e, "value", pp.value);
        o["per_prime"].push_back(std::move(e));
    }
    if (ctx.opt.verify) {
        Verification v;
        for (unsigned e = 1; e <= budget().max_e; ++e)
            v.run("b/q <= ct <= upper bracket, e=" + std::to_string(e), [&] {
                const auto level = ctx.ring().level(e);
                const auto b = bf_b_value(ctx.ring(), a, j, level, budget());
                const auto low = RationalValue(mpq_class(mpz_class(static_cast<unsigned long>(b)), level.q()));
                const auto high = bf_threshold_bracket(ctx.ring(), a, j, e, budget()).second;
                const bool ok = low <= rec.value && rec.value <= high;
                return std::pair<bool, json>{
                    ok, {{"engine", rec.value.to_string()}, {"oracle", {low.to_string(), high.to_string()}}}};
            });
        o["verification"] = v.to_json();
        out.disagreed = v.disagreed();
    }
    return out;
}

Output cmd_cartier_table(const Context& ctx) {
    const auto a = ctx.ideal(ctx.opt.a, "--a");
    const auto j = ctx.ideal(ctx.opt.j, "--j");
    const auto table = ct_sandwich_table(ctx.ring(), a, j, ctx.opt.emax);
    Output out;
    auto& o = out.body;
    o["mu"] = table.mu;
    ctx.put(o, "c_threshold", table.c_threshold);
    ctx.put(o, "ct", table.ct);
    o["rows"] = json::array();
    std::string csv = csv_line({"e", "q", "b", "scaled_b", "c_contraction", "scaled_c"});
    for (const auto& row : table.rows) {
        const auto q = ctx.ring().level(row.e).q().get_str();
        json r{{"e", row.e}, {"q", q}, {"contraction", ctx.ideal_json(row.contraction)}, {"b", row.b}};
        ctx.put(r, "scaled_b", row.scaled_b);
        ctx.put(r, "c_contraction", row.c_contraction);
        ctx.put(r, "scaled_c", row.scaled_c);
        o["rows"].push_back(std::move(r));
        csv += csv_line({std::to_string(row.e), q, std::to_string(row.b), row.scaled_b.to_string(),
                         row.c_contraction.to_string(), row.scaled_c.to_string()});
    }
    if (ctx.opt.csv)
        out.csv = csv;
    if (ctx.opt.verify) {
        Verification v;
        for (const auto& row : table.rows)
            v.run("b e=" + std::to_string(row.e), [&] {
                const auto bf = bf_b_value(ctx.ring(), a, j, ctx.ring().level(row.e), budget());
                return std::pair<bool, json>{bf == row.b, {{"engine", row.b}, {"oracle", bf}}};
            });
        o["verification"] = v.to_json();
        out.disagreed = v.disagreed();
    }
    return out;
}

// --- regularity-engine ------------------------------------------------------

json alpha_json(VarSet alpha, std::size_t n) {
    json out = json::array();
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(alpha.contains(i) ? 1 : 0);
    return out;
}

void verify_regularity(const Context& ctx, const MonomialIdeal& j,
                       const std::vector<std::pair<unsigned, RationalValue>>& levels, Output& out) {
    Verification v;
    for (const auto& [e, scaled] : levels)
        v.run("reg e=" + std::to_string(e), [&, e = e, scaled = scaled] {
            const auto level = ctx.ring().level(e);
            const auto reg = bf_regularity(ctx.ring(), j, level, budget());
            const auto oracle = RationalValue(mpq_class(mpz_class(static_cast<long>(reg)), level.q()));
            return std::pair<bool, json>{oracle == scaled,
                                         {{"engine", scaled.to_string()}, {"oracle", oracle.to_string()}}};
        });
    out.body["verification"] = v.to_json();
    out.disagreed = v.disagreed();
}

Output cmd_reg_limit(const Context& ctx) {
    const auto j = ctx.ideal(ctx.opt.j, "--j");
    const auto rep = regularity_limit(ctx.ring(), j, ctx.opt.emax);
    Output out;
    auto& o = out.body;
    o["limit"] = rep.limit;
    o["argmax"] = json::array();
    for (const auto& w : rep.argmax)
        o["argmax"].push_back({{"alpha", alpha_json(w.alpha, ctx.ring().n())}, {"i", w.i}, {"a", w.a}});
    o["argmax_uses_h0"] = rep.argmax_uses_h0;
    if (rep.argmax_uses_h0)
        o["note"] = "a maximizer comes from H^0 of an Artinian summand (i = 0)";
    o["finite_levels"] = json::array();
    for (const auto& [e, scaled] : rep.finite_levels) {
        json r{{"e", e}};
        ctx.put(r, "scaled", scaled);
        o["finite_levels"].push_back(std::move(r));
    }
    if (ctx.opt.verify)
        verify_regularity(ctx, j, rep.finite_levels, out);
    return out;
}

Output cmd_reg_table(const Context& ctx) {
    const auto j = ctx.ideal(ctx.opt.j, "--j");
    const auto rep = regularity_limit(ctx.ring(), j, ctx.opt.emax);
    Output out;
    auto& o = out.body;
    o["limit"] = rep.limit;
    o["rows"] = json::array();
    std::string csv = csv_line({"e", "q", "reg", "scaled"});
    for (const auto& [e, scaled] : rep.finite_levels) {
        const auto level = ctx.ring().level(e);
        const auto reg = scaled * RationalValue(mpq_class(level.q()));
        json r{{"e", e}, {"q", level.q().get_str()}, {"reg", reg.numerator().get_str()}};
        ctx.put(r, "scaled", scaled);
        o["rows"].push_back(std::move(r));
        csv += csv_line({std::to_string(e), level.q().get_str(), reg.numerator().get_str(), scaled.to_string()});
    }
    if (ctx.opt.csv)
        out.csv = csv;
    if (ctx.opt.verify)
        verify_regularity(ctx, j, rep.finite_levels, out);
    return out;
}

Output cmd_reg_ainv(const Context& ctx) {
    const auto q = ctx.opt.ideal.empty() ? ctx.ring().defining_ideal()
                                         : ctx.ring().lift(ctx.ideal(ctx.opt.ideal, "--ideal"));
    const auto table = a_invariants_squarefree(q, ctx.ring().p());
    json values = json::array();
    for (const auto& v : table.values)
        values.push_back(v ? json(*v) : json("-inf"));
    json o{{"dim", table.dim}, {"zero_ring", table.zero_ring}, {"a", values}};
    const auto reg = table.regularity();
    o["regularity"] = reg ? json(*reg) : json("-inf");
    return {o};
}

// --- oracle ----------------------------------------------------------------

Output cmd_oracle_nu(const Context& ctx) {
    const auto level = ctx.ring().level(ctx.opt.e);
    const auto nu = bf_nu(ctx.ring(), ctx.ideal(ctx.opt.a, "--a"), ctx.ideal(ctx.opt.j, "--j"), level, budget());
    return {{{"nu", nu}, {"q", level.q().get_str()}}};
}

Output cmd_oracle_je(const Context& ctx) {
    if (ctx.opt.monomial.empty())
        throw InputError("missing --monomial");
    const auto level = ctx.ring().level(ctx.opt.e);
    const bool member = bf_contraction_trace(ctx.ring(), ctx.ideal(ctx.opt.j, "--j"), level,
                                             Monomial(parse_monomial(ctx.opt.monomial, ctx.vars())), budget());
    return {{{"member", member}, {"q", level.q().get_str()}}};
}

Output cmd_oracle_bracket(const Context& ctx) {
    const auto [low, high] =
        bf_threshold_bracket(ctx.ring(), ctx.ideal(ctx.opt.a, "--a"), ctx.ideal(ctx.opt.j, "--j"), ctx.opt.e, budget());
    Output out;
    ctx.put(out.body, "lower", low);
    ctx.put(out.body, "upper", high);
    out.body["q"] = ctx.ring().level(ctx.opt.e).q().get_str();
    return out;
}

using Handler = Output (*)(const Context&);

struct Command {
    CLI::App* app;
    Handler handler;
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact prime-characteristic invariants of Stanley-Reisner rings", "fsr"};
    app.require_subcommand(1);
    Options opt;
    std::vector<Command> commands;

    auto ring_flags = [&](CLI::App* sub) {
        sub->add_option("--ring", opt.ring, "ring file, or inline JSON")->required();
        sub->add_option("-p", opt.p, "override the ring's characteristic");
        sub->add_flag("--approx", opt.approx, "add decimal renderings of rationals (display only)");
    };
    auto verify_flag = [&](CLI::App* sub) {
        sub->add_flag("--verify", opt.verify, "cross-check against the brute-force oracle (exit 4 on disagreement)");
    };
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Handler h) {
        auto* sub = parent->add_subcommand(name, help);
        ring_flags(sub);
        commands.push_back({sub, h});
        return sub;
    };

    auto* s = leaf(&app, "min-primes", "minimal primes of I (+ --ideal)", cmd_min_primes);
    s->add_option("--ideal", opt.ideal);
    s = leaf(&app, "colon", "(A : B) in the polynomial ring", cmd_colon);
    s->add_option("--a", opt.a)->required();
    s->add_option("--b", opt.b)->required();
    s = leaf(&app, "intersect", "A ∩ B in the polynomial ring", cmd_intersect);
    s->add_option("--a", opt.a)->required();
    s->add_option("--b", opt.b)->required();
    s = leaf(&app, "frobenius", "A^[p^e]", cmd_frobenius);
    s->add_option("--a", opt.a)->required();
    s->add_option("-e", opt.e);

    s = leaf(&app, "nu", "nu_a^J(p^e)", cmd_nu);
    s->add_option("--a", opt.a)->required();
    s->add_option("--j", opt.j)->required();
    s->add_option("-e", opt.e);
    verify_flag(s);
    s = leaf(&app, "threshold", "F-threshold c^J(a)", cmd_threshold);
    s->add_option("--a", opt.a)->required();
    s->add_option("--j", opt.j)->required();
    s->add_option("--table", opt.table, "also print nu/p^e for e = 0..EMAX");
    s->add_flag("--csv", opt.csv);
    verify_flag(s);

    auto* cartier = app.add_subcommand("cartier", "Cartier contractions, cores and thresholds");
    cartier->require_subcommand(1);
    s = leaf(cartier, "contraction", "J_e, or membership of --monomial", cmd_contraction);
    s->add_option("--j", opt.j)->required();
    s->add_option("-e", opt.e);
    s->add_option("--monomial", opt.monomial);
    verify_flag(s);
    s = leaf(cartier, "core", "Cartier core P(J)", cmd_core);
    s->add_option("--j", opt.j)->required();
    verify_flag(s);
    s = leaf(cartier, "compatible", "uniform F-compatibility of a squarefree C", cmd_compatible);
    s->add_option("--c", opt.c)->required();
    verify_flag(s);
    s = leaf(cartier, "b", "b_a^J(p^e)", cmd_b);
    s->add_option("--a", opt.a)->required();
    s->add_option("--j", opt.j)->required();
    s->add_option("-e", opt.e);
    verify_flag(s);
    s = leaf(cartier, "threshold", "Cartier threshold ct_J(a)", cmd_cartier_threshold);
    s->add_option("--a", opt.a)->required();
    s->add_option("--j", opt.j)->required();
    verify_flag(s);
    s = leaf(cartier, "table", "b/p^e and c^{J_e}/p^e for e = 1..EMAX", cmd_cartier_table);
    s->add_option("--a", opt.a)->required();
    s->add_option("--j", opt.j)->required();
    s->add_option("--emax", opt.emax)->required();
    s->add_flag("--csv", opt.csv);
    verify_flag(s);

    auto* reg = app.add_subcommand("reg", "a-invariants and regularity");
    reg->require_subcommand(1);
    s = leaf(reg, "limit", "lim reg(R/J^[q])/q", cmd_reg_limit);
    s->add_option("--j", opt.j)->required();
    s->add_option("--emax", opt.emax, "also list the scaled regularity for e = 0..EMAX");
    verify_flag(s);
    s = leaf(reg, "table", "reg(R/J^[q])/q for e = 0..EMAX", cmd_reg_table);
    s->add_option("--j", opt.j)->required();
    s->add_option("--emax", opt.emax)->required();
    s->add_flag("--csv", opt.csv);
    verify_flag(s);
    s = leaf(reg, "ainv", "a-invariants of S/(I + --ideal)", cmd_reg_ainv);
    s->add_option("--ideal", opt.ideal);

    auto* oracle = app.add_subcommand("oracle", "brute-force reference computations");
    oracle->require_subcommand(1);
    s = leaf(oracle, "nu", "nu by explicit expansion", cmd_oracle_nu);
    s->add_option("--a", opt.a)->required();
    s->add_option("--j", opt.j)->required();
    s->add_option("-e", opt.e);
    s = leaf(oracle, "je", "J_e membership by the trace description", cmd_oracle_je);
    s->add_option("--j", opt.j)->required();
    s->add_option("-e", opt.e);
    s->add_option("--monomial", opt.monomial)->required();
    s = leaf(oracle, "bracket", "[nu/q, (nu + mu)/q]", cmd_oracle_bracket);
    s->add_option("--a", opt.a)->required();
    s->add_option("--j", opt.j)->required();
    s->add_option("-e", opt.e);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }

    const auto it = std::find_if(commands.begin(), commands.end(), [](const Command& c) { return c.app->parsed(); });
    if (it == commands.end()) {
        err << "error: no command given\n";
        return kExitInput;
    }
    try {
        RingSpec spec = load_ring(opt.ring);
        if (opt.p != 0)
            spec.ring = spec.ring.with_characteristic(opt.p);
        const Context ctx{opt, std::move(spec)};
        const Output result = it->handler(ctx);
        if (!result.csv.empty())
            out << result.csv;
        else
            out << result.body.dump(2) << '\n';
        if (result.disagreed) {
            err << "error: engine and oracle disagree\n";
            return kExitDisagreement;
        }
        return kExitOk;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const PreconditionError& e) {
        err << "precondition: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const BudgetExceeded& e) {
        err << "refused: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const InternalInconsistency& e) {
        err << "internal: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        err << "internal: " << e.what() << '\n';
        return kExitInternal;
    }
}

} // namespace fsr
