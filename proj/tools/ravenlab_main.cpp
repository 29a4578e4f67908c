// ravenlab: exact confirmation-theory engine over two-predicate universes.
//
// Subcommands: eval | check | table1 | sweep | bisect | mixture | selftest.
// Exit codes: 0 success, 1 a guarded check reported an implication
// violation (or selftest failed), 2 usage/grammar error.

#include "ravenlab/ravenlab.hpp"
#include "ravenlab/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace ravenlab;

namespace {

struct Shared {
    int n = 2;
    std::string measure = "uniform";
    std::string format = "text";
    std::string out;
    std::uint64_t seed = 0;
    bool has_seed = false;
};

std::ostream& open_sink(const Shared& shared, std::ofstream& file) {
    if (shared.out.empty() || shared.out == "-") return std::cout;
    file.open(shared.out);
    if (!file) throw CLI::ValidationError("--out", "cannot open " + shared.out);
    return file;
}

void add_shared(CLI::App* cmd, Shared& shared, bool with_measure = true) {
    cmd->add_option("--n", shared.n, "universe size")->check(CLI::Range(1, max_universe_size));
    if (with_measure) {
        cmd->add_option("--measure", shared.measure, "measure spec");
        cmd->add_option("--seed", shared.seed,
                        "seed for the bare 'randexch'/'random' measure families")
            ->each([&shared](const std::string&) { shared.has_seed = true; });
    }
    cmd->add_option("--format", shared.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", shared.out, "output path ('-' for stdout)");
}

Measure shared_measure(const Shared& shared) {
    std::string spec = shared.measure;
    if (shared.has_seed && (spec == "randexch" || spec == "random"))
        spec += ":seed=" + std::to_string(shared.seed);
    return measure_from_spec(spec, shared.n);
}

std::string show(const Rat& r) {
    return to_fraction_string(r) + " = " + to_decimal_string(r);
}

void print_verdict(std::ostream& os, const std::string& format, const Verdict& v) {
    if (format == "json") {
        os << verdict_to_json(v).dump(2) << "\n";
        return;
    }
    os << relation_name(v.relation);
    if (v.lhs) os << "\n  pr(H|E.D) = " << show(*v.lhs) << "\n  pr(H|D)   = " << show(*v.rhs);
    os << "\n";
}

void print_guarded(std::ostream& os, const std::string& format, const GuardedResult& g) {
    if (format == "json") {
        os << guarded_to_json(g).dump(2) << "\n";
        return;
    }
    os << "premise: " << (g.premise_holds ? "holds" : "fails")
       << "\nconclusion: " << conclusion_name(g.conclusion) << "\n";
    if (g.lhs) os << "lhs: " << show(*g.lhs) << "\nrhs: " << show(*g.rhs) << "\n";
    for (const auto& w : g.witnesses) os << "witness: " << w << "\n";
    if (g.violated()) os << "IMPLICATION VIOLATION\n";
}

int run(int argc, char** argv) {
    CLI::App app{"exact rational confirmation-theory engine"};
    app.require_subcommand(1);

    // --- eval ------------------------------------------------------------
    Shared ev;
    std::string ev_given;
    std::string ev_prop;
    bool ev_dump = false;
    auto* eval_cmd = app.add_subcommand("eval", "print pr(A|B) for parsed propositions");
    add_shared(eval_cmd, ev);
    eval_cmd->add_option("--given", ev_given, "conditioning proposition B (default: tautology)");
    eval_cmd->add_option("prop", ev_prop, "queried proposition A")->required();
    eval_cmd->add_flag("--dump", ev_dump, "also print the event bit-vector dump of A");

    // --- check -----------------------------------------------------------
    Shared ck;
    std::string ck_rule, ck_d, ck_e, ck_psi = "G", ck_mode = "weak", ck_mixture_file;
    int ck_a = 1, ck_b = 2, ck_k = 1;
    auto* check_cmd = app.add_subcommand("check", "run a rule/theorem checker");
    add_shared(check_cmd, ck);
    check_cmd->add_option("rule", ck_rule, "nc|pj|ra|thm1|thm2|thm4|thm5|prop1")->required();
    check_cmd->add_option("--d", ck_d, "background proposition (default: tautology)");
    check_cmd->add_option("--e", ck_e, "evidence proposition (prop1; default FG_1)");
    check_cmd->add_option("--a", ck_a, "object a");
    check_cmd->add_option("--b", ck_b, "object b");
    check_cmd->add_option("--k", ck_k, "known F-count");
    check_cmd->add_option("--psi", ck_psi, "predicate name for pj");
    check_cmd->add_option("--mode", ck_mode, "pj mode")->check(CLI::IsMember({"weak", "strong"}));
    check_cmd->add_option("--mixture", ck_mixture_file, "mixture file (prop1)");

    // --- table1 ----------------------------------------------------------
    Shared tb;
    int tb_k = 1;
    auto* table_cmd = app.add_subcommand("table1", "verdict matrix for the four observations");
    add_shared(table_cmd, tb);
    table_cmd->add_option("--k", tb_k, "known count")->required();

    // --- sweep -----------------------------------------------------------
    Shared sw;
    std::string sw_config;
    auto* sweep_cmd = app.add_subcommand("sweep", "grid sweep from a JSON spec, CSV out");
    add_shared(sweep_cmd, sw, /*with_measure=*/false);
    sweep_cmd->add_option("--config", sw_config, "sweep spec JSON file")->required();

    // --- bisect ----------------------------------------------------------
    Shared bi;
    std::string bi_move = "pf", bi_flag = "nc_confirms", bi_lo = "1/1000", bi_hi = "1/2";
    std::vector<std::string> bi_fixed;
    auto* bisect_cmd =
        app.add_subcommand("bisect", "bracket a flag flip along one mixture parameter");
    add_shared(bisect_cmd, bi, /*with_measure=*/false);
    bisect_cmd->add_option("--move", bi_move, "moving parameter: l|pi|pf|pg");
    bisect_cmd->add_option("--flag", bi_flag,
                           "thm2_restriction1|thm2_restriction2|nc_confirms|thm1_premise");
    bisect_cmd->add_option("--lo", bi_lo, "interval start");
    bisect_cmd->add_option("--hi", bi_hi, "interval end");
    bisect_cmd->add_option("--fixed", bi_fixed, "fixed parameters key=value");

    // --- mixture ---------------------------------------------------------
    Shared mx;
    std::string mx_file, mx_prob, mx_posterior, mx_e = "FG_1", mx_d;
    bool mx_assumption = false, mx_prop1 = false;
    auto* mix_cmd = app.add_subcommand("mixture", "evaluate an unknown-size mixture file");
    add_shared(mix_cmd, mx, /*with_measure=*/false);
    mix_cmd->add_option("--file", mx_file, "mixture JSON file")->required();
    mix_cmd->add_option("--prob", mx_prob, "print the mixture probability of a proposition");
    mix_cmd->add_option("--posterior", mx_posterior, "print the size posterior given a proposition");
    mix_cmd->add_flag("--assumption", mx_assumption, "check evidence-blind size estimates");
    mix_cmd->add_flag("--prop1", mx_prop1, "guarded mixture-confirmation check");
    mix_cmd->add_option("--e", mx_e, "evidence proposition");
    mix_cmd->add_option("--d", mx_d, "background proposition (default: tautology)");

    // --- selftest ----------------------------------------------------------
    auto* self_cmd = app.add_subcommand("selftest", "run the acceptance suite");
    std::string self_only;
    self_cmd->add_option("--only", self_only, "run a single criterion by id (e.g. C07)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // help/version exit 0; anything else is usage
    }

    auto parse_or_top = [](const std::string& text, int n) {
        return text.empty() ? Prop::top() : parse_proposition(text, n);
    };

    auto reject_csv = [](const Shared& shared) {
        if (shared.format == "csv")
            throw CLI::ValidationError("--format",
                                       "csv applies to the sweep and bisect subcommands");
    };

    if (eval_cmd->parsed()) {
        reject_csv(ev);
        std::ofstream file;
        std::ostream& os = open_sink(ev, file);
        Measure m = shared_measure(ev);
        Prop a = parse_proposition(ev_prop, ev.n);
        Prop b = parse_or_top(ev_given, ev.n);
        Rat value = m.conditional(a, b);
        if (ev.format == "json") {
            nlohmann::json j{{"value", to_fraction_string(value)},
                             {"value_dec", to_decimal_string(value)}};
            if (ev_dump) j["event"] = a.event(ev.n).dump_hex();
            os << j.dump(2) << "\n";
        } else {
            os << show(value) << "\n";
            if (ev_dump) os << a.event(ev.n).dump_hex() << "\n";
        }
        return 0;
    }

    if (check_cmd->parsed()) {
        reject_csv(ck);
        std::ofstream file;
        std::ostream& os = open_sink(ck, file);
        int rc = 0;
        if (ck_rule == "prop1") {
            if (ck_mixture_file.empty())
                throw CLI::ValidationError("--mixture", "prop1 needs a mixture file");
            std::ifstream in(ck_mixture_file);
            if (!in) throw CLI::ValidationError("--mixture", "cannot open " + ck_mixture_file);
            nlohmann::json j;
            in >> j;
            MixtureModel mix = mixture_from_json(
                j, [](const std::string& s, int n) { return measure_from_spec(s, n); });
            GuardedResult g = proposition1_check(mix, parse_proposition(ck_e.empty() ? "FG_1" : ck_e,
                                                                        mix.alpha()),
                                                 parse_or_top(ck_d, mix.alpha()));
            print_guarded(os, ck.format, g);
            return g.violated() ? 1 : 0;
        }

        Measure m = shared_measure(ck);
        Prop d = parse_or_top(ck_d, ck.n);
        if (ck_rule == "nc") {
            print_verdict(os, ck.format, check_nc(m, d, ck_a));
        } else if (ck_rule == "pj") {
            auto cats = catset_from_pred_name(ck_psi);
            if (!cats) throw CLI::ValidationError("--psi", "unknown predicate " + ck_psi);
            print_guarded(os, ck.format,
                          check_pj(m, *cats, ck_a, ck_b, d,
                                   ck_mode == "weak" ? PjMode::weak : PjMode::strong));
        } else if (ck_rule == "ra") {
            print_guarded(os, ck.format, check_ra(m, ck_a, ck_b, d));
        } else if (ck_rule == "thm1") {
            GuardedResult g = theorem1_premise_sweep(m);
            print_guarded(os, ck.format, g);
            rc = g.violated() ? 1 : 0;
        } else if (ck_rule == "thm2") {
            Theorem2Result t2 = theorem2_premise_check(m, d, ck_a);
            if (ck.format == "json")
                os << theorem2_to_json(t2).dump(2) << "\n";
            else {
                os << "restriction (strict confirmation): "
                   << (t2.restriction_strict_confirmation ? "holds" : "fails") << "\n"
                   << "restriction (tail bound): "
                   << (t2.restriction_tail_bound ? "holds" : "fails") << "\n"
                   << "NC verdict: " << relation_name(t2.nc.relation) << "\n";
                print_guarded(os, ck.format, t2.implication);
            }
            rc = t2.implication.violated() ? 1 : 0;
        } else if (ck_rule == "thm4" || ck_rule == "thm5") {
            Setting2Report rep = setting2_checks(m, ck_k, ck_a);
            if (ck.format == "json")
                os << setting2_to_json(rep).dump(2) << "\n";
            else {
                os << "exact-count equalities:\n";
                print_guarded(os, ck.format, rep.theorem4);
                os << "projectability-guarded confirmations (named form):\n";
                print_guarded(os, ck.format, rep.theorem3_pj);
                os << "projectability-guarded confirmations (count form):\n";
                print_guarded(os, ck.format, rep.theorem5_pj);
                os << "analogy-guarded confirmation (count form):\n";
                print_guarded(os, ck.format, rep.theorem5_ra);
            }
            rc = rep.violated() ? 1 : 0;
        } else {
            throw CLI::ValidationError("rule", "unknown rule " + ck_rule);
        }
        return rc;
    }

    if (table_cmd->parsed()) {
        reject_csv(tb);
        std::ofstream file;
        std::ostream& os = open_sink(tb, file);
        Measure m = shared_measure(tb);
        Table1 t = table1_matrix(m, tb_k);
        if (tb.format == "json") {
            os << table1_to_json(t).dump(2) << "\n";
        } else {
            for (int r = 0; r < 4; ++r) {
                os << t.row_labels[r] << "\n";
                for (int c = 0; c < 2; ++c) {
                    const auto& cell = t.cells[r][c];
                    os << "  [" << t.column_labels[c]
                       << "] " << relation_name(cell.verdict.relation);
                    if (cell.verdict.lhs)
                        os << "  (" << show(*cell.verdict.lhs) << " vs "
                           << show(*cell.verdict.rhs) << ")";
                    os << "\n    expected: " << cell.expected << "\n";
                }
            }
        }
        return 0;
    }

    if (sweep_cmd->parsed()) {
        std::ifstream in(sw_config);
        if (!in) throw CLI::ValidationError("--config", "cannot open " + sw_config);
        nlohmann::json j;
        in >> j;
        SweepSpec spec = SweepSpec::from_json(j);
        std::ofstream file;
        std::ostream& os = open_sink(sw, file);
        write_sweep_csv(os, grid_sweep(spec));
        return 0;
    }

    if (bisect_cmd->parsed()) {
        std::map<std::string, Rat> fixed{{"l", Rat(2)}, {"pi", Rat(1, 2)},
                                         {"pf", Rat(1, 1000)}, {"pg", Rat(1, 10)}};
        for (const auto& kv : bi_fixed) {
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw CLI::ValidationError("--fixed", "expected key=value");
            fixed[kv.substr(0, eq)] = parse_rational(kv.substr(eq + 1));
        }
        auto pred = maher_flag_predicate(bi_flag, bi.n, bi_move, fixed);
        BisectResult res =
            bisect_threshold(pred, parse_rational(bi_lo), parse_rational(bi_hi));
        std::ofstream file;
        std::ostream& os = open_sink(bi, file);
        if (bi.format == "json")
            os << bisect_to_json(res).dump(2) << "\n";
        else if (bi.format == "csv")
            os << "flag,move,lo,hi,lo_dec,hi_dec,lo_value,hi_value,evaluations\n"
               << bi_flag << "," << bi_move << "," << to_fraction_string(res.lo) << ","
               << to_fraction_string(res.hi) << "," << to_decimal_string(res.lo) << ","
               << to_decimal_string(res.hi) << "," << res.lo_value << "," << res.hi_value
               << "," << res.evaluations << "\n";
        else
            os << "flip of " << bi_flag << " along " << bi_move << " bracketed in ["
               << show(res.lo) << ", " << show(res.hi) << "] after " << res.evaluations
               << " exact evaluations\n";
        return 0;
    }

    if (mix_cmd->parsed()) {
        reject_csv(mx);
        std::ifstream in(mx_file);
        if (!in) throw CLI::ValidationError("--file", "cannot open " + mx_file);
        nlohmann::json j;
        in >> j;
        MixtureModel mix = mixture_from_json(
            j, [](const std::string& s, int n) { return measure_from_spec(s, n); });
        std::ofstream file;
        std::ostream& os = open_sink(mx, file);
        int rc = 0;
        if (!mx_prob.empty()) {
            Rat p = mixture_probability(mix, parse_proposition(mx_prob, mix.alpha()));
            os << show(p) << "\n";
        }
        if (!mx_posterior.empty()) {
            auto post = size_posterior(mix, parse_proposition(mx_posterior, mix.alpha()));
            for (const auto& [v, p] : post) os << "P(size=" << v << ") = " << show(p) << "\n";
        }
        if (mx_assumption) {
            AssumptionCheck ac = assumption_check(mix, parse_proposition(mx_e, mix.alpha()),
                                                  parse_or_top(mx_d, mix.alpha()));
            if (mx.format == "json")
                os << assumption_to_json(ac).dump(2) << "\n";
            else
                os << "size estimate evidence-blind: " << (ac.holds ? "yes" : "no")
                   << " (max deviation " << show(ac.max_deviation) << ")\n";
        }
        if (mx_prop1) {
            GuardedResult g = proposition1_check(mix, parse_proposition(mx_e, mix.alpha()),
                                                 parse_or_top(mx_d, mix.alpha()));
            print_guarded(os, mx.format, g);
            rc = g.violated() ? 1 : 0;
        }
        return rc;
    }

    if (self_cmd->parsed()) {
        bool ok = run_acceptance(std::cout, self_only);
        return ok ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "proposition syntax error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const UndefinedConditional& e) {
        std::cerr << "undefined conditional: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
