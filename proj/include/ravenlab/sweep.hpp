#pragma once

#include "ravenlab/generate.hpp"
#include "ravenlab/measure_spec.hpp"
#include "ravenlab/mixture.hpp"
#include "ravenlab/parallel.hpp"
#include "ravenlab/rules.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ravenlab {

// ---------------------------------------------------------------------------
// Grid sweeps.

struct SweepSpec {
    std::string family;  // uniform | iid | carnap | maher
    std::vector<int> n_values;
    std::vector<int> k_values;  // only consulted by the setting-2 rules
    std::vector<Rat> lambda{Rat(1)};
    std::vector<Rat> pr_i{Rat(1, 2)};
    std::vector<Rat> p_f{Rat(1, 2)};
    std::vector<Rat> p_g{Rat(1, 2)};
    std::vector<std::string> gammas{"uniform"};
    // which background family the nc rule quantifies over for its premise flag
    EnumerationFamily background = EnumerationFamily::small_delta;
    std::vector<std::string> rules{"nc"};
    std::size_t max_backgrounds = 20000;

    void validate() const {
        if (family != "uniform" && family != "iid" && family != "carnap" && family != "maher")
            throw std::invalid_argument("sweep family must be uniform|iid|carnap|maher");
        if (n_values.empty()) throw std::invalid_argument("sweep needs at least one n");
        for (int n : n_values) checked_universe_size(n);
        for (const Rat& l : lambda)
            if (l <= 0) throw std::invalid_argument("lambda must be positive");
        for (const auto* vs : {&pr_i, &p_f, &p_g})
            for (const Rat& v : *vs)
                if (v <= 0 || v >= 1)
                    throw std::invalid_argument("mixture parameters must lie in (0,1)");
        for (const std::string& g : gammas) parse_gamma(g);
        static const std::vector<std::string> known = {"nc",  "pj",   "ra",   "xi",
                                                       "thm1", "thm2", "thm4", "thm5"};
        for (const std::string& r : rules)
            if (std::find(known.begin(), known.end(), r) == known.end())
                throw std::invalid_argument("unknown rule '" + r + "'");
    }

    static SweepSpec from_json(const nlohmann::json& j) {
        SweepSpec s;
        s.family = j.at("family").get<std::string>();
        for (const auto& v : j.at("n")) s.n_values.push_back(v.get<int>());
        auto rats = [](const nlohmann::json& arr) {
            std::vector<Rat> out;
            for (const auto& v : arr) out.push_back(parse_rational(v.get<std::string>()));
            return out;
        };
        if (j.contains("k")) {
            s.k_values.clear();
            for (const auto& v : j["k"]) s.k_values.push_back(v.get<int>());
        }
        if (j.contains("lambda")) s.lambda = rats(j["lambda"]);
        if (j.contains("prI")) s.pr_i = rats(j["prI"]);
        if (j.contains("pF")) s.p_f = rats(j["pF"]);
        if (j.contains("pG")) s.p_g = rats(j["pG"]);
        if (j.contains("gamma")) {
            s.gammas.clear();
            for (const auto& v : j["gamma"]) s.gammas.push_back(v.get<std::string>());
        }
        if (j.contains("rules")) {
            s.rules.clear();
            for (const auto& v : j["rules"]) s.rules.push_back(v.get<std::string>());
        }
        if (j.contains("background")) {
            std::string b = j["background"].get<std::string>();
            if (b == "delta")
                s.background = EnumerationFamily::delta;
            else if (b == "small_delta")
                s.background = EnumerationFamily::small_delta;
            else
                throw std::invalid_argument("background must be delta|small_delta");
        }
        if (j.contains("max_backgrounds")) s.max_backgrounds = j["max_backgrounds"].get<std::size_t>();
        s.validate();
        return s;
    }
};

struct RuleResult {
    std::string rule;
    int k = 0;  // 0 when the rule does not involve a count
    std::optional<Rat> lhs, rhs;
    std::string verdict;
    bool premise1 = false, premise2 = false;
    std::string witness;
};

struct GridRecord {
    std::string family;
    int n = 0;
    std::optional<Rat> lambda, pr_i, p_f, p_g;
    std::string gamma;
    std::vector<RuleResult> rules;
};

namespace detail {

struct GridPoint {
    int n;
    std::optional<Rat> lambda, pr_i, p_f, p_g;
    std::string gamma;
};

inline Measure build_grid_measure(const SweepSpec& spec, const GridPoint& pt) {
    if (spec.family == "uniform") return uniform_measure(pt.n);
    if (spec.family == "iid") return iid_product_measure(pt.n, parse_gamma(pt.gamma));
    if (spec.family == "carnap") return carnap_measure(pt.n, *pt.lambda, parse_gamma(pt.gamma));
    return maher_measure(pt.n, *pt.lambda, *pt.pr_i, *pt.p_f, *pt.p_g);
}

inline std::vector<GridPoint> grid_points(const SweepSpec& spec) {
    std::vector<GridPoint> pts;
    bool carnapish = spec.family == "carnap";
    bool maherish = spec.family == "maher";
    bool iidish = spec.family == "iid";
    for (int n : spec.n_values) {
        auto lambdas = (carnapish || maherish) ? spec.lambda : std::vector<Rat>{Rat(0)};
        for (std::size_t li = 0; li < lambdas.size(); ++li) {
            auto pis = maherish ? spec.pr_i : std::vector<Rat>{Rat(0)};
            for (std::size_t pi = 0; pi < pis.size(); ++pi) {
                auto pfs = maherish ? spec.p_f : std::vector<Rat>{Rat(0)};
                for (std::size_t fi = 0; fi < pfs.size(); ++fi) {
                    auto pgs = maherish ? spec.p_g : std::vector<Rat>{Rat(0)};
                    for (std::size_t gi = 0; gi < pgs.size(); ++gi) {
                        auto gammas = (carnapish || iidish) ? spec.gammas
                                                            : std::vector<std::string>{""};
                        for (const std::string& g : gammas) {
                            GridPoint pt;
                            pt.n = n;
                            if (carnapish || maherish) pt.lambda = lambdas[li];
                            if (maherish) {
                                pt.pr_i = pis[pi];
                                pt.p_f = pfs[fi];
                                pt.p_g = pgs[gi];
                            }
                            pt.gamma = g;
                            pts.push_back(std::move(pt));
                        }
                    }
                }
            }
        }
    }
    return pts;
}

inline std::string conclusion_verdict_name(const GuardedResult& g) {
    if (!g.premise_holds) return "PREMISE_FAILS";
    return g.violated() ? "VIOLATED" : conclusion_name(g.conclusion);
}

}  // namespace detail

// One record per grid point, rules evaluated at each. Point order and
// per-rule results are deterministic; points are independent, so they may be
// evaluated concurrently and merged by index.
inline std::vector<GridRecord> grid_sweep(const SweepSpec& spec) {
    spec.validate();
    auto pts = detail::grid_points(spec);
    std::vector<GridRecord> records(pts.size());
    parallel_for(pts.size(), [&](std::size_t idx) {
        const auto& pt = pts[idx];
        Measure m = detail::build_grid_measure(spec, pt);
        GridRecord rec;
        rec.family = spec.family;
        rec.n = pt.n;
        rec.lambda = pt.lambda;
        rec.pr_i = pt.pr_i;
        rec.p_f = pt.p_f;
        rec.p_g = pt.p_g;
        rec.gamma = pt.gamma;
        for (const std::string& rule : spec.rules) {
            if (rule == "nc") {
                RuleResult rr{.rule = "nc"};
                Verdict v = check_nc(m, Prop::top(), 1);
                rr.lhs = v.lhs;
                rr.rhs = v.rhs;
                rr.verdict = relation_name(v.relation);
                QuantifiedCheck all =
                    nc_over_backgrounds(m, spec.background, spec.max_backgrounds);
                rr.premise1 = all.holds;
                if (!all.witnesses.empty()) rr.witness = all.witnesses.front();
                rec.rules.push_back(std::move(rr));
            } else if (rule == "pj") {
                RuleResult rr{.rule = "pj"};
                bool holds = true;
                std::string witness;
                for (CatSet psi : delta_constraints()) {
                    auto q = pj_quantified(m, psi, PjMode::weak,
                                           spec.max_backgrounds);
                    if (!q.holds) {
                        holds = false;
                        if (witness.empty() && !q.witnesses.empty()) witness = q.witnesses.front();
                    }
                }
                rr.premise1 = holds;
                rr.verdict = holds ? "holds" : "fails";
                rr.witness = witness;
                GuardedResult one = check_pj(m, cat_g, 1, 2, Prop::top(), PjMode::weak);
                rr.lhs = one.lhs;
                rr.rhs = one.rhs;
                rec.rules.push_back(std::move(rr));
            } else if (rule == "ra") {
                RuleResult rr{.rule = "ra"};
                auto q = ra_quantified(m, spec.max_backgrounds);
                rr.premise1 = q.holds;
                rr.verdict = q.holds ? "holds" : "fails";
                if (!q.witnesses.empty()) rr.witness = q.witnesses.front();
                GuardedResult one = check_ra(m, 1, 2, Prop::top());
                rr.lhs = one.lhs;
                rr.rhs = one.rhs;
                rec.rules.push_back(std::move(rr));
            } else if (rule == "xi") {
                RuleResult rr{.rule = "xi"};
                XiFactors xi = xi_factors(m, Prop::top(), 1);
                rr.lhs = xi.product;
                rr.rhs = Rat(1);
                rr.verdict = xi.product > 1 ? "CONFIRMS" : "NOT_CONFIRMS";
                rec.rules.push_back(std::move(rr));
            } else if (rule == "thm1") {
                RuleResult rr{.rule = "thm1"};
                GuardedResult g = theorem1_premise_sweep(m);
                rr.premise1 = g.premise_holds;
                rr.verdict = detail::conclusion_verdict_name(g);
                if (!g.witnesses.empty()) rr.witness = g.witnesses.front();
                rec.rules.push_back(std::move(rr));
            } else if (rule == "thm2") {
                RuleResult rr{.rule = "thm2"};
                Theorem2Result t2 = theorem2_premise_check(m, Prop::top(), 1);
                rr.premise1 = t2.restriction_strict_confirmation;
                rr.premise2 = t2.restriction_tail_bound;
                rr.lhs = t2.nc.lhs;
                rr.rhs = t2.nc.rhs;
                rr.verdict = detail::conclusion_verdict_name(t2.implication) + "/NC=" +
                             relation_name(t2.nc.relation);
                rec.rules.push_back(std::move(rr));
            } else if (rule == "thm4" || rule == "thm5") {
                std::vector<int> ks = spec.k_values;
                if (ks.empty())
                    for (int k = 1; k <= pt.n; ++k) ks.push_back(k);
                for (int k : ks) {
                    if (k < 1 || k > pt.n) continue;
                    Setting2Report rep = setting2_checks(m, k, 1);
                    const GuardedResult& g = rule == "thm4" ? rep.theorem4 : rep.theorem5_pj;
                    RuleResult rr{.rule = rule, .k = k};
                    rr.premise1 = g.premise_holds;
                    rr.verdict = detail::conclusion_verdict_name(g);
                    if (!g.witnesses.empty()) rr.witness = g.witnesses.front();
                    rec.rules.push_back(std::move(rr));
                }
            }
        }
        records[idx] = std::move(rec);
    });
    return records;
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// One row per (grid point, rule); exact rationals plus display-only decimals.
inline void write_sweep_csv(std::ostream& os, const std::vector<GridRecord>& records) {
    os << "family,n,k,lambda,prI,pF,pG,gamma,rule,lhs,rhs,lhs_dec,rhs_dec,verdict,"
          "premise1,premise2,witness\n";
    auto opt = [](const std::optional<Rat>& r) { return r ? to_fraction_string(*r) : ""; };
    auto dec = [](const std::optional<Rat>& r) { return r ? to_decimal_string(*r) : ""; };
    for (const auto& rec : records)
        for (const auto& rr : rec.rules) {
            os << rec.family << "," << rec.n << "," << rr.k << "," << opt(rec.lambda) << ","
               << opt(rec.pr_i) << "," << opt(rec.p_f) << "," << opt(rec.p_g) << ","
               << csv_escape(rec.gamma) << "," << rr.rule << "," << opt(rr.lhs) << ","
               << opt(rr.rhs) << "," << dec(rr.lhs) << "," << dec(rr.rhs) << "," << rr.verdict
               << "," << (rr.premise1 ? 1 : 0) << "," << (rr.premise2 ? 1 : 0) << ","
               << csv_escape(rr.witness) << "\n";
        }
}

// ---------------------------------------------------------------------------
// Threshold bisection.

struct BisectResult {
    Rat lo, hi;          // final bracket, predicate differs at the ends
    bool lo_value = false, hi_value = false;
    int evaluations = 0;
};

// Rational-midpoint bisection down to the requested width. The output is a
// bracket, never a claimed root; thresholds need not be rational.
inline BisectResult bisect_threshold(const std::function<bool(const Rat&)>& predicate, Rat lo,
                                     Rat hi, const Rat& max_width = Rat(1, 1 << 20)) {
    if (lo >= hi) throw std::invalid_argument("bisection needs lo < hi");
    BisectResult out;
    out.lo_value = predicate(lo);
    out.hi_value = predicate(hi);
    out.evaluations = 2;
    if (out.lo_value == out.hi_value)
        throw std::invalid_argument("predicate does not change over the interval");
    while (hi - lo > max_width) {
        Rat mid = (lo + hi) / 2;
        bool v = predicate(mid);
        ++out.evaluations;
        if (v == out.lo_value)
            lo = mid;
        else
            hi = mid;
    }
    out.lo = lo;
    out.hi = hi;
    return out;
}

// Predicate flags a bisection can track while one mixture-family parameter
// moves; the rest of the parameters stay fixed.
inline std::function<bool(const Rat&)> maher_flag_predicate(
    const std::string& flag, int n, const std::string& moving,
    std::map<std::string, Rat> fixed) {
    auto value = [fixed](const std::string& key, const Rat& moving_value,
                         const std::string& moving_key) {
        if (key == moving_key) return moving_value;
        auto it = fixed.find(key);
        if (it == fixed.end())
            throw std::invalid_argument("missing fixed parameter '" + key + "'");
        return it->second;
    };
    return [flag, n, moving, value](const Rat& x) {
        Measure m = maher_measure(n, value("l", x, moving), value("pi", x, moving),
                                  value("pf", x, moving), value("pg", x, moving));
        if (flag == "thm2_restriction1")
            return detail::counterexample_confirmation_sweep(m, /*strict=*/true).holds;
        if (flag == "thm2_restriction2") {
            DeltaClass top = classify_background(Prop::top(), n);
            return detail::tail_bound_holds(m, top, Event::all(n), 1);
        }
        if (flag == "nc_confirms")
            return check_nc(m, Prop::top(), 1).relation == Relation::confirms;
        if (flag == "thm1_premise")
            return detail::counterexample_confirmation_sweep(m, /*strict=*/false).holds;
        throw std::invalid_argument("unknown predicate flag '" + flag + "'");
    };
}

// ---------------------------------------------------------------------------
// Randomized property trials across the rule checkers.

struct TrialConfig {
    std::uint64_t seed = 7;
    int trials = 200;
    int n_min = 2;
    int n_max = 4;
    bool plant_broken_theorem = false;  // harness self-test: must produce violations
};

struct TrialViolation {
    std::string property;
    std::uint64_t seed;
    int trial = 0;
    std::string witness;
};

struct TrialReport {
    TrialConfig config;
    int trials_run = 0;
    std::vector<TrialViolation> violations;
    int informative_counterexamples = 0;  // non-theorem conjectures that failed
    std::vector<std::string> notes;

    std::string to_text() const {
        std::string out = "trials=" + std::to_string(trials_run) +
                          " seed=" + std::to_string(config.seed) +
                          " violations=" + std::to_string(violations.size()) +
                          " informative=" + std::to_string(informative_counterexamples) + "\n";
        for (const auto& v : violations)
            out += "violation " + v.property + " trial=" + std::to_string(v.trial) +
                   " seed=" + std::to_string(v.seed) + " " + v.witness + "\n";
        for (const auto& n : notes) out += "note " + n + "\n";
        return out;
    }
};

namespace detail {

struct TrialContext {
    const Measure& m;
    int trial;
    std::uint64_t seed;
    TrialReport& report;

    void violation(const std::string& property, const std::string& witness) const {
        report.violations.push_back({property, seed, trial, witness});
    }
};

inline void trial_xi_equivalence(const TrialContext& ctx) {
    const Measure& m = ctx.m;
    int n = m.universe_size();
    auto bgs = enumerate_backgrounds(n, {}, EnumerationFamily::small_delta);
    for (const Prop& d : bgs.members) {
        auto mentioned = d.mentioned_objects();
        for (int a = 1; a <= n; ++a) {
            if (mentioned.count(a)) continue;
            Verdict v = check_nc(m, d, a);
            if (!v.defined()) continue;
            XiFactors xi;
            try {
                xi = xi_factors(m, d, a);
            } catch (const UndefinedConditional&) {
                continue;
            }
            bool nc = v.relation == Relation::confirms;
            if (nc != (xi.product > 1))
                ctx.violation("xi-equivalence",
                              "a=" + std::to_string(a) + " product=" +
                                  to_fraction_string(xi.product) + " nc=" +
                                  relation_name(v.relation));
        }
    }
}

inline void trial_theorem1(const TrialContext& ctx) {
    if (ctx.m.universe_size() > theorem_sweep_cap) return;
    GuardedResult g = theorem1_premise_sweep(ctx.m);
    if (g.violated())
        ctx.violation("theorem1", g.witnesses.empty() ? "premise implies NC sweep"
                                                      : g.witnesses.front());
}

inline void trial_theorem2(const TrialContext& ctx) {
    const Measure& m = ctx.m;
    int n = m.universe_size();
    if (n > theorem_sweep_cap) return;
    if (!counterexample_confirmation_sweep(m, /*strict=*/true).holds) return;
    auto bgs = enumerate_backgrounds(n, {}, EnumerationFamily::small_delta);
    for (const Prop& d : bgs.members) {
        DeltaClass dc = classify_background(d, n);
        Event ed = d.event(n);
        for (int a = 1; a <= n; ++a) {
            if (dc.constraints.count(a)) continue;
            if (!tail_bound_holds(m, dc, ed, a)) continue;
            Verdict v = check_nc(m, d, a);
            if (v.defined() && !v.nc_fails())
                ctx.violation("theorem2", "NC " + relation_name(v.relation) +
                                              " under both restrictions, a=" + std::to_string(a));
        }
    }
}

inline void trial_setting2(const TrialContext& ctx) {
    const Measure& m = ctx.m;
    int n = m.universe_size();
    for (int k = 1; k <= n; ++k)
        for (int a = 1; a <= n; ++a) {
            Setting2Report rep = setting2_checks(m, k, a);
            auto blame = [&](const char* name, const GuardedResult& g) {
                if (g.violated())
                    ctx.violation(name, "k=" + std::to_string(k) + " a=" + std::to_string(a) +
                                            (g.witnesses.empty() ? "" : " " + g.witnesses.front()));
            };
            blame("theorem4", rep.theorem4);
            blame("theorem3-pj", rep.theorem3_pj);
            blame("theorem5-pj", rep.theorem5_pj);
            blame("theorem3-ra", rep.theorem3_ra);
            blame("theorem5-ra", rep.theorem5_ra);
        }
}

inline void trial_group_pj(const TrialContext& ctx, Rng& rng) {
    const Measure& m = ctx.m;
    int n = m.universe_size();
    for (int round = 0; round < 4; ++round) {
        CatSet psi = random_catset(rng);
        if (psi.full()) psi = cat_g;
        int a = static_cast<int>(rng.between(1, n));
        // arbitrary nonempty subset of the other objects, in random order
        std::vector<int> pool;
        for (int b = 1; b <= n; ++b)
            if (b != a) pool.push_back(b);
        for (std::size_t i = pool.size(); i > 1; --i)
            std::swap(pool[i - 1], pool[rng.below(i)]);
        std::vector<int> group(pool.begin(),
                               pool.begin() + 1 + rng.below(pool.size()));
        Prop d = round % 2 == 0
                     ? Prop::top()
                     : enumerate_backgrounds(n, {a}, EnumerationFamily::small_delta)
                           .members[rng.below(1 << (2 * (n - 1)))];
        GuardedResult g = group_pj_check(m, psi, group, a, d);
        if (g.violated())
            ctx.violation("group-pj", "psi mask=" + std::to_string(psi.mask()) +
                                          " a=" + std::to_string(a));
    }
}

inline void trial_informative_conjectures(const TrialContext& ctx) {
    // not a theorem, recorded as informative only: "every exchangeable
    // measure weakly projects G". Refuted by e.g. count-conditioned measures.
    const Measure& m = ctx.m;
    if (!m.is_exchangeable()) return;
    auto q = pj_quantified(m, cat_g, PjMode::weak, 64);
    if (!q.holds) ++ctx.report.informative_counterexamples;
}

inline void trial_hypergeometric(const TrialContext& ctx) {
    const Measure& m = ctx.m;
    if (!m.is_exchangeable()) return;
    int n = m.universe_size();
    for (int k = 1; k <= n; ++k) {
        Event exact = Prop::exact(k).event(n);
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                if (a == b) continue;
                Event fa = Event::of_categories(n, a, cat_f);
                Event fb = Event::of_categories(n, b, cat_f);
                auto with_a = m.try_conditional(fb, fa & exact);
                auto base = m.try_conditional(fb, exact);
                if (base && *base != Rat(k, n))
                    ctx.violation("hypergeometric", "pr(F_b|count) != k/n");
                if (with_a && *with_a != Rat(k - 1, n - 1))
                    ctx.violation("hypergeometric", "pr(F_b|F_a.count) != (k-1)/(n-1)");
            }
    }
}

inline void trial_h_reduction(const TrialContext& ctx, Rng& rng) {
    // with D naming the F objects, H reduces to "the named objects are G",
    // whatever else the evidence says
    const Measure& m = ctx.m;
    int n = m.universe_size();
    Event h = Prop::h().event(n);
    for (int k = 1; k <= n; ++k) {
        std::vector<int> first_k(k);
        for (int i = 0; i < k; ++i) first_k[i] = i + 1;
        Event d0 = z_event(first_k, n);
        Event g_named = Event::all(n);
        for (int i = 1; i <= k; ++i) g_named &= Event::of_categories(n, i, cat_g);
        for (int round = 0; round < 3; ++round) {
            Event e = random_proposition(rng, n).event(n);
            auto lhs = m.try_conditional(h, e & d0);
            auto rhs = m.try_conditional(g_named, e & d0);
            if (lhs.has_value() != rhs.has_value() || (lhs && *lhs != *rhs))
                ctx.violation("h-reduction", "k=" + std::to_string(k));
        }
    }
}

inline void trial_permutation_lemmas(const TrialContext& ctx) {
    int n = ctx.m.universe_size();
    if (n > 4) return;
    Event h = Prop::h().event(n);
    Permutation::for_each(n, [&](const Permutation& pi) {
        if (!(Prop::h().permuted(pi).event(n) == h)) ctx.violation("permutation-h", "");
        for (int k = 0; k <= n; ++k) {
            Event exact = Prop::exact(k).event(n);
            if (!(Prop::exact(k).permuted(pi).event(n) == exact))
                ctx.violation("permutation-exact", "k=" + std::to_string(k));
        }
        for (const auto& c : combinations(n, n / 2)) {
            std::vector<int> image;
            for (int b : c) image.push_back(pi(b));
            if (!(z_event(c, n).permuted(pi) == z_event(image, n)))
                ctx.violation("permutation-z", "");
        }
    });
}

inline void trial_proposition1(const TrialContext& ctx, Rng& rng) {
    CategoryPrior theta = random_prior(rng);
    int alpha = 2, beta = 4;
    std::vector<Rat> q;
    std::vector<Measure> comps;
    std::array<Int, 3> draws;
    Int total = 0;
    for (auto& d : draws) {
        d = Int(rng.between(1, 9));
        total += d;
    }
    for (int v = alpha; v <= beta; ++v) {
        q.push_back(make_rat(draws[v - alpha], total));
        comps.push_back(iid_product_measure(v, theta));
    }
    MixtureModel mix(alpha, beta, std::move(q), std::move(comps));
    GuardedResult g = proposition1_check(mix, Prop::atom(1, cat_fg), Prop::top());
    if (g.violated()) ctx.violation("proposition1", "iid mixture");
}

inline void trial_planted_broken(const TrialContext& ctx) {
    // deliberately false "theorem": exchangeability would force FG_1 to leave
    // pr(H) untouched; used to prove the harness can see violations at all
    const Measure& m = ctx.m;
    if (!m.is_exchangeable()) return;
    Verdict v = check_nc(m, Prop::top(), 1);
    if (v.defined() && v.relation != Relation::neutral)
        ctx.violation("planted-broken-theorem", relation_name(v.relation));
}

}  // namespace detail

// Runs every guarded property against a rotating family of seeded measures.
// Violations are theorem breaches and must number zero; the report is
// byte-identical for identical configs.
inline TrialReport random_trials(const TrialConfig& config) {
    TrialReport report;
    report.config = config;
    for (int t = 0; t < config.trials; ++t) {
        std::uint64_t seed_t = mix_seed(config.seed, static_cast<std::uint64_t>(t));
        int span = config.n_max - config.n_min + 1;
        int n = config.n_min + (t % std::max(1, span));
        Measure m = random_trial_measure(n, seed_t, t);
        detail::TrialContext ctx{m, t, seed_t, report};
        Rng rng(mix_seed(seed_t, 1));
        detail::trial_xi_equivalence(ctx);
        detail::trial_theorem1(ctx);
        detail::trial_theorem2(ctx);
        detail::trial_setting2(ctx);
        detail::trial_group_pj(ctx, rng);
        detail::trial_informative_conjectures(ctx);
        detail::trial_hypergeometric(ctx);
        detail::trial_h_reduction(ctx, rng);
        detail::trial_permutation_lemmas(ctx);
        if (t % 8 == 0) detail::trial_proposition1(ctx, rng);
        if (config.plant_broken_theorem) detail::trial_planted_broken(ctx);
        ++report.trials_run;
    }
    return report;
}

}  // namespace ravenlab
