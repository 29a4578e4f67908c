#pragma once

#include "ravenlab/background.hpp"
#include "ravenlab/measure.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ravenlab {

// Exhaustive background sweeps are bounded by design; beyond this size the
// factored-background space (13^n members) stops being desk-scale.
inline constexpr int theorem_sweep_cap = 5;

enum class Relation { confirms, disconfirms, neutral, refutes, undefined };

inline std::string relation_name(Relation r) {
    switch (r) {
        case Relation::confirms: return "CONFIRMS";
        case Relation::disconfirms: return "DISCONFIRMS";
        case Relation::neutral: return "NEUTRAL";
        case Relation::refutes: return "REFUTES";
        case Relation::undefined: return "UNDEFINED";
    }
    return "?";
}

inline std::optional<Relation> relation_from_name(std::string_view s) {
    for (Relation r : {Relation::confirms, Relation::disconfirms, Relation::neutral,
                       Relation::refutes, Relation::undefined})
        if (relation_name(r) == s) return r;
    return std::nullopt;
}

// Outcome of one confirmation comparison: lhs = pr(H|E.D), rhs = pr(H|D).
struct Verdict {
    Relation relation = Relation::undefined;
    std::optional<Rat> lhs, rhs;

    bool defined() const { return relation != Relation::undefined; }
    // "the rule fails" in the non-strict sense: no strict increase
    bool nc_fails() const {
        return relation == Relation::disconfirms || relation == Relation::neutral ||
               relation == Relation::refutes;
    }
};

enum class Conclusion { holds, fails, not_evaluated };

inline std::string conclusion_name(Conclusion c) {
    switch (c) {
        case Conclusion::holds: return "holds";
        case Conclusion::fails: return "fails";
        case Conclusion::not_evaluated: return "not_evaluated";
    }
    return "?";
}

// Uniform shape for every guarded theorem check. A violation is a state of
// the world the theorems forbid: premise satisfied but conclusion false.
struct GuardedResult {
    bool premise_holds = false;
    Conclusion conclusion = Conclusion::not_evaluated;
    std::optional<Rat> lhs, rhs;
    std::vector<std::string> witnesses;

    bool violated() const { return premise_holds && conclusion == Conclusion::fails; }
};

struct XiFactors {
    Rat xi1, xi2, product;
};

inline Verdict confirmation_verdict(const Measure& m, const Prop& hypothesis,
                                    const Prop& evidence, const Prop& background) {
    int n = m.universe_size();
    Event eh = hypothesis.event(n);
    Event ee = evidence.event(n);
    Event ed = background.event(n);
    Verdict v;
    auto rhs = m.try_conditional(eh, ed);
    auto lhs = m.try_conditional(eh, ee & ed);
    if (!lhs || !rhs) return v;  // undefined
    v.lhs = *lhs;
    v.rhs = *rhs;
    if (*lhs == 0)
        v.relation = Relation::refutes;
    else if (*lhs > *rhs)
        v.relation = Relation::confirms;
    else if (*lhs < *rhs)
        v.relation = Relation::disconfirms;
    else
        v.relation = Relation::neutral;
    return v;
}

// Nicod's condition at one background: does FG_a strictly raise pr(H|D)?
inline Verdict check_nc(const Measure& m, const Prop& background, int a) {
    check_object(a, m.universe_size());
    return confirmation_verdict(m, Prop::h(), Prop::atom(a, cat_fg), background);
}

namespace detail {

// true when pr(event | given) is defined and strictly between 0 and 1,
// i.e. `given` does not determine the event
inline bool undetermined(const Measure& m, const Event& e, const Event& given) {
    auto p = m.try_conditional(e, given);
    return p && *p > 0 && *p < 1;
}

inline std::string describe_instance(const char* rule, int a, int b, const Prop& d) {
    return std::string(rule) + " instance a=" + std::to_string(a) + " b=" + std::to_string(b) +
           " D=" + [&] {
               // avoid dragging the full printer in here; mentioned objects suffice
               std::string s = "{";
               for (int o : d.mentioned_objects()) s += std::to_string(o) + ",";
               s += "}";
               return s;
           }();
}

}  // namespace detail

enum class PjMode { weak, strong };

// Projectability of a predicate from one object to another. The premise is
// the rule's own precondition: D is a factored background that determines
// neither instance. NOT_EVALUATED when the precondition fails.
inline GuardedResult check_pj(const Measure& m, CatSet psi, int a, int b, const Prop& d,
                              PjMode mode) {
    int n = m.universe_size();
    GuardedResult r;
    if (a == b || a < 1 || b < 1 || a > n || b > n || psi.empty() || psi.full()) return r;
    if (!classify_background(d, n).in_delta()) {
        r.witnesses.push_back("background is not a factored (per-object) proposition");
        return r;
    }
    Event ed = d.event(n);
    Event pa = Event::of_categories(n, a, psi);
    Event pb = Event::of_categories(n, b, psi);
    if (!detail::undetermined(m, pa, ed) || !detail::undetermined(m, pb, ed)) return r;
    r.premise_holds = true;
    r.lhs = m.conditional(pb, pa & ed);
    r.rhs = m.conditional(pb, ed);
    bool ok = mode == PjMode::weak ? *r.lhs >= *r.rhs : *r.lhs > *r.rhs;
    r.conclusion = ok ? Conclusion::holds : Conclusion::fails;
    return r;
}

// Reasoning by analogy: a shared property makes shared hidden properties
// more likely. Strict inequality.
inline GuardedResult check_ra(const Measure& m, int a, int b, const Prop& d) {
    int n = m.universe_size();
    GuardedResult r;
    if (a == b || a < 1 || b < 1 || a > n || b > n) return r;
    if (!classify_background(d, n).in_delta()) {
        r.witnesses.push_back("background is not a factored (per-object) proposition");
        return r;
    }
    Event ed = d.event(n);
    Event fa = Event::of_categories(n, a, cat_f);
    Event ga = Event::of_categories(n, a, cat_g);
    Event fb = Event::of_categories(n, b, cat_f);
    Event gb = Event::of_categories(n, b, cat_g);
    if (!detail::undetermined(m, fa, ed) || !detail::undetermined(m, ga, ed) ||
        !detail::undetermined(m, gb, ed))
        return r;
    Event fga = Event::of_categories(n, a, cat_fg);
    auto lhs = m.try_conditional(gb, fb & fga & ed);
    auto rhs = m.try_conditional(gb, fb & ed);
    if (!lhs || !rhs) return r;
    r.premise_holds = true;
    r.lhs = *lhs;
    r.rhs = *rhs;
    r.conclusion = *lhs > *rhs ? Conclusion::holds : Conclusion::fails;
    return r;
}

// The two-factor criterion for Nicod's condition under complete-description
// backgrounds: xi1 tracks how the observation shifts the unobserved objects,
// xi2 the elimination of one possible counterexample; NC holds iff their
// product exceeds one.
inline XiFactors xi_factors(const Measure& m, const Prop& d, int a) {
    int n = m.universe_size();
    check_object(a, n);
    DeltaClass dc = classify_background(d, n);
    if (!dc.in_small_delta())
        throw std::invalid_argument(
            "xi factors need a complete-description background compatible with H");
    if (dc.constraints.count(a))
        throw std::invalid_argument("object a must not be described by the background");

    Event ed = d.event(n);
    Event rest = Event::all(n);
    for (int b = 1; b <= n; ++b)
        if (b != a && !dc.constraints.count(b))
            rest &= Event::of_categories(n, b, cat_f_implies_g);  // top when none

    Event fga = Event::of_categories(n, a, cat_fg);
    Event impl_a = Event::of_categories(n, a, cat_f_implies_g);

    XiFactors out;
    Rat rest_given_d = m.conditional(rest, ed);
    if (rest_given_d == 0) throw UndefinedConditional("xi1 denominator is zero");
    out.xi1 = m.conditional(rest, fga & ed) / rest_given_d;
    Rat impl = m.conditional(impl_a, rest & ed);
    if (impl == 0) throw UndefinedConditional("xi2 denominator is zero");
    out.xi2 = 1 / impl;
    out.product = out.xi1 * out.xi2;
    return out;
}

struct QuantifiedCheck {
    bool holds = true;
    std::size_t instances = 0;
    std::size_t skipped = 0;
    bool truncated = false;
    std::vector<std::string> witnesses;
};

// PJ as a measure-level predicate: quantified over object pairs and the
// canonical factored backgrounds avoiding them. Instances whose
// preconditions fail are skipped, not counted against the measure.
inline QuantifiedCheck pj_quantified(const Measure& m, CatSet psi, PjMode mode,
                                     std::size_t max_backgrounds = SIZE_MAX) {
    int n = m.universe_size();
    QuantifiedCheck out;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (a == b) continue;
            auto bgs = enumerate_backgrounds(n, {a, b}, EnumerationFamily::delta, max_backgrounds);
            out.truncated = out.truncated || bgs.truncated;
            for (const Prop& d : bgs.members) {
                GuardedResult r = check_pj(m, psi, a, b, d, mode);
                if (!r.premise_holds) {
                    ++out.skipped;
                    continue;
                }
                ++out.instances;
                if (r.conclusion != Conclusion::holds) {
                    out.holds = false;
                    if (out.witnesses.size() < 5)
                        out.witnesses.push_back(detail::describe_instance("PJ", a, b, d) +
                                                " lhs=" + to_fraction_string(*r.lhs) +
                                                " rhs=" + to_fraction_string(*r.rhs));
                }
            }
        }
    return out;
}

inline QuantifiedCheck ra_quantified(const Measure& m, std::size_t max_backgrounds = SIZE_MAX) {
    int n = m.universe_size();
    QuantifiedCheck out;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (a == b) continue;
            auto bgs = enumerate_backgrounds(n, {a, b}, EnumerationFamily::delta, max_backgrounds);
            out.truncated = out.truncated || bgs.truncated;
            for (const Prop& d : bgs.members) {
                GuardedResult r = check_ra(m, a, b, d);
                if (!r.premise_holds) {
                    ++out.skipped;
                    continue;
                }
                ++out.instances;
                if (r.conclusion != Conclusion::holds) {
                    out.holds = false;
                    if (out.witnesses.size() < 5)
                        out.witnesses.push_back(detail::describe_instance("RA", a, b, d) +
                                                " lhs=" + to_fraction_string(*r.lhs) +
                                                " rhs=" + to_fraction_string(*r.rhs));
                }
            }
        }
    return out;
}

// NC across every background of the family and every undescribed object;
// the complete-description family is the one theorem conclusions use.
inline QuantifiedCheck nc_over_backgrounds(const Measure& m, EnumerationFamily family,
                                           std::size_t max_backgrounds = SIZE_MAX) {
    int n = m.universe_size();
    QuantifiedCheck out;
    auto bgs = enumerate_backgrounds(n, {}, family, max_backgrounds);
    out.truncated = bgs.truncated;
    for (const Prop& d : bgs.members) {
        auto mentioned = d.mentioned_objects();
        for (int a = 1; a <= n; ++a) {
            if (mentioned.count(a)) continue;
            Verdict v = check_nc(m, d, a);
            if (!v.defined()) {
                ++out.skipped;
                continue;
            }
            ++out.instances;
            if (v.relation != Relation::confirms) {
                out.holds = false;
                if (out.witnesses.size() < 5)
                    out.witnesses.push_back("NC " + relation_name(v.relation) + " at a=" +
                                            std::to_string(a) + " D mentioning " +
                                            std::to_string(mentioned.size()) + " objects, lhs=" +
                                            to_fraction_string(*v.lhs) + " rhs=" +
                                            to_fraction_string(*v.rhs));
            }
        }
    }
    return out;
}

inline QuantifiedCheck nc_over_small_delta(const Measure& m) {
    return nc_over_backgrounds(m, EnumerationFamily::small_delta);
}

namespace detail {

// Sweeps pr(F~G_b | FG_a . B) against pr(F~G_b | B) over the full canonical
// factored-background space. `strict` selects which side of the comparison
// counts as a pass (<= for the confirmation-free premise, > for the
// confirmation premise). Undefined instances are skipped.
inline QuantifiedCheck counterexample_confirmation_sweep(const Measure& m, bool strict) {
    int n = m.universe_size();
    if (n > theorem_sweep_cap)
        throw std::invalid_argument("premise sweep bounded to n <= " +
                                    std::to_string(theorem_sweep_cap));
    QuantifiedCheck out;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (a == b) continue;
            Event fga = Event::of_categories(n, a, cat_fg);
            Event fng_b = Event::of_categories(n, b, cat_f_not_g);
            auto bgs = enumerate_backgrounds(n, {a, b}, EnumerationFamily::delta);
            for (const Prop& bprop : bgs.members) {
                Event eb = bprop.event(n);
                auto rhs = m.try_conditional(fng_b, eb);
                auto lhs = m.try_conditional(fng_b, fga & eb);
                if (!lhs || !rhs) {
                    ++out.skipped;
                    continue;
                }
                ++out.instances;
                bool ok = strict ? *lhs > *rhs : *lhs <= *rhs;
                if (!ok) {
                    out.holds = false;
                    if (out.witnesses.size() < 5)
                        out.witnesses.push_back(
                            detail::describe_instance("premise", a, b, bprop) +
                            " lhs=" + to_fraction_string(*lhs) +
                            " rhs=" + to_fraction_string(*rhs));
                }
            }
        }
    return out;
}

}  // namespace detail

struct SweepCounts {
    std::size_t premise_instances = 0, premise_skipped = 0;
    std::size_t conclusion_instances = 0, conclusion_skipped = 0;
};

// First sufficient condition: if observing a confirming instance never
// confirms that another object is a counterexample (over every factored
// background), then NC holds for every complete-description background.
inline GuardedResult theorem1_premise_sweep(const Measure& m, SweepCounts* counts = nullptr) {
    GuardedResult out;
    QuantifiedCheck premise = detail::counterexample_confirmation_sweep(m, /*strict=*/false);
    out.premise_holds = premise.holds;
    out.witnesses = premise.witnesses;
    if (counts) {
        counts->premise_instances = premise.instances;
        counts->premise_skipped = premise.skipped;
    }
    if (!out.premise_holds) return out;
    QuantifiedCheck nc = nc_over_small_delta(m);
    if (counts) {
        counts->conclusion_instances = nc.instances;
        counts->conclusion_skipped = nc.skipped;
    }
    out.conclusion = nc.holds ? Conclusion::holds : Conclusion::fails;
    out.witnesses.insert(out.witnesses.end(), nc.witnesses.begin(), nc.witnesses.end());
    return out;
}

namespace detail {

// Restriction (ii) at one (D, a): the probability that the one remaining
// object breaks the generalization (given every other unobserved object
// complies) must stay below the counterexample-confirmation gap, whichever
// unobserved object the gap is measured on. False when no object is left.
inline bool tail_bound_holds(const Measure& m, const DeltaClass& dc, const Event& ed, int a) {
    int n = m.universe_size();
    std::vector<int> unmentioned;
    for (int b = 1; b <= n; ++b)
        if (b != a && !dc.constraints.count(b)) unmentioned.push_back(b);
    if (unmentioned.empty()) return false;
    Event rest = Event::all(n);
    for (int b : unmentioned) rest &= Event::of_categories(n, b, cat_f_implies_g);
    Event fga = Event::of_categories(n, a, cat_fg);
    Event fng_a = Event::of_categories(n, a, cat_f_not_g);
    auto tail = m.try_conditional(fng_a, rest & ed);
    if (!tail) return false;
    for (int b1 : unmentioned) {
        Event fng_b1 = Event::of_categories(n, b1, cat_f_not_g);
        auto with_e = m.try_conditional(fng_b1, fga & ed);
        auto without = m.try_conditional(fng_b1, ed);
        if (!with_e || !without || !(*tail < *with_e - *without)) return false;
    }
    return true;
}

}  // namespace detail

struct Theorem2Result {
    bool restriction_strict_confirmation = false;  // counterexample confirmation, strict
    bool restriction_tail_bound = false;           // generalization tail vs confirmation gap
    Verdict nc;
    GuardedResult implication;  // premise = both restrictions; conclusion = NC fails
};

// Second sufficient condition, at one background-object pair: if a confirming
// instance strictly confirms counterexamples everywhere, and the chance that
// the one remaining object breaks the generalization is below the
// confirmation gap for every unobserved object, NC must fail at (D, a).
inline Theorem2Result theorem2_premise_check(const Measure& m, const Prop& d, int a) {
    int n = m.universe_size();
    check_object(a, n);
    DeltaClass dc = classify_background(d, n);
    if (!dc.in_small_delta())
        throw std::invalid_argument("background must be a complete-description member");
    if (dc.constraints.count(a))
        throw std::invalid_argument("object a must not be described by the background");

    Theorem2Result out;
    QuantifiedCheck premise1 = detail::counterexample_confirmation_sweep(m, /*strict=*/true);
    out.restriction_strict_confirmation = premise1.holds;
    out.implication.witnesses = premise1.witnesses;
    out.restriction_tail_bound = detail::tail_bound_holds(m, dc, d.event(n), a);
    if (!out.restriction_tail_bound)
        out.implication.witnesses.push_back("tail bound does not hold at (D, a)");

    out.nc = check_nc(m, d, a);
    out.implication.premise_holds =
        out.restriction_strict_confirmation && out.restriction_tail_bound;
    out.implication.lhs = out.nc.lhs;
    out.implication.rhs = out.nc.rhs;
    if (out.implication.premise_holds) {
        if (!out.nc.defined())
            out.implication.conclusion = Conclusion::not_evaluated;
        else
            out.implication.conclusion =
                out.nc.nc_fails() ? Conclusion::holds : Conclusion::fails;
    }
    return out;
}

// Diagnostic sequence pr(~psi_a | psi over the first m other objects),
// m = 0..n-1. Falls toward zero for generalization-friendly measures.
inline std::vector<std::optional<Rat>> gaifman_trend(const Measure& m, CatSet psi, int a) {
    int n = m.universe_size();
    check_object(a, n);
    if (psi.empty() || psi.full()) throw std::invalid_argument("psi must be a proper subset");
    std::vector<int> others;
    for (int b = 1; b <= n; ++b)
        if (b != a) others.push_back(b);
    std::vector<std::optional<Rat>> out;
    Event given = Event::all(n);
    Event not_psi_a = Event::of_categories(n, a, psi.complement());
    out.push_back(m.try_conditional(not_psi_a, given));
    for (std::size_t i = 0; i < others.size(); ++i) {
        given &= Event::of_categories(n, others[i], psi);
        out.push_back(m.try_conditional(not_psi_a, given));
    }
    return out;
}

// Group projectability: one observed instance supports a whole group of
// instances. The premise lists exactly the pairwise instances the inductive
// proof consumes (suffix backgrounds over the group).
inline GuardedResult group_pj_check(const Measure& m, CatSet psi, const std::vector<int>& group,
                                    int a, const Prop& d) {
    int n = m.universe_size();
    check_object(a, n);
    GuardedResult out;
    if (!classify_background(d, n).in_delta()) return out;
    Event ed = d.event(n);
    Event pa = Event::of_categories(n, a, psi);
    if (!detail::undetermined(m, pa, ed)) return out;

    out.premise_holds = true;
    for (std::size_t i = group.size(); i-- > 0;) {
        int b = group[i];
        check_object(b, n);
        Event bg = ed;
        for (std::size_t j = i + 1; j < group.size(); ++j)
            bg &= Event::of_categories(n, group[j], psi);
        Event pb = Event::of_categories(n, b, psi);
        auto lhs = m.try_conditional(pb, pa & bg);
        auto rhs = m.try_conditional(pb, bg);
        if (!lhs || !rhs || *lhs < *rhs) {
            out.premise_holds = false;
            return out;
        }
    }

    Event pg = Event::all(n);
    for (int b : group) pg &= Event::of_categories(n, b, psi);
    auto lhs = m.try_conditional(pg, pa & ed);
    auto rhs = m.try_conditional(pg, ed);
    if (!lhs || !rhs) return out;
    out.lhs = *lhs;
    out.rhs = *rhs;
    out.conclusion = *lhs >= *rhs ? Conclusion::holds : Conclusion::fails;
    return out;
}

// ---------------------------------------------------------------------------
// Setting 2: the number of F objects is known.

struct Setting2Report {
    int k = 0, a = 0;
    GuardedResult theorem4;     // exchangeability -> exact-count/named-form equalities
    GuardedResult theorem3_pj;  // PJ proof instances -> named-form inequalities
    GuardedResult theorem5_pj;  // ... and exchangeability -> exact-count-form inequalities
    GuardedResult theorem3_ra;  // RA proof instances -> named-form strict confirmation
    GuardedResult theorem5_ra;  // ... and exchangeability -> exact-count-form strict confirmation

    bool violated() const {
        return theorem4.violated() || theorem3_pj.violated() || theorem5_pj.violated() ||
               theorem3_ra.violated() || theorem5_ra.violated();
    }
};

namespace detail {

struct Setting2Events {
    Event h, exact, d0;          // d0: objects 1..k are F, the rest are not
    Event fg_a, nfg_a, nfng_a;   // evidence on object a
    Event g_k, g_n, not_g_n;     // named-form evidence
};

inline Setting2Events setting2_events(int n, int k, int a) {
    std::vector<int> first_k(k);
    for (int i = 0; i < k; ++i) first_k[i] = i + 1;
    return Setting2Events{
        Prop::h().event(n),
        Prop::exact(k).event(n),
        z_event(first_k, n),
        Event::of_categories(n, a, cat_fg),
        Event::of_categories(n, a, cat_not_f_g),
        Event::of_categories(n, a, cat_not_f_not_g),
        Event::of_categories(n, k, cat_g),
        Event::of_categories(n, n, cat_g),
        Event::of_categories(n, n, cat_not_g),
    };
}

// One exact-equality comparison. Both sides undefined is vacuous. An
// undefined count-side conditional is also vacuous when the evidence is
// structurally impossible given the count (`lhs_may_vanish`; e.g. ~F_a
// evidence when every object is F), since then the named side carries no
// claim about it.
inline void require_equal(const Measure& m, const Event& h, const Event& lhs_given,
                          const Event& rhs_given, const char* label, GuardedResult& out,
                          bool lhs_may_vanish = false) {
    auto lhs = m.try_conditional(h, lhs_given);
    auto rhs = m.try_conditional(h, rhs_given);
    if (!lhs && (!rhs || lhs_may_vanish)) return;
    if (!lhs || !rhs || *lhs != *rhs) {
        out.conclusion = Conclusion::fails;
        std::string detail = !lhs   ? "lhs undefined"
                             : !rhs ? "rhs undefined"
                                    : "residual " + to_fraction_string(*lhs - *rhs);
        out.witnesses.push_back(std::string(label) + ": " + detail);
    }
}

enum class Cmp { less_equal, greater_equal, strictly_greater };

inline void require_cmp(const Measure& m, const Event& h, const Event& lhs_given,
                        const Event& rhs_given, Cmp cmp, const char* label, GuardedResult& out,
                        bool skip_when_undefined = true) {
    auto lhs = m.try_conditional(h, lhs_given);
    auto rhs = m.try_conditional(h, rhs_given);
    if (!lhs || !rhs) {
        if (!skip_when_undefined) {
            out.conclusion = Conclusion::fails;
            out.witnesses.push_back(std::string(label) + ": undefined conditional");
        }
        return;
    }
    bool ok = cmp == Cmp::less_equal      ? *lhs <= *rhs
              : cmp == Cmp::greater_equal ? *lhs >= *rhs
                                          : *lhs > *rhs;
    if (!ok) {
        out.conclusion = Conclusion::fails;
        out.witnesses.push_back(std::string(label) + ": lhs=" + to_fraction_string(*lhs) +
                                " rhs=" + to_fraction_string(*rhs));
    }
}

// PJ instances the Group-PJ expansion consumes for evidence psi_a over
// `group`, with suffix backgrounds psi_{group[i+1..]} . d0.
inline bool pj_proof_instances_hold(const Measure& m, CatSet psi, const std::vector<int>& group,
                                    const Event& psi_a, const Event& d0, int n) {
    for (std::size_t i = group.size(); i-- > 0;) {
        Event bg = d0;
        for (std::size_t j = i + 1; j < group.size(); ++j)
            bg &= Event::of_categories(n, group[j], psi);
        Event pb = Event::of_categories(n, group[i], psi);
        auto lhs = m.try_conditional(pb, psi_a & bg);
        auto rhs = m.try_conditional(pb, bg);
        if (!lhs || !rhs || *lhs < *rhs) return false;
    }
    return true;
}

}  // namespace detail

// All Setting-2 theorem checks at one (k, a): the exact-count/named-form
// equalities under exchangeability, and the guarded confirmation
// inequalities under the projectability and analogy premises.
inline Setting2Report setting2_checks(const Measure& m, int k, int a) {
    int n = m.universe_size();
    check_object(a, n);
    if (k < 1 || k > n) throw std::out_of_range("k must be in [1, n]");
    Setting2Report out;
    out.k = k;
    out.a = a;
    auto ev = detail::setting2_events(n, k, a);
    bool exchangeable = m.is_exchangeable();

    // Theorem 4: with an exchangeable measure, conditioning on the bare count
    // equals conditioning on one canonical naming of which objects are F.
    out.theorem4.premise_holds = exchangeable;
    if (exchangeable) {
        out.theorem4.conclusion = Conclusion::holds;
        detail::require_equal(m, ev.h, ev.exact, ev.d0, "count-only", out.theorem4);
        detail::require_equal(m, ev.h, ev.exact & ev.fg_a, ev.d0 & ev.g_k, "evidence FG_a",
                              out.theorem4);
        detail::require_equal(m, ev.h, ev.exact & ev.nfg_a, ev.d0 & ev.g_n, "evidence ~F G_a",
                              out.theorem4, /*lhs_may_vanish=*/k == n);
        detail::require_equal(m, ev.h, ev.exact & ev.nfng_a, ev.d0 & ev.not_g_n,
                              "evidence ~F ~G_a", out.theorem4, /*lhs_may_vanish=*/k == n);
    }

    // Theorem 3 under PJ: named-form background.
    std::vector<int> group_71;  // {1..k-1}, evidence G_k
    for (int i = 1; i < k; ++i) group_71.push_back(i);
    std::vector<int> group_72;  // {1..k}, evidence G_N / ~G_N
    for (int i = 1; i <= k; ++i) group_72.push_back(i);

    Event g_first_k_minus_1 = Event::all(n);
    for (int i = 1; i < k; ++i) g_first_k_minus_1 &= Event::of_categories(n, i, cat_g);
    Event not_g_k = Event::of_categories(n, k, cat_not_g);
    // positivity behind the strict step of (G_k confirms): adding G_k to the
    // background must genuinely drop the probability
    bool strict_step_positive = m.probability(g_first_k_minus_1 & not_g_k & ev.d0) > 0;

    bool pj_71 = detail::pj_proof_instances_hold(m, cat_g, group_71, ev.g_k, ev.d0, n);
    bool pj_72 = detail::pj_proof_instances_hold(m, cat_g, group_72, ev.g_n, ev.d0, n);
    bool pj_73 = detail::pj_proof_instances_hold(m, cat_not_g, group_72, ev.not_g_n, ev.d0, n);

    out.theorem3_pj.premise_holds = pj_71 && pj_72 && pj_73 && strict_step_positive &&
                                    m.probability(ev.d0) > 0;
    if (out.theorem3_pj.premise_holds) {
        out.theorem3_pj.conclusion = Conclusion::holds;
        detail::require_cmp(m, ev.h, ev.g_k & ev.d0, ev.d0, detail::Cmp::strictly_greater,
                            "named G_k", out.theorem3_pj, false);
        detail::require_cmp(m, ev.h, ev.g_n & ev.d0, ev.d0, detail::Cmp::greater_equal,
                            "named G_N", out.theorem3_pj, false);
        detail::require_cmp(m, ev.h, ev.not_g_n & ev.d0, ev.d0, detail::Cmp::less_equal,
                            "named ~G_N", out.theorem3_pj, false);
    }

    // Theorem 5 under PJ: same inequalities against the bare count.
    out.theorem5_pj.premise_holds = out.theorem3_pj.premise_holds && exchangeable;
    if (out.theorem5_pj.premise_holds) {
        out.theorem5_pj.conclusion = Conclusion::holds;
        detail::require_cmp(m, ev.h, ev.exact & ev.fg_a, ev.exact, detail::Cmp::strictly_greater,
                            "count FG_a", out.theorem5_pj, false);
        detail::require_cmp(m, ev.h, ev.exact & ev.nfg_a, ev.exact, detail::Cmp::greater_equal,
                            "count ~F G_a", out.theorem5_pj);
        detail::require_cmp(m, ev.h, ev.exact & ev.nfng_a, ev.exact, detail::Cmp::less_equal,
                            "count ~F ~G_a", out.theorem5_pj);
    }

    // Reasoning by analogy: the proof consumes instances
    //   pr(G_i | F_i . FG_k . G_{1:i-1} . d0) > pr(G_i | F_i . G_{1:i-1} . d0)
    // plus the same positivity for the final strict step.
    bool ra_ok = strict_step_positive && m.probability(ev.d0) > 0;
    Event g_prefix = Event::all(n);
    for (int i = 1; ra_ok && i < k; ++i) {
        Event fi = Event::of_categories(n, i, cat_f);
        Event gi = Event::of_categories(n, i, cat_g);
        Event fgk = Event::of_categories(n, k, cat_fg);
        auto lhs = m.try_conditional(gi, fi & fgk & g_prefix & ev.d0);
        auto rhs = m.try_conditional(gi, fi & g_prefix & ev.d0);
        if (!lhs || !rhs || !(*lhs > *rhs)) ra_ok = false;
        g_prefix &= gi;
    }
    out.theorem3_ra.premise_holds = ra_ok;
    if (ra_ok) {
        out.theorem3_ra.conclusion = Conclusion::holds;
        detail::require_cmp(m, ev.h, ev.g_k & ev.d0, ev.d0, detail::Cmp::strictly_greater,
                            "named G_k (RA)", out.theorem3_ra, false);
    }
    out.theorem5_ra.premise_holds = ra_ok && exchangeable;
    if (out.theorem5_ra.premise_holds) {
        out.theorem5_ra.conclusion = Conclusion::holds;
        detail::require_cmp(m, ev.h, ev.exact & ev.fg_a, ev.exact, detail::Cmp::strictly_greater,
                            "count FG_a (RA)", out.theorem5_ra, false);
    }
    return out;
}

// ---------------------------------------------------------------------------
// The raven table.

// Reinterpret the measure under the predicate-role swap F' := not-G,
// G' := not-F; world w in primed coordinates has the weight of the
// corresponding unprimed world.
inline Measure role_swapped_measure(const Measure& m) {
    int n = m.universe_size();
    std::vector<Int> num(world_space_size(n));
    for (WorldCode w = 0; w < num.size(); ++w) {
        WorldCode s = 0;
        for (int b = 1; b <= n; ++b)
            s = with_category(s, b, role_swapped(world_category(w, b)));
        num[w] = m.numerators()[s];
    }
    return Measure(n, std::move(num), m.denominator(), m.provenance(),
                   m.description() + "+role-swap");
}

struct Table1Cell {
    Verdict verdict;
    std::string expected;  // what PJ/NC/RA predict for this cell
};

struct Table1 {
    int k = 0;
    std::array<std::string, 4> row_labels;
    std::array<std::string, 2> column_labels;
    std::array<std::array<Table1Cell, 2>, 4> cells;  // [row][column]
};

// Verdict matrix for the four observation types against "the number of F
// objects is known" (column 0) and "the number of non-G objects is known"
// (column 1, produced by the predicate-role swap, not a second engine).
inline Table1 table1_matrix(const Measure& m, int k) {
    int n = m.universe_size();
    if (k < 1 || k > n) throw std::out_of_range("k must be in [1, n]");
    if (!m.is_exchangeable())
        throw std::invalid_argument("the raven table requires an exchangeable measure");

    const std::array<Category, 4> rows = {Category::not_f_not_g, Category::f_not_g,
                                          Category::not_f_g, Category::f_g};
    Table1 out;
    out.k = k;
    out.row_labels = {"observation of a non-black non-raven (~F~G_a)",
                      "observation of a non-black raven (F~G_a)",
                      "observation of a black non-raven (~FG_a)",
                      "observation of a black raven (FG_a)"};
    out.column_labels = {"number of ravens known", "number of non-blacks known"};
    static const std::array<std::array<const char*, 2>, 4> expected = {{
        {"PJ: does not confirm; NC: confirms; RA: n/a",
         "PJ: confirms; NC: confirms; RA: confirms"},
        {"evidence refutes H", "evidence refutes H"},
        {"PJ: does not disconfirm; NC: n/a; RA: n/a",
         "PJ: does not disconfirm; NC: n/a; RA: n/a"},
        {"PJ: confirms; NC: confirms; RA: confirms",
         "PJ: does not confirm; NC: confirms; RA: n/a"},
    }};

    Measure primed = role_swapped_measure(m);
    Prop background = Prop::exact(k);
    for (int r = 0; r < 4; ++r) {
        Prop obs = Prop::atom(1, CatSet::of(rows[r]));
        Prop obs_primed = Prop::atom(1, CatSet::of(role_swapped(rows[r])));
        out.cells[r][0] = {confirmation_verdict(m, Prop::h(), obs, background), expected[r][0]};
        out.cells[r][1] = {confirmation_verdict(primed, Prop::h(), obs_primed, background),
                           expected[r][1]};
    }
    return out;
}

}  // namespace ravenlab
