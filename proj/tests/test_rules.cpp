#include "ravenlab/generate.hpp"
#include "ravenlab/parser.hpp"
#include "ravenlab/report.hpp"
#include "ravenlab/rules.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ravenlab;
using ravenlab::testing::brute_conditional;

TEST_CASE("confirmation verdicts") {
    Measure m = uniform_measure(2);
    Prop h = Prop::h();

    SECTION("a compatible complete observation confirms by eliminating a counterexample") {
        Verdict v = confirmation_verdict(m, h, parse_proposition("FG_1", 2), Prop::top());
        REQUIRE(v.relation == Relation::confirms);
        REQUIRE(*v.lhs == Rat(3, 4));
        REQUIRE(*v.rhs == Rat(9, 16));
    }
    SECTION("a counterexample observation refutes") {
        Verdict v = confirmation_verdict(m, h, parse_proposition("FnG_1", 2), Prop::top());
        REQUIRE(v.relation == Relation::refutes);
        REQUIRE(*v.lhs == 0);
    }
    SECTION("zero-probability conditions are undefined") {
        Verdict v = confirmation_verdict(m, h, Prop::bottom(), Prop::top());
        REQUIRE(v.relation == Relation::undefined);
        REQUIRE_FALSE(v.lhs.has_value());
    }
    SECTION("evidence G on a known non-F object, against the uniform reference") {
        Prop e = parse_proposition("G_2", 2);
        Prop d = parse_proposition("F_1.~F_2", 2);
        Verdict v = confirmation_verdict(m, h, e, d);
        REQUIRE(*v.lhs == brute_conditional(m, h, e.and_with(d)));
        REQUIRE(*v.rhs == brute_conditional(m, h, d));
        REQUIRE(*v.lhs >= *v.rhs);
    }
}

TEST_CASE("projectability checks") {
    SECTION("independence passes the weak form with equality") {
        Measure m = uniform_measure(2);
        for (CatSet psi : delta_constraints()) {
            GuardedResult r = check_pj(m, psi, 1, 2, Prop::top(), PjMode::weak);
            REQUIRE(r.premise_holds);
            REQUIRE(r.conclusion == Conclusion::holds);
            REQUIRE(*r.lhs == *r.rhs);
            REQUIRE(check_pj(m, psi, 1, 2, Prop::top(), PjMode::strong).conclusion ==
                    Conclusion::fails);
        }
    }
    SECTION("the chain measure projects strictly") {
        Measure m = carnap_measure(2, Rat(2), CategoryPrior::uniform());
        GuardedResult r = check_pj(m, cat_fg, 1, 2, Prop::top(), PjMode::strong);
        REQUIRE(r.premise_holds);
        REQUIRE(r.conclusion == Conclusion::holds);
        REQUIRE(*r.lhs == Rat(1, 2));
        REQUIRE(*r.rhs == Rat(1, 4));
    }
    SECTION("precondition failures are not evaluated") {
        Measure m = uniform_measure(2);
        REQUIRE_FALSE(check_pj(m, cat_f, 1, 1, Prop::top(), PjMode::weak).premise_holds);
        // background that pins down psi_a
        GuardedResult r =
            check_pj(m, cat_f, 1, 2, Prop::atom(1, cat_fg), PjMode::weak);
        REQUIRE_FALSE(r.premise_holds);
        REQUIRE(r.conclusion == Conclusion::not_evaluated);
        // non-factored background
        Prop linked = Prop::disjunction({Prop::atom(1, cat_fg), Prop::atom(2, cat_f_not_g)});
        REQUIRE_FALSE(check_pj(m, cat_f, 1, 2, linked, PjMode::weak).premise_holds);
    }
}

TEST_CASE("analogy checks") {
    SECTION("the chain measure reasons by analogy") {
        Measure m = carnap_measure(2, Rat(2), CategoryPrior::uniform());
        GuardedResult r = check_ra(m, 1, 2, Prop::top());
        REQUIRE(r.premise_holds);
        REQUIRE(r.conclusion == Conclusion::holds);
        REQUIRE(*r.lhs == brute_conditional(
                              m, parse_proposition("G_2", 2),
                              parse_proposition("F_2.FG_1", 2)));
    }
    SECTION("independence fails the strict form") {
        GuardedResult r = check_ra(uniform_measure(2), 1, 2, Prop::top());
        REQUIRE(r.premise_holds);
        REQUIRE(r.conclusion == Conclusion::fails);
        REQUIRE(*r.lhs == *r.rhs);
    }
    SECTION("the counterexample mixture admits an exact evaluation") {
        Measure m = maher_measure(2, Rat(2), Rat(1, 2), Rat(1, 1000), Rat(1, 10));
        GuardedResult r = check_ra(m, 1, 2, Prop::top());
        REQUIRE(r.premise_holds);
        REQUIRE(*r.lhs == brute_conditional(m, parse_proposition("G_2", 2),
                                            parse_proposition("F_2.FG_1", 2)));
        REQUIRE(*r.rhs == brute_conditional(m, parse_proposition("G_2", 2),
                                            parse_proposition("F_2", 2)));
    }
}

TEST_CASE("two-factor criterion") {
    SECTION("uniform, empty background") {
        XiFactors xi = xi_factors(uniform_measure(2), Prop::top(), 1);
        REQUIRE(xi.xi1 == 1);
        REQUIRE(xi.xi2 == Rat(4, 3));
        REQUIRE(xi.product == Rat(4, 3));
    }
    SECTION("a single-object universe leaves no unobserved remainder") {
        XiFactors xi = xi_factors(uniform_measure(1), Prop::top(), 1);
        REQUIRE(xi.xi1 == 1);  // empty conjunction convention
        REQUIRE(xi.xi2 == Rat(4, 3));
    }
    SECTION("background must be complete descriptions avoiding a") {
        REQUIRE_THROWS_AS(xi_factors(uniform_measure(2), Prop::atom(1, cat_f), 1),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(xi_factors(uniform_measure(2), Prop::atom(1, cat_fg), 1),
                          std::invalid_argument);
    }
    SECTION("the product decides the confirmation verdict") {
        for (std::uint64_t seed = 0; seed < 12; ++seed) {
            Measure m = seed % 2 ? Measure(random_measure(3, seed))
                                 : Measure(random_exchangeable_measure(3, seed));
            auto bgs = enumerate_backgrounds(3, {}, EnumerationFamily::small_delta);
            for (const Prop& d : bgs.members) {
                auto mentioned = d.mentioned_objects();
                for (int a = 1; a <= 3; ++a) {
                    if (mentioned.count(a)) continue;
                    Verdict v = check_nc(m, d, a);
                    if (!v.defined()) continue;
                    XiFactors xi = xi_factors(m, d, a);
                    REQUIRE((v.relation == Relation::confirms) == (xi.product > 1));
                    REQUIRE(xi.xi2 > 1);
                }
            }
        }
    }
}

TEST_CASE("first sufficient condition, end to end") {
    SECTION("uniform: premise holds with equalities, conclusion holds") {
        SweepCounts counts;
        GuardedResult g = theorem1_premise_sweep(uniform_measure(3), &counts);
        REQUIRE(g.premise_holds);
        REQUIRE(g.conclusion == Conclusion::holds);
        REQUIRE(counts.premise_instances > 0);
    }
    SECTION("chain measure: premise holds, confirmation everywhere") {
        GuardedResult g = theorem1_premise_sweep(carnap_measure(3, Rat(2),
                                                                CategoryPrior::uniform()));
        REQUIRE(g.premise_holds);
        REQUIRE(g.conclusion == Conclusion::holds);
    }
    SECTION("premise violation leaves the conclusion unevaluated, with a witness") {
        Measure m = maher_measure(2, Rat(2), Rat(1, 2), Rat(1, 1000), Rat(1, 10));
        GuardedResult g = theorem1_premise_sweep(m);
        REQUIRE_FALSE(g.premise_holds);
        REQUIRE(g.conclusion == Conclusion::not_evaluated);
        REQUIRE_FALSE(g.witnesses.empty());
    }
    REQUIRE_THROWS_AS(theorem1_premise_sweep(uniform_measure(6)), std::invalid_argument);
}

TEST_CASE("second sufficient condition at the counterexample configuration") {
    Measure m = maher_measure(2, Rat(2), Rat(1, 2), Rat(1, 1000), Rat(1, 10));
    Theorem2Result t2 = theorem2_premise_check(m, Prop::top(), 1);
    REQUIRE(t2.restriction_strict_confirmation);
    REQUIRE(t2.restriction_tail_bound);
    REQUIRE(t2.implication.premise_holds);
    REQUIRE(t2.nc.relation == Relation::disconfirms);
    REQUIRE(t2.implication.conclusion == Conclusion::holds);

    SECTION("independence and the chain measure fail the strict restriction") {
        REQUIRE_FALSE(theorem2_premise_check(uniform_measure(2), Prop::top(), 1)
                          .restriction_strict_confirmation);
        REQUIRE_FALSE(theorem2_premise_check(carnap_measure(2, Rat(2),
                                                            CategoryPrior::uniform()),
                                             Prop::top(), 1)
                          .restriction_strict_confirmation);
    }
}

TEST_CASE("generalization trend diagnostic") {
    SECTION("independence keeps the trend flat") {
        auto trend = gaifman_trend(uniform_measure(4), cat_f_implies_g, 1);
        REQUIRE(trend.size() == 4);
        for (const auto& entry : trend) REQUIRE(*entry == Rat(1, 4));
    }
    SECTION("the chain measure learns: strictly decreasing") {
        auto trend = gaifman_trend(carnap_measure(4, Rat(2), CategoryPrior::uniform()),
                                   cat_f_implies_g, 1);
        for (std::size_t i = 1; i < trend.size(); ++i) REQUIRE(*trend[i] < *trend[i - 1]);
    }
    SECTION("iid trends are the constant complement") {
        CategoryPrior theta = CategoryPrior::from_f_g(Rat(1, 3), Rat(1, 2));
        auto trend = gaifman_trend(iid_product_measure(3, theta), cat_g, 2);
        for (const auto& entry : trend) REQUIRE(*entry == 1 - (theta.of(Category::f_g) +
                                                               theta.of(Category::not_f_g)));
    }
}

TEST_CASE("group projectability") {
    SECTION("chain measures satisfy the grouped inequality") {
        Measure m = carnap_measure(4, Rat(2), CategoryPrior::uniform());
        for (CatSet psi : {cat_g, cat_not_g, cat_f, cat_fg}) {
            GuardedResult g = group_pj_check(m, psi, {1, 2, 3}, 4, Prop::top());
            REQUIRE(g.premise_holds);
            REQUIRE(g.conclusion == Conclusion::holds);
        }
    }
    SECTION("guarded over seeded measures") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            Measure m = random_exchangeable_measure(4, seed);
            GuardedResult g = group_pj_check(m, cat_g, {1, 2}, 4, Prop::atom(3, cat_fg));
            REQUIRE_FALSE(g.violated());
        }
    }
}

TEST_CASE("known-count equalities and guarded confirmations") {
    SECTION("the count background reduces to a canonical naming, exactly") {
        for (std::uint64_t seed = 0; seed < 15; ++seed) {
            int n = 2 + static_cast<int>(seed % 3);
            Measure m = random_exchangeable_measure(n, seed * 31 + 1);
            for (int k = 1; k <= n; ++k)
                for (int a = 1; a <= n; ++a) {
                    Setting2Report rep = setting2_checks(m, k, a);
                    CAPTURE(n, k, a, seed);
                    REQUIRE(rep.theorem4.premise_holds);
                    REQUIRE_FALSE(rep.theorem4.violated());
                    REQUIRE_FALSE(rep.violated());
                }
        }
    }
    SECTION("a non-exchangeable measure skips the equalities but may report residuals") {
        Measure m = random_measure(3, 3);
        Setting2Report rep = setting2_checks(m, 2, 1);
        REQUIRE_FALSE(rep.theorem4.premise_holds);
        REQUIRE(rep.theorem4.conclusion == Conclusion::not_evaluated);
    }
    SECTION("factor-of-two identity behind the reduction") {
        // splitting the count event by which pair is F turns a three-object
        // check into twice the canonical term
        auto factor_two = [](const Measure& m) {
            Event h = Prop::h().event(3);
            Event lhs = Prop::exact(2).event(3) &
                        Event::of_categories(3, 3, cat_fg);
            Event named = z_event({1, 2}, 3) & Event::of_categories(3, 2, cat_g);
            REQUIRE(m.conditional(lhs, h) == 2 * m.conditional(named, h));
        };
        factor_two(uniform_measure(3));
        for (std::uint64_t seed = 100; seed < 120; ++seed)
            factor_two(random_exchangeable_measure(3, seed));
    }
    SECTION("under the count, F-hood of others follows drawing without replacement") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            int n = 3 + static_cast<int>(seed % 3);
            Measure m = random_exchangeable_measure(n, seed + 50);
            for (int k = 1; k <= n; ++k) {
                Event exact = Prop::exact(k).event(n);
                Event f1 = Event::of_categories(n, 1, cat_f);
                Event f2 = Event::of_categories(n, 2, cat_f);
                REQUIRE(m.conditional(f2, exact) == Rat(k, n));
                auto joint = m.try_conditional(f2, f1 & exact);
                if (joint) REQUIRE(*joint == Rat(k - 1, n - 1));
            }
        }
    }
}

TEST_CASE("raven table") {
    SECTION("counterexample row refutes in both columns") {
        Table1 t = table1_matrix(random_exchangeable_measure(4, 9), 2);
        REQUIRE(t.cells[1][0].verdict.relation == Relation::refutes);
        REQUIRE(t.cells[1][1].verdict.relation == Relation::refutes);
    }
    SECTION("uniform: a black raven confirms when the raven count is known") {
        Table1 t = table1_matrix(uniform_measure(4), 2);
        REQUIRE(t.cells[3][0].verdict.relation == Relation::confirms);
    }
    SECTION("chain measure reproduces the projectability pattern") {
        Table1 t = table1_matrix(carnap_measure(4, Rat(2), CategoryPrior::uniform()), 2);
        // non-black non-raven: must not confirm in column 0, confirms in column 1
        REQUIRE(t.cells[0][0].verdict.relation != Relation::confirms);
        REQUIRE(t.cells[0][1].verdict.relation == Relation::confirms);
        // black non-raven: never disconfirms
        REQUIRE(t.cells[2][0].verdict.relation != Relation::disconfirms);
        REQUIRE(t.cells[2][1].verdict.relation != Relation::disconfirms);
        // black raven: confirms in column 0, must not confirm in column 1
        REQUIRE(t.cells[3][0].verdict.relation == Relation::confirms);
        REQUIRE(t.cells[3][1].verdict.relation != Relation::confirms);
    }
    SECTION("requires an exchangeable measure") {
        REQUIRE_THROWS_AS(table1_matrix(random_measure(3, 7), 1), std::invalid_argument);
    }
}

TEST_CASE("role swap") {
    Measure m = carnap_measure(3, Rat(2), CategoryPrior::from_f_g(Rat(1, 5), Rat(2, 3)));
    Measure swapped = role_swapped_measure(m);
    SECTION("an involution") {
        REQUIRE(role_swapped_measure(swapped).numerators() == m.numerators());
    }
    SECTION("probabilities translate through the category swap") {
        // the F' count under the swap is the non-G count under the original
        Event exactly_2_non_g = Event::none(3);
        for (const auto& c : combinations(3, 2)) {
            Event e = Event::all(3);
            std::vector<bool> in(4, false);
            for (int b : c) in[b] = true;
            for (int b = 1; b <= 3; ++b)
                e &= Event::of_categories(3, b, in[b] ? cat_not_g : cat_g);
            exactly_2_non_g |= e;
        }
        REQUIRE(swapped.probability(Prop::exact(2)) == m.probability(exactly_2_non_g));
        // the generalization is its own contrapositive
        REQUIRE(swapped.probability(Prop::h()) == m.probability(Prop::h()));
    }
}

TEST_CASE("verdict and guarded-result reports round-trip through JSON") {
    Verdict v = check_nc(uniform_measure(2), Prop::top(), 1);
    REQUIRE(verdict_from_json(verdict_to_json(v)) == v);
    Verdict u;  // undefined, empty sides
    REQUIRE(verdict_from_json(verdict_to_json(u)) == u);

    GuardedResult g = theorem1_premise_sweep(uniform_measure(2));
    g.witnesses.push_back("note");
    REQUIRE(guarded_from_json(guarded_to_json(g)) == g);
}
