#include "ravenlab/generate.hpp"
#include "ravenlab/measure_spec.hpp"
#include "ravenlab/mixture.hpp"
#include "ravenlab/parser.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

using namespace ravenlab;

namespace {

MixtureModel equal_theta_iid(int alpha, int beta, const CategoryPrior& theta,
                             std::vector<Rat> q = {}) {
    std::vector<Measure> comps;
    for (int v = alpha; v <= beta; ++v) comps.push_back(iid_product_measure(v, theta));
    if (q.empty()) q.assign(beta - alpha + 1, Rat(1, beta - alpha + 1));
    return MixtureModel(alpha, beta, std::move(q), std::move(comps));
}

}  // namespace

TEST_CASE("mixture probability is the size-weighted sum") {
    MixtureModel mix(2, 3, {Rat(1, 2), Rat(1, 2)}, {uniform_measure(2), uniform_measure(3)});
    // direct evaluation: (9/16)/2 + (27/64)/2
    REQUIRE(mixture_probability(mix, Prop::h()) == Rat(63, 128));
    REQUIRE(mixture_probability(mix, Prop::top()) == 1);

    SECTION("a single-size range reduces to its component") {
        MixtureModel single(2, 2, {Rat(1)}, {carnap_measure(2, Rat(2),
                                                            CategoryPrior::uniform())});
        Rng rng(8);
        for (int round = 0; round < 20; ++round) {
            Prop p = random_proposition(rng, 2);
            REQUIRE(mixture_probability(single, p) == single.component(2).probability(p));
        }
    }
    SECTION("size-independent likelihoods make the total size-free") {
        CategoryPrior theta = CategoryPrior::from_f_g(Rat(1, 3), Rat(1, 2));
        MixtureModel mix2 = equal_theta_iid(2, 4, theta);
        Rat f1 = theta.of(Category::f_g) + theta.of(Category::f_not_g);
        REQUIRE(mixture_probability(mix2, Prop::atom(1, cat_f)) == f1);
    }
    SECTION("propositions must fit the smallest universe") {
        REQUIRE_THROWS_AS(mixture_probability(mix, Prop::atom(3, cat_f)), std::out_of_range);
    }
}

TEST_CASE("size posterior") {
    MixtureModel mix(2, 3, {Rat(1, 2), Rat(1, 2)}, {uniform_measure(2), uniform_measure(3)});
    SECTION("a tautology returns the prior") {
        auto post = size_posterior(mix, Prop::top());
        REQUIRE(post[2] == Rat(1, 2));
        REQUIRE(post[3] == Rat(1, 2));
    }
    SECTION("the generalization tilts toward smaller universes") {
        auto post = size_posterior(mix, Prop::h());
        REQUIRE(post[2] == Rat(4, 7));
        REQUIRE(post[3] == Rat(3, 7));
        REQUIRE(post[2] > post[3]);
    }
    SECTION("equal iid components leave any in-scope posterior at the prior") {
        CategoryPrior theta = CategoryPrior::from_f_g(Rat(1, 4), Rat(1, 3));
        MixtureModel mix2 = equal_theta_iid(2, 4, theta, {Rat(1, 2), Rat(1, 3), Rat(1, 6)});
        Rng rng(44);
        for (int round = 0; round < 25; ++round) {
            Prop p = random_proposition(rng, 2);
            if (mixture_probability(mix2, p) == 0) continue;
            auto post = size_posterior(mix2, p);
            // only propositions whose likelihood is size-free qualify: atoms
            // and their boolean combinations, not the count/generalization
            bool size_free = true;
            std::function<void(const Prop&)> scan = [&](const Prop& q) {
                if (q.kind() == Prop::Kind::h_all || q.kind() == Prop::Kind::exact_count)
                    size_free = false;
                for (const Prop& c : q.children()) scan(c);
            };
            scan(p);
            if (!size_free) continue;
            REQUIRE(post[2] == Rat(1, 2));
            REQUIRE(post[3] == Rat(1, 3));
            REQUIRE(post[4] == Rat(1, 6));
        }
    }
    SECTION("zero-probability evidence is undefined") {
        REQUIRE_THROWS_AS(size_posterior(mix, Prop::bottom()), UndefinedConditional);
    }
}

TEST_CASE("evidence-blind size estimates") {
    CategoryPrior theta = CategoryPrior::from_f_g(Rat(1, 5), Rat(1, 2));
    SECTION("equal iid components qualify") {
        MixtureModel mix = equal_theta_iid(2, 5, theta);
        AssumptionCheck ac = assumption_check(mix, Prop::atom(1, cat_fg), Prop::top());
        REQUIRE(ac.holds);
        REQUIRE(ac.max_deviation == 0);
    }
    SECTION("uniform components with tautological evidence qualify trivially") {
        MixtureModel mix(2, 3, {Rat(1, 2), Rat(1, 2)},
                         {uniform_measure(2), uniform_measure(3)});
        REQUIRE(assumption_check(mix, Prop::top(), Prop::top()).holds);
    }
    SECTION("size-dependent priors break the assumption, with a reported deviation") {
        CategoryPrior other = CategoryPrior::from_f_g(Rat(4, 5), Rat(1, 2));
        MixtureModel mix(2, 3, {Rat(1, 2), Rat(1, 2)},
                         {iid_product_measure(2, theta), iid_product_measure(3, other)});
        AssumptionCheck ac = assumption_check(mix, Prop::atom(1, cat_fg), Prop::top());
        REQUIRE_FALSE(ac.holds);
        REQUIRE(ac.max_deviation > 0);
    }
}

TEST_CASE("total probability and Bayes bookkeeping are exact") {
    MixtureModel mix(2, 3, {Rat(1, 3), Rat(2, 3)},
                     {carnap_measure(2, Rat(2), CategoryPrior::uniform()),
                      carnap_measure(3, Rat(2), CategoryPrior::uniform())});
    Rng rng(77);
    for (int round = 0; round < 30; ++round) {
        Prop p = random_proposition(rng, 2);
        GeneralizedEvent ge = GeneralizedEvent::of(mix, p);
        Rat total = 0;
        for (int v = 2; v <= 3; ++v)
            total += mix.size_weight(v) * mix.component(v).probability(ge.at_size(v));
        REQUIRE(total == mixture_probability(mix, p));
        if (total == 0) continue;
        auto post = size_posterior(mix, p);
        for (int v = 2; v <= 3; ++v)
            REQUIRE(post[v] * total ==
                    mix.size_weight(v) * mix.component(v).probability(ge.at_size(v)));
    }
}

TEST_CASE("confirmation survives an unknown universe size") {
    CategoryPrior theta = CategoryPrior::from_f_g(Rat(1, 4), Rat(1, 2));
    SECTION("equal iid mixtures satisfy premise and conclusion") {
        MixtureModel mix = equal_theta_iid(2, 5, theta);
        GuardedResult g = proposition1_check(mix, Prop::atom(1, cat_fg), Prop::top());
        REQUIRE(g.premise_holds);
        REQUIRE(g.conclusion == Conclusion::holds);
        REQUIRE(*g.lhs > *g.rhs);
    }
    SECTION("a single size reduces to the plain confirmation check") {
        MixtureModel single(3, 3, {Rat(1)}, {iid_product_measure(3, theta)});
        GuardedResult g = proposition1_check(single, Prop::atom(1, cat_fg), Prop::top());
        Verdict nc = check_nc(single.component(3), Prop::top(), 1);
        REQUIRE(*g.lhs == *nc.lhs);
        REQUIRE(*g.rhs == *nc.rhs);
        REQUIRE((g.conclusion == Conclusion::holds) ==
                (nc.relation == Relation::confirms));
    }
    SECTION("premise violations leave the conclusion unevaluated") {
        // uniform components: per-size strict confirmation fails for plain F
        MixtureModel mix(2, 3, {Rat(1, 2), Rat(1, 2)},
                         {uniform_measure(2), uniform_measure(3)});
        GuardedResult g = proposition1_check(mix, Prop::atom(1, cat_f), Prop::top());
        REQUIRE_FALSE(g.premise_holds);
        REQUIRE(g.conclusion == Conclusion::not_evaluated);
    }
}

TEST_CASE("mixture files") {
    auto spec_parser = [](const std::string& s, int n) { return measure_from_spec(s, n); };
    SECTION("components from mini-specs and inline objects") {
        nlohmann::json j;
        j["alpha"] = 2;
        j["beta"] = 3;
        j["q"] = {{"2", "1/2"}, {"3", "1/2"}};
        j["components"]["2"] = "uniform";
        j["components"]["3"] = measure_to_json(uniform_measure(3));
        MixtureModel mix = mixture_from_json(j, spec_parser);
        REQUIRE(mixture_probability(mix, Prop::h()) == Rat(63, 128));
    }
    SECTION("weight and size validation") {
        nlohmann::json j;
        j["alpha"] = 2;
        j["beta"] = 2;
        j["q"] = {{"2", "2/3"}};
        j["components"]["2"] = "uniform";
        REQUIRE_THROWS_AS(mixture_from_json(j, spec_parser), std::invalid_argument);
        j["q"] = {{"2", "1/1"}};
        REQUIRE_NOTHROW(mixture_from_json(j, spec_parser));
        j["components"]["2"] = measure_to_json(uniform_measure(3));
        REQUIRE_THROWS_AS(mixture_from_json(j, spec_parser), std::invalid_argument);
    }
}
