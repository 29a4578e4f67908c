#pragma once

#include "ravenlab/background.hpp"
#include "ravenlab/event.hpp"
#include "ravenlab/proposition.hpp"
#include "ravenlab/rational.hpp"
#include "ravenlab/rng.hpp"

#include <json.hpp>

#include <array>
#include <fstream>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ravenlab {

struct UndefinedConditional : std::domain_error {
    explicit UndefinedConditional(const std::string& what) : std::domain_error(what) {}
};

enum class MeasureFileIssue { bad_format, size_mismatch, negative_weight, sum_not_one };

struct MeasureFileError : std::runtime_error {
    MeasureFileError(MeasureFileIssue issue, const std::string& what)
        : std::runtime_error(what), issue(issue) {}
    MeasureFileIssue issue;
};

inline std::string measure_file_issue_name(MeasureFileIssue i) {
    switch (i) {
        case MeasureFileIssue::bad_format: return "BAD_FORMAT";
        case MeasureFileIssue::size_mismatch: return "SIZE_MISMATCH";
        case MeasureFileIssue::negative_weight: return "NEGATIVE_WEIGHT";
        case MeasureFileIssue::sum_not_one: return "SUM_NOT_ONE";
    }
    return "?";
}

enum class Provenance { uniform, iid, carnap, maher, custom, random_exchangeable };

inline std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::uniform: return "UNIFORM";
        case Provenance::iid: return "IID";
        case Provenance::carnap: return "CARNAP";
        case Provenance::maher: return "MAHER";
        case Provenance::custom: return "CUSTOM";
        case Provenance::random_exchangeable: return "RANDOM_EXCH";
    }
    return "?";
}

// Prior over the four categories of a single object; entries sum to one.
struct CategoryPrior {
    std::array<Rat, 4> p;  // indexed by category code

    explicit CategoryPrior(std::array<Rat, 4> values) : p(std::move(values)) {
        Rat sum = 0;
        for (const Rat& v : p) {
            if (v < 0 || v > 1) throw std::invalid_argument("category prior entry outside [0,1]");
            sum += v;
        }
        if (sum != 1) throw std::invalid_argument("category prior must sum to exactly 1");
    }

    const Rat& of(Category c) const { return p[code_of(c)]; }

    static CategoryPrior uniform() {
        Rat q(1, 4);
        return CategoryPrior({q, q, q, q});
    }

    // joint prior with independent marginals pr(F)=p_f, pr(G)=p_g
    static CategoryPrior from_f_g(const Rat& p_f, const Rat& p_g) {
        std::array<Rat, 4> v;
        v[code_of(Category::f_g)] = p_f * p_g;
        v[code_of(Category::f_not_g)] = p_f * (1 - p_g);
        v[code_of(Category::not_f_g)] = (1 - p_f) * p_g;
        v[code_of(Category::not_f_not_g)] = (1 - p_f) * (1 - p_g);
        return CategoryPrior(v);
    }
};

// An exact probability measure over the 4^n world space. Weights are kept as
// integer numerators over one common denominator, so event probabilities are
// integer sums followed by a single reduction. Immutable once built; all
// queries are pure.
class Measure {
public:
    Measure(int n, std::vector<Int> numerators, Int denominator, Provenance prov,
            std::string description)
        : n_(checked_universe_size(n)),
          num_(std::move(numerators)),
          den_(std::move(denominator)),
          prov_(prov),
          description_(std::move(description)) {
        if (num_.size() != world_space_size(n_))
            throw std::invalid_argument("weight vector must have 4^n entries");
        if (den_ <= 0) throw std::invalid_argument("denominator must be positive");
        Int sum = 0;
        for (const Int& v : num_) {
            if (v < 0) throw std::invalid_argument("weights must be nonnegative");
            sum += v;
        }
        if (sum != den_) throw std::invalid_argument("weights must sum to exactly 1");
    }

    int universe_size() const { return n_; }
    Provenance provenance() const { return prov_; }
    const std::string& description() const { return description_; }
    const Int& denominator() const { return den_; }
    const std::vector<Int>& numerators() const { return num_; }

    Rat weight(WorldCode w) const { return make_rat(num_.at(w), den_); }

    Rat probability(const Event& e) const {
        check_event(e);
        Int sum = 0;
        e.for_each([&](WorldCode w) { sum += num_[w]; });
        return make_rat(sum, den_);
    }

    Rat probability(const Prop& p) const { return probability(p.event(n_)); }

    // pr(a | given); exact. Undefined when the condition has probability 0.
    Rat conditional(const Event& a, const Event& given) const {
        auto r = try_conditional(a, given);
        if (!r) throw UndefinedConditional("conditioning event has probability zero");
        return *r;
    }

    std::optional<Rat> try_conditional(const Event& a, const Event& given) const {
        check_event(a);
        check_event(given);
        Int joint = 0, cond = 0;
        given.for_each([&](WorldCode w) {
            cond += num_[w];
            if (a.test(w)) joint += num_[w];
        });
        if (cond == 0) return std::nullopt;
        return make_rat(joint, cond);
    }

    Rat conditional(const Prop& a, const Prop& given) const {
        return conditional(a.event(n_), given.event(n_));
    }

    // Weights constant on permutation orbits; adjacent transpositions
    // generate the full symmetric group, so checking them suffices.
    bool is_exchangeable() const {
        for (int i = 1; i < n_; ++i)
            for (WorldCode w = 0; w < num_.size(); ++w) {
                Category a = world_category(w, i);
                Category b = world_category(w, i + 1);
                if (a == b) continue;
                WorldCode s = with_category(with_category(w, i, b), i + 1, a);
                if (num_[w] != num_[s]) return false;
            }
        return true;
    }

    bool is_regular() const {
        for (const Int& v : num_)
            if (v == 0) return false;
        return true;
    }

private:
    void check_event(const Event& e) const {
        if (e.universe_size() != n_)
            throw std::invalid_argument("event universe size does not match measure");
    }

    int n_;
    std::vector<Int> num_;
    Int den_;
    Provenance prov_;
    std::string description_;
};

inline Measure uniform_measure(int n) {
    std::vector<Int> num(world_space_size(n), Int(1));
    return Measure(n, std::move(num), Int(1) << (2 * n), Provenance::uniform, "uniform");
}

namespace detail {

inline Int lcm_int(const Int& a, const Int& b) {
    using boost::multiprecision::gcd;
    return a / gcd(a, b) * b;
}

// common-denominator form of a prior: prior[v] = scaled[v] / den
inline std::pair<std::array<Int, 4>, Int> scaled_prior(const CategoryPrior& prior) {
    Int den = 1;
    for (const Rat& v : prior.p) den = lcm_int(den, denominator(v));
    std::array<Int, 4> scaled;
    for (int v = 0; v < 4; ++v) scaled[v] = numerator(prior.p[v]) * (den / denominator(prior.p[v]));
    return {scaled, den};
}

}  // namespace detail

// weight(w) = product over objects of prior(category); objects independent
// and identically distributed. The lambda -> infinity limit of the
// generalization-resistant family below.
inline Measure iid_product_measure(int n, const CategoryPrior& prior) {
    auto [scaled, den] = detail::scaled_prior(prior);
    std::vector<Int> num{Int(1)};
    for (int depth = 0; depth < n; ++depth) {
        std::vector<Int> next(num.size() * 4);
        for (std::size_t w = 0; w < num.size(); ++w)
            for (unsigned v = 0; v < 4; ++v) next[w | (std::size_t(v) << (2 * depth))] = num[w] * scaled[v];
        num = std::move(next);
    }
    Int total = 1;
    for (int i = 0; i < n; ++i) total *= den;
    return Measure(n, std::move(num), total, Provenance::iid, "iid");
}

namespace detail {

// Chain-rule weights of a lambda-continuum process over an arbitrary finite
// alphabet: the i-th symbol (0-based depth d) has predictive probability
//   (count_so_far(v) + lambda * prior(v)) / (d + lambda).
// Clearing fractions with l = l_num/l_den and prior(v) = scaled(v)/p_den:
//   numerator factor   count(v)*l_den*p_den + l_num*scaled(v)
//   denominator factor p_den*(d*l_den + l_num)
// The recursion fills one numerator per symbol string; rows sum to the
// common denominator because predictive probabilities sum to one.
template <std::size_t Arity>
inline std::pair<std::vector<Int>, Int> polya_chain_numerators(int length, const Rat& lambda,
                                                               const std::array<Int, Arity>& scaled,
                                                               const Int& prior_den) {
    Int l_num = numerator(lambda), l_den = denominator(lambda);
    std::vector<Int> num(std::size_t(1) << (length * (Arity == 4 ? 2 : 1)));
    std::array<int, Arity> counts{};
    std::function<void(int, std::size_t, const Int&)> rec = [&](int depth, std::size_t code,
                                                                const Int& prefix) {
        if (depth == length) {
            num[code] = prefix;
            return;
        }
        for (unsigned v = 0; v < Arity; ++v) {
            Int factor = Int(counts[v]) * l_den * prior_den + l_num * scaled[v];
            ++counts[v];
            rec(depth + 1, code | (std::size_t(v) << (depth * (Arity == 4 ? 2 : 1))),
                prefix * factor);
            --counts[v];
        }
    };
    rec(0, 0, Int(1));
    Int den = 1;
    for (int d = 0; d < length; ++d) den *= prior_den * (Int(d) * l_den + l_num);
    return {std::move(num), std::move(den)};
}

}  // namespace detail

// The lambda-continuum measure: exchangeable, regular whenever every prior
// entry is positive, and with the closed predictive rule
//   pr(category | complete descriptions of m other objects)
//     = (m_category + lambda*prior) / (m + lambda).
inline Measure carnap_measure(int n, const Rat& lambda, const CategoryPrior& prior) {
    if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
    auto [scaled, den] = detail::scaled_prior(prior);
    auto [num, total] = detail::polya_chain_numerators<4>(n, lambda, scaled, den);
    return Measure(n, std::move(num), std::move(total), Provenance::carnap,
                   "carnap(l=" + to_fraction_string(lambda) + ")");
}

namespace detail {

inline std::pair<std::array<Int, 2>, Int> scaled_binary_prior(const Rat& p) {
    Int den = denominator(p);
    return {{den - numerator(p), numerator(p)}, den};  // index 1 = predicate holds
}

// Two independent binary lambda-continuum processes, one per predicate
// family. Index i of an n-bit pattern is object i+1's F (or G) bit.
inline std::pair<std::vector<Int>, Int> binary_chain(int n, const Rat& lambda, const Rat& p) {
    auto [scaled, den] = scaled_binary_prior(p);
    return polya_chain_numerators<2>(n, lambda, scaled, den);
}

inline std::size_t f_pattern(WorldCode w, int n) {
    std::size_t out = 0;
    for (int b = 1; b <= n; ++b)
        if (has_f(world_category(w, b))) out |= std::size_t(1) << (b - 1);
    return out;
}

inline std::size_t g_pattern(WorldCode w, int n) {
    std::size_t out = 0;
    for (int b = 1; b <= n; ++b)
        if (has_g(world_category(w, b))) out |= std::size_t(1) << (b - 1);
    return out;
}

}  // namespace detail

inline void check_open_unit(const Rat& v, const char* name) {
    if (v <= 0 || v >= 1)
        throw std::invalid_argument(std::string(name) + " must lie strictly between 0 and 1");
}

// F-kind and G-kind learned independently (two binary processes).
inline Measure maher_independent_component(int n, const Rat& lambda, const Rat& p_f,
                                           const Rat& p_g) {
    if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
    check_open_unit(p_f, "pF");
    check_open_unit(p_g, "pG");
    auto [f_num, f_den] = detail::binary_chain(n, lambda, p_f);
    auto [g_num, g_den] = detail::binary_chain(n, lambda, p_g);
    std::vector<Int> num(world_space_size(n));
    for (WorldCode w = 0; w < num.size(); ++w)
        num[w] = f_num[detail::f_pattern(w, n)] * g_num[detail::g_pattern(w, n)];
    return Measure(n, std::move(num), f_den * g_den, Provenance::maher, "maher-independent");
}

// Joint 4-category process whose prior matches the independent marginals,
// so that with no evidence pr(F¬G_b) = pF*(1-pG) in both components.
inline Measure maher_joint_component(int n, const Rat& lambda, const Rat& p_f, const Rat& p_g) {
    if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
    check_open_unit(p_f, "pF");
    check_open_unit(p_g, "pG");
    auto m = carnap_measure(n, lambda, CategoryPrior::from_f_g(p_f, p_g));
    return Measure(n, m.numerators(), m.denominator(), Provenance::maher, "maher-joint");
}

// Two-hypothesis mixture: with prior weight prI the predicates are learned
// independently, otherwise jointly. This is the coherent-measure reading of
// the displayed predictive formula; the two agree on single-object
// complete-description evidence and can drift apart beyond that (see
// maher_prediction_deviation).
inline Measure maher_measure(int n, const Rat& lambda, const Rat& pr_i, const Rat& p_f,
                             const Rat& p_g) {
    check_open_unit(pr_i, "prI");
    Measure indep = maher_independent_component(n, lambda, p_f, p_g);
    Measure joint = maher_joint_component(n, lambda, p_f, p_g);
    Int i_num = numerator(pr_i), i_den = denominator(pr_i);
    const Int& d_i = indep.denominator();
    const Int& d_j = joint.denominator();
    std::vector<Int> num(world_space_size(n));
    for (WorldCode w = 0; w < num.size(); ++w)
        num[w] = i_num * indep.numerators()[w] * d_j +
                 (i_den - i_num) * joint.numerators()[w] * d_i;
    return Measure(n, std::move(num), i_den * d_i * d_j, Provenance::maher,
                   "maher(l=" + to_fraction_string(lambda) + ",pi=" + to_fraction_string(pr_i) +
                       ",pf=" + to_fraction_string(p_f) + ",pg=" + to_fraction_string(p_g) + ")");
}

// One positive integer weight per category-count orbit, drawn from a seeded
// generator; worlds that are permutations of each other share an orbit, so
// the result is exchangeable and regular. Deterministic for a given seed.
inline Measure random_exchangeable_measure(int n, std::uint64_t seed) {
    checked_universe_size(n);
    Rng rng(seed);
    // orbit index from counts of codes 0..2 (code-3 count is implied)
    std::vector<std::uint64_t> orbit_weight((n + 1) * (n + 1) * (n + 1), 0);
    auto slot = [&](int c0, int c1, int c2) { return (c0 * (n + 1) + c1) * (n + 1) + c2; };
    for (int c0 = 0; c0 <= n; ++c0)
        for (int c1 = 0; c0 + c1 <= n; ++c1)
            for (int c2 = 0; c0 + c1 + c2 <= n; ++c2)
                orbit_weight[slot(c0, c1, c2)] = rng.between(1, 65536);
    std::vector<Int> num(world_space_size(n));
    Int total = 0;
    for (WorldCode w = 0; w < num.size(); ++w) {
        auto c = category_counts(w, n);
        num[w] = orbit_weight[slot(c[0], c[1], c[2])];
        total += num[w];
    }
    return Measure(n, std::move(num), std::move(total), Provenance::random_exchangeable,
                   "randexch(seed=" + std::to_string(seed) + ")");
}

// Independent positive weight per world; generally not exchangeable.
inline Measure random_measure(int n, std::uint64_t seed) {
    checked_universe_size(n);
    Rng rng(seed);
    std::vector<Int> num(world_space_size(n));
    Int total = 0;
    for (WorldCode w = 0; w < num.size(); ++w) {
        num[w] = rng.between(1, 65536);
        total += num[w];
    }
    return Measure(n, std::move(num), std::move(total), Provenance::custom,
                   "random(seed=" + std::to_string(seed) + ")");
}

// File schema: {"n": N, "weights": ["1/16", ...]} with 4^N entries in world
// encoding order. Weights must be nonnegative and sum to exactly one.
inline Measure measure_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("weights"))
        throw MeasureFileError(MeasureFileIssue::bad_format,
                               "measure file needs fields 'n' and 'weights'");
    if (!j["n"].is_number_integer())
        throw MeasureFileError(MeasureFileIssue::bad_format, "'n' must be an integer");
    int n = j["n"].get<int>();
    if (n < 1 || n > max_universe_size)
        throw MeasureFileError(MeasureFileIssue::size_mismatch,
                               "universe size out of range: " + std::to_string(n));
    const auto& weights = j["weights"];
    if (!weights.is_array() || weights.size() != world_space_size(n))
        throw MeasureFileError(MeasureFileIssue::size_mismatch,
                               "expected " + std::to_string(world_space_size(n)) +
                                   " weights for n=" + std::to_string(n));
    std::vector<Rat> parsed;
    parsed.reserve(weights.size());
    Int den = 1;
    for (const auto& entry : weights) {
        if (!entry.is_string())
            throw MeasureFileError(MeasureFileIssue::bad_format, "weights must be strings");
        Rat r;
        try {
            r = parse_rational(entry.get<std::string>());
        } catch (const std::exception& e) {
            throw MeasureFileError(MeasureFileIssue::bad_format, e.what());
        }
        if (r < 0)
            throw MeasureFileError(MeasureFileIssue::negative_weight,
                                   "negative weight " + to_fraction_string(r));
        den = detail::lcm_int(den, denominator(r));
        parsed.push_back(std::move(r));
    }
    Int sum = 0;
    std::vector<Int> num;
    num.reserve(parsed.size());
    for (const Rat& r : parsed) {
        num.push_back(numerator(r) * (den / denominator(r)));
        sum += num.back();
    }
    if (sum != den)
        throw MeasureFileError(MeasureFileIssue::sum_not_one,
                               "weights sum to " + to_fraction_string(make_rat(sum, den)) +
                                   ", expected 1");
    return Measure(n, std::move(num), std::move(den), Provenance::custom, "file");
}

inline Measure measure_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MeasureFileError(MeasureFileIssue::bad_format, "cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw MeasureFileError(MeasureFileIssue::bad_format, e.what());
    }
    return measure_from_json(j);
}

inline nlohmann::json measure_to_json(const Measure& m) {
    nlohmann::json weights = nlohmann::json::array();
    for (WorldCode w = 0; w < world_space_size(m.universe_size()); ++w)
        weights.push_back(to_fraction_string(m.weight(w)));
    return nlohmann::json{{"n", m.universe_size()}, {"weights", std::move(weights)}};
}

// The predictive probability of F¬G_b under the displayed (non-mixture)
// reading: component weights stay at their priors regardless of the
// evidence. Used as a diagnostic against the coherent mixture.
inline Rat maher_displayed_prediction(const Rat& lambda, const Rat& pr_i, const Rat& p_f,
                                      const Rat& p_g, int mentioned, int n_f, int n_not_g,
                                      int n_f_not_g) {
    Rat n(mentioned);
    Rat indep = (Rat(n_f) + lambda * p_f) / (n + lambda) *
                ((Rat(n_not_g) + lambda * (1 - p_g)) / (n + lambda));
    Rat joint = (Rat(n_f_not_g) + lambda * p_f * (1 - p_g)) / (n + lambda);
    return pr_i * indep + (1 - pr_i) * joint;
}

struct MaherDeviation {
    Rat displayed;   // value of the displayed formula
    Rat mixture;     // exact value under the coherent mixture measure
    Rat difference;  // mixture - displayed
};

// Compare the displayed predictive formula with the coherent mixture on
// complete-description evidence. `evidence` must completely describe its
// objects and must not mention b.
inline MaherDeviation maher_prediction_deviation(int n, const Rat& lambda, const Rat& pr_i,
                                                 const Rat& p_f, const Rat& p_g,
                                                 const Prop& evidence, int b) {
    DeltaClass dc = classify_background(evidence, n);
    if (!dc.in_delta())
        throw std::invalid_argument("evidence must be a factored background: " + dc.note);
    if (dc.constraints.count(b))
        throw std::invalid_argument("evidence must not mention the predicted object");
    CategoryCounts counts = counts_of(dc);
    MaherDeviation out;
    out.displayed = maher_displayed_prediction(lambda, pr_i, p_f, p_g, counts.mentioned,
                                               counts.n_f(), counts.n_not_g(), counts.n_f_not_g());
    Measure m = maher_measure(n, lambda, pr_i, p_f, p_g);
    out.mixture = m.conditional(Prop::atom(b, cat_f_not_g), evidence);
    out.difference = out.mixture - out.displayed;
    return out;
}

}  // namespace ravenlab
