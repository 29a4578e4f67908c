#pragma once

#include "ravenlab/measure.hpp"
#include "ravenlab/rules.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ravenlab {

// Desk-scale default bound on the largest candidate universe.
inline constexpr int default_mixture_size_cap = 8;

// Unknown universe size: one measure per candidate size v in [alpha, beta]
// plus a prior over sizes. Universes are nested (U_v = U_{v-1} plus object v),
// so a proposition over objects <= alpha is meaningful at every size and its
// generalized correspondent is the disjoint union of the per-size events.
class MixtureModel {
public:
    MixtureModel(int alpha, int beta, std::vector<Rat> size_weights,
                 std::vector<Measure> components, int beta_cap = default_mixture_size_cap)
        : alpha_(alpha), beta_(beta), q_(std::move(size_weights)),
          components_(std::move(components)) {
        if (beta_cap > max_universe_size) beta_cap = max_universe_size;
        if (alpha < 1 || beta < alpha || beta > beta_cap)
            throw std::invalid_argument("size bounds must satisfy 1 <= alpha <= beta <= " +
                                        std::to_string(beta_cap));
        std::size_t count = beta - alpha + 1;
        if (q_.size() != count || components_.size() != count)
            throw std::invalid_argument("need one weight and one component per size");
        Rat sum = 0;
        for (const Rat& w : q_) {
            if (w < 0) throw std::invalid_argument("size weights must be nonnegative");
            sum += w;
        }
        if (sum != 1) throw std::invalid_argument("size weights must sum to exactly 1");
        for (int v = alpha; v <= beta; ++v)
            if (components_[v - alpha].universe_size() != v)
                throw std::invalid_argument("component for size " + std::to_string(v) +
                                            " has wrong universe size");
    }

    int alpha() const { return alpha_; }
    int beta() const { return beta_; }
    const Rat& size_weight(int v) const { return q_.at(v - alpha_); }
    const Measure& component(int v) const { return components_.at(v - alpha_); }

    void check_scope(const Prop& p) const {
        if (p.max_object() > alpha_)
            throw std::out_of_range("proposition mentions object " +
                                    std::to_string(p.max_object()) +
                                    " beyond the smallest universe (alpha=" +
                                    std::to_string(alpha_) + ")");
    }

private:
    int alpha_, beta_;
    std::vector<Rat> q_;
    std::vector<Measure> components_;
};

// The per-size events one proposition induces across the size range.
struct GeneralizedEvent {
    int alpha = 0, beta = 0;
    std::vector<Event> per_size;

    static GeneralizedEvent of(const MixtureModel& mix, const Prop& p) {
        mix.check_scope(p);
        GeneralizedEvent out;
        out.alpha = mix.alpha();
        out.beta = mix.beta();
        for (int v = mix.alpha(); v <= mix.beta(); ++v) out.per_size.push_back(p.event(v));
        return out;
    }

    const Event& at_size(int v) const { return per_size.at(v - alpha); }
};

// Total probability over sizes: sum_v q_v * P_v(event of rho at size v).
inline Rat mixture_probability(const MixtureModel& mix, const Prop& rho) {
    GeneralizedEvent ge = GeneralizedEvent::of(mix, rho);
    Rat total = 0;
    for (int v = mix.alpha(); v <= mix.beta(); ++v)
        total += mix.size_weight(v) * mix.component(v).probability(ge.at_size(v));
    return total;
}

inline Rat mixture_joint(const MixtureModel& mix, const std::vector<Prop>& props) {
    std::vector<GeneralizedEvent> ges;
    for (const Prop& p : props) ges.push_back(GeneralizedEvent::of(mix, p));
    Rat total = 0;
    for (int v = mix.alpha(); v <= mix.beta(); ++v) {
        Event e = Event::all(v);
        for (const auto& ge : ges) e &= ge.at_size(v);
        total += mix.size_weight(v) * mix.component(v).probability(e);
    }
    return total;
}

inline Rat mixture_conditional(const MixtureModel& mix, const Prop& a,
                               const std::vector<Prop>& given) {
    Rat den = mixture_joint(mix, given);
    if (den == 0) throw UndefinedConditional("mixture condition has probability zero");
    std::vector<Prop> all = given;
    all.push_back(a);
    return mixture_joint(mix, all) / den;
}

// Posterior over universe sizes given that rho holds.
inline std::map<int, Rat> size_posterior(const MixtureModel& mix, const Prop& rho) {
    GeneralizedEvent ge = GeneralizedEvent::of(mix, rho);
    std::vector<Rat> contrib;
    Rat total = 0;
    for (int v = mix.alpha(); v <= mix.beta(); ++v) {
        Rat c = mix.size_weight(v) * mix.component(v).probability(ge.at_size(v));
        contrib.push_back(c);
        total += c;
    }
    if (total == 0) throw UndefinedConditional("evidence has mixture probability zero");
    std::map<int, Rat> out;
    for (int v = mix.alpha(); v <= mix.beta(); ++v) out[v] = contrib[v - mix.alpha()] / total;
    return out;
}

struct AssumptionCheck {
    bool holds = true;
    Rat max_deviation = 0;  // largest |posterior shift| across sizes
};

// Does evidence E leave the agent's size estimate alone (given D)?
// Exact comparison of the two posteriors, restricted to sizes with positive
// prior weight.
inline AssumptionCheck assumption_check(const MixtureModel& mix, const Prop& evidence,
                                        const Prop& background) {
    auto with_e = size_posterior(mix, evidence.and_with(background));
    auto base = size_posterior(mix, background);
    AssumptionCheck out;
    for (int v = mix.alpha(); v <= mix.beta(); ++v) {
        if (mix.size_weight(v) == 0) continue;
        Rat dev = with_e[v] - base[v];
        if (dev < 0) dev = -dev;
        if (dev > out.max_deviation) out.max_deviation = dev;
        if (dev != 0) out.holds = false;
    }
    return out;
}

// Size-independence of confirmation: if the size posterior is evidence-blind
// and E strictly confirms H at every size with positive weight, then E
// strictly confirms H under the size mixture too.
inline GuardedResult proposition1_check(const MixtureModel& mix, const Prop& evidence,
                                        const Prop& background) {
    GuardedResult out;
    Prop h = Prop::h();
    bool premise = true;
    try {
        premise = assumption_check(mix, evidence, background).holds;
    } catch (const UndefinedConditional&) {
        out.witnesses.push_back("size posterior undefined");
        return out;
    }
    for (int v = mix.alpha(); premise && v <= mix.beta(); ++v) {
        if (mix.size_weight(v) == 0) continue;
        const Measure& m = mix.component(v);
        Event eh = h.event(v);
        Event ee = evidence.event(v);
        Event ed = background.event(v);
        auto lhs = m.try_conditional(eh, ee & ed);
        auto rhs = m.try_conditional(eh, ed);
        if (!lhs || !rhs) {
            out.witnesses.push_back("per-size conditional undefined at v=" + std::to_string(v));
            return out;
        }
        if (!(*lhs > *rhs)) {
            premise = false;
            out.witnesses.push_back("strict per-size confirmation fails at v=" +
                                    std::to_string(v));
        }
    }
    out.premise_holds = premise;
    if (!premise) return out;

    try {
        out.lhs = mixture_conditional(mix, h, {evidence, background});
        out.rhs = mixture_conditional(mix, h, {background});
    } catch (const UndefinedConditional&) {
        out.witnesses.push_back("mixture conditional undefined");
        return out;
    }
    out.conclusion = *out.lhs > *out.rhs ? Conclusion::holds : Conclusion::fails;
    return out;
}

// File schema:
//   {"alpha": 2, "beta": 3, "q": {"2": "1/2", "3": "1/2"},
//    "components": {"2": "<measure spec>" | {inline measure object}, ...}}
// String components go through `spec_parser` (the CLI measure mini-spec);
// object components are inline measure files.
inline MixtureModel mixture_from_json(
    const nlohmann::json& j,
    const std::function<Measure(const std::string&, int)>& spec_parser) {
    if (!j.is_object() || !j.contains("alpha") || !j.contains("beta") || !j.contains("q") ||
        !j.contains("components"))
        throw std::invalid_argument("mixture file needs alpha, beta, q, components");
    int alpha = j["alpha"].get<int>();
    int beta = j["beta"].get<int>();
    std::vector<Rat> q;
    std::vector<Measure> components;
    for (int v = alpha; v <= beta; ++v) {
        std::string key = std::to_string(v);
        if (!j["q"].contains(key))
            throw std::invalid_argument("missing size weight for v=" + key);
        q.push_back(parse_rational(j["q"][key].get<std::string>()));
        if (!j["components"].contains(key))
            throw std::invalid_argument("missing component for v=" + key);
        const auto& c = j["components"][key];
        if (c.is_string())
            components.push_back(spec_parser(c.get<std::string>(), v));
        else
            components.push_back(measure_from_json(c));
    }
    return MixtureModel(alpha, beta, std::move(q), std::move(components));
}

}  // namespace ravenlab
