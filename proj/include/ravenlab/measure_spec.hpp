#pragma once

#include "ravenlab/measure.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ravenlab {

// Command-line measure grammar: "name" or "name:key=val,key=val,...".
//   uniform
//   iid:g=uniform | iid:g=<FG>:<FnG>:<nFG>:<nFnG>
//   carnap:l=<rat>,g=...
//   maher:l=<rat>,pi=<rat>,pf=<rat>,pg=<rat>
//   randexch:seed=<int>      random:seed=<int>
//   file:<path>
// Rationals are "p/q" or decimal literals converted exactly.

inline CategoryPrior parse_gamma(std::string_view text) {
    if (text == "uniform") return CategoryPrior::uniform();
    std::array<Rat, 4> by_position;  // FG, FnG, nFG, nFnG
    std::size_t start = 0;
    for (int i = 0; i < 4; ++i) {
        std::size_t colon = text.find(':', start);
        bool last = i == 3;
        if (last != (colon == std::string_view::npos))
            throw std::invalid_argument("gamma needs four ':'-separated rationals or 'uniform'");
        by_position[i] = parse_rational(text.substr(start, last ? std::string_view::npos
                                                                : colon - start));
        start = colon + 1;
    }
    std::array<Rat, 4> by_code;
    by_code[code_of(Category::f_g)] = by_position[0];
    by_code[code_of(Category::f_not_g)] = by_position[1];
    by_code[code_of(Category::not_f_g)] = by_position[2];
    by_code[code_of(Category::not_f_not_g)] = by_position[3];
    return CategoryPrior(by_code);
}

namespace detail {

inline std::map<std::string, std::string, std::less<>> parse_kv(std::string_view text) {
    std::map<std::string, std::string, std::less<>> out;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view pair = text.substr(start, comma == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : comma - start);
        std::size_t eq = pair.find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw std::invalid_argument("expected key=value in measure spec, got '" +
                                        std::string(pair) + "'");
        out[std::string(pair.substr(0, eq))] = std::string(pair.substr(eq + 1));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

template <typename Map>
inline std::string need(const Map& kv, const std::string& key, const char* family) {
    auto it = kv.find(key);
    if (it == kv.end())
        throw std::invalid_argument(std::string(family) + " spec needs parameter '" + key + "'");
    return it->second;
}

}  // namespace detail

inline Measure measure_from_spec(const std::string& spec, int n) {
    std::string_view text(spec);
    std::string name;
    std::string_view rest;
    if (auto colon = text.find(':'); colon == std::string_view::npos) {
        name = std::string(text);
    } else {
        name = std::string(text.substr(0, colon));
        rest = text.substr(colon + 1);
    }

    if (name == "uniform") return uniform_measure(n);
    if (name == "file") return measure_from_file(std::string(rest));

    auto kv = detail::parse_kv(rest);
    if (name == "iid") return iid_product_measure(n, parse_gamma(detail::need(kv, "g", "iid")));
    if (name == "carnap")
        return carnap_measure(n, parse_rational(detail::need(kv, "l", "carnap")),
                              parse_gamma(detail::need(kv, "g", "carnap")));
    if (name == "maher")
        return maher_measure(n, parse_rational(detail::need(kv, "l", "maher")),
                             parse_rational(detail::need(kv, "pi", "maher")),
                             parse_rational(detail::need(kv, "pf", "maher")),
                             parse_rational(detail::need(kv, "pg", "maher")));
    if (name == "randexch")
        return random_exchangeable_measure(n, std::stoull(detail::need(kv, "seed", "randexch")));
    if (name == "random")
        return random_measure(n, std::stoull(detail::need(kv, "seed", "random")));
    throw std::invalid_argument("unknown measure family '" + name + "'");
}

}  // namespace ravenlab
