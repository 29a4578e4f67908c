#pragma once

#include "ravenlab/proposition.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ravenlab {

// Positioned syntax/validation error; `position` is a 0-based byte offset.
struct ParseError : std::runtime_error {
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

namespace detail {

// prop  := disj
// disj  := conj ("|" conj)*
// conj  := unary (("." | "&") unary)*
// unary := "~" unary | "(" prop ")" | atom
// atom  := PRED "_" RANGE | "H" | "Exact(" INT ")"
// PRED  := F G FG FnG nFG nFnG F>G nF nG ; RANGE := INT | INT ":" INT
class PropParser {
public:
    PropParser(std::string_view text, int n) : text_(text), n_(n) {}

    Prop run() {
        Prop p = disjunction();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                       text_[pos_] == '\n' || text_[pos_] == '\r'))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Prop disjunction() {
        std::vector<Prop> parts{conjunction()};
        while (eat('|')) parts.push_back(conjunction());
        return Prop::disjunction(std::move(parts));
    }

    Prop conjunction() {
        std::vector<Prop> parts{unary()};
        while (eat('.') || eat('&')) parts.push_back(unary());
        return Prop::conjunction(std::move(parts));
    }

    Prop unary() {
        if (eat('~')) return Prop::negation(unary());
        if (eat('(')) {
            Prop p = disjunction();
            if (!eat(')')) throw ParseError(pos_, "expected ')'");
            return p;
        }
        return atom();
    }

    Prop atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError(pos_, "expected a proposition");

        if (match_keyword("Exact(")) {
            skip_ws();
            int k = integer("exact count");
            skip_ws();
            if (!eat(')')) throw ParseError(pos_, "expected ')' after Exact count");
            return Prop::exact(k);
        }
        if (text_[pos_] == 'H') {
            ++pos_;
            return Prop::h();
        }

        // longest predicate name first, each must be followed by '_'
        static constexpr std::string_view preds[] = {"nFnG", "nFG", "FnG", "F>G",
                                                     "FG",   "nF",  "nG",  "F",  "G"};
        for (std::string_view name : preds) {
            if (text_.substr(pos_, name.size()) != name) continue;
            if (pos_ + name.size() >= text_.size() || text_[pos_ + name.size()] != '_') continue;
            pos_ += name.size() + 1;
            CatSet cats = *catset_from_pred_name(name);
            std::size_t range_pos = pos_;
            int lo = object_index();
            int hi = lo;
            if (pos_ < text_.size() && text_[pos_] == ':') {
                ++pos_;
                hi = object_index();
                if (hi < lo) throw ParseError(range_pos, "range requires i <= j");
            }
            return Prop::atom_range(cats, lo, hi);
        }
        throw ParseError(pos_, "expected an atom, 'H', 'Exact(k)', '~' or '('");
    }

    bool match_keyword(std::string_view kw) {
        if (text_.substr(pos_, kw.size()) == kw) {
            pos_ += kw.size();
            return true;
        }
        return false;
    }

    int integer(const char* what) {
        std::size_t start = pos_;
        long v = 0;
        bool seen = false;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000) throw ParseError(start, std::string(what) + " too large");
            ++pos_;
            seen = true;
        }
        if (!seen) throw ParseError(pos_, std::string("expected ") + what);
        return static_cast<int>(v);
    }

    int object_index() {
        std::size_t start = pos_;
        int v = integer("object index");
        if (v < 1 || v > n_)
            throw ParseError(start, "object index " + std::to_string(v) +
                                        " outside universe [1, " + std::to_string(n_) + "]");
        return v;
    }

    std::string_view text_;
    int n_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Prop parse_proposition(std::string_view text, int n) {
    if (n < 1) throw std::invalid_argument("universe size must be positive");
    return detail::PropParser(text, n).run();
}

namespace detail {

// precedence levels for the printer: disjunction 1, conjunction 2, unary 3
inline int precedence(const Prop& p) {
    switch (p.kind()) {
        case Prop::Kind::disjunction:
        case Prop::Kind::implication:
            return p.children().empty() ? 3 : 1;
        case Prop::Kind::conjunction:
            return p.children().empty() ? 3 : 2;
        default:
            return 3;
    }
}

std::string format_at(const Prop& p, int min_prec);

inline std::string format_atom(int object, CatSet cats) {
    std::string suffix = "_" + std::to_string(object);
    if (auto name = pred_name_of_catset(cats)) return *name + suffix;
    if (auto name = pred_name_of_catset(cats.complement())) return "~" + *name + suffix;
    // remaining masks have no single-predicate spelling; spell as a
    // disjunction of named constraints on the same object
    std::vector<CatSet> parts;
    if (cats.full()) {
        parts = {cat_f, cat_not_f};
    } else {
        for (Category c : all_categories)
            if (cats.contains(c)) parts.push_back(CatSet::of(c));
    }
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "|";
        out += *pred_name_of_catset(parts[i]) + suffix;
    }
    return out + ")";
}

inline std::string format_junction(const std::vector<Prop>& kids, bool conj) {
    const int child_min = conj ? 3 : 2;
    std::string out;
    std::size_t i = 0;
    while (i < kids.size()) {
        if (i) out += conj ? "." : "|";
        // compress runs of equal named atoms on consecutive objects
        if (conj && kids[i].kind() == Prop::Kind::atom &&
            pred_name_of_catset(kids[i].cats())) {
            std::size_t j = i + 1;
            while (j < kids.size() && kids[j].kind() == Prop::Kind::atom &&
                   kids[j].cats() == kids[i].cats() &&
                   kids[j].object() == kids[j - 1].object() + 1)
                ++j;
            if (j - i >= 2) {
                out += *pred_name_of_catset(kids[i].cats()) + "_" +
                       std::to_string(kids[i].object()) + ":" +
                       std::to_string(kids[j - 1].object());
                i = j;
                continue;
            }
        }
        out += format_at(kids[i], child_min);
        ++i;
    }
    return out;
}

inline std::string format_at(const Prop& p, int min_prec) {
    std::string out;
    switch (p.kind()) {
        case Prop::Kind::atom:
            return format_atom(p.object(), p.cats());
        case Prop::Kind::h_all:
            return "H";
        case Prop::Kind::exact_count:
            return "Exact(" + std::to_string(p.count()) + ")";
        case Prop::Kind::negation:
            return "~" + format_at(p.children()[0], 3);
        case Prop::Kind::conjunction:
            if (p.children().empty()) return "(H|~H)";  // tautology
            out = format_junction(p.children(), true);
            break;
        case Prop::Kind::disjunction:
            if (p.children().empty()) return "(H.~H)";  // contradiction
            out = format_junction(p.children(), false);
            break;
        case Prop::Kind::implication:
            out = "~" + format_at(p.children()[0], 3) + "|" + format_at(p.children()[1], 2);
            break;
    }
    if (precedence(p) < min_prec) return "(" + out + ")";
    return out;
}

}  // namespace detail

// Textual form whose parse is event-equivalent to the input (a semantic,
// not syntactic, round-trip; conjunction ranges are re-compressed).
inline std::string format_proposition(const Prop& p) {
    return detail::format_at(p, 1);
}

}  // namespace ravenlab
