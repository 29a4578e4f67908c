#pragma once

#include "ravenlab/event.hpp"

#include <memory>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ravenlab {

// Immutable proposition AST. Atoms constrain one object to a nonempty
// category set; h() is "no object is a counterexample"; exact(k) is
// "exactly k objects satisfy F". Connectives are n-ary where convenient.
// top() and bottom() are the empty conjunction/disjunction.
class Prop {
public:
    enum class Kind {
        atom,
        h_all,
        exact_count,
        negation,
        conjunction,
        disjunction,
        implication,
    };

    static Prop atom(int object, CatSet cats) {
        if (object < 1) throw std::out_of_range("atom object id must be >= 1");
        if (cats.empty()) throw std::invalid_argument("atom constraint must be nonempty");
        auto n = std::make_shared<Node>();
        n->kind = Kind::atom;
        n->object = object;
        n->cats = cats;
        return Prop(std::move(n));
    }

    static Prop h() {
        auto n = std::make_shared<Node>();
        n->kind = Kind::h_all;
        return Prop(std::move(n));
    }

    static Prop exact(int k) {
        if (k < 0) throw std::invalid_argument("exact count must be >= 0");
        auto n = std::make_shared<Node>();
        n->kind = Kind::exact_count;
        n->count = k;
        return Prop(std::move(n));
    }

    static Prop negation(Prop p) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::negation;
        n->children.push_back(std::move(p));
        return Prop(std::move(n));
    }

    static Prop conjunction(std::vector<Prop> ps) {
        if (ps.size() == 1) return std::move(ps.front());
        auto n = std::make_shared<Node>();
        n->kind = Kind::conjunction;
        n->children = std::move(ps);
        return Prop(std::move(n));
    }

    static Prop disjunction(std::vector<Prop> ps) {
        if (ps.size() == 1) return std::move(ps.front());
        auto n = std::make_shared<Node>();
        n->kind = Kind::disjunction;
        n->children = std::move(ps);
        return Prop(std::move(n));
    }

    static Prop implication(Prop a, Prop b) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::implication;
        n->children.push_back(std::move(a));
        n->children.push_back(std::move(b));
        return Prop(std::move(n));
    }

    static Prop top() { return conjunction({}); }
    static Prop bottom() { return disjunction({}); }

    // conjunction of identical constraints over objects from..to (empty if to < from)
    static Prop atom_range(CatSet cats, int from, int to) {
        std::vector<Prop> ps;
        for (int b = from; b <= to; ++b) ps.push_back(atom(b, cats));
        return conjunction(std::move(ps));
    }

    Kind kind() const { return node_->kind; }
    int object() const { return node_->object; }
    CatSet cats() const { return node_->cats; }
    int count() const { return node_->count; }
    const std::vector<Prop>& children() const { return node_->children; }

    Prop and_with(const Prop& other) const { return conjunction({*this, other}); }

    // The corresponding event {w : w |= this} over a universe of size n.
    Event event(int n) const {
        switch (kind()) {
            case Kind::atom:
                check_object(object(), n);
                return Event::of_categories(n, object(), cats());
            case Kind::h_all: {
                Event e = Event::all(n);
                for (int b = 1; b <= n; ++b) e &= Event::of_categories(n, b, cat_f_implies_g);
                return e;
            }
            case Kind::exact_count: {
                Event e = Event::none(n);
                if (count() > n) return e;
                for (WorldCode w = 0; w < world_space_size(n); ++w)
                    if (count_f(w, n) == count()) e.set(w);
                return e;
            }
            case Kind::negation:
                return children()[0].event(n).complement();
            case Kind::conjunction: {
                Event e = Event::all(n);
                for (const Prop& p : children()) e &= p.event(n);
                return e;
            }
            case Kind::disjunction: {
                Event e = Event::none(n);
                for (const Prop& p : children()) e |= p.event(n);
                return e;
            }
            case Kind::implication:
                return children()[0].event(n).complement() | children()[1].event(n);
        }
        throw std::logic_error("bad proposition kind");
    }

    // Rename every atom's object through pi; structure preserved.
    Prop permuted(const Permutation& pi) const {
        switch (kind()) {
            case Kind::atom:
                return atom(pi(object()), cats());
            case Kind::h_all:
            case Kind::exact_count:
                return *this;
            default: {
                std::vector<Prop> kids;
                kids.reserve(children().size());
                for (const Prop& p : children()) kids.push_back(p.permuted(pi));
                auto n = std::make_shared<Node>();
                n->kind = kind();
                n->children = std::move(kids);
                return Prop(std::move(n));
            }
        }
    }

    // Largest object id referenced by an atom (0 if none).
    int max_object() const {
        int m = kind() == Kind::atom ? object() : 0;
        for (const Prop& p : children()) m = std::max(m, p.max_object());
        return m;
    }

    std::set<int> mentioned_objects() const {
        std::set<int> out;
        collect_objects(out);
        return out;
    }

private:
    struct Node {
        Kind kind;
        int object = 0;
        CatSet cats;
        int count = 0;
        std::vector<Prop> children;
    };

    explicit Prop(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    void collect_objects(std::set<int>& out) const {
        if (kind() == Kind::atom) out.insert(object());
        for (const Prop& p : children()) p.collect_objects(out);
    }

    std::shared_ptr<const Node> node_;
};

}  // namespace ravenlab
