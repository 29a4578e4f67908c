#include "ravenlab/generate.hpp"
#include "ravenlab/parser.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ravenlab;

TEST_CASE("atoms parse to the named category sets") {
    Prop p = parse_proposition("FG_1 . F>G_4", 4);
    REQUIRE(p.kind() == Prop::Kind::conjunction);
    REQUIRE(p.children()[0].cats() == cat_fg);
    REQUIRE(p.children()[1].object() == 4);
    REQUIRE(p.children()[1].cats() == cat_f_implies_g);

    REQUIRE(parse_proposition("nFnG_2", 2).cats() == cat_not_f_not_g);
    REQUIRE(parse_proposition("nF_1", 1).cats() == cat_not_f);
    REQUIRE(parse_proposition("nG_1", 1).cats() == cat_not_g);
    REQUIRE(parse_proposition("Exact(2)", 3).count() == 2);
    REQUIRE(parse_proposition("H", 1).kind() == Prop::Kind::h_all);
}

TEST_CASE("ranges expand to conjunctions") {
    Prop p = parse_proposition("FG_1:3", 3);
    REQUIRE(p.kind() == Prop::Kind::conjunction);
    REQUIRE(p.children().size() == 3);
    // the canonical F-naming background: first two objects F, last not
    Prop d = parse_proposition("F_1:2 . ~F_3", 3);
    REQUIRE(d.event(3) == z_event({1, 2}, 3));
}

TEST_CASE("precedence: negation binds tighter than and, and tighter than or") {
    int n = 3;
    Event got = parse_proposition("~F_1.G_2|H", n).event(n);
    Event expected = (Prop::negation(Prop::atom(1, cat_f)).event(n) &
                      Prop::atom(2, cat_g).event(n)) |
                     Prop::h().event(n);
    REQUIRE(got == expected);
    REQUIRE(parse_proposition("F_1 & G_2", 2).event(2) ==
            parse_proposition("F_1 . G_2", 2).event(2));
    REQUIRE(parse_proposition("~(F_1|G_2)", 2).event(2) ==
            parse_proposition("~F_1.~G_2", 2).event(2));
}

TEST_CASE("parse errors carry positions") {
    auto expect_error = [](const std::string& text, int n) {
        try {
            parse_proposition(text, n);
            FAIL("expected a parse error for: " << text);
        } catch (const ParseError& e) {
            return e.position;
        }
        return std::size_t(0);
    };
    REQUIRE(expect_error("F_0", 2) == 2);       // index below range
    REQUIRE(expect_error("F_3", 2) == 2);       // index above range
    REQUIRE(expect_error("FG_2:1", 3) == 3);    // descending range
    expect_error("F_1 .", 2);                   // dangling operator
    expect_error("(F_1", 2);                    // unclosed paren
    expect_error("F_1)", 2);                    // trailing input
    expect_error("Exact(2", 3);                 // unclosed count
    expect_error("nF.G_1", 2);                  // bare predicate without index
    expect_error("", 2);
}

TEST_CASE("printer spells atoms with predicate names") {
    REQUIRE(format_proposition(Prop::atom(2, cat_not_f_not_g)) == "nFnG_2");
    REQUIRE(format_proposition(Prop::h()) == "H");
    REQUIRE(format_proposition(Prop::atom_range(cat_fg, 1, 3)) == "FG_1:3");
    REQUIRE(format_proposition(Prop::exact(4)) == "Exact(4)");
}

TEST_CASE("printer handles constraints without a direct name") {
    // complements of named predicates and the two diagonal sets
    for (unsigned mask = 1; mask <= 15; ++mask) {
        Prop p = Prop::atom(1, CatSet(mask));
        Prop back = parse_proposition(format_proposition(p), 2);
        REQUIRE(back.event(2) == p.event(2));
    }
    // empty connectives still print as parseable text
    REQUIRE(parse_proposition(format_proposition(Prop::top()), 1).event(1) ==
            Prop::top().event(1));
    REQUIRE(parse_proposition(format_proposition(Prop::bottom()), 1).event(1) ==
            Prop::bottom().event(1));
}

TEST_CASE("parse after format preserves the event") {
    Rng rng(2024);
    for (int round = 0; round < 2000; ++round) {
        int n = static_cast<int>(rng.between(1, 5));
        Prop p = random_proposition(rng, n);
        std::string text = format_proposition(p);
        CAPTURE(text);
        Prop back = parse_proposition(text, n);
        REQUIRE(back.event(n) == p.event(n));
    }
}

TEST_CASE("arbitrary input either parses or raises a positioned error") {
    Rng rng(31337);
    const std::string alphabet = "FGnH_0123456789.|~&()Exact: \t";
    for (int round = 0; round < 3000; ++round) {
        std::string text;
        std::size_t len = rng.below(24);
        for (std::size_t i = 0; i < len; ++i) {
            if (rng.below(10) == 0)
                text += static_cast<char>(rng.below(256));
            else
                text += alphabet[rng.below(alphabet.size())];
        }
        try {
            Prop p = parse_proposition(text, 4);
            p.event(4);  // anything that parses must also evaluate
        } catch (const ParseError&) {
            // fine: totality means no other escape
        }
    }
}
