#include <doctest.h>

#include "invprob/formula.hpp"
#include "random_formula.hpp"

using namespace invprob;

namespace {

const char* kStarLhs = "(t & p1 -> r) & (t & p2 -> r)";
const char* kStarRhs = "t & (p1 | p2) -> r";

Formula star() {
    return Formula::biconditional(parse(kStarLhs), parse(kStarRhs));
}

}  // namespace

TEST_CASE("parse produces the expected shapes") {
    Formula f = parse(kStarLhs);
    REQUIRE(f.op() == Connective::And);
    CHECK(f.left().op() == Connective::Implies);
    CHECK(f.left().left().op() == Connective::And);
    CHECK(f.left().left().left().atom_name() == "t");
    CHECK(f.left().left().right().atom_name() == "p1");
    CHECK(f.right().left().right().atom_name() == "p2");

    Formula g = parse("t");
    CHECK(g.op() == Connective::Atom);
    CHECK(g.atom_name() == "t");

    // precedence: ! > & > (| = ^) > -> > <->
    Formula h = parse("t & p1 | p2 -> r");
    REQUIRE(h.op() == Connective::Implies);
    REQUIRE(h.left().op() == Connective::Or);
    CHECK(h.left().left().op() == Connective::And);
    CHECK(h.left().right().atom_name() == "p2");
    CHECK(h.right().atom_name() == "r");

    CHECK(parse("a -> b -> c").right().op() == Connective::Implies);   // right-assoc
    CHECK(parse("a <-> b <-> c").left().op() == Connective::Iff);      // left-assoc
    CHECK(parse("!a_1 & x9").left().op() == Connective::Not);
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("   "), ParseError);
    CHECK_THROWS_AS(parse("a | b ^ c"), ParseError);  // mixing needs parentheses
    CHECK_THROWS_AS(parse("a ^ b | c"), ParseError);
    CHECK_THROWS_AS(parse("A"), ParseError);
    CHECK_THROWS_AS(parse("a &"), ParseError);
    CHECK_THROWS_AS(parse("(a"), ParseError);
    CHECK_THROWS_AS(parse("a <- b"), ParseError);
    try {
        parse("a & $");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("format inserts only the parentheses precedence demands") {
    Formula t = Formula::atom("t"), r = Formula::atom("r");
    Formula p1 = Formula::atom("p1"), p2 = Formula::atom("p2");
    CHECK(format(Formula::conjunction(t, Formula::disjunction(p1, p2))) == "t & (p1 | p2)");
    CHECK(format(r) == "r");
    CHECK(format(Formula::implication(Formula::conjunction(t, r),
                                      Formula::exclusive_or(p1, p2))) ==
          "t & r -> p1 ^ p2");
    CHECK(format(parse(kStarLhs)) == kStarLhs);
    // same-level | and ^ must stay parenthesized
    CHECK(format(Formula::disjunction(Formula::exclusive_or(p1, p2), t)) ==
          "(p1 ^ p2) | t");
}

TEST_CASE("evaluate implements classical semantics, xor is inequality") {
    Valuation v{{"t", true}, {"p1", true}, {"p2", false}, {"r", false}};
    CHECK(evaluate(star(), v));  // both sides false, <-> holds
    CHECK_FALSE(evaluate(parse("p1 ^ p2"), Valuation{{"p1", true}, {"p2", true}}));
    CHECK(evaluate(parse("t -> r"), Valuation{{"t", false}, {"r", false}}));
    CHECK_THROWS_AS(evaluate(parse("t & q"), Valuation{{"t", true}}), std::out_of_range);
}

TEST_CASE("atoms are sorted and duplicate-free") {
    CHECK(atoms(star()) == std::vector<std::string>{"p1", "p2", "r", "t"});
    CHECK(atoms(parse("t")) == std::vector<std::string>{"t"});
    CHECK(atoms(parse("t & !t")) == std::vector<std::string>{"t"});
}

TEST_CASE("truth_table rows are lexicographic, first atom most significant") {
    TruthTable t1 = truth_table(parse("t"));
    REQUIRE(t1.rows.size() == 2);
    CHECK_FALSE(t1.rows[0].first.at("t"));
    CHECK_FALSE(t1.rows[0].second);
    CHECK(t1.rows[1].second);

    TruthTable ts = truth_table(star());
    CHECK(ts.rows.size() == 16);
    CHECK(ts.all_true());

    TruthTable to = truth_table(parse("p1 | p2"));
    REQUIRE(to.rows.size() == 4);
    int trues = 0;
    for (const auto& row : to.rows) trues += row.second;
    CHECK(trues == 3);
    // row order: (0,0),(0,1),(1,0),(1,1)
    CHECK_FALSE(to.rows[1].first.at("p1"));
    CHECK(to.rows[1].first.at("p2"));

    CHECK_THROWS_AS(truth_table(star(), 3), AtomCapExceeded);
}

TEST_CASE("is_tautology") {
    CHECK(is_tautology(star()));
    CHECK(is_tautology(parse("((t -> !(p1 & p2)) & t) -> ((p1 | p2) <-> (p1 ^ p2))")));
    CHECK_FALSE(is_tautology(parse("t")));
}

TEST_CASE("are_equivalent") {
    CHECK(are_equivalent(parse(kStarLhs), parse(kStarRhs)));
    CHECK(are_equivalent(parse("(p1 & !p2) | (p1 & p2)"), parse("p1")));
    CHECK_FALSE(are_equivalent(parse("p1 | p2"), parse("p1 ^ p2")));
}

TEST_CASE("find_model is deterministic in table order") {
    CHECK_FALSE(find_model(parse("t & !t")).has_value());
    CHECK_FALSE(find_model(parse("(p1 & !p2) & (p1 & p2)")).has_value());
    auto m = find_model(parse("p1 | p2"));
    REQUIRE(m.has_value());
    CHECK_FALSE(m->at("p1"));
    CHECK(m->at("p2"));
}

TEST_CASE("mutually_exclusive") {
    CHECK(mutually_exclusive(parse("q"), parse("p1 & !p2"), parse("p1 & p2")));
    // independent atoms: t=p1=p2=true is a joint model
    CHECK_FALSE(mutually_exclusive(parse("t"), parse("p1"), parse("p2")));
    CHECK(mutually_exclusive(parse("!(p1 & p2)"), parse("p1"), parse("p2")));
}

TEST_CASE("property: parse/format round-trip") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 1000; ++i) {
        Formula f = testutil::random_formula(rng, 8, 6);
        CHECK(parse(format(f)).structurally_equal(f));
    }
}

TEST_CASE("property: connective semantics on random formulas and valuations") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Formula f = testutil::random_formula(rng, 5, 4);
        Formula g = testutil::random_formula(rng, 5, 4);
        Valuation v;
        for (int k = 1; k <= 4; ++k) v["a" + std::to_string(k)] = rng() & 1;
        CHECK(evaluate(Formula::negation(f), v) == !evaluate(f, v));
        CHECK(evaluate(Formula::exclusive_or(f, g), v) ==
              (evaluate(f, v) != evaluate(g, v)));
    }
}

TEST_CASE("property: De Morgan") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        Formula f = testutil::random_formula(rng, 4, 3);
        Formula g = testutil::random_formula(rng, 4, 3);
        CHECK(are_equivalent(Formula::negation(Formula::conjunction(f, g)),
                             Formula::disjunction(Formula::negation(f),
                                                  Formula::negation(g))));
        CHECK(are_equivalent(Formula::negation(Formula::disjunction(f, g)),
                             Formula::conjunction(Formula::negation(f),
                                                  Formula::negation(g))));
    }
}

TEST_CASE("property: are_equivalent is an equivalence relation") {
    std::mt19937_64 rng(13);
    std::vector<Formula> sample;
    for (int i = 0; i < 12; ++i) sample.push_back(testutil::random_formula(rng, 4, 3));
    for (const auto& f : sample) CHECK(are_equivalent(f, f));
    for (const auto& f : sample)
        for (const auto& g : sample)
            CHECK(are_equivalent(f, g) == are_equivalent(g, f));
    for (const auto& f : sample)
        for (const auto& g : sample)
            for (const auto& h : sample)
                if (are_equivalent(f, g) && are_equivalent(g, h))
                    CHECK(are_equivalent(f, h));
}

TEST_CASE("property: tautology iff negation has no model") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        Formula f = testutil::random_formula(rng, 5, 4);
        CHECK(is_tautology(f) == !find_model(Formula::negation(f)).has_value());
    }
}

TEST_CASE("the composition law generalizes to n disjuncts, n = 2..5") {
    Formula t = Formula::atom("t"), r = Formula::atom("r");
    for (int n = 2; n <= 5; ++n) {
        std::vector<Formula> ps;
        for (int i = 1; i <= n; ++i) ps.push_back(Formula::atom("p" + std::to_string(i)));
        Formula lhs = Formula::implication(Formula::conjunction(t, ps[0]), r);
        Formula disj = ps.back();
        for (int i = n - 2; i >= 0; --i) disj = Formula::disjunction(ps[i], disj);
        for (int i = 1; i < n; ++i)
            lhs = Formula::conjunction(
                lhs, Formula::implication(Formula::conjunction(t, ps[i]), r));
        Formula rhs = Formula::implication(Formula::conjunction(t, disj), r);
        CHECK(is_tautology(Formula::biconditional(lhs, rhs)));
    }
}

TEST_CASE("conditional xor law holds, unconditioned version fails") {
    CHECK(is_tautology(parse("((t -> !(p1 & p2)) & t) -> ((p1 | p2) <-> (p1 ^ p2))")));
    CHECK_FALSE(are_equivalent(parse("p1 | p2"), parse("p1 ^ p2")));
}
