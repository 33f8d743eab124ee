#include <doctest.h>

#include "invprob/schema.hpp"
#include "random_formula.hpp"

using namespace invprob;

namespace {

ProblemSchema generating(const std::string& name, const std::string& ctx,
                         const std::string& disjunct, const std::string& concl) {
    return ProblemSchema{name, parse(ctx), {parse(disjunct)}, parse(concl),
                         SchemaKind::Generating, std::nullopt, nullptr};
}

std::vector<ProblemSchema> group1_generating() {
    return {generating("2.1", "t", "p1", "r"), generating("2.2", "t", "p2", "r")};
}

std::vector<ProblemSchema> group2_generating() {
    return {generating("3.1", "t", "p1 & !p2", "r"), generating("3.2", "t", "p1 & p2", "r")};
}

}  // namespace

TEST_CASE("structural_formula per kind") {
    auto g1 = group1_generating();
    CHECK(format(structural_formula(g1[0])) == "t & p1 -> r");

    GeneratingSet set = validate_generating_set(g1);
    ProblemSchema composed = compose(set);
    CHECK(format(structural_formula(composed)) == "t & (p1 | p2) -> r");

    GeneratingSet set2 = validate_generating_set(group2_generating());
    ProblemSchema composed2 = compose(set2);
    ExclusivityEvidence prop{ExclusivityEvidence::Status::Propositional, 0, false, ""};
    ProblemSchema inv2 = invert(refine_to_xor(composed2, prop));
    CHECK(format(structural_formula(inv2)) == "t & r -> (p1 & !p2) ^ (p1 & p2)");
}

TEST_CASE("validate_generating_set extracts the shared parts") {
    GeneratingSet s1 = validate_generating_set(group1_generating());
    CHECK(format(s1.context) == "t");
    CHECK(format(s1.conclusion) == "r");
    REQUIRE(s1.disjuncts.size() == 2);
    CHECK(format(s1.disjuncts[0]) == "p1");

    GeneratingSet s2 = validate_generating_set(group2_generating());
    CHECK(format(s2.disjuncts[0]) == "p1 & !p2");
    CHECK(format(s2.disjuncts[1]) == "p1 & p2");
}

TEST_CASE("validate_generating_set error paths") {
    CHECK_THROWS_WITH_AS(validate_generating_set({generating("2.1", "t", "p1", "r")}),
                         "a generating set needs at least two schemas", SchemaError);
    CHECK_THROWS_AS(validate_generating_set({generating("a", "t", "p1", "r"),
                                             generating("b", "u", "p2", "r")}),
                    SchemaError);  // context mismatch
    CHECK_THROWS_AS(validate_generating_set({generating("a", "t", "p1", "r"),
                                             generating("b", "t", "p2", "q")}),
                    SchemaError);  // conclusion mismatch
    CHECK_THROWS_AS(validate_generating_set({generating("a", "t", "p1", "r"),
                                             generating("b", "t", "p1", "r")}),
                    SchemaError);  // duplicate disjunct
    auto composed = compose(validate_generating_set(group1_generating()));
    CHECK_THROWS_AS(validate_generating_set({composed, composed}), SchemaError);
}

TEST_CASE("check_composition_law yields an all-true table") {
    TruthTable t1 = check_composition_law(validate_generating_set(group1_generating()));
    CHECK(t1.rows.size() == 16);
    CHECK(t1.all_true());

    TruthTable t2 = check_composition_law(validate_generating_set(group2_generating()));
    CHECK(t2.rows.size() == 16);  // atoms t, p1, p2, r
    CHECK(t2.all_true());

    auto three = std::vector<ProblemSchema>{generating("a", "t", "a", "r"),
                                            generating("b", "t", "b", "r"),
                                            generating("c", "t", "c", "r")};
    ProblemSchema composed3 = compose(validate_generating_set(three));
    CHECK(format(structural_formula(composed3)) == "t & (a | b | c) -> r");
}

TEST_CASE("refine_to_xor keeps everything but the kind") {
    ProblemSchema composed = compose(validate_generating_set(group2_generating()));
    ExclusivityEvidence prop{ExclusivityEvidence::Status::Propositional, 0, false, ""};
    ProblemSchema refined = refine_to_xor(composed, prop);
    CHECK(refined.kind == SchemaKind::ComposedXor);
    CHECK(refined.context.structurally_equal(composed.context));
    CHECK(refined.conclusion.structurally_equal(composed.conclusion));
    REQUIRE(refined.evidence.has_value());
    CHECK(refined.evidence->status == ExclusivityEvidence::Status::Propositional);

    ExclusivityEvidence empirical{ExclusivityEvidence::Status::Empirical, 10000, false, ""};
    ProblemSchema composed1 = compose(validate_generating_set(group1_generating()));
    CHECK(refine_to_xor(composed1, empirical).kind == SchemaKind::ComposedXor);

    ExclusivityEvidence contradicted{ExclusivityEvidence::Status::Empirical, 5, true, ""};
    CHECK_THROWS_AS(refine_to_xor(composed1, contradicted), SchemaError);
    CHECK_THROWS_AS(refine_to_xor(refined, prop), SchemaError);  // already xor
}

TEST_CASE("refine_to_xor preserves the structural formula under the premise") {
    // With the pairwise-exclusivity premise conjoined to the context, the
    // composed and composed-xor structural formulas are equivalent.
    ProblemSchema composed = compose(validate_generating_set(group2_generating()));
    ExclusivityEvidence prop{ExclusivityEvidence::Status::Propositional, 0, false, ""};
    ProblemSchema refined = refine_to_xor(composed, prop);
    CHECK(are_equivalent(structural_formula(composed), structural_formula(refined)));
}

TEST_CASE("invert swaps conclusion and disjunction and is terminal") {
    ProblemSchema composed = compose(validate_generating_set(group1_generating()));
    ExclusivityEvidence emp{ExclusivityEvidence::Status::Empirical, 10000, false, ""};
    ProblemSchema xorred = refine_to_xor(composed, emp);
    ProblemSchema inv = invert(xorred);
    CHECK(inv.kind == SchemaKind::Inverse);
    CHECK(format(structural_formula(inv)) == "t & r -> p1 ^ p2");
    CHECK_THROWS_AS(invert(inv), SchemaError);
    CHECK_THROWS_AS(invert(group1_generating()[0]), SchemaError);

    // round-trip via the retained composed schema
    REQUIRE(inv.composed_from != nullptr);
    CHECK(inv.composed_from->kind == SchemaKind::ComposedXor);
    CHECK(structural_formula(*inv.composed_from)
              .structurally_equal(structural_formula(xorred)));
}

TEST_CASE("exactly_one is exactly-one, not parity, for n >= 3") {
    std::vector<Formula> fs{Formula::atom("a"), Formula::atom("b"), Formula::atom("c")};
    Formula eo = exactly_one(fs);
    Valuation all_true{{"a", true}, {"b", true}, {"c", true}};
    CHECK_FALSE(evaluate(eo, all_true));  // nested binary xor would say true
    CHECK(evaluate(eo, Valuation{{"a", false}, {"b", true}, {"c", false}}));
    CHECK_FALSE(evaluate(eo, Valuation{{"a", false}, {"b", false}, {"c", false}}));
    CHECK(exactly_one({Formula::atom("a"), Formula::atom("b")}).op() == Connective::Xor);
}

TEST_CASE("property: the composition law holds for random generating sets") {
    std::mt19937_64 rng(23);
    int built = 0;
    while (built < 100) {
        int n = 2 + static_cast<int>(rng() % 4);
        std::vector<ProblemSchema> schemas;
        Formula ctx = Formula::atom("t");
        Formula concl = Formula::atom("r");
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            Formula d = testutil::random_formula(rng, 3, 3);
            for (const auto& s : schemas)
                if (s.disjuncts[0].structurally_equal(d)) ok = false;
            if (ok)
                schemas.push_back(ProblemSchema{"g" + std::to_string(i), ctx, {d}, concl,
                                                SchemaKind::Generating, std::nullopt,
                                                nullptr});
        }
        if (!ok) continue;
        GeneratingSet set = validate_generating_set(schemas);
        std::vector<Formula> parts;
        for (const auto& s : set.schemas) parts.push_back(structural_formula(s));
        Formula lhs = parts.back();
        for (std::size_t i = parts.size() - 1; i-- > 0;)
            lhs = Formula::conjunction(parts[i], lhs);
        CHECK(are_equivalent(lhs, structural_formula(compose(set))));
        ++built;
    }
}
