#include "invprob/schema.hpp"

namespace invprob {

const char* to_string(SchemaKind k) {
    switch (k) {
        case SchemaKind::Generating: return "generating";
        case SchemaKind::Composed: return "composed";
        case SchemaKind::ComposedXor: return "composed-xor";
        case SchemaKind::Inverse: return "inverse";
    }
    return "?";
}

namespace {

// Left-nested to match the parser's associativity: the printed form of
// H1 | H2 | H3 then round-trips without parentheses.
Formula disjunction_of(const std::vector<Formula>& fs) {
    Formula acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::disjunction(acc, fs[i]);
    return acc;
}

Formula conjunction_of(const std::vector<Formula>& fs) {
    Formula acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::conjunction(acc, fs[i]);
    return acc;
}

}  // namespace

Formula exactly_one(const std::vector<Formula>& fs) {
    if (fs.empty()) throw SchemaError("exactly_one over zero formulas");
    if (fs.size() == 1) return fs[0];
    if (fs.size() == 2) return Formula::exclusive_or(fs[0], fs[1]);
    std::vector<Formula> cases;
    cases.reserve(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) {
        Formula c = fs[i];
        for (std::size_t j = 0; j < fs.size(); ++j)
            if (j != i) c = Formula::conjunction(c, Formula::negation(fs[j]));
        cases.push_back(c);
    }
    return disjunction_of(cases);
}

Formula structural_formula(const ProblemSchema& s) {
    switch (s.kind) {
        case SchemaKind::Generating:
            return Formula::implication(Formula::conjunction(s.context, s.disjuncts[0]),
                                        s.conclusion);
        case SchemaKind::Composed:
            return Formula::implication(
                Formula::conjunction(s.context, disjunction_of(s.disjuncts)), s.conclusion);
        case SchemaKind::ComposedXor:
            return Formula::implication(
                Formula::conjunction(s.context, exactly_one(s.disjuncts)), s.conclusion);
        case SchemaKind::Inverse:
            return Formula::implication(Formula::conjunction(s.context, s.conclusion),
                                        exactly_one(s.disjuncts));
    }
    throw SchemaError("unknown schema kind");
}

GeneratingSet validate_generating_set(const std::vector<ProblemSchema>& schemas) {
    if (schemas.size() < 2)
        throw SchemaError("a generating set needs at least two schemas");
    for (const auto& s : schemas) {
        if (s.kind != SchemaKind::Generating)
            throw SchemaError("schema '" + s.name + "' is not a generating schema");
        if (s.disjuncts.size() != 1)
            throw SchemaError("generating schema '" + s.name +
                              "' must have exactly one hypothesis disjunct");
    }
    const Formula& ctx = schemas.front().context;
    const Formula& concl = schemas.front().conclusion;
    for (const auto& s : schemas) {
        if (!s.context.structurally_equal(ctx))
            throw SchemaError("context mismatch in schema '" + s.name + "'");
        if (!s.conclusion.structurally_equal(concl))
            throw SchemaError("conclusion mismatch in schema '" + s.name + "'");
    }
    std::vector<Formula> disjuncts;
    for (const auto& s : schemas) {
        for (const auto& d : disjuncts)
            if (d.structurally_equal(s.disjuncts[0]))
                throw SchemaError("duplicate disjunct in schema '" + s.name + "'");
        disjuncts.push_back(s.disjuncts[0]);
    }
    return GeneratingSet{schemas, ctx, concl, std::move(disjuncts)};
}

TruthTable check_composition_law(const GeneratingSet& g, std::size_t atom_cap) {
    std::vector<Formula> generating;
    generating.reserve(g.schemas.size());
    for (const auto& s : g.schemas) generating.push_back(structural_formula(s));
    Formula lhs = conjunction_of(generating);
    Formula rhs = Formula::implication(
        Formula::conjunction(g.context, disjunction_of(g.disjuncts)), g.conclusion);
    return truth_table(Formula::biconditional(lhs, rhs), atom_cap);
}

ProblemSchema compose(const GeneratingSet& g, std::size_t atom_cap) {
    if (!check_composition_law(g, atom_cap).all_true())
        throw SchemaError("composition law failed; generating set is inconsistent");
    std::string name = g.schemas.front().name + "+";
    for (std::size_t i = 1; i < g.schemas.size(); ++i) name += g.schemas[i].name;
    return ProblemSchema{std::move(name), g.context, g.disjuncts, g.conclusion,
                         SchemaKind::Composed, std::nullopt, nullptr};
}

ProblemSchema refine_to_xor(const ProblemSchema& s, const ExclusivityEvidence& e) {
    if (s.kind != SchemaKind::Composed)
        throw SchemaError("only a composed schema can be refined to xor");
    if (e.witness_found)
        throw SchemaError("exclusivity evidence carries a joint-model witness");
    ProblemSchema out = s;
    out.kind = SchemaKind::ComposedXor;
    out.evidence = e;
    return out;
}

ProblemSchema invert(const ProblemSchema& s) {
    if (s.kind != SchemaKind::Composed && s.kind != SchemaKind::ComposedXor)
        throw SchemaError("only composed schemas can be inverted");
    return ProblemSchema{s.name + "-inverse",    s.context, s.disjuncts,
                         s.conclusion,           SchemaKind::Inverse,
                         s.evidence,             std::make_shared<const ProblemSchema>(s)};
}

}  // namespace invprob
