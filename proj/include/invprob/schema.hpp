#ifndef INVPROB_SCHEMA_HPP
#define INVPROB_SCHEMA_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "invprob/formula.hpp"

namespace invprob {

enum class SchemaKind { Generating, Composed, ComposedXor, Inverse };

const char* to_string(SchemaKind k);

/// Exclusivity of the hypothesis disjuncts, in decreasing strength:
/// propositional (no valuation satisfies two disjuncts under the context),
/// asserted (taken on faith), empirical (no joint model in N geometric samples).
struct ExclusivityEvidence {
    enum class Status { Propositional, Asserted, Empirical };
    Status status;
    std::uint64_t sample_count = 0;  // Empirical only
    bool witness_found = false;      // a joint model exists; contradicts exclusivity
    std::string detail;
};

struct ProblemSchema {
    std::string name;
    Formula context;
    std::vector<Formula> disjuncts;  // n = 1 generating, n >= 2 otherwise
    Formula conclusion;
    SchemaKind kind;

    std::optional<ExclusivityEvidence> evidence;       // composed-xor and inverse
    std::shared_ptr<const ProblemSchema> composed_from;  // inverse: the schema inverted
};

struct GeneratingSet {
    std::vector<ProblemSchema> schemas;
    Formula context;
    Formula conclusion;
    std::vector<Formula> disjuncts;  // input order
};

class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exactly-one-of over n formulas. Binary xor node for n = 2; for n >= 3 the
/// expansion OR_i (H_i & AND_{j!=i} !H_j), since chained binary xor is parity.
Formula exactly_one(const std::vector<Formula>& fs);

Formula structural_formula(const ProblemSchema& s);
GeneratingSet validate_generating_set(const std::vector<ProblemSchema>& schemas);
TruthTable check_composition_law(const GeneratingSet& g,
                                 std::size_t atom_cap = kDefaultAtomCap);
ProblemSchema compose(const GeneratingSet& g, std::size_t atom_cap = kDefaultAtomCap);
ProblemSchema refine_to_xor(const ProblemSchema& s, const ExclusivityEvidence& e);
ProblemSchema invert(const ProblemSchema& s);

}  // namespace invprob

#endif
