#ifndef INVPROB_FORMULA_HPP
#define INVPROB_FORMULA_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace invprob {

enum class Connective { Atom, Not, And, Or, Xor, Implies, Iff };

/// Immutable propositional formula over named atoms.
/// Value type; copies share the underlying node tree.
class Formula {
public:
    struct Node {
        Connective op;
        std::string name;                    // Atom only
        std::shared_ptr<const Node> left;    // unary child or left operand
        std::shared_ptr<const Node> right;
    };

    static Formula atom(std::string name);
    static Formula negation(const Formula& f);
    static Formula conjunction(const Formula& a, const Formula& b);
    static Formula disjunction(const Formula& a, const Formula& b);
    static Formula exclusive_or(const Formula& a, const Formula& b);
    static Formula implication(const Formula& a, const Formula& b);
    static Formula biconditional(const Formula& a, const Formula& b);

    Connective op() const { return node_->op; }
    const std::string& atom_name() const { return node_->name; }
    Formula left() const { return Formula(node_->left); }
    Formula right() const { return Formula(node_->right); }

    bool structurally_equal(const Formula& other) const;

private:
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

using Valuation = std::map<std::string, bool>;

struct TruthTable {
    std::vector<std::string> atoms;                 // sorted ascending
    std::vector<std::pair<Valuation, bool>> rows;   // lexicographic, false < true,
                                                    // first atom most significant
    bool all_true() const;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class AtomCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultAtomCap = 24;

Formula parse(const std::string& text);
std::string format(const Formula& f);
bool evaluate(const Formula& f, const Valuation& v);
std::vector<std::string> atoms(const Formula& f);

TruthTable truth_table(const Formula& f, std::size_t atom_cap = kDefaultAtomCap);
bool is_tautology(const Formula& f, std::size_t atom_cap = kDefaultAtomCap);
bool are_equivalent(const Formula& f, const Formula& g,
                    std::size_t atom_cap = kDefaultAtomCap);
std::optional<Valuation> find_model(const Formula& f,
                                    std::size_t atom_cap = kDefaultAtomCap);
bool mutually_exclusive(const Formula& context, const Formula& f, const Formula& g,
                        std::size_t atom_cap = kDefaultAtomCap);

}  // namespace invprob

#endif
