#include "invprob/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace invprob {

namespace {

std::shared_ptr<const Formula::Node> make_node(Connective op, std::string name,
                                               std::shared_ptr<const Formula::Node> l,
                                               std::shared_ptr<const Formula::Node> r) {
    auto n = std::make_shared<Formula::Node>();
    n->op = op;
    n->name = std::move(name);
    n->left = std::move(l);
    n->right = std::move(r);
    return n;
}

struct FormulaAccess {
    static Formula wrap(std::shared_ptr<const Formula::Node> n);
    static const std::shared_ptr<const Formula::Node>& node(const Formula& f);
};

}  // namespace

Formula Formula::atom(std::string name) {
    return Formula(make_node(Connective::Atom, std::move(name), nullptr, nullptr));
}
Formula Formula::negation(const Formula& f) {
    return Formula(make_node(Connective::Not, {}, f.node_, nullptr));
}
Formula Formula::conjunction(const Formula& a, const Formula& b) {
    return Formula(make_node(Connective::And, {}, a.node_, b.node_));
}
Formula Formula::disjunction(const Formula& a, const Formula& b) {
    return Formula(make_node(Connective::Or, {}, a.node_, b.node_));
}
Formula Formula::exclusive_or(const Formula& a, const Formula& b) {
    return Formula(make_node(Connective::Xor, {}, a.node_, b.node_));
}
Formula Formula::implication(const Formula& a, const Formula& b) {
    return Formula(make_node(Connective::Implies, {}, a.node_, b.node_));
}
Formula Formula::biconditional(const Formula& a, const Formula& b) {
    return Formula(make_node(Connective::Iff, {}, a.node_, b.node_));
}

bool Formula::structurally_equal(const Formula& other) const {
    const Node* a = node_.get();
    const Node* b = other.node_.get();
    if (a == b) return true;
    if (a->op != b->op) return false;
    switch (a->op) {
        case Connective::Atom:
            return a->name == b->name;
        case Connective::Not:
            return Formula(a->left).structurally_equal(Formula(b->left));
        default:
            return Formula(a->left).structurally_equal(Formula(b->left)) &&
                   Formula(a->right).structurally_equal(Formula(b->right));
    }
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

enum class TokKind { Atom, Not, And, Or, Xor, Implies, Iff, LParen, RParen, End };

struct Token {
    TokKind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::size_t start = pos_;
        if (pos_ >= text_.size()) return {TokKind::End, "", start};
        char c = text_[pos_];
        if (c == '(') { ++pos_; return {TokKind::LParen, "(", start}; }
        if (c == ')') { ++pos_; return {TokKind::RParen, ")", start}; }
        if (c == '!') { ++pos_; return {TokKind::Not, "!", start}; }
        if (c == '&') { ++pos_; return {TokKind::And, "&", start}; }
        if (c == '|') { ++pos_; return {TokKind::Or, "|", start}; }
        if (c == '^') { ++pos_; return {TokKind::Xor, "^", start}; }
        if (c == '-') {
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
                pos_ += 2;
                return {TokKind::Implies, "->", start};
            }
            throw ParseError("expected '->' ", start);
        }
        if (c == '<') {
            if (pos_ + 2 < text_.size() && text_[pos_ + 1] == '-' && text_[pos_ + 2] == '>') {
                pos_ += 3;
                return {TokKind::Iff, "<->", start};
            }
            throw ParseError("expected '<->'", start);
        }
        if (c >= 'a' && c <= 'z') {
            std::size_t end = pos_ + 1;
            while (end < text_.size() &&
                   ((text_[end] >= 'a' && text_[end] <= 'z') ||
                    (text_[end] >= '0' && text_[end] <= '9') || text_[end] == '_'))
                ++end;
            std::string name = text_.substr(pos_, end - pos_);
            pos_ = end;
            return {TokKind::Atom, name, start};
        }
        throw ParseError(std::string("unknown token '") + c + "'", start);
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

// Grammar, tightest binding first: ! ; & ; | and ^ (same level, left-assoc,
// unparenthesized mixing rejected) ; -> (right-assoc) ; <-> (left-assoc).
class Parser {
public:
    explicit Parser(const std::string& text) : lexer_(text) { advance(); }

    Formula parse_formula() {
        Formula f = parse_iff();
        if (tok_.kind != TokKind::End)
            throw ParseError("unexpected trailing input", tok_.pos);
        return f;
    }

private:
    void advance() { tok_ = lexer_.next(); }

    Formula parse_iff() {
        Formula f = parse_implies();
        while (tok_.kind == TokKind::Iff) {
            advance();
            f = Formula::biconditional(f, parse_implies());
        }
        return f;
    }

    Formula parse_implies() {
        Formula f = parse_or_xor();
        if (tok_.kind == TokKind::Implies) {
            advance();
            return Formula::implication(f, parse_implies());
        }
        return f;
    }

    Formula parse_or_xor() {
        Formula f = parse_and();
        if (tok_.kind != TokKind::Or && tok_.kind != TokKind::Xor) return f;
        TokKind level_op = tok_.kind;
        while (tok_.kind == TokKind::Or || tok_.kind == TokKind::Xor) {
            if (tok_.kind != level_op)
                throw ParseError("mixing '|' and '^' requires parentheses", tok_.pos);
            advance();
            Formula rhs = parse_and();
            f = (level_op == TokKind::Or) ? Formula::disjunction(f, rhs)
                                          : Formula::exclusive_or(f, rhs);
        }
        return f;
    }

    Formula parse_and() {
        Formula f = parse_not();
        while (tok_.kind == TokKind::And) {
            advance();
            f = Formula::conjunction(f, parse_not());
        }
        return f;
    }

    Formula parse_not() {
        if (tok_.kind == TokKind::Not) {
            advance();
            return Formula::negation(parse_not());
        }
        return parse_primary();
    }

    Formula parse_primary() {
        if (tok_.kind == TokKind::Atom) {
            Formula f = Formula::atom(tok_.text);
            advance();
            return f;
        }
        if (tok_.kind == TokKind::LParen) {
            advance();
            Formula f = parse_iff();
            if (tok_.kind != TokKind::RParen)
                throw ParseError("expected ')'", tok_.pos);
            advance();
            return f;
        }
        if (tok_.kind == TokKind::End)
            throw ParseError("unexpected end of input", tok_.pos);
        throw ParseError("expected atom, '!' or '('", tok_.pos);
    }

    Lexer lexer_;
    Token tok_{TokKind::End, "", 0};
};

}  // namespace

Formula parse(const std::string& text) {
    bool only_space = true;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) only_space = false;
    if (only_space) throw ParseError("empty input", 0);
    return Parser(text).parse_formula();
}

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

namespace {

int precedence(Connective op) {
    switch (op) {
        case Connective::Atom: return 6;
        case Connective::Not: return 5;
        case Connective::And: return 4;
        case Connective::Or:
        case Connective::Xor: return 3;
        case Connective::Implies: return 2;
        case Connective::Iff: return 1;
    }
    return 0;
}

const char* symbol(Connective op) {
    switch (op) {
        case Connective::And: return "&";
        case Connective::Or: return "|";
        case Connective::Xor: return "^";
        case Connective::Implies: return "->";
        case Connective::Iff: return "<->";
        default: return "";
    }
}

void format_rec(const Formula& f, std::ostream& out) {
    switch (f.op()) {
        case Connective::Atom:
            out << f.atom_name();
            return;
        case Connective::Not: {
            out << '!';
            Formula child = f.left();
            bool parens = precedence(child.op()) < precedence(Connective::Not);
            if (parens) out << '(';
            format_rec(child, out);
            if (parens) out << ')';
            return;
        }
        default: {
            int prec = precedence(f.op());
            bool right_assoc = f.op() == Connective::Implies;
            Formula l = f.left(), r = f.right();
            // Same-level |/^ must stay parenthesized: reparsing rejects a mix.
            bool lp = precedence(l.op()) < prec ||
                      (precedence(l.op()) == prec && (right_assoc || l.op() != f.op()));
            bool rp = precedence(r.op()) < prec ||
                      (precedence(r.op()) == prec && (!right_assoc || r.op() != f.op()));
            // Readability parens around & directly under | or ^.
            if (f.op() == Connective::Or || f.op() == Connective::Xor) {
                lp = lp || l.op() == Connective::And;
                rp = rp || r.op() == Connective::And;
            }
            if (lp) out << '(';
            format_rec(l, out);
            if (lp) out << ')';
            out << ' ' << symbol(f.op()) << ' ';
            if (rp) out << '(';
            format_rec(r, out);
            if (rp) out << ')';
            return;
        }
    }
}

}  // namespace

std::string format(const Formula& f) {
    std::ostringstream out;
    format_rec(f, out);
    return out.str();
}

// ---------------------------------------------------------------------------
// Semantics
// ---------------------------------------------------------------------------

bool evaluate(const Formula& f, const Valuation& v) {
    switch (f.op()) {
        case Connective::Atom: {
            auto it = v.find(f.atom_name());
            if (it == v.end())
                throw std::out_of_range("valuation missing atom '" + f.atom_name() + "'");
            return it->second;
        }
        case Connective::Not: return !evaluate(f.left(), v);
        case Connective::And: return evaluate(f.left(), v) && evaluate(f.right(), v);
        case Connective::Or: return evaluate(f.left(), v) || evaluate(f.right(), v);
        case Connective::Xor: return evaluate(f.left(), v) != evaluate(f.right(), v);
        case Connective::Implies: return !evaluate(f.left(), v) || evaluate(f.right(), v);
        case Connective::Iff: return evaluate(f.left(), v) == evaluate(f.right(), v);
    }
    throw std::logic_error("unreachable connective");
}

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
    switch (f.op()) {
        case Connective::Atom: out.insert(f.atom_name()); return;
        case Connective::Not: collect_atoms(f.left(), out); return;
        default:
            collect_atoms(f.left(), out);
            collect_atoms(f.right(), out);
            return;
    }
}

std::vector<std::string> checked_atoms(const Formula& f, std::size_t atom_cap) {
    auto names = atoms(f);
    if (names.size() > atom_cap)
        throw AtomCapExceeded("formula has " + std::to_string(names.size()) +
                              " atoms, cap is " + std::to_string(atom_cap));
    return names;
}

Valuation row_valuation(const std::vector<std::string>& names, std::uint64_t index) {
    Valuation v;
    std::size_t n = names.size();
    for (std::size_t i = 0; i < n; ++i)
        v[names[i]] = ((index >> (n - 1 - i)) & 1u) != 0;
    return v;
}

}  // namespace

std::vector<std::string> atoms(const Formula& f) {
    std::set<std::string> s;
    collect_atoms(f, s);
    return {s.begin(), s.end()};
}

bool TruthTable::all_true() const {
    return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.second; });
}

TruthTable truth_table(const Formula& f, std::size_t atom_cap) {
    TruthTable t;
    t.atoms = checked_atoms(f, atom_cap);
    std::uint64_t total = std::uint64_t{1} << t.atoms.size();
    t.rows.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) {
        Valuation v = row_valuation(t.atoms, i);
        bool value = evaluate(f, v);
        t.rows.emplace_back(std::move(v), value);
    }
    return t;
}

bool is_tautology(const Formula& f, std::size_t atom_cap) {
    auto names = checked_atoms(f, atom_cap);
    std::uint64_t total = std::uint64_t{1} << names.size();
    for (std::uint64_t i = 0; i < total; ++i)
        if (!evaluate(f, row_valuation(names, i))) return false;
    return true;
}

bool are_equivalent(const Formula& f, const Formula& g, std::size_t atom_cap) {
    return is_tautology(Formula::biconditional(f, g), atom_cap);
}

std::optional<Valuation> find_model(const Formula& f, std::size_t atom_cap) {
    auto names = checked_atoms(f, atom_cap);
    std::uint64_t total = std::uint64_t{1} << names.size();
    for (std::uint64_t i = 0; i < total; ++i) {
        Valuation v = row_valuation(names, i);
        if (evaluate(f, v)) return v;
    }
    return std::nullopt;
}

bool mutually_exclusive(const Formula& context, const Formula& f, const Formula& g,
                        std::size_t atom_cap) {
    Formula joint = Formula::conjunction(Formula::conjunction(context, f), g);
    return !find_model(joint, atom_cap).has_value();
}

}  // namespace invprob
