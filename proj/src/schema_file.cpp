#include "invprob/schema_file.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace invprob {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& origin, std::size_t line, const std::string& msg) {
    throw SchemaFileError(origin + ":" + std::to_string(line) + ": " + msg);
}

}  // namespace

SchemaFile parse_schema_file(std::istream& in, const std::string& origin) {
    enum class Section { None, Problem, Interpretation };
    Section section = Section::None;

    std::string name;
    std::optional<Formula> context, conclusion;
    std::vector<Formula> disjuncts;
    Interpretation interp;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string t = trim(line);
        if (t.empty()) continue;
        if (t == "[problem]") { section = Section::Problem; continue; }
        if (t == "[interpretation]") { section = Section::Interpretation; continue; }
        if (t.front() == '[') fail(origin, lineno, "unknown section '" + t + "'");
        auto eq = t.find('=');
        if (eq == std::string::npos) fail(origin, lineno, "expected 'key = value'");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (value.empty()) fail(origin, lineno, "empty value for key '" + key + "'");

        if (section == Section::Problem) {
            try {
                if (key == "name") name = value;
                else if (key == "context") context = parse(value);
                else if (key == "disjunct") disjuncts.push_back(parse(value));
                else if (key == "conclusion") conclusion = parse(value);
                else fail(origin, lineno, "unknown [problem] key '" + key + "'");
            } catch (const ParseError& e) {
                fail(origin, lineno, std::string("formula error: ") + e.what());
            }
        } else if (section == Section::Interpretation) {
            if (!is_group1_predicate(value) && !is_group2_predicate(value))
                fail(origin, lineno, "unknown predicate id '" + value + "'");
            interp[key] = value;
        } else {
            fail(origin, lineno, "key outside any section");
        }
    }

    if (!context) throw SchemaFileError(origin + ": missing 'context'");
    if (!conclusion) throw SchemaFileError(origin + ": missing 'conclusion'");
    if (disjuncts.empty()) throw SchemaFileError(origin + ": missing 'disjunct'");
    if (name.empty()) name = origin;

    SchemaKind kind =
        disjuncts.size() == 1 ? SchemaKind::Generating : SchemaKind::Composed;
    ProblemSchema schema{name,  *context, std::move(disjuncts), *conclusion,
                         kind,  std::nullopt, nullptr};
    return SchemaFile{std::move(schema), std::move(interp)};
}

SchemaFile load_schema_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaFileError("cannot open schema file '" + path + "'");
    return parse_schema_file(in, path);
}

std::string write_schema_file(const ProblemSchema& schema, const Interpretation& interp) {
    std::ostringstream out;
    out << "[problem]\n";
    out << "name = " << schema.name << "\n";
    out << "context = " << format(schema.context) << "\n";
    for (const auto& d : schema.disjuncts) out << "disjunct = " << format(d) << "\n";
    out << "conclusion = " << format(schema.conclusion) << "\n";
    if (!interp.empty()) {
        out << "\n[interpretation]\n";
        for (const auto& [atom, id] : interp) out << atom << " = " << id << "\n";
    }
    return out.str();
}

}  // namespace invprob
