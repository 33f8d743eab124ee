#ifndef INVPROB_SCHEMA_FILE_HPP
#define INVPROB_SCHEMA_FILE_HPP

#include <iosfwd>
#include <string>

#include "invprob/schema.hpp"
#include "invprob/verify.hpp"

namespace invprob {

class SchemaFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One schema file: a [problem] section and an optional [interpretation]
/// section binding atoms to built-in predicate ids. Kind is inferred from
/// the disjunct count: one disjunct is a generating schema, two or more a
/// composed one.
struct SchemaFile {
    ProblemSchema schema;
    Interpretation interpretation;
};

SchemaFile parse_schema_file(std::istream& in, const std::string& origin = "<input>");
SchemaFile load_schema_file(const std::string& path);
std::string write_schema_file(const ProblemSchema& schema, const Interpretation& interp);

}  // namespace invprob

#endif
