#include <doctest.h>

#include <sstream>

#include "invprob/schema_file.hpp"

using namespace invprob;

namespace {

SchemaFile parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse_schema_file(in, "<test>");
}

}  // namespace

TEST_CASE("schema file round trip") {
    const std::string text =
        "# group I composed problem\n"
        "[problem]\n"
        "name = group1-composed\n"
        "context = t\n"
        "disjunct = p1\n"
        "disjunct = p2\n"
        "conclusion = r   # equal areas\n"
        "\n"
        "[interpretation]\n"
        "t = group1.triangle_line_point\n"
        "p1 = group1.median\n"
        "p2 = group1.parallel\n"
        "r = group1.equal_areas\n";
    SchemaFile f = parse_text(text);
    CHECK(f.schema.name == "group1-composed");
    CHECK(f.schema.kind == SchemaKind::Composed);
    REQUIRE(f.schema.disjuncts.size() == 2);
    CHECK(format(f.schema.disjuncts[1]) == "p2");
    CHECK(f.interpretation.at("p1") == "group1.median");

    SchemaFile again = parse_text(write_schema_file(f.schema, f.interpretation));
    CHECK(again.schema.context.structurally_equal(f.schema.context));
    CHECK(again.schema.conclusion.structurally_equal(f.schema.conclusion));
    CHECK(again.interpretation == f.interpretation);
}

TEST_CASE("single disjunct loads as a generating schema") {
    SchemaFile f = parse_text(
        "[problem]\nname = g\ncontext = t\ndisjunct = p1 & !p2\nconclusion = r\n");
    CHECK(f.schema.kind == SchemaKind::Generating);
    CHECK(format(f.schema.disjuncts[0]) == "p1 & !p2");
}

TEST_CASE("schema file error paths") {
    CHECK_THROWS_AS(parse_text("[problem]\nname = x\ncontext = t\nconclusion = r\n"),
                    SchemaFileError);  // no disjunct
    CHECK_THROWS_AS(parse_text("[problem]\nfoo = bar\n"), SchemaFileError);  // unknown key
    CHECK_THROWS_AS(parse_text("[wat]\n"), SchemaFileError);
    CHECK_THROWS_AS(parse_text("name = x\n"), SchemaFileError);  // key outside section
    CHECK_THROWS_AS(parse_text("[problem]\ncontext = t &\n"), SchemaFileError);
    CHECK_THROWS_AS(
        parse_text("[problem]\nname = x\ncontext = t\ndisjunct = p\nconclusion = r\n"
                   "[interpretation]\np = no.such.predicate\n"),
        SchemaFileError);
    CHECK_THROWS_AS(load_schema_file("/no/such/file.schema"), SchemaFileError);
}
