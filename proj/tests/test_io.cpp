#include <catch_amalgamated.hpp>

#include <sstream>

#include "kfam/generators.hpp"
#include "kfam/io.hpp"

using namespace kfam;

static KFamily parse(const std::string& text) {
    std::istringstream in(text);
    return parse_facet_file(in);
}

TEST_CASE("parse_facet_file accepts the documented format") {
    const auto s = parse("5 3\n1 2 3\n1 2 4\n1 2 5\n");
    CHECK(s == star_family(5, 3));

    // comments and blank lines
    const auto t = parse("# a star\n\n5 3  # header\n1 2 3\n# middle\n1 2 4\n1 2 5\n");
    CHECK(t == s);

    // empty facet list is allowed and yields the empty family
    const auto e = parse("4 2\n");
    CHECK(e.n == 4);
    CHECK(e.k == 2);
    CHECK(e.facet_count() == 0);
}

TEST_CASE("parse_facet_file rejects malformed input") {
    CHECK_THROWS_AS(parse(""), FormatError);                       // missing header
    CHECK_THROWS_AS(parse("x y\n"), FormatError);                  // malformed header
    CHECK_THROWS_AS(parse("3 2 9\n1 2\n"), FormatError);           // trailing header token
    CHECK_THROWS_AS(parse("3 4\n"), FormatError);                  // k > n
    CHECK_THROWS_AS(parse("3 2\n1 2 3\n"), FormatError);           // wrong cardinality
    CHECK_THROWS_AS(parse("3 2\n2 1\n"), FormatError);             // not strictly increasing
    CHECK_THROWS_AS(parse("3 2\n1 1\n"), FormatError);             // repeated vertex
    CHECK_THROWS_AS(parse("3 2\n1 4\n"), FormatError);             // out of range
    CHECK_THROWS_AS(parse("3 2\n1 2\n1 2\n"), FormatError);        // duplicate facet
    CHECK_THROWS_AS(parse("3 2\n1 z\n"), FormatError);             // non-integer token
}

TEST_CASE("write then parse round-trips") {
    for (const KFamily& s : {star_family(6, 3), complete_family(5, 2),
                             threshold_graph(parse_threshold_steps("ciic")),
                             cycle_family(5, 3)}) {
        std::ostringstream out;
        write_facet_file(out, s);
        CHECK(parse(out.str()) == s);
    }
}
