#include <doctest.h>

#include <string>

#include "bca/errors.hpp"
#include "bca/relation_enumeration.hpp"
#include "bca/text_format.hpp"
#include "support/fixtures.hpp"

using namespace bca;
using bca::testing::set;

namespace {

std::string error_of(std::string_view text) {
    try {
        parse_algebra_text(text);
    } catch (const InputError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("atom sets") {
    CHECK(format_atoms(0) == "{}");
    CHECK(format_atoms(set({0, 2})) == "{0,2}");
    CHECK(parse_atoms(" { 2 , 0 } ", 3) == set({0, 2}));
    CHECK(parse_atoms("{}", 3) == 0);
    CHECK_THROWS_AS(parse_atoms("{0,", 3), InputError);
    CHECK_THROWS_AS(parse_atoms("0,1", 3), InputError);
    CHECK_THROWS_AS(parse_atoms("{3}", 3), InputError);
}

TEST_CASE("algebra files") {
    AlgebraText t = parse_algebra_text("# path\natoms: 3\ncontact: 0 1\ncontact: 1 2\nbounded: {0,1}\n");
    CHECK(t.atoms == 3);
    CHECK(t.contact.size() == 2);
    CHECK(t.bounded == set({0, 1}));

    LocalContactAlgebra closed = build_lca(t, true);
    CHECK(closed.ca().rows() == testing::path_rows(3));
    CHECK(closed.bounded_top() == set({0, 1}));
    CHECK_FALSE(build_lca(t, false).ca().is_contact());

    AlgebraText block = parse_algebra_text("atoms: 2\ncontact:\n0 0\n1 1\n");
    CHECK(block.contact.size() == 2);
    CHECK_FALSE(block.bounded.has_value());
    CHECK(build_lca(block).bounded_top() == 3);
}

TEST_CASE("emitting and re-reading an algebra is the identity") {
    LocalContactAlgebra l(testing::cycle_algebra(5), set({1, 2}));
    std::string text = emit_algebra(l);
    LocalContactAlgebra back = build_lca(parse_algebra_text(text));
    CHECK(back.ca().rows() == l.ca().rows());
    CHECK(back.bounded_top() == l.bounded_top());
    CHECK(emit_algebra(back) == text);
}

TEST_CASE("malformed algebra files name the line") {
    CHECK(error_of("atoms: 2\ncontact: 0 5\n").find("line 2") != std::string::npos);
    CHECK(error_of("contact: 0 1\n").find("line 1") != std::string::npos);
    CHECK(error_of("atoms: x\n").find("line 1") != std::string::npos);
    CHECK(error_of("atoms: 2\nbogus: 1\n").find("line 2") != std::string::npos);
    CHECK(error_of("atoms: 2\nbounded: {3}\n").find("line 2") != std::string::npos);
    CHECK_FALSE(error_of("").empty());
    CHECK_THROWS_AS(parse_algebra_text("atoms: 30\n"), InputError);
}

TEST_CASE("space files") {
    FiniteSpace x = parse_space_text("points: 3\nopen: {0}\nopen: {0,1}\n");
    CHECK(x.opens() == std::vector<Mask>{0, set({0}), set({0, 1}), 7});
    CHECK(parse_space_text(emit_space(x)) == x);
    CHECK_THROWS_AS(parse_space_text("points: 3\nopen: {0,1}\nopen: {1,2}\n"), InputError);
    CHECK_THROWS_AS(parse_space_text("points: 9\n"), InputError);
}

TEST_CASE("map files") {
    CHECK(parse_map_text("map: 0 0 1\n") == std::vector<int>{0, 0, 1});
    CHECK_THROWS_AS(parse_map_text("map: a\n"), InputError);
    CHECK_THROWS_AS(read_text_file("/nonexistent/file"), InputError);
}

TEST_CASE("relation classes up to relabelling") {
    // Unlabelled simple graphs and unlabelled binary relations.
    std::vector<std::size_t> graphs = {1, 1, 2, 4, 11, 34, 156};
    for (int n = 0; n <= 6; ++n)
        CHECK(enumerate_relations(n, RelationClass::reflexive_symmetric).size() == graphs[static_cast<std::size_t>(n)]);
    std::vector<std::size_t> relations = {1, 2, 10, 104, 3044};
    for (int n = 0; n <= 4; ++n)
        CHECK(enumerate_relations(n, RelationClass::all).size() == relations[static_cast<std::size_t>(n)]);
    CHECK_THROWS_AS(enumerate_relations(7, RelationClass::reflexive_symmetric), InputError);

    auto reps = enumerate_relations(3, RelationClass::reflexive_symmetric);
    for (const auto& r : reps) CHECK(encode_relation(r) == canonical_encoding(r));
    for (std::size_t i = 1; i < reps.size(); ++i) CHECK(encode_relation(reps[i - 1]) < encode_relation(reps[i]));
}
