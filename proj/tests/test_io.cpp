#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "steenq/io.hpp"
#include "steenq/spaces.hpp"

using namespace steenq;

TEST_CASE("complex text round trip") {
    for (const auto& space : builtin_spaces()) {
        std::istringstream in(complex_to_text(space.complex));
        CHECK(read_complex(in) == space.complex);
    }
}

TEST_CASE("text parsing details") {
    std::istringstream in(
        "# a comment\n"
        "\n"
        "0 1 2   # trailing comment\n"
        "2 3\n");
    const auto X = read_complex(in);
    CHECK(X.size() == 7 + 2);
    CHECK(X.contains(Simplex{2, 3}));

    std::istringstream bad("2 1\n");
    CHECK_THROWS_AS(read_complex(bad), parse_error);
    std::istringstream junk("0 x\n");
    CHECK_THROWS_AS(read_complex(junk), parse_error);
    std::istringstream negative("-1 2\n");
    CHECK_THROWS_AS(read_complex(negative), parse_error);
}

TEST_CASE("cochain json round trip") {
    const Cochain a{1, {Simplex{0, 1}, Simplex{2, 3}}};
    std::istringstream in(cochain_to_json(a));
    CHECK(read_cochain(in) == a);
    CHECK(cochain_to_json(a) == R"({"degree":1,"support":[[0,1],[2,3]]})");
}

TEST_CASE("cochain json rejects malformed input") {
    std::istringstream missing(R"({"support":[[0,1]]})");
    CHECK_THROWS_AS(read_cochain(missing), parse_error);
    std::istringstream mismatch(R"({"degree":2,"support":[[0,1]]})");
    CHECK_THROWS_AS(read_cochain(mismatch), parse_error);
    std::istringstream garbage("not json");
    CHECK_THROWS_AS(read_cochain(garbage), parse_error);
    std::istringstream unsorted(R"({"degree":1,"support":[[1,0]]})");
    CHECK_THROWS_AS(read_cochain(unsorted), parse_error);
}
