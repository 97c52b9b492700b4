#include "helpers.hpp"

#include <icf/errors.hpp>
#include <icf/graph_io.hpp>
#include <icf/levi.hpp>

#include <doctest.h>

#include <filesystem>
#include <random>

using namespace icf;

namespace
{
    auto parse_error_kind(std::string_view text) -> ParseErrorKind
    {
        try {
            parse_graph(text);
        }
        catch (const ParseError & e) {
            return e.kind();
        }
        FAIL("expected a parse error for: " << text);
        return ParseErrorKind::malformed_header;
    }
}

TEST_CASE("parse a single edge")
{
    auto g = parse_graph("2 1 0\n0 1\n");
    CHECK(g.n() == 2);
    CHECK(g.m() == 1);
    CHECK(g.adjacent(0, 1));
    CHECK(g.side_p_size() == 0);
}

TEST_CASE("write the Fano incidence graph")
{
    auto text = write_graph(gen_levi(PrimeModulus(2)));
    CHECK(text.rfind("14 21 7\n", 0) == 0);
    CHECK(text.back() == '\n');
    CHECK(text.find(" \n") == std::string::npos);
}

TEST_CASE("edge-less and vertex-less graphs")
{
    CHECK(write_graph(testing::edgeless(3)) == "3 0 0\n");
    CHECK(parse_graph("0 0 0\n").n() == 0);
}

TEST_CASE("parse errors are distinct")
{
    CHECK(parse_error_kind("2 1 0\n1 0\n") == ParseErrorKind::edge_order);
    CHECK(parse_error_kind("3 2 0\n1 2\n0 1\n") == ParseErrorKind::edge_order);
    CHECK(parse_error_kind("2 1 0\n0 0\n") == ParseErrorKind::edge_order);
    CHECK(parse_error_kind("2 2 0\n0 1\n0 1\n") == ParseErrorKind::duplicate_edge);
    CHECK(parse_error_kind("2 1 0\n0 2\n") == ParseErrorKind::endpoint_out_of_range);
    CHECK(parse_error_kind("4 1 2\n0 1\n") == ParseErrorKind::bipartite_split);
    CHECK(parse_error_kind("4 2 2\n0 2\n") == ParseErrorKind::edge_count_mismatch);
    CHECK(parse_error_kind("4 1 2\n0 2\n1 3\n") == ParseErrorKind::edge_count_mismatch);
    CHECK(parse_error_kind("2 1 0\n0 1") == ParseErrorKind::missing_final_newline);
    CHECK(parse_error_kind("") == ParseErrorKind::missing_final_newline);

    CHECK(parse_error_kind("2 1\n0 1\n") == ParseErrorKind::malformed_header);
    CHECK(parse_error_kind("2  1 0\n0 1\n") == ParseErrorKind::malformed_header);
    CHECK(parse_error_kind("2 1 0 \n0 1\n") == ParseErrorKind::malformed_header);
    CHECK(parse_error_kind("02 1 0\n0 1\n") == ParseErrorKind::malformed_header);
    CHECK(parse_error_kind("2 1 3\n0 1\n") == ParseErrorKind::malformed_header);
    CHECK(parse_error_kind("x 1 0\n0 1\n") == ParseErrorKind::malformed_header);
    CHECK(parse_error_kind("2 1 -1\n0 1\n") == ParseErrorKind::malformed_header);

    CHECK(parse_error_kind("2 1 0\n0 1 \n") == ParseErrorKind::malformed_edge);
    CHECK(parse_error_kind("2 1 0\n0\n") == ParseErrorKind::malformed_edge);
    CHECK(parse_error_kind("2 1 0\n0 1 1\n") == ParseErrorKind::malformed_edge);
    CHECK(parse_error_kind("2 1 0\n0 1\r\n") == ParseErrorKind::malformed_edge);
    CHECK(parse_error_kind("3 1 0\n\n") == ParseErrorKind::malformed_edge);
}

TEST_CASE("parse error reports the line")
{
    try {
        parse_graph("3 2 0\n0 1\n0 9\n");
        FAIL("no error");
    }
    catch (const ParseError & e) {
        CHECK(e.line() == 3);
        CHECK(e.kind() == ParseErrorKind::endpoint_out_of_range);
    }
}

TEST_CASE("round trip is the identity")
{
    for (std::uint64_t q : { 2, 3, 5, 7, 11, 13 }) {
        auto g = gen_levi(PrimeModulus(q));
        auto text = write_graph(g);
        auto h = parse_graph(text);
        CHECK(h == g);
        CHECK(write_graph(h) == text);
    }

    std::mt19937_64 rng(21);
    for (int trial = 0 ; trial < 100 ; ++trial) {
        auto g = testing::to_graph(oracle::random_graph(rng() % 30, 0.2, rng));
        auto text = write_graph(g);
        CHECK(parse_graph(text) == g);
        CHECK(write_graph(parse_graph(text)) == text);
    }
}

TEST_CASE("files and hashes")
{
    auto g = gen_levi(PrimeModulus(3));
    auto path = std::filesystem::temp_directory_path() / "icf_test_graph_io.g";
    write_graph_file(g, path);
    CHECK(read_graph_file(path) == g);
    std::filesystem::remove(path);

    auto h = graph_hash(g);
    CHECK(h.size() == 64);
    CHECK(h == graph_hash(gen_levi(PrimeModulus(3))));
    CHECK(h != graph_hash(gen_levi(PrimeModulus(2))));
    // SHA-256 of "3 0 0\n"
    CHECK(graph_hash(testing::edgeless(3)) == "2a6d88f7e0b97d3cb214b51054257db445b2c54e65d8fb5724d2327c8bc17300");

    CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.g"), InvalidArgument);
}
