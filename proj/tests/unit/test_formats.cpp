#include "support.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace shapetile;
using namespace testsupport;

TEST_CASE("parse_tile text") {
    const WeightedTile t = parse_tile("# S-tetromino\nrect 0 2 0 1 1\n\nrect 1 3 1 2 1   # upper bar\n");
    CHECK(t == tile_from_lattice(s_tetromino()));
    CHECK(parse_tile("").empty());
    CHECK(parse_tile("# nothing\n   \n").empty());
    CHECK(parse_tile("rect 0 0.5 -1/3 1 2.5") == tile_of({{0, q("1/2"), q("-1/3"), 1, q("5/2")}}));
}

TEST_CASE("parse_tile errors carry positions") {
    auto position = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
        try {
            parse_tile(text);
        } catch (const ParseError& e) {
            return {e.line(), e.column()};
        }
        return {0, 0};
    };
    CHECK(position("rect 0 1 0 1 1\nrect 0 1 0 x 1\n") == std::pair<std::size_t, std::size_t>{2, 12});
    CHECK(position("rect 0 1 0 1\n") == std::pair<std::size_t, std::size_t>{1, 13});
    CHECK(position("\n\n  square 0 1 0 1 1\n") == std::pair<std::size_t, std::size_t>{3, 3});
    CHECK(position("rect 1 0 0 1 1\n").first == 1);
    CHECK(position("rect 0 1 0 1/0 1\n") == std::pair<std::size_t, std::size_t>{1, 12});
    CHECK_THROWS_AS(parse_tile("{\"rects\": [1, 2"), ParseError);
    CHECK_THROWS_AS(parse_tile("{\"rects\": [{\"x0\": 0}]}"), ParseError);
}

TEST_CASE("parse_tile structured") {
    const WeightedTile t = parse_tile(R"({"rects": [{"x0": 0, "x1": "2", "y0": 0, "y1": 1, "weight": 1},
                                                   {"x0": 1, "x1": 3, "y0": 1, "y1": 2, "weight": "1"}]})");
    CHECK(t == tile_from_lattice(s_tetromino()));
    CHECK(parse_tile(R"({"rects": [{"x0": 0, "x1": 0.5, "y0": 0, "y1": 0.25, "weight": -2}]})") ==
          tile_of({{0, q("1/2"), 0, q("1/4"), -2}}));
    CHECK(parse_tile(R"({"rects": []})").empty());
}

TEST_CASE("tile round trips") {
    Rng rng(51);
    for (int round = 0; round < 40; ++round) {
        const WeightedTile t = tile_of(random_rects(rng));
        const std::string text = write_tile_text(t);
        CHECK(parse_tile(text) == t);
        CHECK(write_tile_text(parse_tile(text)) == text);
        CHECK(parse_tile(write_tile_json(t)) == t);
    }
    CHECK(write_tile_text(WeightedTile{}) == "# 0 cells\n");
}

TEST_CASE("certificate round trips") {
    const Certificate c = tromino_certificate();
    const std::string text = write_certificate_text(c);
    const Certificate back = parse_certificate(text);
    CHECK(write_certificate_text(back) == text);
    CHECK(back.placements == c.placements);
    CHECK(back.prototile == c.prototile);
    CHECK(verify_certificate(back).ok);

    const Certificate from_json = parse_certificate(write_certificate_json(c));
    CHECK(write_certificate_text(from_json) == text);

    Rng rng(52);
    for (int round = 0; round < 20; ++round) {
        const Certificate r = random_valid_certificate(rng);
        const std::string t = write_certificate_text(r);
        CHECK(write_certificate_text(parse_certificate(t)) == t);
        CHECK(write_certificate_text(parse_certificate(write_certificate_json(r))) == t);
    }
}

TEST_CASE("certificate tile-file reference") {
    const auto dir = std::filesystem::temp_directory_path() / "shapetile_formats_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream(dir / "tromino.txt") << "rect 0 2 0 1 1\nrect 0 1 1 2 1\n";
    }
    const Certificate c = parse_certificate(
        "tile-file tromino.txt\nside 3\nanchor 1 1\nweight 1\n"
        "place 1 1 3 3\nplace -1 1 2 2\nplace -1 1 4 0\nplace -1 1 4 1\nplace -1 1 4 2\n"
        "place -1 1 0 4\nplace -1 1 1 4\nplace -1 1 2 4\nplace 1 2 1 1\nplace -1 2 0 0\nplace 1 3 0 0\n",
        dir);
    CHECK(verify_certificate(c).ok);
    CHECK_THROWS_AS(parse_certificate("tile-file missing.txt\nside 1\nanchor 0 0\nweight 1\n", dir), ParseError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("certificate errors") {
    const std::string head = "tile\nrect 0 1 0 1 1\nend\nside 1\nanchor 0 0\nweight 1\n";
    CHECK_NOTHROW(parse_certificate(head + "place 1 1 0 0\n"));
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            parse_certificate(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of(head + "place 0 1 0 0\n") == 7);
    CHECK(line_of(head + "place 1 -1 0 0\n") == 7);
    CHECK(line_of(head + "place 1 1 0\n") == 7);
    CHECK(line_of("tile\nrect 0 1 0 1 1\nside 1\n") != 0);
    CHECK(line_of("side 1\nweight 0\n") == 2);
    CHECK(line_of("bogus\n") == 1);
    CHECK_THROWS_AS(parse_certificate("side 1\nanchor 0 0\nweight 1\n"), ParseError);
}
