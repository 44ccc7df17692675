#include <doctest.h>

#include "permgrid/errors.hpp"
#include "permgrid/gridclass.hpp"
#include "permgrid/series.hpp"

#include <algorithm>

using namespace permgrid;

namespace {

Permutation P(const std::string& text) { return Permutation::parse(text); }

}  // namespace

TEST_CASE("builtin specs") {
    auto g1 = builtin_spec(GridName::g1);
    CHECK(g1.alphabet() == "abcd");
    auto g2 = builtin_spec(GridName::g2);
    CHECK(g2.alphabet() == "abcdef");
    auto g3 = builtin_spec(GridName::g3);
    int points = 0;
    for (const auto& cell : g3.cells)
        if (cell.content == CellContent::point) ++points;
    CHECK(points == 1);
    CHECK(g3.cell_for('d')->col == 3);
    CHECK(g3.cell_for('d')->row == 2);

    CHECK(validate_spec(g1));
    CHECK(validate_spec(g2));
    CHECK(validate_spec(g3));
    CHECK_THROWS_AS(grid_name_from_string("g4"), std::invalid_argument);
}

TEST_CASE("validation catches broken orientations") {
    auto g1 = builtin_spec(GridName::g1);
    for (auto& cell : g1.cells) {
        if (cell.letter == 'b') {
            cell.dir_x = -1;
            cell.dir_y = +1;
        }
    }
    auto result = validate_spec(g1);
    CHECK_FALSE(result.ok);
    CHECK_FALSE(result.diagnostics.empty());

    // A point sharing a row with a segment.
    GridSpec bad;
    bad.cols = 2;
    bad.rows = 1;
    bad.cells = {
        {'a', 1, 1, CellContent::inc, 1, 1, -1, -1},
        {'b', 2, 1, CellContent::point, 0, 0, 0, 0},
    };
    CHECK_FALSE(validate_spec(bad).ok);
}

TEST_CASE("decoding") {
    auto g1 = builtin_spec(GridName::g1);
    CHECK(decode(g1, "bacddb") == P("234165"));
    CHECK(decode(g1, "a") == P("1"));
    CHECK(decode(g1, "aa") == P("12"));

    // Monotone words decode monotonically.
    CHECK(decode(g1, "aaaaa") == P("12345"));
    CHECK(decode(g1, "bbbbb") == P("54321"));

    CHECK_THROWS_AS(decode(g1, ""), std::invalid_argument);
    CHECK_THROWS_AS(decode(g1, "axe"), std::invalid_argument);

    auto g3 = builtin_spec(GridName::g3);
    CHECK_THROWS_AS(decode(g3, "dd"), std::invalid_argument);  // one entry per point cell
}

TEST_CASE("censuses by brute-force decoding") {
    auto g1 = builtin_spec(GridName::g1);
    CHECK(class_by_decode(g1, 1) == std::vector<Permutation>{P("1")});
    CHECK(class_by_decode(g1, 2) == std::vector<Permutation>{P("12"), P("21")});

    // Counts match the rational generating functions.
    auto g1_gf = named_gf(GfName::G1_class, 6).integer_coefficients();
    auto g2_gf = named_gf(GfName::G2_class, 6).integer_coefficients();
    auto g3_gf = named_gf(GfName::G3_class, 6).integer_coefficients();
    auto g2 = builtin_spec(GridName::g2);
    auto g3 = builtin_spec(GridName::g3);
    for (int n = 1; n <= 6; ++n) {
        CHECK(BigInt(class_by_decode(g1, n).size()) == g1_gf[n]);
        CHECK(BigInt(class_by_decode(g2, n).size()) == g2_gf[n]);
        CHECK(BigInt(class_by_decode(g3, n).size()) == g3_gf[n]);
    }

    CHECK_THROWS_AS(class_by_decode(g2, 9), budget_error);
}

TEST_CASE("parallel census matches sequential") {
    auto g2 = builtin_spec(GridName::g2);
    CHECK(class_by_decode(g2, 6) == class_by_decode(g2, 6, 2'000'000, 4));
}

TEST_CASE("decoded permutations avoid the class basis") {
    std::vector<Permutation> basis{P("3124"), P("4312")};
    for (GridName name : {GridName::g1, GridName::g2, GridName::g3}) {
        auto spec = builtin_spec(name);
        for (int n = 1; n <= 8; ++n) {
            bool ok = true;
            for (const auto& p : class_by_decode(spec, n))
                if (!avoids_all(p, basis)) ok = false;
            CHECK(ok);
        }
    }
    // In particular the basis itself cannot be drawn.
    auto g3 = builtin_spec(GridName::g3);
    auto level4 = class_by_decode(g3, 4);
    CHECK_FALSE(std::binary_search(level4.begin(), level4.end(), P("3124")));
    CHECK_FALSE(std::binary_search(level4.begin(), level4.end(), P("4312")));
}

TEST_CASE("the third grid class is the intersection of the first two") {
    auto g1 = builtin_spec(GridName::g1);
    auto g2 = builtin_spec(GridName::g2);
    auto g3 = builtin_spec(GridName::g3);
    for (int n = 1; n <= 6; ++n) {
        auto a = class_by_decode(g1, n);
        auto b = class_by_decode(g2, n);
        std::vector<Permutation> inter;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(inter));
        CHECK(inter == class_by_decode(g3, n));
    }
}

TEST_CASE("grid spec text round trip") {
    for (GridName name : {GridName::g1, GridName::g2, GridName::g3}) {
        auto spec = builtin_spec(name);
        auto parsed = parse_grid_spec(format_grid_spec(spec));
        CHECK(parsed.cols == spec.cols);
        CHECK(parsed.rows == spec.rows);
        REQUIRE(parsed.cells.size() == spec.cells.size());
        for (std::size_t i = 0; i < spec.cells.size(); ++i) {
            CHECK(parsed.cells[i].letter == spec.cells[i].letter);
            CHECK(parsed.cells[i].content == spec.cells[i].content);
            CHECK(parsed.cells[i].base_x == spec.cells[i].base_x);
            CHECK(parsed.cells[i].dir_y == spec.cells[i].dir_y);
        }
        CHECK(validate_spec(parsed));
    }
    CHECK_THROWS_AS(parse_grid_spec("a 1 1 wiggly"), std::invalid_argument);
}
