#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "skewpp/errors.hpp"
#include "skewpp/shape.hpp"

using namespace skewpp;

namespace {

std::vector<std::string> strs(const std::vector<SkewShape>& shapes) {
    std::vector<std::string> out;
    for (const SkewShape& s : shapes) out.push_back(s.str());
    return out;
}

} // namespace

TEST_CASE("parsing outer/inner derives the cell grid") {
    const SkewShape s = SkewShape::parse("5,5,3,2/2,2,1");
    CHECK(s.outer() == Partition::parse("5,5,3,2"));
    CHECK(s.inner() == Partition::parse("2,2,1"));
    CHECK(s.cell_count() == 10);
    CHECK(s.rows() == 4);
    CHECK(s.row_first_col(1) == 3);
    CHECK(s.row_last_col(1) == 5);
    CHECK(s.row_first_col(4) == 1);
    CHECK(s.row_last_col(4) == 2);
    CHECK(s.str() == "5,5,3,2/2,2,1");
}

TEST_CASE("missing inner suffix means empty inner") {
    const SkewShape s = SkewShape::parse("3,1");
    CHECK(s.inner().empty());
    CHECK(s.cell_count() == 4);
    CHECK(s.str() == "3,1");
    CHECK(SkewShape::parse("3,1/") == s);
}

TEST_CASE("containment is enforced") {
    CHECK_THROWS_AS(SkewShape::parse("1,1/2"), NotContained);
    CHECK_THROWS_AS(SkewShape::parse("1/1,1"), NotContained);
    CHECK_THROWS_AS(SkewShape(Partition::parse("2"), Partition::parse("1,1")), NotContained);
}

TEST_CASE("cells are row-major with ascending columns") {
    const SkewShape s = SkewShape::parse("3,1/1");
    REQUIRE(s.cell_count() == 3);
    CHECK(s.cells()[0] == (Cell{1, 2}));
    CHECK(s.cells()[1] == (Cell{1, 3}));
    CHECK(s.cells()[2] == (Cell{2, 1}));
}

TEST_CASE("cell lookup agrees with the cell list") {
    const SkewShape s = SkewShape::parse("5,4,4,3/2,1");
    CHECK(s.cell_count() == 13);
    for (int i = 0; i < s.cell_count(); ++i) {
        const Cell c = s.cells()[static_cast<std::size_t>(i)];
        CHECK(s.has_cell(c.row, c.col));
        CHECK(s.cell_index(c.row, c.col) == i);
    }
    CHECK_FALSE(s.has_cell(1, 1));
    CHECK(s.cell_index(1, 2) == -1);
    CHECK(s.cell_index(0, 1) == -1);
    CHECK(s.cell_index(5, 1) == -1);
}

TEST_CASE("two-cell inventory at outer weight 4") {
    CHECK(strs(enumerate_skew_shapes(4, 2, 2)) ==
          std::vector<std::string>{"2", "1,1", "3/1", "2,1/1", "1,1,1/1", "4/2", "3,1/2",
                                   "3,1/1,1", "2,2/2", "2,2/1,1", "2,1,1/2", "2,1,1/1,1",
                                   "1,1,1,1/1,1"});
}

TEST_CASE("three-cell inventory at outer weight 4") {
    CHECK(strs(enumerate_skew_shapes(4, 3, 3)) ==
          std::vector<std::string>{"3", "2,1", "1,1,1", "4/1", "3,1/1", "2,2/1", "2,1,1/1",
                                   "1,1,1,1/1"});
}

TEST_CASE("the six two-filling shapes are all emitted") {
    const std::vector<std::string> inventory = strs(enumerate_skew_shapes(4, 2, 3));
    const std::set<std::string> got(inventory.begin(), inventory.end());
    for (const char* want :
         {"3,1/1", "3,1/2", "2,2/1", "2,1,1/1", "2,1,1/1,1", "2,1/1"})
        CHECK(got.count(want) == 1);
}

TEST_CASE("translated copies stay distinct") {
    const std::vector<std::string> inventory = strs(enumerate_skew_shapes(3, 2, 2));
    const std::set<std::string> got(inventory.begin(), inventory.end());
    CHECK(got.count("2") == 1);
    CHECK(got.count("3/1") == 1); // same cell set shifted right
}

TEST_CASE("enumeration is duplicate-free, ordered and bounded") {
    const std::vector<SkewShape> a = enumerate_skew_shapes(5, 1, 5);
    const std::vector<SkewShape> b = enumerate_skew_shapes(5, 1, 5);
    CHECK(strs(a) == strs(b));
    std::set<std::string> seen;
    for (const SkewShape& s : a) {
        CHECK(seen.insert(s.str()).second);
        CHECK(s.outer().weight() <= 5);
        CHECK(s.cell_count() >= 1);
        CHECK(s.cell_count() <= 5);
        CHECK(static_cast<long long>(s.cell_count()) ==
              s.outer().weight() - s.inner().weight());
    }
}

TEST_CASE("cell-count window filters the inventory") {
    for (const SkewShape& s : enumerate_skew_shapes(6, 2, 3)) {
        CHECK(s.cell_count() >= 2);
        CHECK(s.cell_count() <= 3);
    }
    CHECK_THROWS_AS(enumerate_skew_shapes(4, 3, 2), InputError);
    CHECK_THROWS_AS(enumerate_skew_shapes(4, 0, 2), InputError);
}

TEST_CASE("column occupancy is contiguous in every enumerated shape") {
    for (const SkewShape& s : enumerate_skew_shapes(6, 1, 6)) {
        const int max_col = s.outer().part(1);
        for (int col = 1; col <= max_col; ++col) {
            int first = 0, last = -1;
            for (int row = 1; row <= s.rows(); ++row)
                if (s.has_cell(row, col)) {
                    if (first == 0) first = row;
                    last = row;
                }
            if (first == 0) continue;
            for (int row = first; row <= last; ++row) CHECK(s.has_cell(row, col));
        }
    }
}

TEST_CASE("conjugation transposes and is an involution") {
    CHECK(SkewShape::parse("2,1/1").conjugate() == SkewShape::parse("2,1/1"));
    CHECK(SkewShape::parse("3").conjugate() == SkewShape::parse("1,1,1"));
    CHECK(SkewShape::parse("5,5,3,2/2,2,1").conjugate() ==
          SkewShape::parse("4,4,3,2,2/3,2"));
    for (const SkewShape& s : enumerate_skew_shapes(4, 1, 4)) {
        const SkewShape t = s.conjugate();
        CHECK(t.cell_count() == s.cell_count());
        CHECK(t.conjugate() == s);
        for (const Cell& c : s.cells()) CHECK(t.has_cell(c.col, c.row));
    }
}

TEST_CASE("text form round-trips") {
    for (const SkewShape& s : enumerate_skew_shapes(5, 1, 5))
        CHECK(SkewShape::parse(s.str()) == s);
}
