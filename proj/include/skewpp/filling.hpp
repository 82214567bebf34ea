#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "skewpp/shape.hpp"

namespace skewpp {

// A skew plane partition: one positive integer per cell of a skew shape,
// weakly decreasing along each row and down each column.
class Filling {
public:
    // `values` is row-major, aligned with shape.cells().  Validates arity,
    // positivity and monotonicity.
    Filling(SkewShape shape, std::vector<int> values);

    // Rows separated by ';', values within a row by ','.  A row without cells
    // is an empty segment.  Example: "7,3,1;3,3,1;4,2;8,1".
    static Filling parse(const SkewShape& shape, std::string_view rows_text);

    const SkewShape& shape() const noexcept { return shape_; }
    const std::vector<int>& values() const noexcept { return values_; }

    int value(int cell_index) const { return values_[static_cast<std::size_t>(cell_index)]; }

    // 0 when (row, col) is not a cell of the shape.
    int value_at(int row, int col) const noexcept;

    long long weight() const noexcept { return weight_; }

    Filling conjugate() const;

    std::string str() const;

    bool operator==(const Filling& other) const noexcept {
        return shape_ == other.shape_ && values_ == other.values_;
    }

private:
    SkewShape shape_;
    std::vector<int> values_;
    long long weight_ = 0;
};

// True iff no four cells (i,j), (i,j+1), (i+1,j), (i+1,j+1) all lie in the
// shape and carry equal values.
bool is_square_free(const Filling& filling);

// The values that appear at least twice in some column, ascending.  In a
// weakly decreasing contiguous column every repetition shows up as a pair of
// vertically adjacent equal cells.
std::vector<int> forced_values(const Filling& filling);

// Statistics of a filling relative to a pivot value k.
struct ValueStats {
    int k = 0;
    bool present = false;    // k occurs in the filling
    int d_above = 0;         // distinct values > k
    int l_above = 0;         // distinct column-repeated values > k
    bool clean_below = true; // no column-repeated value < k
    int d_below = 0;
    int l_below = 0;
    bool clean_above = true;
};

// Distinct values of a filling with their column-repeat flags, computed once
// and queried for any pivot.
class ValueProfile {
public:
    explicit ValueProfile(const Filling& filling);

    const std::vector<int>& distinct() const noexcept { return distinct_; }
    const std::vector<int>& forced() const noexcept { return forced_; }
    bool is_present(int value) const noexcept;
    bool is_forced(int value) const noexcept;

    ValueStats stats_for(int k) const noexcept;

private:
    std::vector<int> distinct_; // ascending
    std::vector<int> forced_;   // ascending subset of distinct_
};

// Throws NotSquareFree when the filling is not square-free.
ValueStats stats(const Filling& filling, int k);

// Every filling of the shape with the exact weight, in deterministic
// depth-first order: cells row-major, candidate values descending.  A cell's
// candidates are capped by its left and upper neighbours (when those cells
// exist) and by the weight still available once each later cell takes at
// least 1.
void for_each_filling(const SkewShape& shape, int weight,
                      const std::function<void(const Filling&)>& fn);

std::vector<Filling> enumerate_fillings(const SkewShape& shape, int weight);

} // namespace skewpp
