#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "skewpp/partition.hpp"

namespace skewpp {

// A cell of a Ferrers diagram, 1-based.
struct Cell {
    int row = 0;
    int col = 0;

    bool operator==(const Cell&) const noexcept = default;
};

// A skew shape outer/inner: the cells of the outer diagram not covered by the
// inner diagram.  Shapes are positioned (outer, inner) pairs, so two shapes
// whose cell sets are translates of each other are still distinct objects.
class SkewShape {
public:
    SkewShape() = default;

    // Throws NotContained if inner does not fit inside outer.
    SkewShape(Partition outer, Partition inner);

    // Text form "outer/inner"; the "/inner" suffix may be omitted.
    static SkewShape parse(std::string_view text);

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }

    // Row-major, columns ascending within a row.
    const std::vector<Cell>& cells() const noexcept { return cells_; }
    int cell_count() const noexcept { return static_cast<int>(cells_.size()); }

    int rows() const noexcept { return outer_.rows(); }

    // Column span of a row: cells occupy row_first_col(r) .. row_last_col(r).
    // A row with row_first_col > row_last_col has no cells.
    int row_first_col(int row) const noexcept { return inner_.part(row) + 1; }
    int row_last_col(int row) const noexcept { return outer_.part(row); }

    bool has_cell(int row, int col) const noexcept;

    // Row-major index of a cell, or -1 when the cell is not in the shape.
    int cell_index(int row, int col) const noexcept;

    SkewShape conjugate() const;

    std::string str() const;

    bool operator==(const SkewShape& other) const noexcept {
        return outer_ == other.outer_ && inner_ == other.inner_;
    }

private:
    Partition outer_;
    Partition inner_;
    std::vector<Cell> cells_;
    std::vector<int> row_offset_; // rows()+1 entries; index of first cell per row
};

// Every (outer, inner) pair with |outer| <= max_outer_weight, inner contained
// in outer and cell count within [min_cells, max_cells], each exactly once.
// Outer partitions follow enumerate_partitions order; inner partitions are
// ordered by weight ascending (the empty partition first), lexicographically
// descending within a weight.
std::vector<SkewShape> enumerate_skew_shapes(int max_outer_weight, int min_cells, int max_cells);

} // namespace skewpp
