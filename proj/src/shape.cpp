#include "skewpp/shape.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "skewpp/errors.hpp"

namespace skewpp {

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!contains(inner_, outer_))
        throw NotContained("inner partition (" + inner_.str() + ") is not contained in (" +
                           outer_.str() + ")");
    row_offset_.resize(static_cast<std::size_t>(rows()) + 1, 0);
    for (int r = 1; r <= rows(); ++r) {
        row_offset_[static_cast<std::size_t>(r - 1)] = static_cast<int>(cells_.size());
        for (int c = row_first_col(r); c <= row_last_col(r); ++c)
            cells_.push_back(Cell{r, c});
    }
    row_offset_[static_cast<std::size_t>(rows())] = static_cast<int>(cells_.size());

    // Occupied rows of each column must form a contiguous interval; this is a
    // consequence of both partitions decreasing weakly, so a failure here means
    // a construction bug, not bad input.
    std::map<int, std::pair<int, int>> span; // col -> (min row, max row, count via second pass)
    std::map<int, int> count;
    for (const Cell& cell : cells_) {
        auto it = span.find(cell.col);
        if (it == span.end()) {
            span[cell.col] = {cell.row, cell.row};
        } else {
            it->second.first = std::min(it->second.first, cell.row);
            it->second.second = std::max(it->second.second, cell.row);
        }
        ++count[cell.col];
    }
    for (const auto& [col, rowspan] : span) {
        if (rowspan.second - rowspan.first + 1 != count[col])
            throw std::logic_error("column " + std::to_string(col) + " of shape " + str() +
                                   " is not contiguous");
    }
}

SkewShape SkewShape::parse(std::string_view text) {
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos)
        return SkewShape(Partition::parse(text), Partition{});
    return SkewShape(Partition::parse(text.substr(0, slash)),
                     Partition::parse(text.substr(slash + 1)));
}

bool SkewShape::has_cell(int row, int col) const noexcept {
    return row >= 1 && row <= rows() && col >= row_first_col(row) && col <= row_last_col(row);
}

int SkewShape::cell_index(int row, int col) const noexcept {
    if (!has_cell(row, col)) return -1;
    return row_offset_[static_cast<std::size_t>(row - 1)] + (col - row_first_col(row));
}

SkewShape SkewShape::conjugate() const {
    return SkewShape(outer_.conjugate(), inner_.conjugate());
}

std::string SkewShape::str() const {
    if (inner_.empty()) return outer_.str();
    return outer_.str() + "/" + inner_.str();
}

std::vector<SkewShape> enumerate_skew_shapes(int max_outer_weight, int min_cells, int max_cells) {
    if (min_cells < 1)
        throw InputError("min_cells must be >= 1");
    if (min_cells > max_cells)
        throw InputError("min_cells must not exceed max_cells");
    std::vector<SkewShape> out;
    for (const Partition& outer : enumerate_partitions(max_outer_weight)) {
        // Inner weight iw gives |outer| - iw cells; iw = 0 is the empty inner.
        const int ow = static_cast<int>(outer.weight());
        for (int iw = 0; iw <= ow - min_cells; ++iw) {
            const int ncells = ow - iw;
            if (ncells > max_cells) continue;
            if (iw == 0) {
                out.emplace_back(outer, Partition{});
                continue;
            }
            for (const Partition& inner : partitions_of(iw))
                if (contains(inner, outer)) out.emplace_back(outer, inner);
        }
    }
    return out;
}

} // namespace skewpp
