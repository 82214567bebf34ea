#include "skewpp/filling.hpp"

#include <algorithm>
#include <charconv>

#include "skewpp/errors.hpp"

namespace skewpp {

Filling::Filling(SkewShape shape, std::vector<int> values)
    : shape_(std::move(shape)), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != shape_.cell_count())
        throw ArityMismatch("expected " + std::to_string(shape_.cell_count()) + " values, got " +
                            std::to_string(values_.size()));
    for (int idx = 0; idx < shape_.cell_count(); ++idx) {
        const Cell cell = shape_.cells()[static_cast<std::size_t>(idx)];
        const int v = values_[static_cast<std::size_t>(idx)];
        if (v <= 0)
            throw NonPositiveValue("value at row " + std::to_string(cell.row) + ", col " +
                                   std::to_string(cell.col) + " must be positive");
        const int left = shape_.cell_index(cell.row, cell.col - 1);
        if (left >= 0 && values_[static_cast<std::size_t>(left)] < v)
            throw MonotonicityViolation("row " + std::to_string(cell.row) +
                                        " increases left to right");
        const int up = shape_.cell_index(cell.row - 1, cell.col);
        if (up >= 0 && values_[static_cast<std::size_t>(up)] < v)
            throw MonotonicityViolation("column " + std::to_string(cell.col) +
                                        " increases top to bottom");
        weight_ += v;
    }
}

Filling Filling::parse(const SkewShape& shape, std::string_view rows_text) {
    // Split into row segments; empty segments are rows without cells.
    std::vector<std::string_view> segments;
    std::size_t pos = 0;
    while (true) {
        std::size_t semi = rows_text.find(';', pos);
        segments.push_back(rows_text.substr(pos, semi == std::string_view::npos ? semi : semi - pos));
        if (semi == std::string_view::npos) break;
        pos = semi + 1;
    }
    if (shape.rows() == 0 && rows_text.empty()) segments.clear();
    if (static_cast<int>(segments.size()) != shape.rows())
        throw ArityMismatch("expected " + std::to_string(shape.rows()) + " rows, got " +
                            std::to_string(segments.size()));

    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };

    std::vector<int> values;
    for (int r = 1; r <= shape.rows(); ++r) {
        std::string_view seg = trim(segments[static_cast<std::size_t>(r - 1)]);
        const int want = shape.row_last_col(r) - shape.row_first_col(r) + 1;
        int got = 0;
        if (!seg.empty()) {
            std::size_t p = 0;
            while (true) {
                std::size_t comma = seg.find(',', p);
                std::string_view token = trim(seg.substr(p, comma == std::string_view::npos ? comma : comma - p));
                int value = 0;
                auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
                if (ec != std::errc{} || token.empty() || ptr != token.data() + token.size())
                    throw MalformedFilling("bad filling token '" + std::string(token) + "'");
                values.push_back(value);
                ++got;
                if (comma == std::string_view::npos) break;
                p = comma + 1;
            }
        }
        if (got != want)
            throw ArityMismatch("row " + std::to_string(r) + " expects " + std::to_string(want) +
                                " values, got " + std::to_string(got));
    }
    return Filling(shape, std::move(values));
}

int Filling::value_at(int row, int col) const noexcept {
    const int idx = shape_.cell_index(row, col);
    return idx < 0 ? 0 : values_[static_cast<std::size_t>(idx)];
}

Filling Filling::conjugate() const {
    SkewShape conj = shape_.conjugate();
    std::vector<int> values(conj.cells().size());
    for (std::size_t i = 0; i < conj.cells().size(); ++i) {
        const Cell cell = conj.cells()[i];
        values[i] = value_at(cell.col, cell.row);
    }
    return Filling(std::move(conj), std::move(values));
}

std::string Filling::str() const {
    std::string out;
    int idx = 0;
    for (int r = 1; r <= shape_.rows(); ++r) {
        if (r > 1) out += ';';
        for (int c = shape_.row_first_col(r); c <= shape_.row_last_col(r); ++c) {
            if (c > shape_.row_first_col(r)) out += ',';
            out += std::to_string(values_[static_cast<std::size_t>(idx++)]);
        }
    }
    return out;
}

bool is_square_free(const Filling& filling) {
    const SkewShape& shape = filling.shape();
    for (const Cell& cell : shape.cells()) {
        const int v = filling.value_at(cell.row, cell.col);
        if (filling.value_at(cell.row, cell.col + 1) == v &&
            filling.value_at(cell.row + 1, cell.col) == v &&
            filling.value_at(cell.row + 1, cell.col + 1) == v)
            return false;
    }
    return true;
}

std::vector<int> forced_values(const Filling& filling) {
    std::vector<int> forced;
    for (const Cell& cell : filling.shape().cells()) {
        const int v = filling.value_at(cell.row, cell.col);
        if (filling.value_at(cell.row + 1, cell.col) == v) forced.push_back(v);
    }
    std::sort(forced.begin(), forced.end());
    forced.erase(std::unique(forced.begin(), forced.end()), forced.end());
    return forced;
}

ValueProfile::ValueProfile(const Filling& filling) : forced_(forced_values(filling)) {
    distinct_ = filling.values();
    std::sort(distinct_.begin(), distinct_.end());
    distinct_.erase(std::unique(distinct_.begin(), distinct_.end()), distinct_.end());
}

bool ValueProfile::is_present(int value) const noexcept {
    return std::binary_search(distinct_.begin(), distinct_.end(), value);
}

bool ValueProfile::is_forced(int value) const noexcept {
    return std::binary_search(forced_.begin(), forced_.end(), value);
}

ValueStats ValueProfile::stats_for(int k) const noexcept {
    ValueStats s;
    s.k = k;
    s.present = is_present(k);
    for (int v : distinct_) {
        if (v > k) ++s.d_above;
        if (v < k) ++s.d_below;
    }
    for (int v : forced_) {
        if (v > k) {
            ++s.l_above;
            s.clean_above = false;
        }
        if (v < k) {
            ++s.l_below;
            s.clean_below = false;
        }
    }
    return s;
}

ValueStats stats(const Filling& filling, int k) {
    if (!is_square_free(filling))
        throw NotSquareFree("statistics require a square-free filling");
    return ValueProfile(filling).stats_for(k);
}

namespace {

struct FillingSearch {
    const SkewShape& shape;
    const std::function<void(const Filling&)>& fn;
    std::vector<int> values;

    void descend(int idx, int remaining) {
        const int total = shape.cell_count();
        if (idx == total) {
            if (remaining == 0) fn(Filling(shape, values));
            return;
        }
        const int cells_after = total - idx - 1;
        if (remaining < total - idx) return; // each remaining cell needs >= 1
        const Cell cell = shape.cells()[static_cast<std::size_t>(idx)];
        int cap = remaining - cells_after;
        const int left = shape.cell_index(cell.row, cell.col - 1);
        if (left >= 0) cap = std::min(cap, values[static_cast<std::size_t>(left)]);
        const int up = shape.cell_index(cell.row - 1, cell.col);
        if (up >= 0) cap = std::min(cap, values[static_cast<std::size_t>(up)]);
        for (int v = cap; v >= 1; --v) {
            values[static_cast<std::size_t>(idx)] = v;
            descend(idx + 1, remaining - v);
        }
    }
};

} // namespace

void for_each_filling(const SkewShape& shape, int weight,
                      const std::function<void(const Filling&)>& fn) {
    if (weight < 1) return;
    FillingSearch search{shape, fn, std::vector<int>(static_cast<std::size_t>(shape.cell_count()))};
    search.descend(0, weight);
}

std::vector<Filling> enumerate_fillings(const SkewShape& shape, int weight) {
    std::vector<Filling> out;
    for_each_filling(shape, weight, [&](const Filling& f) { out.push_back(f); });
    return out;
}

} // namespace skewpp
