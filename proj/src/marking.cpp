#include "skewpp/marking.hpp"

#include <algorithm>
#include <set>

#include "skewpp/errors.hpp"
#include "skewpp/exact.hpp"

namespace skewpp {

MarkingModel parse_model(std::string_view text) {
    if (text == "value") return MarkingModel::kValue;
    if (text == "occurrence") return MarkingModel::kOccurrence;
    if (text == "hybrid") return MarkingModel::kHybrid;
    throw InputError("unknown marking model '" + std::string(text) + "'");
}

std::string_view to_string(MarkingModel model) {
    switch (model) {
        case MarkingModel::kValue: return "value";
        case MarkingModel::kOccurrence: return "occurrence";
        case MarkingModel::kHybrid: return "hybrid";
    }
    return "?";
}

std::vector<bool> row_last_flags(const Filling& filling) {
    std::vector<bool> flags(filling.values().size());
    const SkewShape& shape = filling.shape();
    for (std::size_t i = 0; i < shape.cells().size(); ++i) {
        const Cell cell = shape.cells()[i];
        // Equal values in a row are consecutive, so it suffices to look right.
        flags[i] = filling.value_at(cell.row, cell.col + 1) != filling.values()[i];
    }
    return flags;
}

std::vector<bool> column_repeat_flags(const Filling& filling) {
    std::vector<bool> flags(filling.values().size());
    const SkewShape& shape = filling.shape();
    for (std::size_t i = 0; i < shape.cells().size(); ++i) {
        const Cell cell = shape.cells()[i];
        flags[i] = filling.value_at(cell.row - 1, cell.col) == filling.values()[i];
    }
    return flags;
}

Lifting::Lifting(Filling filling, std::vector<int> overlined_cells)
    : filling_(std::move(filling)), overlined_(std::move(overlined_cells)) {
    std::sort(overlined_.begin(), overlined_.end());
    overlined_.erase(std::unique(overlined_.begin(), overlined_.end()), overlined_.end());
    if (!overlined_.empty() &&
        (overlined_.front() < 0 || overlined_.back() >= filling_.shape().cell_count()))
        throw InvalidOverlines("overlined cell index out of range");
    if (!satisfies_conditions(filling_, overlined_, false))
        throw InvalidOverlines("overlines violate the row-last / column-repeat conditions");
}

Lifting Lifting::parse(const SkewShape& shape, std::string_view text) {
    // Tokens follow the filling syntax with an optional '~' suffix.
    std::string plain;
    std::vector<int> marked_positions; // running token counter
    int token_index = 0;
    std::size_t i = 0;
    while (i <= text.size()) {
        std::size_t next = std::min(text.find_first_of(",;", i), text.size());
        std::string_view token = text.substr(i, next - i);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        if (!token.empty() && token.back() == '~') {
            marked_positions.push_back(token_index);
            token.remove_suffix(1);
        }
        plain.append(token);
        if (!token.empty()) ++token_index;
        if (next == text.size()) break;
        plain.push_back(text[next]);
        i = next + 1;
    }
    Filling filling = Filling::parse(shape, plain);
    return Lifting(std::move(filling), std::move(marked_positions));
}

std::string Lifting::str() const {
    std::string out;
    const SkewShape& shape = filling_.shape();
    std::size_t next_marked = 0;
    int idx = 0;
    for (int r = 1; r <= shape.rows(); ++r) {
        if (r > 1) out += ';';
        for (int c = shape.row_first_col(r); c <= shape.row_last_col(r); ++c, ++idx) {
            if (c > shape.row_first_col(r)) out += ',';
            out += std::to_string(filling_.value(idx));
            if (next_marked < overlined_.size() && overlined_[next_marked] == idx) {
                out += '~';
                ++next_marked;
            }
        }
    }
    return out;
}

std::vector<int> marked_cells(const Filling& filling, const std::vector<int>& selected_values) {
    if (!is_square_free(filling))
        throw NotSquareFree("markings require a square-free filling");
    const ValueProfile profile(filling);
    std::set<int> selected(selected_values.begin(), selected_values.end());
    for (int v : selected)
        if (!profile.is_present(v))
            throw InputError("selected value " + std::to_string(v) + " does not occur");
    const std::vector<bool> row_last = row_last_flags(filling);
    std::vector<int> cells;
    for (int idx = 0; idx < filling.shape().cell_count(); ++idx)
        if (row_last[static_cast<std::size_t>(idx)] && selected.count(filling.value(idx)))
            cells.push_back(idx);
    return cells;
}

std::vector<Marking> valid_markings(const Filling& filling) {
    if (!is_square_free(filling))
        throw NotSquareFree("markings require a square-free filling");
    const ValueProfile profile(filling);
    std::vector<int> unforced;
    for (int v : profile.distinct())
        if (!profile.is_forced(v)) unforced.push_back(v);
    if (unforced.size() > 24)
        throw InputError("too many unforced values to enumerate markings");
    std::vector<Marking> out;
    const std::size_t subsets = std::size_t{1} << unforced.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        Marking m;
        m.forced = profile.forced();
        m.selected = profile.forced();
        for (std::size_t b = 0; b < unforced.size(); ++b)
            if (mask & (std::size_t{1} << b)) m.selected.push_back(unforced[b]);
        std::sort(m.selected.begin(), m.selected.end());
        out.push_back(std::move(m));
    }
    return out;
}

namespace {

// Subsets of `free` cells joined onto `base`, ascending bitmask order.
std::vector<Lifting> liftings_from_base(const Filling& filling, const std::vector<int>& base,
                                        const std::vector<int>& free_cells) {
    if (free_cells.size() > 24)
        throw InputError("too many free cells to enumerate liftings");
    std::vector<Lifting> out;
    const std::size_t subsets = std::size_t{1} << free_cells.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<int> cells = base;
        for (std::size_t b = 0; b < free_cells.size(); ++b)
            if (mask & (std::size_t{1} << b)) cells.push_back(free_cells[b]);
        out.emplace_back(filling, std::move(cells));
    }
    return out;
}

} // namespace

std::vector<Lifting> enumerate_liftings(const Filling& filling, MarkingModel model) {
    if (!is_square_free(filling))
        throw NotSquareFree("liftings require a square-free filling");
    if (model == MarkingModel::kValue) {
        std::vector<Lifting> out;
        for (const Marking& m : valid_markings(filling))
            out.emplace_back(filling, marked_cells(filling, m.selected));
        return out;
    }
    const std::vector<bool> row_last = row_last_flags(filling);
    const std::vector<bool> col_repeat = column_repeat_flags(filling);
    const ValueProfile profile(filling);
    std::vector<int> base, free_cells;
    for (int idx = 0; idx < filling.shape().cell_count(); ++idx) {
        const std::size_t i = static_cast<std::size_t>(idx);
        if (model == MarkingModel::kOccurrence) {
            if (col_repeat[i])
                base.push_back(idx);
            else if (row_last[i])
                free_cells.push_back(idx);
        } else { // kHybrid
            if (!row_last[i]) continue;
            if (profile.is_forced(filling.value(idx)))
                base.push_back(idx);
            else
                free_cells.push_back(idx);
        }
    }
    return liftings_from_base(filling, base, free_cells);
}

bool satisfies_conditions(const Filling& filling, const std::vector<int>& overlined_cells,
                          bool include_condition3) {
    const int total = filling.shape().cell_count();
    std::vector<bool> overlined(static_cast<std::size_t>(total), false);
    for (int idx : overlined_cells) {
        if (idx < 0 || idx >= total) return false;
        overlined[static_cast<std::size_t>(idx)] = true;
    }
    const std::vector<bool> row_last = row_last_flags(filling);
    const std::vector<bool> col_repeat = column_repeat_flags(filling);
    for (int idx = 0; idx < total; ++idx) {
        const std::size_t i = static_cast<std::size_t>(idx);
        // (1) only the last occurrence of a value in its row may be overlined.
        if (overlined[i] && !row_last[i]) return false;
        // (2) below the first occurrence of a value in its column, overlines
        // are mandatory.
        if (col_repeat[i] && !overlined[i]) return false;
    }
    if (include_condition3) {
        std::set<int> overlined_values;
        for (int idx = 0; idx < total; ++idx)
            if (overlined[static_cast<std::size_t>(idx)])
                overlined_values.insert(filling.value(idx));
        // (3) an overlined value is overlined at its last occurrence in every
        // row that contains it.
        for (int idx = 0; idx < total; ++idx) {
            const std::size_t i = static_cast<std::size_t>(idx);
            if (row_last[i] && overlined_values.count(filling.value(idx)) && !overlined[i])
                return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> brute_force_overlinings(const Filling& filling,
                                                      bool include_condition3) {
    const int total = filling.shape().cell_count();
    if (total > 24) throw InputError("too many cells for the brute-force overline sweep");
    std::vector<std::vector<int>> accepted;
    const std::size_t subsets = std::size_t{1} << total;
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<int> cells;
        for (int b = 0; b < total; ++b)
            if (mask & (std::size_t{1} << b)) cells.push_back(b);
        if (satisfies_conditions(filling, cells, include_condition3))
            accepted.push_back(std::move(cells));
    }
    return accepted;
}

const Filling& shadow(const Lifting& lifting) { return lifting.filling(); }

std::string_view to_string(CountBlock block) {
    switch (block) {
        case CountBlock::kNone: return "none";
        case CountBlock::kPivotAbsent: return "pivot-absent";
        case CountBlock::kForcedOpposite: return "forced-opposite";
        case CountBlock::kNotSquareFree: return "not-square-free";
    }
    return "?";
}

namespace {

LiftingCount count_liftings(const Filling& filling, int k, int j, bool above) {
    LiftingCount out;
    if (!is_square_free(filling)) {
        out.block = CountBlock::kNotSquareFree;
        return out;
    }
    const ValueStats s = ValueProfile(filling).stats_for(k);
    if (!s.present) {
        out.block = CountBlock::kPivotAbsent;
        return out;
    }
    if (above ? !s.clean_below : !s.clean_above) {
        out.block = CountBlock::kForcedOpposite;
        return out;
    }
    out.count = above ? binom(s.d_above - s.l_above, j) : binom(s.d_below - s.l_below, j);
    return out;
}

} // namespace

LiftingCount count_liftings_above(const Filling& filling, int k, int j) {
    return count_liftings(filling, k, j, true);
}

LiftingCount count_liftings_below(const Filling& filling, int k, int j) {
    return count_liftings(filling, k, j, false);
}

} // namespace skewpp
