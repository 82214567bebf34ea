#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "skewpp/filling.hpp"

namespace skewpp {

// Which reading of the overline conditions governs lifting enumeration.
//
//   kValue      - per-value, global: choosing a value overlines its rightmost
//                 occurrence in every row that contains it.  This is the
//                 semantics all counting uses.
//   kOccurrence - only the two cell-wise conditions; every row-last occurrence
//                 toggles independently, column repeats stay forced.
//   kHybrid     - forced values are fully overlined; unforced values get
//                 per-occurrence freedom over their row-last cells.
enum class MarkingModel { kValue, kOccurrence, kHybrid };

MarkingModel parse_model(std::string_view text);
std::string_view to_string(MarkingModel model);

// A choice of overlined values: every column-repeated (forced) value plus any
// subset of the remaining distinct values.
struct Marking {
    std::vector<int> selected; // ascending; always a superset of forced
    std::vector<int> forced;   // ascending

    bool operator==(const Marking&) const = default;
};

// A skew plane overpartition: a square-free filling plus overlined cells.
// Invariants (checked on construction): every overlined cell is the rightmost
// occurrence of its value in its row, and every cell that is not the topmost
// occurrence of its value in its column is overlined.
class Lifting {
public:
    Lifting(Filling filling, std::vector<int> overlined_cells);

    // Same row/value syntax as fillings with '~' suffixing overlined entries,
    // e.g. "2~,1;4~,2~;5~,4~;5~,4~;1".
    static Lifting parse(const SkewShape& shape, std::string_view text);

    const Filling& filling() const noexcept { return filling_; }

    // Ascending row-major cell indices.
    const std::vector<int>& overlined() const noexcept { return overlined_; }

    std::string str() const;

    bool operator==(const Lifting& other) const noexcept {
        return filling_ == other.filling_ && overlined_ == other.overlined_;
    }

private:
    Filling filling_;
    std::vector<int> overlined_;
};

// Per-cell flags used by the overline conditions.
std::vector<bool> row_last_flags(const Filling& filling);    // rightmost occurrence of its value in its row
std::vector<bool> column_repeat_flags(const Filling& filling); // not the topmost occurrence in its column

// Cells overlined by selecting `selected_values`: the union of their
// rightmost-in-row occurrences.  Throws NotSquareFree; throws InputError when
// a selected value does not occur in the filling.
std::vector<int> marked_cells(const Filling& filling, const std::vector<int>& selected_values);

// All markings of a square-free filling, 2^(distinct - forced) of them, in a
// fixed order: subsets of the unforced values by ascending bitmask over the
// ascending value list.
std::vector<Marking> valid_markings(const Filling& filling);

// All liftings of a square-free filling under the given model, deterministic
// order.  As sets of overlined-cell sets: kValue is a subset of kHybrid which
// is a subset of kOccurrence.
std::vector<Lifting> enumerate_liftings(const Filling& filling, MarkingModel model);

// The verbatim cell-wise overline conditions, checked directly against a cell
// subset.  Deliberately independent of the marking machinery above; does not
// require square-freeness.
bool satisfies_conditions(const Filling& filling, const std::vector<int>& overlined_cells,
                          bool include_condition3);

// Every cell subset accepted by satisfies_conditions, by brute force over all
// 2^cells subsets, each returned as an ascending index list in ascending
// bitmask order.
std::vector<std::vector<int>> brute_force_overlinings(const Filling& filling,
                                                      bool include_condition3);

// The underlying filling with overlines removed.
const Filling& shadow(const Lifting& lifting);

// Why a lifting count came out as zero without being a computed value.
enum class CountBlock { kNone, kPivotAbsent, kForcedOpposite, kNotSquareFree };

std::string_view to_string(CountBlock block);

struct LiftingCount {
    long long count = 0;
    CountBlock block = CountBlock::kNone;
};

// Number of liftings in which k is overlined and exactly j + l other values,
// all larger than k, are overlined (l being the forced values above k):
// binom(d_above - l_above, j) when k is present and nothing below k is
// forced, else 0 with the blocking reason.
LiftingCount count_liftings_above(const Filling& filling, int k, int j);

// Mirror image: the other overlined values all smaller than k.
LiftingCount count_liftings_below(const Filling& filling, int k, int j);

} // namespace skewpp
