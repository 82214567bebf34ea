#include "skewpp/counting.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <thread>

#include "skewpp/errors.hpp"
#include "skewpp/exact.hpp"
#include "skewpp/marking.hpp"

namespace skewpp {

long long lemma1_lhs(int d, int r) {
    if (d < 0 || r < 0) throw InputError("lemma arguments must be nonnegative");
    long long sum = 0;
    for (int j = 0; j <= std::max(d, r); ++j) {
        const long long term = checked_mul(binom(j, r), binom(d, j));
        sum = checked_add(sum, (j + r) % 2 == 0 ? term : -term);
    }
    return sum;
}

Side parse_side(std::string_view text) {
    if (text == "above") return Side::kAbove;
    if (text == "below") return Side::kBelow;
    throw InputError("unknown side '" + std::string(text) + "'");
}

Variant parse_variant(std::string_view text) {
    if (text == "restricted") return Variant::kRestricted;
    if (text == "literal") return Variant::kLiteral;
    throw InputError("unknown variant '" + std::string(text) + "'");
}

std::string_view to_string(Side side) {
    return side == Side::kAbove ? "above" : "below";
}

std::string_view to_string(Variant variant) {
    return variant == Variant::kRestricted ? "restricted" : "literal";
}

void CountTable::add(int j, int l, long long count) {
    if (count == 0) return;
    long long& slot = entries[{j, l}];
    slot = checked_add(slot, count);
    if (slot == 0) entries.erase({j, l});
}

long long CountTable::at(int j, int l) const {
    const auto it = entries.find({j, l});
    return it == entries.end() ? 0 : it->second;
}

namespace {

void require_positive(int value, const char* what) {
    if (value < 1) throw InputError(std::string(what) + " must be >= 1");
}

// One filling's contribution to every pivot present in it.
void scatter(const Filling& filling, SweepCounts& acc) {
    const ValueProfile profile(filling);
    const std::vector<int>& distinct = profile.distinct();
    const std::vector<int>& forced = profile.forced();
    const int d = static_cast<int>(distinct.size());
    for (int i = 0; i < d; ++i) {
        const int k = distinct[static_cast<std::size_t>(i)];
        const int d_below = i;
        const int d_above = d - 1 - i;
        const int l_below = static_cast<int>(
            std::lower_bound(forced.begin(), forced.end(), k) - forced.begin());
        const int l_above = static_cast<int>(
            forced.end() - std::upper_bound(forced.begin(), forced.end(), k));
        const std::size_t uk = static_cast<std::size_t>(k);
        const std::size_t m_above = static_cast<std::size_t>(d_above + 1);
        const std::size_t m_below = static_cast<std::size_t>(d_below + 1);

        acc.pg_literal[uk][m_above] = checked_add(acc.pg_literal[uk][m_above], 1);
        if (l_below == 0) {
            acc.pg_restricted[uk][m_above] = checked_add(acc.pg_restricted[uk][m_above], 1);
            for (int j = 0; j <= d_above - l_above; ++j)
                acc.above_tables[uk].add(j, l_above, binom(d_above - l_above, j));
        }
        acc.ps_literal[uk][m_below] = checked_add(acc.ps_literal[uk][m_below], 1);
        if (l_above == 0) {
            acc.ps_restricted[uk][m_below] = checked_add(acc.ps_restricted[uk][m_below], 1);
            for (int j = 0; j <= d_below - l_below; ++j)
                acc.below_tables[uk].add(j, l_below, binom(d_below - l_below, j));
        }
    }
}

SweepCounts empty_counts(int n) {
    SweepCounts acc;
    acc.n = n;
    const std::size_t dim = static_cast<std::size_t>(n) + 1;
    acc.pg_literal.assign(dim, std::vector<long long>(dim, 0));
    acc.pg_restricted = acc.pg_literal;
    acc.ps_literal = acc.pg_literal;
    acc.ps_restricted = acc.pg_literal;
    acc.above_tables.resize(dim);
    acc.below_tables.resize(dim);
    for (int k = 0; k <= n; ++k) {
        acc.above_tables[static_cast<std::size_t>(k)] = CountTable{n, k, Side::kAbove, {}};
        acc.below_tables[static_cast<std::size_t>(k)] = CountTable{n, k, Side::kBelow, {}};
    }
    return acc;
}

void merge_into(SweepCounts& dst, const SweepCounts& src) {
    const std::size_t dim = static_cast<std::size_t>(dst.n) + 1;
    for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t m = 0; m < dim; ++m) {
            dst.pg_literal[k][m] = checked_add(dst.pg_literal[k][m], src.pg_literal[k][m]);
            dst.pg_restricted[k][m] =
                checked_add(dst.pg_restricted[k][m], src.pg_restricted[k][m]);
            dst.ps_literal[k][m] = checked_add(dst.ps_literal[k][m], src.ps_literal[k][m]);
            dst.ps_restricted[k][m] =
                checked_add(dst.ps_restricted[k][m], src.ps_restricted[k][m]);
        }
        for (const auto& [key, count] : src.above_tables[k].entries)
            dst.above_tables[k].add(key.first, key.second, count);
        for (const auto& [key, count] : src.below_tables[k].entries)
            dst.below_tables[k].add(key.first, key.second, count);
    }
}

} // namespace

SweepCounts sweep_counts(int n, int workers) {
    require_positive(n, "weight");
    if (workers < 1) throw InputError("worker count must be >= 1");
    const std::vector<SkewShape> shapes = enumerate_skew_shapes(n, 1, n);
    SweepCounts total = empty_counts(n);
    if (workers == 1) {
        for (const SkewShape& shape : shapes)
            for_each_filling(shape, n, [&](const Filling& filling) {
                if (is_square_free(filling)) scatter(filling, total);
            });
        return total;
    }

    // Shape-level work stealing; per-worker partials merge by exact addition,
    // so any schedule produces the same totals.
    std::atomic<std::size_t> next{0};
    std::vector<SweepCounts> partials;
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));
    partials.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) partials.push_back(empty_counts(n));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                SweepCounts& mine = partials[static_cast<std::size_t>(w)];
                for (std::size_t i = next.fetch_add(1); i < shapes.size();
                     i = next.fetch_add(1))
                    for_each_filling(shapes[i], n, [&](const Filling& filling) {
                        if (is_square_free(filling)) scatter(filling, mine);
                    });
            } catch (...) {
                failures[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& failure : failures)
        if (failure) std::rethrow_exception(failure);
    for (const SweepCounts& partial : partials) merge_into(total, partial);
    return total;
}

namespace {

long long count_from(const SweepCounts& sweep, Side side, Variant variant, int k, int m) {
    if (k > sweep.n || m > sweep.n) return 0;
    const auto& matrix = side == Side::kAbove
                             ? (variant == Variant::kRestricted ? sweep.pg_restricted
                                                                : sweep.pg_literal)
                             : (variant == Variant::kRestricted ? sweep.ps_restricted
                                                                : sweep.ps_literal);
    return matrix[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)];
}

} // namespace

long long pg(int n, int k, int m, Variant variant, int workers) {
    require_positive(n, "weight");
    require_positive(k, "pivot");
    require_positive(m, "rank");
    return count_from(sweep_counts(n, workers), Side::kAbove, variant, k, m);
}

long long ps(int n, int k, int m, Variant variant, int workers) {
    require_positive(n, "weight");
    require_positive(k, "pivot");
    require_positive(m, "rank");
    return count_from(sweep_counts(n, workers), Side::kBelow, variant, k, m);
}

CountTable pg_table(int n, int k, int workers) {
    require_positive(n, "weight");
    require_positive(k, "pivot");
    if (k > n) return CountTable{n, k, Side::kAbove, {}};
    return sweep_counts(n, workers).above_tables[static_cast<std::size_t>(k)];
}

CountTable ps_table(int n, int k, int workers) {
    require_positive(n, "weight");
    require_positive(k, "pivot");
    if (k > n) return CountTable{n, k, Side::kBelow, {}};
    return sweep_counts(n, workers).below_tables[static_cast<std::size_t>(k)];
}

CountTable table_oracle(int n, int k, Side side) {
    require_positive(n, "weight");
    require_positive(k, "pivot");
    CountTable table{n, k, side, {}};
    for (const SkewShape& shape : enumerate_skew_shapes(n, 1, n))
        for_each_filling(shape, n, [&](const Filling& filling) {
            if (!is_square_free(filling)) return;
            const ValueProfile profile(filling);
            if (!profile.is_present(k)) return;
            const ValueStats s = profile.stats_for(k);
            for (const Marking& marking : valid_markings(filling)) {
                // The marking must overline k and otherwise only values on
                // the counted side of it.
                bool has_k = false;
                int others = 0;
                bool admissible = true;
                for (int v : marking.selected) {
                    if (v == k) {
                        has_k = true;
                    } else if (side == Side::kAbove ? v > k : v < k) {
                        ++others;
                    } else {
                        admissible = false;
                        break;
                    }
                }
                if (!admissible || !has_k) continue;
                const int l = side == Side::kAbove ? s.l_above : s.l_below;
                table.add(others - l, l, 1);
            }
        });
    return table;
}

long long rhs_from_table(const CountTable& table, int m) {
    require_positive(m, "rank");
    long long sum = 0;
    for (const auto& [key, count] : table.entries) {
        const auto [j, l] = key;
        const long long weight = binom(j, m - 1 - l);
        if (weight == 0) continue;
        const long long term = checked_mul(weight, count);
        sum = checked_add(sum, (j + m - 1 - l) % 2 == 0 ? term : -term);
    }
    return sum;
}

long long rhs_theorem1(int n, int k, int m, int workers) {
    return rhs_from_table(pg_table(n, k, workers), m);
}

long long rhs_theorem2(int n, int k, int m, int workers) {
    return rhs_from_table(ps_table(n, k, workers), m);
}

VerifyReport verify(Side side, int max_n, Variant variant, bool fail_fast, int workers) {
    require_positive(max_n, "max weight");
    VerifyReport report;
    report.side = side;
    report.variant = variant;
    report.max_n = max_n;
    for (int n = 1; n <= max_n; ++n) {
        const SweepCounts sweep = sweep_counts(n, workers);
        for (int k = 1; k <= n; ++k) {
            const CountTable& table = side == Side::kAbove
                                          ? sweep.above_tables[static_cast<std::size_t>(k)]
                                          : sweep.below_tables[static_cast<std::size_t>(k)];
            for (int m = 1; m <= n; ++m) {
                VerifyRow row;
                row.n = n;
                row.k = k;
                row.m = m;
                row.lhs = count_from(sweep, side, variant, k, m);
                row.rhs = rhs_from_table(table, m);
                row.match = row.lhs == row.rhs;
                if (!row.match) ++report.mismatch_count;
                report.rows.push_back(row);
                if (fail_fast && !row.match) return report;
            }
        }
    }
    return report;
}

Lemma1Report verify_lemma1(int max) {
    if (max < 0) throw InputError("max must be >= 0");
    Lemma1Report report;
    report.max = max;
    for (int d = 0; d <= max; ++d)
        for (int r = 0; r <= max; ++r) {
            ++report.checked;
            const long long lhs = lemma1_lhs(d, r);
            const long long expected = d == r ? 1 : 0;
            if (lhs != expected) report.mismatches.push_back({d, r, lhs, expected});
        }
    return report;
}

namespace {

std::set<std::vector<int>> as_set(const std::vector<Lifting>& liftings) {
    std::set<std::vector<int>> out;
    for (const Lifting& lifting : liftings) out.insert(lifting.overlined());
    return out;
}

std::set<std::vector<int>> as_set(const std::vector<std::vector<int>>& cell_sets) {
    return {cell_sets.begin(), cell_sets.end()};
}

} // namespace

ModelsReport verify_models(int max_n) {
    require_positive(max_n, "max weight");
    ModelsReport report;
    report.max_n = max_n;
    auto flag = [&](const Filling& filling, std::string detail) {
        report.mismatches.push_back(
            {filling.shape().str(), filling.str(), std::move(detail)});
    };
    for (int n = 1; n <= max_n; ++n)
        for (const SkewShape& shape : enumerate_skew_shapes(n, 1, n))
            for_each_filling(shape, n, [&](const Filling& filling) {
                ++report.fillings_checked;
                const auto literal12 = as_set(brute_force_overlinings(filling, false));
                if (!is_square_free(filling)) {
                    ++report.blocked_checked;
                    if (!literal12.empty())
                        flag(filling, "a 2x2 equal block admits a valid overlining");
                    return;
                }
                ++report.square_free_checked;
                const auto literal123 = as_set(brute_force_overlinings(filling, true));
                const auto value = as_set(enumerate_liftings(filling, MarkingModel::kValue));
                const auto occurrence =
                    as_set(enumerate_liftings(filling, MarkingModel::kOccurrence));
                const auto hybrid = as_set(enumerate_liftings(filling, MarkingModel::kHybrid));
                if (value != literal123)
                    flag(filling, "value-model liftings differ from the three-condition subsets");
                if (occurrence != literal12)
                    flag(filling,
                         "occurrence-model liftings differ from the two-condition subsets");
                if (!std::includes(hybrid.begin(), hybrid.end(), value.begin(), value.end()))
                    flag(filling, "value-model liftings not contained in hybrid-model liftings");
                if (!std::includes(occurrence.begin(), occurrence.end(), hybrid.begin(),
                                   hybrid.end()))
                    flag(filling,
                         "hybrid-model liftings not contained in occurrence-model liftings");
            });
    return report;
}

} // namespace skewpp
