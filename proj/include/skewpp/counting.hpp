#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skewpp/filling.hpp"

namespace skewpp {

// Alternating binomial sum  sum_j (-1)^(j+R) C(j,R) C(D,j),
// which collapses to 1 when D = R and 0 otherwise.
long long lemma1_lhs(int d, int r);

// Which side of the pivot the co-overlined values live on: kAbove counts
// liftings whose other overlined values all exceed the pivot, kBelow the
// mirror image.
enum class Side { kAbove, kBelow };
// kLiteral counts every square-free filling with the pivot in place;
// kRestricted additionally requires that no column-repeated value lies on the
// opposite side of the pivot, the reading under which the alternating-sum
// identities hold exactly.
enum class Variant { kRestricted, kLiteral };

Side parse_side(std::string_view text);
Variant parse_variant(std::string_view text);
std::string_view to_string(Side side);
std::string_view to_string(Variant variant);

// Exact lifting counts for one (weight, pivot, side), indexed by (j, l):
// j freely chosen overlined values, l column-repeated values on the counted
// side.  Absent entries are 0.
struct CountTable {
    int n = 0;
    int k = 0;
    Side side = Side::kAbove;
    std::map<std::pair<int, int>, long long> entries; // (j, l) -> positive count

    // Checked accumulation; zero increments leave the table untouched so that
    // absent-means-0 stays canonical.
    void add(int j, int l, long long count);
    long long at(int j, int l) const;

    bool operator==(const CountTable&) const = default;
};

// One evaluated identity instance.
struct VerifyRow {
    int n = 0;
    int k = 0;
    int m = 0;
    long long lhs = 0;
    long long rhs = 0;
    bool match = false;

    bool operator==(const VerifyRow&) const = default;
};

struct VerifyReport {
    Side side = Side::kAbove;
    Variant variant = Variant::kRestricted;
    int max_n = 0;
    std::vector<VerifyRow> rows;
    long long mismatch_count = 0;
};

// Everything one enumeration pass over the weight-n inventory yields: direct
// counts for every pivot and rank under both variants, plus both count
// tables for every pivot.  Matrices are (n+1) x (n+1), indexed [k][m] with
// row/column 0 unused.
struct SweepCounts {
    int n = 0;
    std::vector<std::vector<long long>> pg_literal;
    std::vector<std::vector<long long>> pg_restricted;
    std::vector<std::vector<long long>> ps_literal;
    std::vector<std::vector<long long>> ps_restricted;
    std::vector<CountTable> above_tables; // index k in [0, n]
    std::vector<CountTable> below_tables;
};

// Enumerates every square-free filling of weight n over all shapes with
// outer weight <= n and scatters its statistics to every present pivot.
// Results are identical for any worker count.
SweepCounts sweep_counts(int n, int workers = 1);

// Square-free fillings of weight n (outer weight <= n) in which k is present
// and exactly m-1 distinct values exceed k; kRestricted additionally requires
// that no column-repeated value lies below k.
long long pg(int n, int k, int m, Variant variant, int workers = 1);

// Mirror image: exactly m-1 distinct values below k; kRestricted requires no
// column-repeated value above k.
long long ps(int n, int k, int m, Variant variant, int workers = 1);

// entries[(j, l)] = sum over qualifying fillings with l column-repeated
// values above k of C(d_above - l, j); equivalently the number of liftings
// with k overlined and exactly j + l larger values overlined.
CountTable pg_table(int n, int k, int workers = 1);
CountTable ps_table(int n, int k, int workers = 1);

// The same table computed the slow way: enumerate the value markings of each
// filling explicitly and classify each by (j, l).  Must equal
// pg_table/ps_table entrywise.
CountTable table_oracle(int n, int k, Side side);

// Alternating sum  sum_(j,l) (-1)^(j+m-1-l) C(j, m-1-l) entries[(j,l)].
long long rhs_from_table(const CountTable& table, int m);

long long rhs_theorem1(int n, int k, int m, int workers = 1);
long long rhs_theorem2(int n, int k, int m, int workers = 1);

// Compares the direct count with the alternating table sum for every
// n <= max_n, k <= n, m <= n.  With fail_fast, stops after the first
// mismatching row (which is still included).
VerifyReport verify(Side side, int max_n, Variant variant, bool fail_fast = false,
                    int workers = 1);

struct Lemma1Row {
    int d = 0;
    int r = 0;
    long long lhs = 0;
    long long expected = 0;
};

struct Lemma1Report {
    int max = 0;
    long long checked = 0;
    std::vector<Lemma1Row> mismatches;
};

// lemma1_lhs(d, r) == [d == r] for all 0 <= d, r <= max.
Lemma1Report verify_lemma1(int max);

struct ModelsMismatch {
    std::string shape;
    std::string filling;
    std::string detail;
};

// Cross-checks the marking machinery against brute force over every filling
// of weight <= max_n: value-model liftings must equal the cell subsets
// passing all three overline conditions, occurrence-model liftings those
// passing the two cell-wise conditions, the three models must nest, and
// fillings with a 2x2 equal block must admit no valid overlining at all.
struct ModelsReport {
    int max_n = 0;
    long long fillings_checked = 0;
    long long square_free_checked = 0;
    long long blocked_checked = 0;
    std::vector<ModelsMismatch> mismatches;
};

ModelsReport verify_models(int max_n);

} // namespace skewpp
