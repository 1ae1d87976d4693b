#ifndef GRTAB_TABLEAUX_HPP
#define GRTAB_TABLEAUX_HPP

/**
 * @file tableaux.hpp
 * @brief Rectangular semistandard tableaux, the row-union monoid, and the
 *        trivial-factor quotient.
 *
 * A tableau has n rows of equal length with entries in [1, m]; rows are weakly
 * increasing and columns (the r-th smallest entries of each row, aligned) are
 * strictly increasing.  The monoid product S ∪ T merges rows as multisets.
 * Trivial tableaux (all columns are consecutive runs) act as units for the
 * ~-equivalence used throughout the library.
 */

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"

namespace grtab {

/// A single strictly increasing column, bottom entry first.
using Column = std::vector<int>;

/// Entry multiplicities (index i-1 holds the multiplicity of entry i).
using ContentVector = std::vector<long long>;

/// Coefficients over the fundamental weights ω_1 … ω_{n-1}.
using WeightVector = std::vector<long long>;

/**
 * @brief A rectangular semistandard tableau in SSYT(n, [m]).
 *
 * Invariants (enforced by make_tableau / from_columns): `rows.size() == n`,
 * all rows share one length, every row is sorted weakly increasing, every
 * column is strictly increasing, and all entries lie in [1, m].  A tableau
 * with zero columns is the monoid unit.
 */
struct Tableau {
    int n = 0;                          ///< number of rows
    int m = 0;                          ///< entry alphabet is [1, m]
    std::vector<std::vector<int>> rows; ///< n sorted rows of equal length

    /// @return the common row length (number of columns).
    [[nodiscard]] int column_count() const {
        return rows.empty() ? 0 : static_cast<int>(rows.front().size());
    }

    /// @return true when the tableau has no columns (the monoid unit).
    [[nodiscard]] bool is_unit() const { return column_count() == 0; }

    /// @return column @p j (0-based), bottom entry first.
    [[nodiscard]] Column column(int j) const {
        Column c(n);
        for (int r = 0; r < n; ++r) c[r] = rows[r][j];
        return c;
    }

    /// @return all columns, leftmost first.
    [[nodiscard]] std::vector<Column> columns() const {
        std::vector<Column> out;
        out.reserve(column_count());
        for (int j = 0; j < column_count(); ++j) out.push_back(column(j));
        return out;
    }

    friend bool operator==(const Tableau& a, const Tableau& b) {
        return a.n == b.n && a.m == b.m && a.rows == b.rows;
    }
    friend bool operator!=(const Tableau& a, const Tableau& b) { return !(a == b); }
    friend bool operator<(const Tableau& a, const Tableau& b) {
        return std::tie(a.n, a.m, a.rows) < std::tie(b.n, b.m, b.rows);
    }
};

/// A formal quotient num / den of tableaux with the same ambient (n, m).
struct TableauFraction {
    Tableau num;
    Tableau den;

    /// @return true when the denominator is the unit tableau.
    [[nodiscard]] bool is_integral() const { return den.is_unit(); }

    friend bool operator==(const TableauFraction& a, const TableauFraction& b) {
        return a.num == b.num && a.den == b.den;
    }
};

namespace detail {

inline std::string entry_list(const std::vector<int>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + "}";
}

} // namespace detail

/**
 * @brief Validates and canonicalizes row data into a Tableau.
 *
 * Rows are sorted (a tableau is determined by its row multisets), then checked:
 * equal lengths (RaggedRows), entries in [1, m] (OutOfRange), strictly
 * increasing columns (ColumnNotStrict).
 */
inline Tableau make_tableau(int n, int m, std::vector<std::vector<int>> rows) {
    if (n < 1 || m < 1) fail(ErrorCode::OutOfRange, "tableau needs n >= 1 and m >= 1");
    if (static_cast<int>(rows.size()) != n)
        fail(ErrorCode::RaggedRows, "expected " + std::to_string(n) + " rows, got " +
                                        std::to_string(rows.size()));
    const size_t len = rows.front().size();
    for (auto& row : rows) {
        if (row.size() != len) fail(ErrorCode::RaggedRows, "rows have unequal lengths");
        std::sort(row.begin(), row.end());
        for (int x : row)
            if (x < 1 || x > m)
                fail(ErrorCode::OutOfRange,
                     "entry " + std::to_string(x) + " outside [1, " + std::to_string(m) + "]");
    }
    for (size_t j = 0; j < len; ++j)
        for (int r = 1; r < n; ++r)
            if (rows[r - 1][j] >= rows[r][j])
                fail(ErrorCode::ColumnNotStrict,
                     "column " + std::to_string(j + 1) + " is not strictly increasing");
    Tableau t;
    t.n = n;
    t.m = m;
    t.rows = std::move(rows);
    return t;
}

/// @return the unit tableau (zero columns) in SSYT(n, [m]).
inline Tableau unit_tableau(int n, int m) {
    return make_tableau(n, m, std::vector<std::vector<int>>(n));
}

/// Monoid product: row-wise multiset union.  Operands must share (n, m).
inline Tableau unite(const Tableau& a, const Tableau& b) {
    if (a.n != b.n || a.m != b.m)
        fail(ErrorCode::DimensionMismatch, "union of tableaux from different SSYT(n, [m])");
    std::vector<std::vector<int>> rows(a.n);
    for (int r = 0; r < a.n; ++r) {
        rows[r].resize(a.rows[r].size() + b.rows[r].size());
        std::merge(a.rows[r].begin(), a.rows[r].end(), b.rows[r].begin(), b.rows[r].end(),
                   rows[r].begin());
    }
    return make_tableau(a.n, a.m, std::move(rows));
}

/**
 * @brief Exact division in the monoid, if it exists.
 *
 * @return R with T = S ∪ R, or std::nullopt when S does not divide T (either a
 *         row multiset is not contained, or the row difference is not
 *         semistandard).
 */
inline std::optional<Tableau> try_divide(const Tableau& t, const Tableau& s) {
    if (t.n != s.n || t.m != s.m) return std::nullopt;
    std::vector<std::vector<int>> rows(t.n);
    for (int r = 0; r < t.n; ++r) {
        auto& out = rows[r];
        const auto& big = t.rows[r];
        const auto& small = s.rows[r];
        size_t i = 0;
        for (int x : big) {
            if (i < small.size() && small[i] == x)
                ++i;
            else
                out.push_back(x);
        }
        if (i != small.size()) return std::nullopt; // some entry of S missing from T
    }
    // The row difference must itself be semistandard for S to be a factor.
    const size_t len = rows.front().size();
    for (auto& row : rows)
        if (row.size() != len) return std::nullopt;
    for (size_t j = 0; j < len; ++j)
        for (int r = 1; r < t.n; ++r)
            if (rows[r - 1][j] >= rows[r][j]) return std::nullopt;
    Tableau q;
    q.n = t.n;
    q.m = t.m;
    q.rows = std::move(rows);
    return q;
}

/// Exact division T / S; throws NotAFactor when S does not divide T.
inline Tableau divide(const Tableau& t, const Tableau& s) {
    if (t.n != s.n || t.m != s.m)
        fail(ErrorCode::DimensionMismatch, "division of tableaux from different SSYT(n, [m])");
    auto q = try_divide(t, s);
    if (!q) fail(ErrorCode::NotAFactor, "tableau is not a factor");
    return *q;
}

/// Product of single-column tableaux with the given columns.
inline Tableau from_columns(int n, int m, const std::vector<Column>& cols) {
    std::vector<std::vector<int>> rows(n);
    for (const auto& c : cols) {
        if (static_cast<int>(c.size()) != n)
            fail(ErrorCode::RaggedRows, "column has " + std::to_string(c.size()) +
                                            " entries, expected " + std::to_string(n));
        for (int r = 0; r < n; ++r) rows[r].push_back(c[r]);
    }
    return make_tableau(n, m, std::move(rows));
}

/// Entry multiplicities of @p t as a vector indexed by [1, m].
inline ContentVector content(const Tableau& t) {
    ContentVector c(t.m, 0);
    for (const auto& row : t.rows)
        for (int x : row) ++c[x - 1];
    return c;
}

/// Sum of the column gaps of a single column.
inline long long column_gap_weight(const Column& c) {
    long long g = 0;
    for (size_t j = 1; j < c.size(); ++j) g += c[j] - c[j - 1] - 1;
    return g;
}

/// Total gap weight of @p t (sum over the columns).
inline long long gap_weight(const Tableau& t) {
    long long g = 0;
    for (int j = 0; j < t.column_count(); ++j) g += column_gap_weight(t.column(j));
    return g;
}

/**
 * @brief Weight of @p t over the fundamental weights ω_1 … ω_{n-1}.
 *
 * A gap of size d between rows j-1 and j of a column contributes d·ω_{n-j+1};
 * index i-1 of the result holds the ω_i coefficient.
 */
inline WeightVector weight(const Tableau& t) {
    WeightVector w(t.n > 0 ? t.n - 1 : 0, 0);
    for (int j = 0; j < t.column_count(); ++j) {
        Column c = t.column(j);
        for (int r = 1; r < t.n; ++r) {
            long long gap = c[r] - c[r - 1] - 1;
            if (gap != 0) w[t.n - r - 1] += gap; // ω_{n-j+1} with j = r+1 (1-based)
        }
    }
    return w;
}

/// @return true when every column of @p t is a consecutive run (weight zero).
inline bool is_trivial(const Tableau& t) { return gap_weight(t) == 0; }

/// The solid column {i, i+1, …, i+n-1} as a one-column tableau.
inline Tableau solid_tableau(int i, int n, int m) {
    if (i < 1 || i + n - 1 > m)
        fail(ErrorCode::OutOfRange, "solid column start " + std::to_string(i) + " outside range");
    Column c(n);
    std::iota(c.begin(), c.end(), i);
    return from_columns(n, m, {c});
}

/// Product of solid columns with the given exponents (index i-1 ↦ start i).
inline Tableau trivial_from_exponents(const std::vector<long long>& exps, int n, int m) {
    Tableau acc = unit_tableau(n, m);
    for (size_t i = 0; i < exps.size(); ++i) {
        require_internal(exps[i] >= 0, "trivial exponents must be nonnegative");
        for (long long k = 0; k < exps[i]; ++k)
            acc = unite(acc, solid_tableau(static_cast<int>(i) + 1, n, m));
    }
    return acc;
}

/// Solid-column exponents of a trivial tableau (index i-1 ↦ start i).
inline std::vector<long long> solid_exponents(const Tableau& t) {
    std::vector<long long> e(std::max(t.m - t.n + 1, 0), 0);
    for (int j = 0; j < t.column_count(); ++j) {
        Column c = t.column(j);
        require_internal(column_gap_weight(c) == 0, "solid_exponents needs a trivial tableau");
        ++e[c[0] - 1];
    }
    return e;
}

/**
 * @brief Removes the maximal trivial factor: divides out solid columns,
 *        smallest start first, until none divides.
 *
 * The result is the unique ~-class representative with no trivial factor.
 */
inline Tableau reduce(const Tableau& t) {
    Tableau cur = t;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 1; i + cur.n - 1 <= cur.m; ++i) {
            if (auto q = try_divide(cur, solid_tableau(i, cur.n, cur.m))) {
                cur = std::move(*q);
                changed = true;
                break;
            }
        }
    }
    return cur;
}

/// @return true when S and T differ by trivial factors only (same ~-class).
inline bool equivalent(const Tableau& s, const Tableau& t) {
    if (s.n != t.n || s.m != t.m) return false;
    return reduce(s) == reduce(t);
}

/**
 * @brief Factors one column into fundamental (gap-weight one) columns.
 *
 * A trivial column factors into nothing; otherwise the column splits
 * repeatedly as [e₁, e₁+c-1] ∪ [e₁+c+1, e₁+n]  (a fundamental column) times a
 * remainder of gap weight one less, where c is the length of the leading
 * consecutive run.
 */
inline std::vector<Column> factor_column(const Column& col, int m) {
    const int n = static_cast<int>(col.size());
    std::vector<Column> out;
    Column cur = col;
    long long gw = column_gap_weight(cur);
    while (gw >= 2) {
        int run = 1;
        while (run < n && cur[run] == cur[run - 1] + 1) ++run;
        const int e1 = cur[0];
        require_internal(e1 + n <= m, "fundamental split exceeds alphabet");
        Column fund(n), rest(n);
        for (int t = 0; t < n; ++t) fund[t] = t < run ? e1 + t : e1 + t + 1;
        for (int t = 0; t < n; ++t) rest[t] = t < run ? e1 + 1 + t : cur[t];
        out.push_back(std::move(fund));
        cur = std::move(rest);
        const long long next = column_gap_weight(cur);
        require_internal(next == gw - 1, "column split must lower gap weight by exactly one");
        gw = next;
    }
    if (gw == 1) out.push_back(cur);
    return out;
}

/// The image of @p t in the quotient: gap-weight-one columns of the small-gaps
/// representative, in lexicographic order.
inline std::vector<Column> fundamental_factors(const Tableau& t) {
    std::vector<Column> out;
    for (int j = 0; j < t.column_count(); ++j) {
        auto part = factor_column(t.column(j), t.m);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Result of small_gaps_form: T ~ prime, and T = prime ∪ (correction).
struct SmallGapsForm {
    Tableau prime;             ///< small-gaps representative T′ of the class
    TableauFraction correction; ///< reduced trivial fraction T″ with T = T′ · T″
};

/**
 * @brief Small-gaps form of the ~-class of @p t.
 *
 * Returns the unique small-gaps tableau T′ ~ T together with the reduced
 * trivial fraction T″ (numerator and denominator are trivial tableaux) such
 * that T = T′ ∪ T″ formally.
 */
inline SmallGapsForm small_gaps_form(const Tableau& t) {
    auto fund = fundamental_factors(t);
    Tableau prime = unit_tableau(t.n, t.m);
    for (const auto& c : fund) prime = unite(prime, from_columns(t.n, t.m, {c}));
    // The product of small-gaps tableaux keeps the column multiset: check it.
    {
        auto got = prime.columns();
        std::sort(got.begin(), got.end());
        require_internal(got == fund, "small-gaps product must concatenate columns");
    }
    Tableau red = reduce(t);
    require_internal(reduce(prime) == red, "small-gaps form must stay in the ~-class");
    // T = red ∪ A and T' = red ∪ B with A, B trivial; T'' = A / B reduced.
    auto a = solid_exponents(divide(t, red));
    auto b = solid_exponents(divide(prime, red));
    std::vector<long long> pos(a.size(), 0), neg(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        const long long d = a[i] - b[i];
        (d >= 0 ? pos : neg)[i] = d >= 0 ? d : -d;
    }
    SmallGapsForm out;
    out.prime = std::move(prime);
    out.correction.num = trivial_from_exponents(pos, t.n, t.m);
    out.correction.den = trivial_from_exponents(neg, t.n, t.m);
    return out;
}

/**
 * @brief Dominance comparison S ≤ T of same-content tableaux.
 *
 * For every i the shape of the restriction to entries ≤ i must be dominated:
 * all row-prefix sums of S's restricted shape are ≤ those of T.
 * @throws Error{ContentMismatch} when the contents differ.
 */
inline bool dominance_leq(const Tableau& s, const Tableau& t) {
    if (s.n != t.n || s.m != t.m)
        fail(ErrorCode::DimensionMismatch, "dominance compares tableaux in one SSYT(n, [m])");
    if (content(s) != content(t))
        fail(ErrorCode::ContentMismatch, "dominance order needs equal content");
    for (int i = 1; i <= s.m; ++i) {
        long long ps = 0, pt = 0;
        for (int r = 0; r < s.n; ++r) {
            ps += std::upper_bound(s.rows[r].begin(), s.rows[r].end(), i) - s.rows[r].begin();
            pt += std::upper_bound(t.rows[r].begin(), t.rows[r].end(), i) - t.rows[r].begin();
            if (ps > pt) return false;
        }
    }
    return true;
}

/**
 * @brief Linearization key for the dominance order.
 *
 * Componentwise-smaller keys correspond to dominance-smaller tableaux, so
 * sorting keys in descending lexicographic order lists dominance-maximal
 * terms first.  Only comparable for equal content.
 */
inline std::vector<long long> dominance_key(const Tableau& t) {
    std::vector<long long> key;
    key.reserve(static_cast<size_t>(t.m) * t.n);
    for (int i = 1; i <= t.m; ++i) {
        long long ps = 0;
        for (int r = 0; r < t.n; ++r) {
            ps += std::upper_bound(t.rows[r].begin(), t.rows[r].end(), i) - t.rows[r].begin();
            key.push_back(ps);
        }
    }
    return key;
}

/// Result of content_lift: class representative times solid columns.
struct ContentLift {
    std::vector<long long> exponents; ///< solid-column exponents a_1 … a_{m-n+1}
    TableauFraction value;            ///< reduced ∪ positive part / negative part
    bool localized = false;           ///< true when some exponent is negative
};

/**
 * @brief Lifts the ~-class of @p t to the member with content @p target.
 *
 * Solves target − content(reduce(t)) over the solid-column lattice.  When all
 * exponents are nonnegative the lift is a genuine tableau (value.num);
 * otherwise the fraction carries the negative part and `localized` is set.
 * @throws Error{NotInLattice} when no solution exists.
 */
inline ContentLift content_lift(const Tableau& t, const ContentVector& target) {
    if (static_cast<int>(target.size()) != t.m)
        fail(ErrorCode::DimensionMismatch, "target content has wrong length");
    Tableau red = reduce(t);
    ContentVector base = content(red);
    std::vector<long long> delta(t.m);
    for (int i = 0; i < t.m; ++i) delta[i] = target[i] - base[i];
    const int solids = t.m - t.n + 1;
    std::vector<long long> a(std::max(solids, 0), 0);
    for (int i = 0; i < solids; ++i) {
        a[i] = delta[i];
        for (int j = i; j < i + t.n; ++j) delta[j] -= a[i];
    }
    for (long long d : delta)
        if (d != 0)
            fail(ErrorCode::NotInLattice, "content difference is not a sum of solid columns");
    std::vector<long long> pos(a.size(), 0), neg(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) (a[i] >= 0 ? pos : neg)[i] = std::abs(a[i]);
    ContentLift out;
    out.exponents = a;
    out.value.num = unite(red, trivial_from_exponents(pos, t.n, t.m));
    out.value.den = trivial_from_exponents(neg, t.n, t.m);
    out.localized = !out.value.den.is_unit();
    return out;
}

} // namespace grtab

#endif // GRTAB_TABLEAUX_HPP
