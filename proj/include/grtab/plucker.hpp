#ifndef GRTAB_PLUCKER_HPP
#define GRTAB_PLUCKER_HPP

/**
 * @file plucker.hpp
 * @brief The Plücker ring of Gr(n,m): straightening to the standard-monomial
 *        basis, Z^m-grading, frozen Laurent prefactors, the quotient by the
 *        solid frozen coordinates, and exact evaluation at rational matrices.
 *
 * A standard monomial is a product of Plücker coordinates whose columns can
 * be arranged entrywise weakly increasing — equivalently, the columns of a
 * semistandard tableau.  Every polynomial is stored canonically as a map
 * from such tableaux to integer coefficients, optionally multiplied by a
 * Laurent monomial in the m−n+1 solid (consecutive-interval) coordinates.
 */

#include <algorithm>
#include <iterator>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"
#include "tableaux.hpp"

namespace grtab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// The solid column {i, i+1, …, i+n-1} as a plain index list.
inline Column solid_column(int i, int n) {
    Column c(n);
    std::iota(c.begin(), c.end(), i);
    return c;
}

/**
 * @brief Two consecutive runs of sizes a and n−a, the first starting at b,
 *        the second starting a gap of size c after the first ends.
 *
 * Gap size 1 means consecutive, so (a, b, 1) is the solid run at b.  With
 * a = 0 the column is the single run of length n starting at b+c−1.
 */
inline Column plucker_abc(int a, int b, int c, int n) {
    if (a < 0 || a > n || b < 1 || c < 1)
        fail(ErrorCode::OutOfRange, "plucker_abc needs 0 <= a <= n, b >= 1, c >= 1");
    Column col;
    col.reserve(n);
    for (int x = b; x <= b + a - 1; ++x) col.push_back(x);
    const int start2 = b + a - 1 + c;
    for (int x = start2; x < start2 + (n - a); ++x) col.push_back(x);
    return col;
}

/// One input term for straightening: coefficient times a product of
/// (possibly unsorted) Plücker columns.
struct RawPluckerTerm {
    Int coeff;
    std::vector<Column> columns;
};

/**
 * @brief An element of C[Gr(n,m)] (or its localization at the solid frozen
 *        coordinates), in canonical standard-monomial form.
 *
 * frozen holds Laurent exponents of the m−n+1 solid coordinates; terms maps
 * semistandard tableaux (standard monomials) to nonzero coefficients.
 */
struct PluckerPolynomial {
    int n = 0;
    int m = 0;
    std::vector<long long> frozen; ///< exponents over solids {i..i+n-1}
    std::map<Tableau, Int> terms;  ///< standard monomial -> coefficient

    [[nodiscard]] bool is_zero() const { return terms.empty(); }

    [[nodiscard]] bool frozen_trivial() const {
        return std::all_of(frozen.begin(), frozen.end(), [](long long e) { return e == 0; });
    }

    /// All term tableaux share one Z^m-degree (vacuously true when empty).
    [[nodiscard]] bool is_homogeneous() const {
        if (terms.empty()) return true;
        const ContentVector ref = content(terms.begin()->first);
        for (const auto& [t, c] : terms)
            if (content(t) != ref) return false;
        return true;
    }

    /// Z^m-degree of the term part; requires a homogeneous nonzero element.
    [[nodiscard]] ContentVector term_content() const {
        if (terms.empty()) fail(ErrorCode::InvalidInput, "zero polynomial has no degree");
        if (!is_homogeneous()) fail(ErrorCode::InvalidInput, "mixed-degree term map");
        return content(terms.begin()->first);
    }

    friend bool operator==(const PluckerPolynomial& a, const PluckerPolynomial& b) {
        return a.n == b.n && a.m == b.m && a.frozen == b.frozen && a.terms == b.terms;
    }
    friend bool operator!=(const PluckerPolynomial& a, const PluckerPolynomial& b) {
        return !(a == b);
    }
};

namespace detail {

using ColumnList = std::vector<Column>;

/// Parity (0/1) of #{(x,y) in a×b : x > y}; both inputs sorted.
inline int cross_inversion_parity(const Column& a, const Column& b) {
    int parity = 0;
    for (int x : a)
        for (int y : b)
            if (x > y) parity ^= 1;
    return parity;
}

inline bool share_value(const Column& a, const Column& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return false;
}

inline Column merge_columns(const Column& a, const Column& b) {
    Column out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline void add_term(std::map<Tableau, Int>& acc, const Tableau& t, const Int& c) {
    if (c == 0) return;
    auto it = acc.find(t);
    if (it == acc.end()) {
        acc.emplace(t, c);
    } else {
        it->second += c;
        if (it->second == 0) acc.erase(it);
    }
}

struct StraightenContext {
    int n = 0;
    int m = 0;
    long long fuel = 150000; ///< syzygy applications before giving up
    std::map<ColumnList, std::map<Tableau, Int>> memo;
};

/**
 * @brief Straightens a product of sorted columns into standard monomials.
 *
 * Lex-sorts the columns, finds the first adjacent pair violating entrywise
 * weak increase, and applies the shuffle (Garnir) relation across the first
 * violating row: with u_fix the entries of the left column above the row,
 * v_fix the entries of the right column below it, and W the n+1 remaining
 * values, the alternating sum over distributions of W is zero.  Every other
 * term of the relation is strictly higher in dominance, so recursion
 * terminates; a fuel guard enforces this at runtime.
 */
inline std::map<Tableau, Int> straighten_sorted(StraightenContext& ctx, ColumnList cols) {
    std::sort(cols.begin(), cols.end());
    if (auto it = ctx.memo.find(cols); it != ctx.memo.end()) return it->second;

    const int n = ctx.n;
    int vj = -1, vr = -1;
    for (size_t j = 0; j + 1 < cols.size() && vj < 0; ++j)
        for (int r = 0; r < n; ++r)
            if (cols[j][r] > cols[j + 1][r]) {
                vj = static_cast<int>(j);
                vr = r;
                break;
            }

    if (vj < 0) { // standard: rows are weakly increasing across columns
        std::vector<std::vector<int>> rows(n);
        for (int r = 0; r < n; ++r)
            for (const auto& c : cols) rows[r].push_back(c[r]);
        std::map<Tableau, Int> out;
        out.emplace(make_tableau(ctx.n, ctx.m, std::move(rows)), Int(1));
        ctx.memo.emplace(std::move(cols), out);
        return out;
    }

    require_internal(--ctx.fuel > 0, "straightening exceeded its work budget");
    const Column& c = cols[vj];
    const Column& cp = cols[vj + 1];
    const Column u_fix(c.begin(), c.begin() + vr);
    const Column bpart(c.begin() + vr, c.end());        // n - vr largest of c
    const Column apart(cp.begin(), cp.begin() + vr + 1); // vr + 1 smallest of cp
    const Column v_fix(cp.begin() + vr + 1, cp.end());
    const Column w = merge_columns(apart, bpart); // n + 1 distinct values

    // Sign of the original term inside the relation: all of bpart exceeds
    // all of apart, so the shuffle sign is the parity of |apart|*|bpart|.
    const int eps0 = ((vr + 1) * (n - vr)) & 1;
    const int pick = n - vr; // values handed to the left factor

    std::map<Tableau, Int> out;
    const int wsize = n + 1;
    for (unsigned mask = 0; mask < (1u << wsize); ++mask) {
        if (__builtin_popcount(mask) != pick) continue;
        Column t, wc;
        for (int idx = 0; idx < wsize; ++idx)
            (mask >> idx & 1 ? t : wc).push_back(w[idx]);
        if (t == bpart) continue; // the original pair itself
        if (share_value(u_fix, t) || share_value(wc, v_fix)) continue;
        const int parity = 1 ^ eps0 ^ cross_inversion_parity(t, wc) ^
                           cross_inversion_parity(u_fix, t) ^
                           cross_inversion_parity(wc, v_fix);
        const Int sign = parity ? -1 : 1;
        ColumnList next;
        next.reserve(cols.size());
        for (size_t j = 0; j < cols.size(); ++j)
            if (static_cast<int>(j) != vj && static_cast<int>(j) != vj + 1)
                next.push_back(cols[j]);
        next.push_back(merge_columns(u_fix, t));
        next.push_back(merge_columns(wc, v_fix));
        for (const auto& [tab, coeff] : straighten_sorted(ctx, std::move(next)))
            add_term(out, tab, sign * coeff);
    }
    ctx.memo.emplace(std::move(cols), out);
    return out;
}

/// Sorts a raw column in place; returns +1/-1 for the permutation parity or
/// 0 when an index repeats (vanishing coordinate).
inline int normalize_column(Column& c) {
    int parity = 0;
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j) {
            if (c[i] == c[j]) return 0;
            if (c[i] > c[j]) parity ^= 1;
        }
    std::sort(c.begin(), c.end());
    return parity ? -1 : 1;
}

/// Exact determinant of the n×n submatrix picked by @p cols (1-based).
inline Rat minor_det(const std::vector<std::vector<Rat>>& a, const Column& colsel) {
    const int n = static_cast<int>(colsel.size());
    std::vector<std::vector<Rat>> b(n, std::vector<Rat>(n));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j < n; ++j) b[r][j] = a[r][colsel[j] - 1];
    Rat det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (b[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            std::swap(b[piv], b[col]);
            det = -det;
        }
        det *= b[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (b[r][col] == 0) continue;
            const Rat f = b[r][col] / b[col][col];
            for (int j = col; j < n; ++j) b[r][j] -= f * b[col][j];
        }
    }
    return det;
}

/// Solves target - base = sum alpha_i d_i over the solid-content lattice.
inline std::optional<std::vector<long long>> solid_lattice_solve(const ContentVector& base,
                                                                const ContentVector& target,
                                                                int n, int m) {
    std::vector<long long> delta(m);
    for (int i = 0; i < m; ++i) delta[i] = target[i] - base[i];
    const int solids = m - n + 1;
    std::vector<long long> alpha(solids, 0);
    for (int i = 0; i < solids; ++i) {
        alpha[i] = delta[i];
        for (int j = i; j < i + n; ++j) delta[j] -= alpha[i];
    }
    for (long long d : delta)
        if (d != 0) return std::nullopt;
    return alpha;
}

} // namespace detail

inline PluckerPolynomial plucker_zero(int n, int m) {
    if (n < 1 || m < n) fail(ErrorCode::BadDimensions, "plucker ring needs 1 <= n <= m");
    PluckerPolynomial p;
    p.n = n;
    p.m = m;
    p.frozen.assign(m - n + 1, 0);
    return p;
}

inline PluckerPolynomial plucker_one(int n, int m) {
    PluckerPolynomial p = plucker_zero(n, m);
    p.terms.emplace(unit_tableau(n, m), Int(1));
    return p;
}

/// The Laurent monomial in solid coordinates with the given exponents.
inline PluckerPolynomial frozen_monomial(int n, int m, std::vector<long long> exps) {
    PluckerPolynomial p = plucker_one(n, m);
    if (static_cast<int>(exps.size()) != m - n + 1)
        fail(ErrorCode::DimensionMismatch, "frozen exponent vector has wrong length");
    p.frozen = std::move(exps);
    return p;
}

/// The standard monomial P_T of a semistandard tableau.
inline PluckerPolynomial plucker_from_tableau(const Tableau& t) {
    PluckerPolynomial p = plucker_zero(t.n, t.m);
    p.terms.emplace(t, Int(1));
    return p;
}

/**
 * @brief Straightens an integer combination of raw column products into
 *        canonical standard-monomial form.
 *
 * Each raw column is sign-normalized (sorted, antisymmetry applied); columns
 * with a repeated index annihilate their term.
 */
inline PluckerPolynomial straighten(int n, int m, const std::vector<RawPluckerTerm>& input) {
    PluckerPolynomial out = plucker_zero(n, m);
    detail::StraightenContext ctx;
    ctx.n = n;
    ctx.m = m;
    for (const auto& raw : input) {
        Int coeff = raw.coeff;
        detail::ColumnList cols;
        cols.reserve(raw.columns.size());
        bool vanished = false;
        for (Column c : raw.columns) {
            if (static_cast<int>(c.size()) != n)
                fail(ErrorCode::DimensionMismatch, "plucker column size differs from n");
            for (int v : c)
                if (v < 1 || v > m) fail(ErrorCode::OutOfRange, "plucker index outside [1, m]");
            const int sign = detail::normalize_column(c);
            if (sign == 0) {
                vanished = true;
                break;
            }
            coeff *= sign;
            cols.push_back(std::move(c));
        }
        if (vanished || coeff == 0) continue;
        for (const auto& [tab, c] : detail::straighten_sorted(ctx, std::move(cols)))
            detail::add_term(out.terms, tab, coeff * c);
    }
    return out;
}

inline PluckerPolynomial operator+(const PluckerPolynomial& a, const PluckerPolynomial& b) {
    if (a.n != b.n || a.m != b.m || a.frozen != b.frozen)
        fail(ErrorCode::DimensionMismatch, "sum needs matching ring and frozen prefactor");
    PluckerPolynomial out = a;
    for (const auto& [t, c] : b.terms) detail::add_term(out.terms, t, c);
    return out;
}

inline PluckerPolynomial operator-(const PluckerPolynomial& a) {
    PluckerPolynomial out = a;
    for (auto& [t, c] : out.terms) c = -c;
    return out;
}

inline PluckerPolynomial operator-(const PluckerPolynomial& a, const PluckerPolynomial& b) {
    return a + (-b);
}

inline PluckerPolynomial operator*(const Int& s, const PluckerPolynomial& a) {
    PluckerPolynomial out = a;
    if (s == 0) {
        out.terms.clear();
        return out;
    }
    for (auto& [t, c] : out.terms) c *= s;
    return out;
}

/// Distributes, straightens each pairwise product, and adds the frozen
/// exponent vectors.
inline PluckerPolynomial multiply(const PluckerPolynomial& a, const PluckerPolynomial& b) {
    if (a.n != b.n || a.m != b.m)
        fail(ErrorCode::DimensionMismatch, "product needs one ambient Grassmannian");
    PluckerPolynomial out = plucker_zero(a.n, a.m);
    for (int i = 0; i < a.m - a.n + 1; ++i) out.frozen[i] = a.frozen[i] + b.frozen[i];
    detail::StraightenContext ctx;
    ctx.n = a.n;
    ctx.m = a.m;
    for (const auto& [ta, ca] : a.terms)
        for (const auto& [tb, cb] : b.terms) {
            detail::ColumnList cols = ta.columns();
            const detail::ColumnList more = tb.columns();
            cols.insert(cols.end(), more.begin(), more.end());
            for (const auto& [tab, c] : detail::straighten_sorted(ctx, std::move(cols)))
                detail::add_term(out.terms, tab, ca * cb * c);
        }
    return out;
}

inline PluckerPolynomial operator*(const PluckerPolynomial& a, const PluckerPolynomial& b) {
    return multiply(a, b);
}

/// An exact rational n×m matrix, full rank by construction.
struct RationalMatrix {
    int n = 0;
    int m = 0;
    std::vector<std::vector<Rat>> a;
};

inline RationalMatrix make_rational_matrix(int n, int m, std::vector<std::vector<Rat>> rows) {
    if (n < 1 || m < n) fail(ErrorCode::BadDimensions, "matrix needs 1 <= n <= m");
    if (static_cast<int>(rows.size()) != n)
        fail(ErrorCode::DimensionMismatch, "matrix row count differs from n");
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != m)
            fail(ErrorCode::DimensionMismatch, "matrix row length differs from m");
    // Rank check by elimination on a copy.
    auto b = rows;
    int rank = 0;
    for (int col = 0; col < m && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (b[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(b[piv], b[rank]);
        for (int r = rank + 1; r < n; ++r) {
            if (b[r][col] == 0) continue;
            const Rat f = b[r][col] / b[rank][col];
            for (int j = col; j < m; ++j) b[r][j] -= f * b[rank][j];
        }
        ++rank;
    }
    if (rank < n) fail(ErrorCode::InvalidInput, "evaluation matrix must have full rank");
    RationalMatrix x;
    x.n = n;
    x.m = m;
    x.a = std::move(rows);
    return x;
}

/// The n×n minor of X on the given (sorted) column set.
inline Rat minor_at(const RationalMatrix& x, const Column& cols) {
    if (static_cast<int>(cols.size()) != x.n)
        fail(ErrorCode::DimensionMismatch, "minor needs n columns");
    for (int v : cols)
        if (v < 1 || v > x.m) fail(ErrorCode::OutOfRange, "minor column outside [1, m]");
    return detail::minor_det(x.a, cols);
}

/**
 * @brief Evaluates the polynomial at X: sum of coefficient times the product
 *        of term minors, times the frozen minors to their exponents.
 * @throws Error{SingularFrozen} when a negative-exponent frozen minor is 0.
 */
inline Rat evaluate(const PluckerPolynomial& p, const RationalMatrix& x) {
    if (p.n != x.n || p.m != x.m)
        fail(ErrorCode::DimensionMismatch, "polynomial and matrix dimensions differ");
    Rat prefactor = 1;
    for (int i = 0; i < p.m - p.n + 1; ++i) {
        const long long e = p.frozen[i];
        if (e == 0) continue;
        const Rat d = minor_at(x, solid_column(i + 1, p.n));
        if (d == 0) {
            if (e < 0) fail(ErrorCode::SingularFrozen, "frozen minor vanishes at the matrix");
            return Rat(0);
        }
        Rat power = 1;
        for (long long k = 0; k < (e > 0 ? e : -e); ++k) power *= d;
        prefactor *= e > 0 ? power : Rat(1) / power;
    }
    Rat sum = 0;
    for (const auto& [t, c] : p.terms) {
        Rat prod(c);
        for (const auto& col : t.columns()) prod *= minor_at(x, col);
        sum += prod;
    }
    return prefactor * sum;
}

/**
 * @brief Rescales columns so that every solid minor equals 1.
 *
 * Processes solids left to right, scaling the rightmost column of each; the
 * triangular structure leaves earlier normalizations intact.  Evaluation
 * after normalization is invariant on ~-classes.
 * @throws Error{SingularFrozen} when some solid minor vanishes.
 */
inline RationalMatrix normalize_solid_minors(const RationalMatrix& x) {
    RationalMatrix y = x;
    for (int i = 1; i <= y.m - y.n + 1; ++i) {
        const Rat d = minor_at(y, solid_column(i, y.n));
        if (d == 0) fail(ErrorCode::SingularFrozen, "solid minor vanishes; cannot normalize");
        const int col = i + y.n - 2; // 0-based index of column i+n-1
        for (int r = 0; r < y.n; ++r) y.a[r][col] /= d;
    }
    for (int i = 1; i <= y.m - y.n + 1; ++i)
        require_internal(minor_at(y, solid_column(i, y.n)) == 1,
                         "solid normalization must make every solid minor 1");
    return y;
}

/**
 * @brief Canonical form of the image in the quotient by (solid - 1).
 *
 * The frozen prefactor maps to 1 and every solid column of a term is an
 * exact coordinate factor mapping to 1, so both are dropped; coefficients of
 * coinciding reduced tableaux merge.  Terms may end up in different
 * Z^m-degrees (the quotient is not graded).
 */
inline PluckerPolynomial quotient_reduce(const PluckerPolynomial& p) {
    PluckerPolynomial out = plucker_zero(p.n, p.m);
    for (const auto& [t, c] : p.terms) {
        std::vector<Column> kept;
        for (const auto& col : t.columns())
            if (column_gap_weight(col) != 0) kept.push_back(col);
        detail::add_term(out.terms, from_columns(p.n, p.m, kept), c);
    }
    return out;
}

/**
 * @brief Decides equality of the images in the quotient by (solid - 1).
 *
 * Reduces both sides, then lifts every term to one common Z^m-degree by
 * multiplying with solid columns (exponents from the unique triangular
 * lattice solve, shifted to be nonnegative) and compares the straightened
 * canonical forms; multiplication by a coordinate is injective in a domain,
 * so the comparison is exact.
 * @throws Error{IncomparableDegrees} when some pair of term degrees does not
 *         differ by a solid-lattice vector (a wrap-around frozen would be
 *         needed to compare them).
 */
inline bool quotient_equal(const PluckerPolynomial& p, const PluckerPolynomial& q) {
    if (p.n != q.n || p.m != q.m)
        fail(ErrorCode::DimensionMismatch, "quotient comparison needs one Grassmannian");
    const PluckerPolynomial pr = quotient_reduce(p);
    const PluckerPolynomial qr = quotient_reduce(q);
    if (pr.terms.empty() || qr.terms.empty()) return pr.terms.empty() == qr.terms.empty();

    const int solids = p.m - p.n + 1;
    const ContentVector ref = content(pr.terms.begin()->first);
    auto solve_all = [&](const PluckerPolynomial& poly) {
        std::vector<std::vector<long long>> alphas;
        for (const auto& [t, c] : poly.terms) {
            auto alpha = detail::solid_lattice_solve(content(t), ref, p.n, p.m);
            if (!alpha)
                fail(ErrorCode::IncomparableDegrees,
                     "term degrees do not differ by solid columns");
            alphas.push_back(std::move(*alpha));
        }
        return alphas;
    };
    const auto ap = solve_all(pr);
    const auto aq = solve_all(qr);
    std::vector<long long> mins(solids, 0);
    for (const auto& a : ap)
        for (int i = 0; i < solids; ++i) mins[i] = std::min(mins[i], a[i]);
    for (const auto& a : aq)
        for (int i = 0; i < solids; ++i) mins[i] = std::min(mins[i], a[i]);

    detail::StraightenContext ctx;
    ctx.n = p.n;
    ctx.m = p.m;
    auto aligned = [&](const PluckerPolynomial& poly, const std::vector<std::vector<long long>>& alphas) {
        std::map<Tableau, Int> out;
        size_t idx = 0;
        for (const auto& [t, c] : poly.terms) {
            detail::ColumnList cols = t.columns();
            for (int i = 0; i < solids; ++i)
                for (long long k = 0; k < alphas[idx][i] - mins[i]; ++k)
                    cols.push_back(solid_column(i + 1, p.n));
            for (const auto& [tab, coeff] : detail::straighten_sorted(ctx, std::move(cols)))
                detail::add_term(out, tab, c * coeff);
            ++idx;
        }
        return out;
    };
    return aligned(pr, ap) == aligned(qr, aq);
}

/**
 * @brief Enumerates every semistandard tableau with the given content
 *        (equivalently, every standard monomial of that Z^m-degree).
 */
inline std::vector<Tableau> standard_tableaux_with_content(int n, int m,
                                                           const ContentVector& cv) {
    if (static_cast<int>(cv.size()) != m)
        fail(ErrorCode::DimensionMismatch, "content vector has wrong length");
    long long total = 0;
    for (long long e : cv) {
        if (e < 0) return {};
        total += e;
    }
    if (total % n != 0) return {};
    const long long k = total / n;
    std::vector<Tableau> out;
    if (k == 0) {
        out.push_back(unit_tableau(n, m));
        return out;
    }
    std::vector<long long> avail = cv;
    std::vector<Column> chosen;
    Column current(n);
    long long fuel = 2000000;
    auto emit = [&]() {
        std::vector<std::vector<int>> rows(n);
        for (int r = 0; r < n; ++r)
            for (const auto& c : chosen) rows[r].push_back(c[r]);
        out.push_back(make_tableau(n, m, std::move(rows)));
    };
    // Depth-first over columns, each entrywise >= the previous one.
    auto build = [&](auto&& self, long long colIdx, int row) -> void {
        require_internal(--fuel > 0, "tableau enumeration exceeded its work budget");
        if (row == n) {
            chosen.push_back(current);
            if (colIdx + 1 == k) {
                emit();
            } else {
                self(self, colIdx + 1, 0);
            }
            current = chosen.back(); // deeper columns reuse the buffer
            chosen.pop_back();
            return;
        }
        int from = row == 0 ? 1 : current[row - 1] + 1;
        if (!chosen.empty()) from = std::max(from, chosen.back()[row]);
        for (int v = from; v <= m; ++v) {
            if (avail[v - 1] <= 0) continue;
            --avail[v - 1];
            current[row] = v;
            self(self, colIdx, row + 1);
            ++avail[v - 1];
        }
    };
    build(build, 0, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/**
 * @brief Exact division of the term part by a product of solid coordinates.
 *
 * Solves sum d_Q straighten(P_Q * solids) = p over all standard monomials Q
 * of the quotient degree (exact rational elimination); multiplication by a
 * coordinate is injective, so a solution is unique.  Returns nullopt when p
 * is not divisible; the frozen prefactor carries over unchanged.
 */
inline std::optional<PluckerPolynomial> divide_by_frozen(const PluckerPolynomial& p,
                                                         const std::vector<long long>& exps) {
    const int solids = p.m - p.n + 1;
    if (static_cast<int>(exps.size()) != solids)
        fail(ErrorCode::DimensionMismatch, "divisor exponent vector has wrong length");
    for (long long e : exps)
        if (e < 0) fail(ErrorCode::OutOfRange, "divisor exponents must be nonnegative");
    if (p.is_zero()) return p;
    if (!p.is_homogeneous()) fail(ErrorCode::InvalidInput, "division needs a homogeneous element");
    if (std::all_of(exps.begin(), exps.end(), [](long long e) { return e == 0; })) return p;

    ContentVector target = p.term_content();
    for (int i = 0; i < solids; ++i)
        for (int j = i; j < i + p.n; ++j) target[j] -= exps[i];
    for (long long e : target)
        if (e < 0) return std::nullopt;

    const std::vector<Tableau> candidates = standard_tableaux_with_content(p.n, p.m, target);
    if (candidates.empty()) return std::nullopt;

    detail::ColumnList divisor;
    for (int i = 0; i < solids; ++i)
        for (long long k = 0; k < exps[i]; ++k) divisor.push_back(solid_column(i + 1, p.n));

    // Column j of the system: straighten(P_{candidate j} * divisor).
    detail::StraightenContext ctx;
    ctx.n = p.n;
    ctx.m = p.m;
    std::map<Tableau, size_t> rowIndex;
    std::vector<std::map<size_t, Int>> colVectors;
    for (const auto& q : candidates) {
        detail::ColumnList cols = q.columns();
        cols.insert(cols.end(), divisor.begin(), divisor.end());
        std::map<size_t, Int> vec;
        for (const auto& [tab, c] : detail::straighten_sorted(ctx, std::move(cols))) {
            auto [it, fresh] = rowIndex.emplace(tab, rowIndex.size());
            vec[it->second] = c;
        }
        colVectors.push_back(std::move(vec));
    }
    for (const auto& [tab, c] : p.terms) rowIndex.emplace(tab, rowIndex.size());

    const size_t rows = rowIndex.size(), ncols = candidates.size();
    std::vector<std::vector<Rat>> aug(rows, std::vector<Rat>(ncols + 1, Rat(0)));
    for (size_t j = 0; j < ncols; ++j)
        for (const auto& [r, c] : colVectors[j]) aug[r][j] = Rat(c);
    for (const auto& [tab, c] : p.terms) aug[rowIndex.at(tab)][ncols] = Rat(c);

    // Exact Gaussian elimination; inconsistency means not divisible.
    std::vector<size_t> pivotRow(ncols, SIZE_MAX);
    size_t rank = 0;
    for (size_t j = 0; j < ncols && rank < rows; ++j) {
        size_t piv = SIZE_MAX;
        for (size_t r = rank; r < rows; ++r)
            if (aug[r][j] != 0) {
                piv = r;
                break;
            }
        if (piv == SIZE_MAX) continue;
        std::swap(aug[piv], aug[rank]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || aug[r][j] == 0) continue;
            const Rat f = aug[r][j] / aug[rank][j];
            for (size_t jj = j; jj <= ncols; ++jj) aug[r][jj] -= f * aug[rank][jj];
        }
        pivotRow[j] = rank;
        ++rank;
    }
    require_internal(rank == ncols, "division system must have full column rank");
    for (size_t r = rank; r < rows; ++r)
        if (aug[r][ncols] != 0) return std::nullopt;

    PluckerPolynomial out = plucker_zero(p.n, p.m);
    out.frozen = p.frozen;
    for (size_t j = 0; j < ncols; ++j) {
        const Rat v = aug[pivotRow[j]][ncols] / aug[pivotRow[j]][j];
        if (v == 0) continue;
        require_internal(boost::multiprecision::denominator(v) == 1,
                         "ring quotient must have integer coefficients");
        detail::add_term(out.terms, candidates[j], Int(boost::multiprecision::numerator(v)));
    }
    return out;
}

} // namespace grtab

#endif // GRTAB_PLUCKER_HPP
