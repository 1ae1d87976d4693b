#ifndef GRTAB_MONOMIALS_HPP
#define GRTAB_MONOMIALS_HPP

/**
 * @file monomials.hpp
 * @brief Dominant monomials Y_{i,s}, multisegments, the fundamental
 *        dictionaries, KR monomials, the Q⁺ order, segment profiles,
 *        Zelevinsky duality, and the Lapid–Mínguez patterns.
 *
 * A monomial is a finitely supported exponent map on pairs (i, s) with
 * i ∈ [1, n−1]; dominant means all exponents positive.  A multisegment is a
 * multiset of integer segments [b, e] with b ≤ e.  The two sides correspond
 * via Y_{i,s} ↔ [(s−i+2)/2, (s+i)/2].
 */

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "tableaux.hpp"

namespace grtab {

/// A variable index (i, s): node i of the Dynkin diagram, spectral shift s.
using YVar = std::pair<int, int>;

/**
 * @brief A Laurent monomial in the variables Y_{i,s}.
 *
 * Exponents may be negative in intermediate arithmetic; dominant monomials
 * (all exponents positive) index simple modules.
 */
struct Monomial {
    std::map<YVar, long long> factors; ///< exponent map, zero entries removed

    [[nodiscard]] bool is_unit() const { return factors.empty(); }

    [[nodiscard]] bool is_dominant() const {
        for (const auto& [v, e] : factors)
            if (e < 0) return false;
        return true;
    }

    /// Total degree Σ exponents (for dominant monomials, the factor count).
    [[nodiscard]] long long degree() const {
        long long d = 0;
        for (const auto& [v, e] : factors) d += e;
        return d;
    }

    void multiply_by(const YVar& v, long long e = 1) {
        auto it = factors.find(v);
        if (it == factors.end()) {
            if (e != 0) factors.emplace(v, e);
        } else {
            it->second += e;
            if (it->second == 0) factors.erase(it);
        }
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial c = a;
        for (const auto& [v, e] : b.factors) c.multiply_by(v, e);
        return c;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors == b.factors;
    }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return a.factors < b.factors;
    }
};

/// An integer segment [b, e] with b ≤ e (checked at the operation boundary).
struct Segment {
    int b = 0;
    int e = 0;

    [[nodiscard]] int length() const { return e - b + 1; }

    friend bool operator==(const Segment& x, const Segment& y) {
        return x.b == y.b && x.e == y.e;
    }
    friend bool operator<(const Segment& x, const Segment& y) {
        return std::pair(x.b, x.e) < std::pair(y.b, y.e);
    }
};

/// A multiset of segments, kept sorted for canonical equality.
using Multisegment = std::vector<Segment>;

/// Sorts a multisegment into its canonical order.
inline Multisegment canonical_multisegment(Multisegment ms) {
    std::sort(ms.begin(), ms.end());
    return ms;
}

/// Σ of segment lengths.
inline long long multisegment_degree(const Multisegment& ms) {
    long long d = 0;
    for (const auto& s : ms) d += s.length();
    return d;
}

/**
 * @brief Fundamental column of Y_{i,s}: the interval [b, b+n] with one
 *        interior element removed, b = (i−s)/2.
 *
 * The removed element is b+n−i.  Requires i ∈ [1, n−1], s ≡ i (mod 2), and
 * b ≥ 1 so the entries are positive.
 */
inline Column fundamental_column(int i, int s, int n) {
    if (n < 2 || i < 1 || i > n - 1)
        fail(ErrorCode::OutOfRange, "fundamental column needs i in [1, n-1]");
    if (((i - s) % 2 + 2) % 2 != 0)
        fail(ErrorCode::ParityError, "Y[i,s] needs s = i (mod 2)");
    const int b = (i - s) / 2;
    if (b < 1) fail(ErrorCode::OutOfRange, "Y[i,s] with s > i-2 has no column");
    Column c;
    c.reserve(n);
    const int removed = b + n - i;
    for (int x = b; x <= b + n; ++x)
        if (x != removed) c.push_back(x);
    return c;
}

/// Inverse dictionary: one-gap column ↦ (i, s).  Throws NotFundamental.
inline YVar column_to_fundamental(const Column& c, int n) {
    if (static_cast<int>(c.size()) != n)
        fail(ErrorCode::DimensionMismatch, "column size differs from n");
    if (column_gap_weight(c) != 1)
        fail(ErrorCode::NotFundamental, "column gap weight is not 1");
    const int b = c.front();
    int removed = 0;
    for (int t = 1; t < n; ++t)
        if (c[t] != c[t - 1] + 1) removed = c[t] - 1;
    const int i = b + n - removed;
    return {i, i - 2 * b};
}

/// Ψ: tableau (or its ~-class) ↦ dominant monomial, one Y per fundamental
/// factor column.  A monoid homomorphism, constant on ~-classes.
inline Monomial psi(const Tableau& t) {
    Monomial m;
    for (const auto& c : fundamental_factors(t)) m.multiply_by(column_to_fundamental(c, t.n));
    return m;
}

/**
 * @brief Φ̃: dominant monomial ↦ the small-gaps representative of its class
 *        in SSYT(n, [m]).
 *
 * Inverse of Ψ on ~-classes.  Every factor Y_{i,s} must lie in the window
 * C_ℓ for ℓ = m−n−1, i.e. s = i−2k−2 with k ∈ [0, ℓ]; otherwise OutOfWindow.
 */
inline Tableau phi_tilde(const Monomial& mono, int n, int m) {
    if (n < 2 || m < n + 1) fail(ErrorCode::BadDimensions, "phi_tilde needs 2 <= n < m");
    const int ell = m - n - 1;
    Tableau acc = unit_tableau(n, m);
    for (const auto& [v, e] : mono.factors) {
        const auto [i, s] = v;
        if (e < 0) fail(ErrorCode::OutOfRange, "phi_tilde needs a dominant monomial");
        if (i < 1 || i > n - 1)
            fail(ErrorCode::OutOfWindow, "factor node " + std::to_string(i) + " outside [1, n-1]");
        if (((i - s) % 2 + 2) % 2 != 0)
            fail(ErrorCode::ParityError, "Y[i,s] needs s = i (mod 2)");
        const int k = (i - s) / 2 - 1;
        if (k < 0 || k > ell)
            fail(ErrorCode::OutOfWindow,
                 "Y[" + std::to_string(i) + "," + std::to_string(s) + "] outside the window C_" +
                     std::to_string(ell));
        const Tableau col = from_columns(n, m, {fundamental_column(i, s, n)});
        for (long long r = 0; r < e; ++r) acc = unite(acc, col);
    }
    return acc;
}

/// Kirillov–Reshetikhin monomial X_{i,k}^{(s)} = Y_{i,s} Y_{i,s+2} ⋯ Y_{i,s+2k−2}.
inline Monomial kr_monomial(int i, int k, int s) {
    if (k < 1) fail(ErrorCode::OutOfRange, "KR monomial needs k >= 1");
    Monomial m;
    for (int t = 0; t < k; ++t) m.multiply_by({i, s + 2 * t});
    return m;
}

/// Plücker column of the KR class at grid (i, t): [1, n−i] ∪ [n−i+t+2, n+t+1].
inline Column kr_plucker(int i, int t, int n) {
    if (i < 1 || i > n || t < 0) fail(ErrorCode::OutOfRange, "kr_plucker needs i in [1,n], t >= 0");
    Column c;
    c.reserve(n);
    for (int x = 1; x <= n - i; ++x) c.push_back(x);
    for (int x = n - i + t + 2; x <= n + t + 1; ++x) c.push_back(x);
    return c;
}

/// Dictionary Y_{i,s} ↦ [(s−i+2)/2, (s+i)/2], extended multiplicatively.
inline Multisegment monomial_to_multisegment(const Monomial& mono) {
    Multisegment ms;
    for (const auto& [v, e] : mono.factors) {
        const auto [i, s] = v;
        if (e < 0) fail(ErrorCode::OutOfRange, "multisegment dictionary needs a dominant monomial");
        if (((s - i) % 2 + 2) % 2 != 0)
            fail(ErrorCode::ParityError, "Y[i,s] needs s = i (mod 2)");
        const Segment seg{(s - i + 2) / 2, (s + i) / 2};
        for (long long r = 0; r < e; ++r) ms.push_back(seg);
    }
    return canonical_multisegment(ms);
}

/// Inverse dictionary [b, e] ↦ Y_{e−b+1, b+e−1}.
inline Monomial multisegment_to_monomial(const Multisegment& ms) {
    Monomial m;
    for (const auto& seg : ms) {
        if (seg.b > seg.e) fail(ErrorCode::OutOfRange, "degenerate segment in multisegment");
        m.multiply_by({seg.e - seg.b + 1, seg.b + seg.e - 1});
    }
    return m;
}

/**
 * @brief The profile (μ, λ, w) of a multisegment.
 *
 * λ lists right endpoints, μ left endpoints, each weakly decreasing; w is the
 * longest element of the double coset S_λ w S_μ of permutations realizing the
 * multisegment as {[μ_{w⁻¹(a)}, λ_a]}.
 */
struct SegmentProfile {
    int k = 0;
    std::vector<int> mu;     ///< left endpoints, weakly decreasing
    std::vector<int> lambda; ///< right endpoints, weakly decreasing
    std::vector<int> w;      ///< one-line notation, 1-based values
};

/**
 * @brief Computes the segment profile with the maximal-length coset element.
 *
 * w is built directly: scanning μ-blocks from the smallest positions, each
 * block claims the highest still-free positions of the λ-blocks it pairs
 * with, and positions are matched in reversed order inside a block.  Tests
 * verify maximality exhaustively for small k.
 */
inline SegmentProfile segment_profile(const Multisegment& ms) {
    if (ms.empty()) fail(ErrorCode::OutOfRange, "segment profile needs a nonempty multisegment");
    const int k = static_cast<int>(ms.size());
    SegmentProfile out;
    out.k = k;
    for (const auto& s : ms) {
        if (s.b > s.e) fail(ErrorCode::OutOfRange, "degenerate segment in multisegment");
        out.mu.push_back(s.b);
        out.lambda.push_back(s.e);
    }
    std::sort(out.mu.rbegin(), out.mu.rend());
    std::sort(out.lambda.rbegin(), out.lambda.rend());

    // Blocks of equal values, by ascending position (descending value).
    auto blocks = [](const std::vector<int>& v) {
        std::vector<std::pair<int, int>> b; // [lo, hi] position ranges, 0-based
        for (int i = 0; i < static_cast<int>(v.size());) {
            int j = i;
            while (j < static_cast<int>(v.size()) && v[j] == v[i]) ++j;
            b.emplace_back(i, j - 1);
            i = j;
        }
        return b;
    };
    const auto lblocks = blocks(out.lambda);
    const auto mblocks = blocks(out.mu);

    // Pair counts: segments with right endpoint λ(P) and left endpoint μ(Q).
    std::vector<std::vector<int>> count(lblocks.size(), std::vector<int>(mblocks.size(), 0));
    for (const auto& s : ms) {
        size_t p = 0, q = 0;
        while (out.lambda[lblocks[p].first] != s.e) ++p;
        while (out.mu[mblocks[q].first] != s.b) ++q;
        ++count[p][q];
    }

    // Each λ-block hands out its positions from the top; earlier μ-blocks
    // (higher μ-value, lower positions) take the higher λ-positions.
    std::vector<int> next_free(lblocks.size());
    for (size_t p = 0; p < lblocks.size(); ++p) next_free[p] = lblocks[p].second;
    out.w.assign(k, 0);
    for (size_t q = 0; q < mblocks.size(); ++q) {
        std::vector<int> targets;
        for (size_t p = 0; p < lblocks.size(); ++p)
            for (int c = 0; c < count[p][q]; ++c) targets.push_back(next_free[p]--);
        std::sort(targets.rbegin(), targets.rend());
        for (int pos = mblocks[q].first; pos <= mblocks[q].second; ++pos)
            out.w[pos] = targets[pos - mblocks[q].first] + 1;
    }

    // The constructed w must realize the input multisegment.
    Multisegment realized;
    std::vector<int> winv(k);
    for (int q = 0; q < k; ++q) winv[out.w[q] - 1] = q;
    for (int a = 0; a < k; ++a) realized.push_back({out.mu[winv[a]], out.lambda[a]});
    require_internal(canonical_multisegment(realized) == canonical_multisegment(ms),
                     "segment profile must realize its multisegment");
    return out;
}

/**
 * @brief Nakajima order: true iff M′ M⁻¹ is a product of A_{i,s} with
 *        nonnegative exponents.
 *
 * Solved top-down: the top remaining Y-layer forces the A-exponents one
 * spectral layer below; any forced negative exponent or out-of-range layer
 * means incomparability.
 */
inline bool monomial_leq(const Monomial& m, const Monomial& mprime, int n) {
    std::map<YVar, long long> diff;
    auto add = [&](const YVar& v, long long e) {
        if (v.first < 1 || v.first > n - 1)
            fail(ErrorCode::OutOfRange, "monomial node outside [1, n-1]");
        auto it = diff.find(v);
        if (it == diff.end()) {
            if (e != 0) diff.emplace(v, e);
        } else {
            it->second += e;
            if (it->second == 0) diff.erase(it);
        }
    };
    for (const auto& [v, e] : mprime.factors) add(v, e);
    for (const auto& [v, e] : m.factors) add(v, -e);
    if (diff.empty()) return true;

    int s_lo = diff.begin()->second ? diff.begin()->first.second : 0;
    for (const auto& [v, e] : diff) s_lo = std::min(s_lo, v.second);

    while (!diff.empty()) {
        int t = diff.begin()->first.second;
        for (const auto& [v, e] : diff) t = std::max(t, v.second);
        // Only A_{i, t-1} can still produce layer t; its index must respect
        // the support bound [s_lo+1, ·] of any valid solution.
        if (t - 1 < s_lo + 1) return false;
        for (int i = 1; i <= n - 1; ++i) {
            const auto it = diff.find({i, t});
            if (it == diff.end()) continue;
            const long long c = it->second;
            if (c < 0) return false;
            add({i, t}, -c);
            add({i, t - 2}, -c);
            if (i - 1 >= 1) add({i - 1, t - 1}, c);
            if (i + 1 <= n - 1) add({i + 1, t - 1}, c);
        }
    }
    return true;
}

/**
 * @brief Zelevinsky involution via the Mœglin–Waldspurger chain algorithm.
 *
 * Repeatedly: start from a segment with maximal right endpoint (ties: maximal
 * left endpoint); extend the chain while some segment has right endpoint one
 * less and left endpoint strictly smaller, choosing the largest such left
 * endpoint; emit [e−r+1, e] for a chain of length r; shrink every chain
 * segment by one on the right; recurse.
 */
inline Multisegment zelevinsky_dual(const Multisegment& input) {
    // Sort by right endpoint descending, then left endpoint descending, so
    // the chain start and every tie-break is the first qualifying element.
    auto work = input;
    Multisegment dual;
    while (!work.empty()) {
        std::sort(work.begin(), work.end(), [](const Segment& x, const Segment& y) {
            return std::pair(x.e, x.b) > std::pair(y.e, y.b);
        });
        std::vector<size_t> chain{0};
        int cur_b = work[0].b, cur_e = work[0].e;
        for (bool extended = true; extended;) {
            extended = false;
            size_t best = work.size();
            for (size_t idx = 0; idx < work.size(); ++idx) {
                if (work[idx].e != cur_e - 1 || work[idx].b >= cur_b) continue;
                if (best == work.size() || work[idx].b > work[best].b) best = idx;
            }
            if (best != work.size()) {
                chain.push_back(best);
                cur_b = work[best].b;
                --cur_e;
                extended = true;
            }
        }
        const int r = static_cast<int>(chain.size());
        dual.push_back({work[0].e - r + 1, work[0].e});
        Multisegment next;
        std::vector<char> in_chain(work.size(), 0);
        for (size_t idx : chain) in_chain[idx] = 1;
        for (size_t idx = 0; idx < work.size(); ++idx) {
            Segment s = work[idx];
            if (in_chain[idx]) --s.e;     // Δ ↦ Δ⁻
            if (s.b <= s.e) next.push_back(s);
        }
        work = std::move(next);
    }
    return canonical_multisegment(dual);
}

/// Outcome of the Lapid–Mínguez test.
enum class LMStatus { Real, NonReal4231, NonReal3412, NotApplicable };

struct LMResult {
    LMStatus status = LMStatus::Real;
    Multisegment witness; ///< matching sub-multisegment when nonreal
};

namespace detail {

/// Δ₁ precedes Δ₂: b₁ < b₂ ≤ e₁+1 ≤ e₂.
inline bool segment_precedes(const Segment& d1, const Segment& d2) {
    return d1.b < d2.b && d2.b <= d1.e + 1 && d1.e + 1 <= d2.e;
}

/// Type 4231 for Δ₁..Δ_K sorted with strictly decreasing right endpoints.
inline bool lm_type_4231(const std::vector<Segment>& d) {
    const int K = static_cast<int>(d.size());
    for (int i = 3; i <= K - 1; ++i)
        if (!segment_precedes(d[i], d[i - 1])) return false; // Δ_{i+1} ≺ Δ_i
    if (!segment_precedes(d[2], d[0])) return false;         // Δ₃ ≺ Δ₁
    return d[K - 1].b < d[1].b && d[1].b < d[K - 2].b;
}

/// Type 3412 for Δ₁..Δ_K sorted with strictly decreasing right endpoints.
inline bool lm_type_3412(const std::vector<Segment>& d) {
    const int K = static_cast<int>(d.size());
    for (int i = 4; i <= K - 1; ++i)
        if (!segment_precedes(d[i], d[i - 1])) return false; // Δ_{i+1} ≺ Δ_i
    if (!segment_precedes(d[3], d[1])) return false;         // Δ₄ ≺ Δ₂
    const int l = K == 4 ? 2 : K - 1;
    return d[2].b < d[K - 1].b && d[K - 1].b < d[0].b && d[0].b < d[l - 1].b;
}

} // namespace detail

/**
 * @brief Lapid–Mínguez reality test on a regular multisegment.
 *
 * NotApplicable for nonregular input (repeated left or right endpoints);
 * otherwise scans every sub-multisegment of size ≥ 4 for types 4231 and
 * 3412 and reports the first witness found.
 */
inline LMResult lm_reality(const Multisegment& input) {
    const int k = static_cast<int>(input.size());
    {
        std::vector<int> bs, es;
        for (const auto& s : input) {
            if (s.b > s.e) fail(ErrorCode::OutOfRange, "degenerate segment in multisegment");
            bs.push_back(s.b);
            es.push_back(s.e);
        }
        std::sort(bs.begin(), bs.end());
        std::sort(es.begin(), es.end());
        if (std::adjacent_find(bs.begin(), bs.end()) != bs.end() ||
            std::adjacent_find(es.begin(), es.end()) != es.end())
            return {LMStatus::NotApplicable, {}};
    }
    if (k > 24)
        fail(ErrorCode::KTooLarge, "pattern scan over 2^k sub-multisegments refused for k > 24");

    auto sorted = input;
    std::sort(sorted.begin(), sorted.end(),
              [](const Segment& x, const Segment& y) { return x.e > y.e; });
    for (std::uint64_t mask = 0; k >= 4 && mask < (1ull << k); ++mask) {
        if (__builtin_popcountll(mask) < 4) continue;
        std::vector<Segment> sub;
        for (int t = 0; t < k; ++t)
            if (mask >> t & 1) sub.push_back(sorted[t]);
        if (detail::lm_type_4231(sub)) return {LMStatus::NonReal4231, canonical_multisegment(sub)};
        if (detail::lm_type_3412(sub)) return {LMStatus::NonReal3412, canonical_multisegment(sub)};
    }
    return {LMStatus::Real, {}};
}

} // namespace grtab

#endif // GRTAB_MONOMIALS_HPP
