#ifndef GRTAB_CHARACTERS_HPP
#define GRTAB_CHARACTERS_HPP

/**
 * @file characters.hpp
 * @brief Character formulas: symbolic q-characters of the simple modules
 *        attached to dominant monomials, Plücker characters of tableaux,
 *        reality and primeness tests, and Kazhdan–Lusztig immanants.
 *
 * The central formula expands the character of the module labelled by a
 * small-gaps tableau T′ as an alternating sum over the symmetric group S_k
 * (k = number of columns of T′):
 *
 *     ch(T′) = Σ_u (−1)^{ℓ(u·w)} P_{u·w₀, w·w₀}(1) · P_{u;T′}
 *
 * where w is the longest permutation realizing the segment data of T′,
 * P_{x,y} are Kazhdan–Lusztig polynomials evaluated at 1, and P_{u;T′} is a
 * standard monomial in Plücker coordinates (or zero) built from permuted
 * column data.  The same sum with χ(Y[i,s]) factors in place of Plücker
 * monomials yields the symbolic truncated q-character of the corresponding
 * dominant monomial.  Characters of arbitrary tableaux are Laurent-adjusted
 * by the trivial (solid-column) correction of the small-gaps form.
 *
 * All sweeps over S_k are parallel maps followed by an associative exact
 * merge; results are independent of the thread count and schedule.
 */

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "monomials.hpp"
#include "plucker.hpp"
#include "symmetric.hpp"
#include "tableaux.hpp"

namespace grtab {

/// Default cap on the symmetric-group degree k swept by character formulas.
inline constexpr int kDefaultCharacterCap = 9;

/// Largest configurable cap (the sweep over S_k grows as k!).
inline constexpr int kHardCharacterCap = 10;

namespace detail {

/// One KL table per symmetric-group degree, shared by every sweep.
inline KLTable& shared_kl_table(int k) {
    static std::mutex guard;
    static std::map<int, std::unique_ptr<KLTable>> tables;
    std::scoped_lock lock(guard);
    auto& slot = tables[k];
    if (!slot) slot = std::make_unique<KLTable>(k);
    return *slot;
}

/// Validates the configured cap and rejects degrees beyond it.
inline void check_character_cap(long long k, int max_k) {
    if (max_k < 1 || max_k > kHardCharacterCap)
        fail(ErrorCode::OutOfRange, "character cap " + std::to_string(max_k) +
                                        " outside [1," + std::to_string(kHardCharacterCap) + "]");
    if (k > max_k)
        fail(ErrorCode::KTooLarge,
             "degree " + std::to_string(k) + " exceeds the character cap " +
                 std::to_string(max_k) +
                 "; for reality questions the Zelevinsky dual of the multisegment may have "
                 "smaller degree (see zelevinsky_dual)");
}

/// Runs fn(u, rank) over all of S_k, splitting ranks across threads.  Each
/// worker owns an accumulator of type Acc; merge(acc) is called once per
/// worker, in worker order, on the caller's thread.
template <typename Acc, typename Fn, typename Merge>
inline void sweep_symmetric(int k, int threads, Fn fn, Merge merge) {
    if (threads < 1) threads = 1;
    std::vector<Acc> parts(static_cast<size_t>(threads));
    auto worker = [&](int tid) {
        Permutation u = identity_permutation(k);
        long long rank = 0;
        do {
            if (rank % threads == tid) fn(parts[static_cast<size_t>(tid)], u);
            ++rank;
        } while (std::next_permutation(u.begin(), u.end()));
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    for (auto& acc : parts) merge(acc);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Index data shared by the character formulas
// ---------------------------------------------------------------------------

/**
 * @brief Sorted segment data of a multisegment, in column coordinates.
 *
 * For the a-th segment (after sorting both endpoint lists weakly
 * decreasingly) the attached fundamental column is [i_a, i_a+n] ∖ {j_a} with
 * i_a = 1 − μ_a and j_a = n − λ_a; both sequences are weakly increasing.
 * wT is the longest permutation pairing starts to ends so that the segments
 * [μ_{wT(a)}, λ_a] reproduce the multisegment.
 */
struct CharacterIndex {
    int k = 0;
    std::vector<int> iseq;  ///< weakly increasing column starts i_a
    std::vector<int> jseq;  ///< weakly increasing deleted values j_a
    Permutation wT;         ///< longest realizing permutation (direct pairing)
};

/// Index data of @p ms relative to rank n; fails on an empty multisegment.
inline CharacterIndex character_index(const Multisegment& ms, int n) {
    const SegmentProfile prof = segment_profile(ms);
    CharacterIndex out;
    out.k = prof.k;
    out.iseq.resize(static_cast<size_t>(prof.k));
    out.jseq.resize(static_cast<size_t>(prof.k));
    for (int a = 0; a < prof.k; ++a) {
        out.iseq[static_cast<size_t>(a)] = 1 - prof.mu[static_cast<size_t>(a)];
        out.jseq[static_cast<size_t>(a)] = n - prof.lambda[static_cast<size_t>(a)];
    }
    // segment_profile pairs the sorted lists through the inverse of prof.w;
    // the character formulas index starts directly by u(a), so invert here.
    out.wT = inverse(make_permutation(prof.w));
    return out;
}

/// Index data of a small-gaps tableau (every column fundamental).
inline CharacterIndex character_index(const Tableau& tprime) {
    for (int j = 0; j < tprime.column_count(); ++j)
        if (column_gap_weight(tprime.column(j)) != 1)
            fail(ErrorCode::NotFundamental,
                 "character index needs a small-gaps tableau; column " +
                     detail::entry_list(tprime.column(j)) +
                     " is not fundamental");
    return character_index(monomial_to_multisegment(psi(tprime)), tprime.n);
}

// ---------------------------------------------------------------------------
// Symbolic q-characters
// ---------------------------------------------------------------------------

/**
 * @brief A symbolic truncated q-character: an integer combination of products
 *        of fundamental classes χ(Y[i,s]).
 *
 * Each key is a sorted multiset of (i, s) pairs; the empty multiset is the
 * unit.  Fundamental factors are never expanded, so equality of formulas is
 * equality of the coefficient maps (degenerate factors are normalized away
 * when the formula is built).
 */
struct QCharFormula {
    std::map<std::vector<YVar>, long long> terms;

    [[nodiscard]] bool is_zero() const { return terms.empty(); }

    friend bool operator==(const QCharFormula& a, const QCharFormula& b) {
        return a.terms == b.terms;
    }
    friend bool operator!=(const QCharFormula& a, const QCharFormula& b) { return !(a == b); }
};

/**
 * @brief Truncated q-character of the simple module labelled by the dominant
 *        monomial @p mono, specialized at rank @p n.
 *
 * Expands over u ∈ S_k: the u-th term carries the sign (−1)^{ℓ(u·w)} and the
 * KL value P_{u·w₀, w·w₀}(1), and multiplies the classes of the simple
 * modules of the permuted segments [μ_{u(a)}, λ_a].  A permuted segment of
 * length 0 contributes the unit and a segment of negative length kills the
 * term.  Rank-degenerate factors are normalized: i = n collapses to the
 * unit, i > n to zero.  Passing a rank larger than every occurring i yields
 * the generic (rank-stable) formula.
 *
 * @throws Error InvalidInput if @p mono is not dominant, KTooLarge if its
 *         degree exceeds @p max_k.
 */
inline QCharFormula qchar_formula(const Monomial& mono, int n, int max_k = kDefaultCharacterCap,
                                  int threads = 1) {
    if (n < 2) fail(ErrorCode::OutOfRange, "q-character needs rank n >= 2");
    if (!mono.is_dominant()) fail(ErrorCode::InvalidInput, "q-character needs a dominant monomial");
    long long k = 0;
    for (const auto& [v, e] : mono.factors) k += e;
    QCharFormula out;
    if (k == 0) {
        out.terms[{}] = 1;
        return out;
    }
    detail::check_character_cap(k, max_k);
    const int kk = static_cast<int>(k);
    const Multisegment ms = monomial_to_multisegment(mono);
    const SegmentProfile prof = segment_profile(ms);
    const Permutation wM = inverse(make_permutation(prof.w));
    const Permutation w0 = longest_element(kk);
    const Permutation y = compose(wM, w0);
    KLTable& table = detail::shared_kl_table(kk);

    auto body = [&](std::map<std::vector<YVar>, long long>& acc, const Permutation& u) {
        // Segment validity is far cheaper than Bruhat/KL: test it first.
        std::vector<YVar> key;
        key.reserve(static_cast<size_t>(kk));
        for (int a = 0; a < kk; ++a) {
            const int b = prof.mu[static_cast<size_t>(u[static_cast<size_t>(a)] - 1)];
            const int e = prof.lambda[static_cast<size_t>(a)];
            if (b == e + 1) continue;  // empty segment: unit factor
            if (b > e + 1) return;     // negative length: the term vanishes
            const int len = e - b + 1;
            if (len > n) return;       // beyond the rank: zero
            if (len == n) continue;    // top exterior power: unit
            key.push_back({len, b + e - 1});
        }
        const Permutation x = compose(u, w0);
        if (!bruhat_leq(x, y)) return;
        const long long kl = table.kl_at_one(x, y);
        if (kl == 0) return;
        std::sort(key.begin(), key.end());
        const long long sgn = (coxeter_length(compose(u, wM)) & 1) ? -1 : 1;
        acc[key] += sgn * kl;
    };
    auto merge = [&](std::map<std::vector<YVar>, long long>& acc) {
        for (const auto& [key, c] : acc) out.terms[key] += c;
    };
    detail::sweep_symmetric<std::map<std::vector<YVar>, long long>>(kk, threads, body, merge);
    for (auto it = out.terms.begin(); it != out.terms.end();)
        it = it->second == 0 ? out.terms.erase(it) : std::next(it);
    return out;
}

// ---------------------------------------------------------------------------
// Plücker characters
// ---------------------------------------------------------------------------

namespace detail {

/// Columns of the permuted standard monomial, or nullopt when it vanishes.
inline std::optional<std::vector<Column>> permuted_columns(const CharacterIndex& idx,
                                                           const Permutation& u, int n) {
    std::vector<Column> cols;
    cols.reserve(static_cast<size_t>(idx.k));
    for (int a = 0; a < idx.k; ++a) {
        const int ii = idx.iseq[static_cast<size_t>(u[static_cast<size_t>(a)] - 1)];
        const int jj = idx.jseq[static_cast<size_t>(a)];
        if (jj < ii || jj > ii + n) return std::nullopt;
        Column c;
        c.reserve(static_cast<size_t>(n));
        for (int v = ii; v <= ii + n; ++v)
            if (v != jj) c.push_back(v);
        cols.push_back(std::move(c));
    }
    return cols;
}

}  // namespace detail

/**
 * @brief The standard monomial P_{u;T′}, or nullopt when it vanishes.
 *
 * Replaces the start of the a-th column of the small-gaps tableau @p tprime
 * by the u(a)-th start: the a-th column becomes [i_{u(a)}, i_{u(a)}+n] with
 * j_a deleted, provided j_a lies in that window for every a.  The columns
 * have gaps of size at most one, so their lex-sorted product is standard.
 */
inline std::optional<Tableau> p_u_T(const Permutation& u, const Tableau& tprime) {
    const CharacterIndex idx = character_index(tprime);
    if (static_cast<int>(u.size()) != idx.k)
        fail(ErrorCode::DimensionMismatch, "permutation degree " + std::to_string(u.size()) +
                                               " does not match column count " +
                                               std::to_string(idx.k));
    const auto cols = detail::permuted_columns(idx, u, tprime.n);
    if (!cols) return std::nullopt;
    return from_columns(tprime.n, tprime.m, *cols);
}

/**
 * @brief Character of the module labelled by a small-gaps tableau, as a
 *        polynomial in Plücker coordinates.
 *
 * The result is the alternating KL-weighted sum of the standard monomials
 * P_{u;T′} over u ∈ S_k; it is homogeneous of the same multidegree as T′ and
 * P_{T′} is its unique dominance-maximal term, with coefficient 1.
 */
inline PluckerPolynomial ch_small_gaps(const Tableau& tprime, int max_k = kDefaultCharacterCap,
                                       int threads = 1) {
    const int k = tprime.column_count();
    if (k == 0) return plucker_one(tprime.n, tprime.m);
    detail::check_character_cap(k, max_k);
    const CharacterIndex idx = character_index(tprime);
    const Permutation w0 = longest_element(k);
    const Permutation y = compose(idx.wT, w0);
    KLTable& table = detail::shared_kl_table(k);
    const int n = tprime.n;

    PluckerPolynomial out = plucker_zero(tprime.n, tprime.m);
    auto body = [&](std::map<Tableau, Int>& acc, const Permutation& u) {
        // Window validity is far cheaper than Bruhat/KL: test it first.
        const auto cols = detail::permuted_columns(idx, u, n);
        if (!cols) return;
        const Permutation x = compose(u, w0);
        if (!bruhat_leq(x, y)) return;
        const long long kl = table.kl_at_one(x, y);
        if (kl == 0) return;
        const long long sgn = (coxeter_length(compose(u, idx.wT)) & 1) ? -1 : 1;
        acc[from_columns(tprime.n, tprime.m, *cols)] += Int(sgn * kl);
    };
    auto merge = [&](std::map<Tableau, Int>& acc) {
        for (const auto& [t, c] : acc) {
            auto it = out.terms.find(t);
            if (it == out.terms.end())
                out.terms.emplace(t, c);
            else if ((it->second += c) == 0)
                out.terms.erase(it);
        }
    };
    detail::sweep_symmetric<std::map<Tableau, Int>>(k, threads, body, merge);
    for (auto it = out.terms.begin(); it != out.terms.end();)
        it = it->second == 0 ? out.terms.erase(it) : std::next(it);
    return out;
}

/**
 * @brief Character of an arbitrary tableau, split as frozen^exps · poly.
 *
 * poly is the (frozen-free) character of the small-gaps representative and
 * exps is the Laurent exponent vector of the trivial correction, so that
 * ch(T) = frozen^exps · poly.  This form avoids clearing denominators and is
 * the workhorse behind ch, reality_test and primeness_test.
 */
struct ChParts {
    std::vector<long long> exps;  ///< solid-column Laurent exponents
    PluckerPolynomial poly;       ///< character of the small-gaps representative
};

inline ChParts ch_parts(const Tableau& t, int max_k = kDefaultCharacterCap, int threads = 1) {
    const SmallGapsForm sg = small_gaps_form(t);
    ChParts out;
    out.poly = ch_small_gaps(sg.prime, max_k, threads);
    const auto pos = solid_exponents(sg.correction.num);
    const auto neg = solid_exponents(sg.correction.den);
    out.exps.resize(pos.size());
    for (size_t i = 0; i < pos.size(); ++i) out.exps[i] = pos[i] - neg[i];
    return out;
}

/**
 * @brief Character of an arbitrary tableau.
 *
 * The raw value is frozen^exps · ch_small_gaps(T′) with exps the Laurent
 * exponents of the trivial correction.  When exps has negative entries the
 * function attempts to divide the polynomial part exactly by the offending
 * solid coordinates; on success the result is a genuine polynomial (frozen
 * exponents all ≥ 0) and in_ring is true.  Otherwise the Laurent form is
 * returned with in_ring = false.
 */
struct ChResult {
    PluckerPolynomial value;
    bool in_ring = false;
};

inline ChResult ch(const Tableau& t, int max_k = kDefaultCharacterCap, int threads = 1) {
    ChParts parts = ch_parts(t, max_k, threads);
    std::vector<long long> up(parts.exps.size(), 0), down(parts.exps.size(), 0);
    bool has_down = false;
    for (size_t i = 0; i < parts.exps.size(); ++i) {
        if (parts.exps[i] >= 0) {
            up[i] = parts.exps[i];
        } else {
            down[i] = -parts.exps[i];
            has_down = true;
        }
    }
    ChResult out;
    if (!has_down) {
        out.value = std::move(parts.poly);
        out.value.frozen = std::move(up);
        out.in_ring = true;
        return out;
    }
    if (auto q = divide_by_frozen(parts.poly, down)) {
        out.value = std::move(*q);
        for (size_t i = 0; i < up.size(); ++i) out.value.frozen[i] += up[i];
        out.in_ring = true;
        return out;
    }
    out.value = std::move(parts.poly);
    out.value.frozen = std::move(parts.exps);
    out.in_ring = false;
    return out;
}

// ---------------------------------------------------------------------------
// Reality and primeness
// ---------------------------------------------------------------------------

namespace detail {

/// p · (product of solid coordinates with the given nonnegative exponents).
inline PluckerPolynomial multiply_solid(const PluckerPolynomial& p,
                                        const std::vector<long long>& extra) {
    if (std::all_of(extra.begin(), extra.end(), [](long long e) { return e == 0; })) return p;
    const Tableau t = trivial_from_exponents(extra, p.n, p.m);
    return multiply(p, plucker_from_tableau(t));
}

}  // namespace detail

/**
 * @brief Tests whether the module of @p t is real: ch(T)² = ch(T ∪ T).
 *
 * Both sides are brought over the common trivial denominator (componentwise
 * minimum of the Laurent exponent vectors) and subtracted exactly; defect is
 * the difference, with its frozen exponents recording the common factor.
 * The class is real exactly when the defect vanishes.  The right-hand side
 * is computed directly from the small-gaps form of T ∪ T, never by squaring.
 *
 * @throws Error KTooLarge when the gap weight of T ∪ T exceeds @p max_k.
 */
struct RealityResult {
    bool real = false;
    PluckerPolynomial defect;  ///< ch(T)² − ch(T ∪ T) over a common denominator
};

inline RealityResult reality_test(const Tableau& t, int max_k = kDefaultCharacterCap,
                                  int threads = 1) {
    const Tableau tt = unite(t, t);
    detail::check_character_cap(gap_weight(tt), max_k);
    const ChParts a = ch_parts(t, max_k, threads);
    const ChParts b = ch_parts(tt, max_k, threads);
    const PluckerPolynomial sq = multiply(a.poly, a.poly);
    std::vector<long long> lexp(a.exps.size());
    for (size_t i = 0; i < a.exps.size(); ++i) lexp[i] = 2 * a.exps[i];
    std::vector<long long> common(lexp.size()), lup(lexp.size()), rup(lexp.size());
    for (size_t i = 0; i < lexp.size(); ++i) {
        common[i] = std::min(lexp[i], b.exps[i]);
        lup[i] = lexp[i] - common[i];
        rup[i] = b.exps[i] - common[i];
    }
    PluckerPolynomial defect =
        detail::multiply_solid(sq, lup) - detail::multiply_solid(b.poly, rup);
    RealityResult out;
    out.real = defect.is_zero();
    if (!out.real) defect.frozen = std::move(common);
    out.defect = std::move(defect);
    return out;
}

/**
 * @brief Tests whether the module of @p t is prime: no factorization
 *        ch(T) = ch(T′) · ch(T″) with both factors nontrivial.
 *
 * Any such factorization splits the fundamental columns of the small-gaps
 * form, so the test sweeps every bipartition of those k columns (2^(k−1)−1
 * proper splits) and compares the product of the two characters with ch(T)
 * in the quotient ring.  A cheap exact-evaluation probe at normalized random
 * points filters the bipartitions before the full comparison.  On a hit the
 * witness pair of small-gaps factors is returned.
 */
struct PrimenessResult {
    bool prime = false;
    std::optional<std::pair<Tableau, Tableau>> witness;  ///< factors with ch(T) = ch(A)·ch(B)
};

inline PrimenessResult primeness_test(const Tableau& t, int max_k = kDefaultCharacterCap,
                                      int threads = 1) {
    const SmallGapsForm sg = small_gaps_form(t);
    const int k = sg.prime.column_count();
    detail::check_character_cap(k, max_k);
    PrimenessResult out;
    if (k <= 1) {
        out.prime = true;
        return out;
    }
    const PluckerPolynomial whole = ch_small_gaps(sg.prime, max_k, threads);
    const auto cols = sg.prime.columns();
    const int n = sg.prime.n;
    const int m = sg.prime.m;

    // Deterministic normalized probe points for the evaluation prefilter.
    std::vector<RationalMatrix> probes;
    {
        std::mt19937 rng(20260823u + static_cast<unsigned>(97 * n + m));
        while (probes.size() < 2) {
            std::vector<std::vector<Rat>> rows(static_cast<size_t>(n),
                                               std::vector<Rat>(static_cast<size_t>(m)));
            for (auto& row : rows)
                for (auto& x : row)
                    x = Rat(static_cast<int>(rng() % 19) - 9, 1 + static_cast<int>(rng() % 3));
            try {
                probes.push_back(normalize_solid_minors(make_rational_matrix(n, m, rows)));
            } catch (const Error&) {
                continue;  // singular draw: try again
            }
        }
    }
    std::vector<Rat> whole_at;
    whole_at.reserve(probes.size());
    for (const auto& x : probes) whole_at.push_back(evaluate(whole, x));

    for (unsigned mask = 1; mask < (1u << (k - 1)); ++mask) {
        std::vector<Column> ca, cb;
        cb.push_back(cols[0]);
        for (int j = 1; j < k; ++j)
            ((mask >> (j - 1)) & 1u ? ca : cb).push_back(cols[static_cast<size_t>(j)]);
        const Tableau ta = from_columns(n, m, ca);
        const Tableau tb = from_columns(n, m, cb);
        const PluckerPolynomial pa = ch_small_gaps(ta, max_k, threads);
        const PluckerPolynomial pb = ch_small_gaps(tb, max_k, threads);
        bool plausible = true;
        for (size_t i = 0; i < probes.size() && plausible; ++i)
            plausible = evaluate(pa, probes[i]) * evaluate(pb, probes[i]) == whole_at[i];
        if (!plausible) continue;
        if (quotient_equal(multiply(pa, pb), whole)) {
            out.prime = false;
            out.witness = std::make_pair(ta, tb);
            return out;
        }
    }
    out.prime = true;
    return out;
}

// ---------------------------------------------------------------------------
// Kazhdan–Lusztig immanants
// ---------------------------------------------------------------------------

/**
 * @brief The KL immanant Imm_v(A) = Σ_{u ≥ v} (−1)^{ℓ(u)−ℓ(v)}
 *        P_{w₀u, w₀v}(1) · Π_i A_{i,u(i)} of a square matrix.
 *
 * Imm_{w₀} is the single monomial Π A_{i,w₀(i)}; for k = 2 and v = id the
 * immanant is the determinant.
 */
inline Rat kl_immanant(const Permutation& v, const std::vector<std::vector<Rat>>& a,
                       int threads = 1) {
    const int k = static_cast<int>(v.size());
    if (k < 1) fail(ErrorCode::OutOfRange, "immanant needs a permutation of degree >= 1");
    if (static_cast<int>(a.size()) != k)
        fail(ErrorCode::DimensionMismatch, "matrix size " + std::to_string(a.size()) +
                                               " does not match permutation degree " +
                                               std::to_string(k));
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != k)
            fail(ErrorCode::DimensionMismatch, "immanant needs a square matrix");
    KLTable& table = detail::shared_kl_table(k);
    const Permutation w0 = longest_element(k);
    const Permutation w0v = compose(w0, v);
    const long long lv = coxeter_length(v);
    Rat total(0);
    auto body = [&](Rat& acc, const Permutation& u) {
        // The matrix monomial is cheaper than Bruhat/KL: test it first.
        Rat prod(1);
        for (int i = 0; i < k; ++i) {
            const Rat& entry =
                a[static_cast<size_t>(i)][static_cast<size_t>(u[static_cast<size_t>(i)] - 1)];
            if (entry == 0) return;
            prod *= entry;
        }
        if (!bruhat_leq(v, u)) return;
        const long long kl = table.kl_at_one(compose(w0, u), w0v);
        if (kl == 0) return;
        prod *= Rat(kl);
        if ((coxeter_length(u) - lv) & 1) prod = -prod;
        acc += prod;
    };
    auto merge = [&](Rat& acc) { total += acc; };
    detail::sweep_symmetric<Rat>(k, threads, body, merge);
    return total;
}

/**
 * @brief Symbolic band matrix of consecutive Plücker coordinates.
 *
 * Entry (r, c), 1-based, is the column {r, …, r+n} ∖ {c} with values reduced
 * into [1, m] cyclically, and is empty (zero) unless r ≤ c ≤ r+n.  The
 * window has length n+1 ≤ m, so the reduced values never collide.
 */
inline std::vector<std::vector<std::optional<Column>>> ms_matrix(int n, int m) {
    if (n < 2 || m < n + 1) fail(ErrorCode::BadDimensions, "ms_matrix needs 2 <= n < m");
    std::vector<std::vector<std::optional<Column>>> out(
        static_cast<size_t>(m), std::vector<std::optional<Column>>(static_cast<size_t>(m)));
    for (int r = 1; r <= m; ++r) {
        for (int c = r; c <= std::min(m, r + n); ++c) {
            Column col;
            col.reserve(static_cast<size_t>(n));
            for (int v = r; v <= r + n; ++v)
                if (v != c) col.push_back((v - 1) % m + 1);
            std::sort(col.begin(), col.end());
            out[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = std::move(col);
        }
    }
    return out;
}

/// ms_matrix evaluated entrywise at @p x (empty entries evaluate to 0).
inline std::vector<std::vector<Rat>> ms_matrix_at(const RationalMatrix& x) {
    const auto sym = ms_matrix(x.n, x.m);
    std::vector<std::vector<Rat>> out(static_cast<size_t>(x.m),
                                      std::vector<Rat>(static_cast<size_t>(x.m), Rat(0)));
    for (int r = 0; r < x.m; ++r)
        for (int c = 0; c < x.m; ++c)
            if (sym[static_cast<size_t>(r)][static_cast<size_t>(c)])
                out[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    minor_at(x, *sym[static_cast<size_t>(r)][static_cast<size_t>(c)]);
    return out;
}

/**
 * @brief Generalized submatrix A^{i,j} with repeats: entry (a, b) is
 *        A_{i_a, j_b}.  Both index sequences must be weakly increasing.
 */
inline std::vector<std::vector<Rat>> generalized_submatrix(const std::vector<std::vector<Rat>>& a,
                                                           const std::vector<int>& i,
                                                           const std::vector<int>& j) {
    if (i.size() != j.size())
        fail(ErrorCode::DimensionMismatch, "row and column index sequences differ in length");
    const int rows = static_cast<int>(a.size());
    auto check = [&](const std::vector<int>& seq, const char* what) {
        for (size_t p = 0; p < seq.size(); ++p) {
            if (seq[p] < 1 || seq[p] > rows)
                fail(ErrorCode::OutOfRange, std::string(what) + " index out of range");
            if (p && seq[p] < seq[p - 1])
                fail(ErrorCode::InvalidInput, std::string(what) + " indices must be weakly increasing");
        }
    };
    check(i, "row");
    check(j, "column");
    std::vector<std::vector<Rat>> out(i.size(), std::vector<Rat>(j.size(), Rat(0)));
    for (size_t p = 0; p < i.size(); ++p) {
        const auto& row = a[static_cast<size_t>(i[p] - 1)];
        if (row.size() != a.size()) fail(ErrorCode::DimensionMismatch, "submatrix host must be square");
        for (size_t q = 0; q < j.size(); ++q) out[p][q] = row[static_cast<size_t>(j[q] - 1)];
    }
    return out;
}

/**
 * @brief Checks ch(T′)(x) = Imm_{wT⁻¹}(MS(x)^{i,j}) for a small-gaps tableau.
 *
 * The left side evaluates ch_small_gaps(T′) at @p x; the right side takes
 * the generalized submatrix of the symbolic band matrix at the index data of
 * T′ and applies the KL immanant at the inverse of the pairing permutation.
 */
struct ImmanantCheck {
    Rat character_value;
    Rat immanant_value;
    bool match = false;
};

inline ImmanantCheck immanant_check(const Tableau& tprime, const RationalMatrix& x,
                                    int max_k = kDefaultCharacterCap, int threads = 1) {
    if (x.n != tprime.n || x.m != tprime.m)
        fail(ErrorCode::DimensionMismatch, "evaluation point lives in a different Gr(n,[m])");
    ImmanantCheck out;
    out.character_value = evaluate(ch_small_gaps(tprime, max_k, threads), x);
    if (tprime.column_count() == 0) {
        out.immanant_value = Rat(1);
        out.match = out.character_value == out.immanant_value;
        return out;
    }
    const CharacterIndex idx = character_index(tprime);
    const auto sub = generalized_submatrix(ms_matrix_at(x), idx.iseq, idx.jseq);
    out.immanant_value = kl_immanant(inverse(idx.wT), sub, threads);
    out.match = out.character_value == out.immanant_value;
    return out;
}

}  // namespace grtab

#endif  // GRTAB_CHARACTERS_HPP
