#ifndef GRTAB_SYMMETRIC_HPP
#define GRTAB_SYMMETRIC_HPP

/**
 * @file symmetric.hpp
 * @brief Permutations, Bruhat order, and Kazhdan–Lusztig polynomials.
 *
 * Permutations are stored in one-line notation with values 1 … k.  KL
 * polynomials are computed by the standard descent recursion with
 * memoization; a KLTable may be shared across threads (lookups and inserts
 * are serialized internally, and results are schedule-independent).
 */

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace grtab {

/// Hard cap on the symmetric-group size accepted by this module.
inline constexpr int kMaxSymmetricK = 12;

/// A permutation of {1, …, k} in one-line notation.
using Permutation = std::vector<int>;

/// Validates one-line notation; throws OutOfRange / KTooLarge on bad input.
inline Permutation make_permutation(std::vector<int> oneline) {
    const int k = static_cast<int>(oneline.size());
    if (k > kMaxSymmetricK)
        fail(ErrorCode::KTooLarge, "symmetric group size " + std::to_string(k) +
                                       " exceeds hard cap " + std::to_string(kMaxSymmetricK));
    std::vector<char> seen(k + 1, 0);
    for (int v : oneline) {
        if (v < 1 || v > k || seen[v])
            fail(ErrorCode::OutOfRange, "not a permutation of 1.." + std::to_string(k));
        seen[v] = 1;
    }
    return oneline;
}

/// The identity permutation in S_k.
inline Permutation identity_permutation(int k) {
    Permutation p(k);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

/// The longest element w₀ (reversal) of S_k.
inline Permutation longest_element(int k) {
    Permutation p(k);
    for (int i = 0; i < k; ++i) p[i] = k - i;
    return p;
}

/// Group inverse.
inline Permutation inverse(const Permutation& p) {
    Permutation q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = static_cast<int>(i) + 1;
    return q;
}

/// Composition (a ∘ b)(x) = a(b(x)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
    require_internal(a.size() == b.size(), "composition of permutations of different sizes");
    Permutation c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i] - 1];
    return c;
}

/// Coxeter length = number of inversions.
inline int coxeter_length(const Permutation& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv;
}

/// Left product s_i · p (swaps the values i and i+1; 1-based i < k).
inline Permutation left_multiply(int i, const Permutation& p) {
    Permutation q = p;
    for (auto& v : q) {
        if (v == i)
            v = i + 1;
        else if (v == i + 1)
            v = i;
    }
    return q;
}

/// Right product p · s_i (swaps positions i and i+1; 1-based i < k).
inline Permutation right_multiply(const Permutation& p, int i) {
    Permutation q = p;
    std::swap(q[i - 1], q[i]);
    return q;
}

/// @return true when s_i is a left descent of p (s_i p < p).
inline bool has_left_descent(const Permutation& p, int i) {
    int pos_i = 0, pos_i1 = 0;
    for (size_t t = 0; t < p.size(); ++t) {
        if (p[t] == i) pos_i = static_cast<int>(t);
        if (p[t] == i + 1) pos_i1 = static_cast<int>(t);
    }
    return pos_i > pos_i1;
}

/// @return true when s_i is a right descent of p (p s_i < p).
inline bool has_right_descent(const Permutation& p, int i) { return p[i - 1] > p[i]; }

/**
 * @brief Bruhat order u ≤ v via the sorted-prefix (Ehresmann) criterion.
 *
 * For every prefix length t, the sorted first t values of u must be
 * entrywise ≤ the sorted first t values of v.
 */
inline bool bruhat_leq(const Permutation& u, const Permutation& v) {
    require_internal(u.size() == v.size(), "Bruhat compares permutations of one S_k");
    const int k = static_cast<int>(u.size());
    std::vector<int> su, sv;
    su.reserve(k);
    sv.reserve(k);
    for (int t = 0; t < k; ++t) {
        su.insert(std::upper_bound(su.begin(), su.end(), u[t]), u[t]);
        sv.insert(std::upper_bound(sv.begin(), sv.end(), v[t]), v[t]);
        for (int j = 0; j <= t; ++j)
            if (su[j] > sv[j]) return false;
    }
    return true;
}

/**
 * @brief Polynomial in one variable with integer coefficients,
 *        constant term first.  The zero polynomial has no coefficients.
 */
struct KLPolynomial {
    std::vector<long long> coeffs;

    [[nodiscard]] bool is_zero() const { return coeffs.empty(); }
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    /// Coefficient of q^d (zero outside the stored range).
    [[nodiscard]] long long coeff(int d) const {
        return d >= 0 && d < static_cast<int>(coeffs.size()) ? coeffs[d] : 0;
    }

    /// Evaluation at q = 1.
    [[nodiscard]] long long at_one() const {
        long long s = 0;
        for (long long c : coeffs) s += c;
        return s;
    }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    void add_shifted(const KLPolynomial& other, int shift, long long scale = 1) {
        if (other.is_zero() || scale == 0) return;
        if (static_cast<int>(coeffs.size()) < other.degree() + shift + 1)
            coeffs.resize(other.degree() + shift + 1, 0);
        for (size_t d = 0; d < other.coeffs.size(); ++d)
            coeffs[d + shift] += scale * other.coeffs[d];
        trim();
    }

    friend bool operator==(const KLPolynomial& a, const KLPolynomial& b) {
        return a.coeffs == b.coeffs;
    }
};

namespace detail {

/// Ranks a permutation of S_k (k ≤ 12) into [0, k!) via the Lehmer code.
inline std::uint64_t permutation_rank(const Permutation& p) {
    const int k = static_cast<int>(p.size());
    std::uint64_t rank = 0;
    for (int i = 0; i < k; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < k; ++j)
            if (p[j] < p[i]) ++smaller;
        rank = rank * (k - i) + smaller;
    }
    return rank;
}

/// Inverse of permutation_rank: the rank-th permutation of S_k in lex order.
inline Permutation permutation_unrank(std::uint64_t rank, int k) {
    std::vector<std::uint64_t> fact(static_cast<size_t>(k), 1);
    for (int i = 1; i < k; ++i) fact[i] = fact[i - 1] * static_cast<std::uint64_t>(i);
    std::vector<int> avail(static_cast<size_t>(k));
    std::iota(avail.begin(), avail.end(), 1);
    Permutation p;
    p.reserve(static_cast<size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
        const std::uint64_t f = fact[static_cast<size_t>(i)];
        const auto idx = static_cast<std::ptrdiff_t>(rank / f);
        rank %= f;
        p.push_back(avail[static_cast<size_t>(idx)]);
        avail.erase(avail.begin() + idx);
    }
    return p;
}

struct PairHash {
    size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const noexcept {
        std::uint64_t h = p.first * 0x9e3779b97f4a7c15ull ^ (p.second + 0x7f4a7c15u);
        h ^= h >> 33;
        h *= 0xff51afd7ed558ccdull;
        h ^= h >> 33;
        return static_cast<size_t>(h);
    }
};

} // namespace detail

/**
 * @brief Memoized Kazhdan–Lusztig polynomials P_{u,v} for one S_k.
 *
 * Uses the descent recursion
 *   P_{u,v} = P_{su,sv} + q·P_{u,sv} − Σ_z μ(z,sv) q^{(ℓ(v)−ℓ(z))/2} P_{u,z}
 * for a left descent s of v with su < u, after moving u upward through the
 * left and right descents of v (P_{u,v} = P_{su,v} when sv < v, su > u).
 * Keys are canonicalized through the symmetry P_{u,v} = P_{u⁻¹,v⁻¹}.
 */
class KLTable {
public:
    explicit KLTable(int k) : k_(k) {
        if (k < 1 || k > kMaxSymmetricK)
            fail(ErrorCode::KTooLarge,
                 "KL table supports 1 <= k <= " + std::to_string(kMaxSymmetricK));
    }

    int k() const noexcept { return k_; }

    /// P_{u,v}; the zero polynomial when u ≰ v.
    KLPolynomial kl_polynomial(const Permutation& u, const Permutation& v) {
        check(u);
        check(v);
        std::lock_guard<std::mutex> lock(mutex_);
        return kl_locked(u, v);
    }

    /// P_{u,v}(1).
    long long kl_at_one(const Permutation& u, const Permutation& v) {
        return kl_polynomial(u, v).at_one();
    }

    /// μ(u, v): coefficient of q^{(ℓ(v)−ℓ(u)−1)/2} in P_{u,v}.
    long long mu(const Permutation& u, const Permutation& v) {
        check(u);
        check(v);
        std::lock_guard<std::mutex> lock(mutex_);
        const int d = coxeter_length(v) - coxeter_length(u) - 1;
        if (d < 0 || d % 2 != 0) return 0;
        return kl_locked(u, v).coeff(d / 2);
    }

private:
    using Key = std::pair<std::uint64_t, std::uint64_t>;

    void check(const Permutation& p) const {
        if (static_cast<int>(p.size()) != k_)
            fail(ErrorCode::DimensionMismatch, "permutation size differs from table's k");
    }

    KLPolynomial kl_locked(Permutation u, const Permutation& v) {
        if (!bruhat_leq(u, v)) return {};
        if (u == v) return KLPolynomial{{1}};
        // Move u upward through every descent of v: P_{u,v} is unchanged.
        bool moved = true;
        while (moved) {
            moved = false;
            for (int i = 1; i < k_; ++i) {
                if (has_left_descent(v, i) && !has_left_descent(u, i)) {
                    u = left_multiply(i, u);
                    moved = true;
                }
                if (has_right_descent(v, i) && !has_right_descent(u, i)) {
                    u = right_multiply(u, i);
                    moved = true;
                }
            }
        }
        if (u == v) return KLPolynomial{{1}};

        const Key key = canonical_key(u, v);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        int s = 0;
        for (int i = 1; i < k_; ++i)
            if (has_left_descent(v, i)) {
                s = i;
                break;
            }
        require_internal(s != 0, "non-identity permutation must have a descent");
        const Permutation sv = left_multiply(s, v);
        const Permutation su = left_multiply(s, u); // su < u after canonicalization

        KLPolynomial p = kl_locked(su, sv);
        p.add_shifted(kl_locked(u, sv), 1);
        const int lv = coxeter_length(v);
        for (const auto& [z, mz] : mu_row(sv)) {
            if (!has_left_descent(z, s)) continue;
            if (!bruhat_leq(u, z)) continue;
            const int d = lv - coxeter_length(z);
            require_internal(d % 2 == 0, "mu-term exponent must be integral");
            p.add_shifted(kl_locked(u, z), d / 2, -mz);
        }
        require_internal(!p.is_zero() && p.coeffs[0] == 1,
                         "KL polynomial must have constant term 1 below v");
        memo_.emplace(key, p);
        return p;
    }

    /// All (z, μ(z, w)) with μ ≠ 0, z < w.
    const std::vector<std::pair<Permutation, long long>>& mu_row(const Permutation& w) {
        const std::uint64_t rw = detail::permutation_rank(w);
        if (auto it = mu_rows_.find(rw); it != mu_rows_.end()) return it->second;

        std::vector<std::pair<Permutation, long long>> row;
        const int lw = coxeter_length(w);
        // ℓ(w) − ℓ(z) = 1 means z is a Bruhat cover of w, and every cover has
        // μ = 1 (P_{z,w} is constant).  Covers are w·t(a,b) with w[a] > w[b]
        // and no intermediate value of w strictly between them.
        for (int a = 0; a < k_; ++a)
            for (int b = a + 1; b < k_; ++b) {
                if (w[a] <= w[b]) continue;
                bool blocked = false;
                for (int c = a + 1; c < b && !blocked; ++c)
                    if (w[b] < w[c] && w[c] < w[a]) blocked = true;
                if (blocked) continue;
                Permutation z = w;
                std::swap(z[static_cast<size_t>(a)], z[static_cast<size_t>(b)]);
                row.emplace_back(std::move(z), 1);
            }
        if (lw >= 3) scan_mu_far(w, lw, row);
        return mu_rows_.emplace(rw, std::move(row)).first->second;
    }

    /// Appends the μ ≠ 0 entries with ℓ(w) − ℓ(z) ≥ 3.  Such z must inherit
    /// every left and right descent of w (otherwise P_{z,w} = P_{sz,w} would
    /// have too-low degree), which together with the length/parity bound
    /// prunes almost every candidate before any Bruhat or KL work.
    void scan_mu_far(const Permutation& w, int lw,
                     std::vector<std::pair<Permutation, long long>>& row) {
        const auto emit = [&](const Permutation& z, int lz) {
            if (!bruhat_leq(z, w)) return;
            const long long top = kl_locked(z, w).coeff((lw - lz - 1) / 2);
            if (top != 0) row.emplace_back(z, top);
        };
        if (k_ <= kRankTableK) {
            build_rank_tables();
            const std::uint32_t need = descent_mask_of(w);
            const auto total = static_cast<std::uint64_t>(len_by_rank_.size());
            for (std::uint64_t r = 0; r < total; ++r) {
                const int gap = lw - len_by_rank_[r];
                if (gap < 3 || (gap & 1) == 0) continue;
                if ((desc_by_rank_[r] & need) != need) continue;
                emit(detail::permutation_unrank(r, k_), lw - gap);
            }
            return;
        }
        Permutation z = identity_permutation(k_);
        do {
            const int lz = coxeter_length(z);
            const int gap = lw - lz;
            if (gap < 3 || gap % 2 == 0) continue;
            bool plausible = true;
            for (int i = 1; i < k_ && plausible; ++i) {
                if (has_left_descent(w, i) && !has_left_descent(z, i)) plausible = false;
                if (has_right_descent(w, i) && !has_right_descent(z, i)) plausible = false;
            }
            if (plausible) emit(z, lz);
        } while (std::next_permutation(z.begin(), z.end()));
    }

    /// Lazily fills the rank-indexed length and packed-descent tables used to
    /// filter the far-μ scan (k! entries; built once per table, k ≤ 10 only).
    void build_rank_tables() {
        if (!len_by_rank_.empty()) return;
        std::uint64_t total = 1;
        for (int i = 2; i <= k_; ++i) total *= static_cast<std::uint64_t>(i);
        len_by_rank_.resize(total);
        desc_by_rank_.resize(total);
        Permutation p = identity_permutation(k_);
        std::uint64_t r = 0;
        do {
            len_by_rank_[r] = static_cast<std::uint8_t>(coxeter_length(p));
            desc_by_rank_[r] = descent_mask_of(p);
            ++r;
        } while (std::next_permutation(p.begin(), p.end()));
    }

    /// Left-descent set in the high half-word, right-descent set in the low.
    std::uint32_t descent_mask_of(const Permutation& p) const {
        std::uint32_t dl = 0, dr = 0;
        for (int i = 1; i < k_; ++i) {
            if (has_left_descent(p, i)) dl |= 1u << (i - 1);
            if (has_right_descent(p, i)) dr |= 1u << (i - 1);
        }
        return (dl << 16) | dr;
    }

    Key canonical_key(const Permutation& u, const Permutation& v) const {
        const Key a{detail::permutation_rank(u), detail::permutation_rank(v)};
        const Key b{detail::permutation_rank(inverse(u)), detail::permutation_rank(inverse(v))};
        return std::min(a, b);
    }

    int k_;
    std::mutex mutex_;
    /// Largest k for which the k!-entry rank tables are built.
    static constexpr int kRankTableK = 10;

    std::unordered_map<Key, KLPolynomial, detail::PairHash> memo_;
    std::unordered_map<std::uint64_t, std::vector<std::pair<Permutation, long long>>> mu_rows_;
    std::vector<std::uint8_t> len_by_rank_;
    std::vector<std::uint32_t> desc_by_rank_;
};

} // namespace grtab

#endif // GRTAB_SYMMETRIC_HPP
