#ifndef GRTAB_CLUSTER_HPP
#define GRTAB_CLUSTER_HPP

/// @file cluster.hpp
/// @brief Quivers, tableau-labeled seeds, the monoid mutation rule, initial
///        seeds for Gr(n,m), g-vectors, c-vectors, and exchange verification.
///
/// Seeds label quiver vertices with tableaux; mutation never touches the
/// coordinate ring.  The exchange partner at a mutable vertex is computed
/// inside the tableau monoid: take the higher-weight side of the exchange,
/// divide off the current label in the free monoid on fundamental columns,
/// and lift the quotient back to the unique tableau with the content forced
/// by homogeneity.  exchange_check then certifies the resulting relation
/// between genuine characters in the quotient ring.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "characters.hpp"
#include "errors.hpp"
#include "monomials.hpp"
#include "plucker.hpp"
#include "tableaux.hpp"

namespace grtab {

/// A quiver vertex named by its grid position (i, t).
using VertexId = std::pair<int, int>;

namespace detail {

inline std::string vertex_name(const VertexId& v) {
    return "(" + std::to_string(v.first) + "," + std::to_string(v.second) + ")";
}

} // namespace detail

// ---------------------------------------------------------------------------
// Quivers
// ---------------------------------------------------------------------------

/**
 * @brief A finite directed graph without loops or 2-cycles, with a
 *        mutable/frozen partition of its vertices.
 *
 * Arrows form a multiset.  Arrows between two frozen vertices are never
 * stored: they cannot influence any mutation or exchange, and dropping them
 * keeps mutation closed on the class (the usual ice-quiver convention).
 */
struct Quiver {
    std::vector<VertexId> vertices;                  ///< sorted, unique
    std::set<VertexId> frozen;                       ///< subset of vertices
    std::vector<std::pair<VertexId, VertexId>> arrows; ///< sorted multiset

    [[nodiscard]] bool has_vertex(const VertexId& v) const {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }
    [[nodiscard]] bool is_frozen(const VertexId& v) const { return frozen.count(v) != 0; }
    [[nodiscard]] bool is_mutable(const VertexId& v) const {
        return has_vertex(v) && !is_frozen(v);
    }

    /// Sources of arrows into @p v, with multiplicity.
    [[nodiscard]] std::vector<VertexId> arrows_in(const VertexId& v) const {
        std::vector<VertexId> out;
        for (const auto& [a, b] : arrows)
            if (b == v) out.push_back(a);
        return out;
    }
    /// Targets of arrows out of @p v, with multiplicity.
    [[nodiscard]] std::vector<VertexId> arrows_out(const VertexId& v) const {
        std::vector<VertexId> out;
        for (const auto& [a, b] : arrows)
            if (a == v) out.push_back(b);
        return out;
    }

    friend bool operator==(const Quiver& a, const Quiver& b) {
        return a.vertices == b.vertices && a.frozen == b.frozen && a.arrows == b.arrows;
    }
    friend bool operator!=(const Quiver& a, const Quiver& b) { return !(a == b); }
};

namespace detail {

/// Sorts the arrow multiset, drops frozen–frozen arrows, and cancels opposite
/// pairs; rejects loops.  Shared by make_quiver and mutate_quiver.
inline void normalize_arrows(Quiver& q) {
    for (const auto& [a, b] : q.arrows) {
        if (a == b) fail(ErrorCode::InvalidInput, "quiver has a loop at " + vertex_name(a));
        if (!q.has_vertex(a) || !q.has_vertex(b))
            fail(ErrorCode::InvalidInput, "arrow endpoint is not a vertex");
    }
    q.arrows.erase(std::remove_if(q.arrows.begin(), q.arrows.end(),
                                  [&](const auto& ar) {
                                      return q.is_frozen(ar.first) && q.is_frozen(ar.second);
                                  }),
                   q.arrows.end());
    // Cancel a → b against b → a as often as both occur.
    std::map<std::pair<VertexId, VertexId>, long long> count;
    for (const auto& ar : q.arrows) ++count[ar];
    q.arrows.clear();
    for (const auto& [ar, c] : count) {
        auto it = count.find(std::make_pair(ar.second, ar.first));
        const long long keep = it == count.end() ? c : c - std::min(c, it->second);
        for (long long r = 0; r < keep; ++r) q.arrows.push_back(ar);
    }
    std::sort(q.arrows.begin(), q.arrows.end());
}

} // namespace detail

/// Builds a quiver from parts, checking the loop/2-cycle/frozen invariants.
inline Quiver make_quiver(std::vector<VertexId> vertices, std::set<VertexId> frozen,
                          std::vector<std::pair<VertexId, VertexId>> arrows) {
    Quiver q;
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        fail(ErrorCode::InvalidInput, "duplicate quiver vertex");
    q.vertices = std::move(vertices);
    for (const auto& v : frozen)
        if (!q.has_vertex(v))
            fail(ErrorCode::InvalidInput, "frozen vertex " + detail::vertex_name(v) +
                                              " is not a vertex");
    q.frozen = std::move(frozen);
    q.arrows = std::move(arrows);
    detail::normalize_arrows(q);
    return q;
}

/**
 * @brief Quiver mutation at a mutable vertex @p k.
 *
 * Three steps: for every path i → k → j add an arrow i → j; reverse every
 * arrow incident to k; cancel all resulting 2-cycles.  An involution.
 * @throws Error{FrozenVertex} when @p k is frozen or absent.
 */
inline Quiver mutate_quiver(const Quiver& q, const VertexId& k) {
    if (!q.has_vertex(k))
        fail(ErrorCode::FrozenVertex, "mutation at unknown vertex " + detail::vertex_name(k));
    if (q.is_frozen(k))
        fail(ErrorCode::FrozenVertex, "mutation at frozen vertex " + detail::vertex_name(k));
    Quiver out = q;
    std::vector<std::pair<VertexId, VertexId>> next;
    const auto in = q.arrows_in(k);
    const auto outk = q.arrows_out(k);
    for (const auto& [a, b] : q.arrows) {
        if (a == k || b == k)
            next.emplace_back(b, a); // reverse arrows incident to k
        else
            next.push_back({a, b});
    }
    for (const auto& i : in)
        for (const auto& j : outk) next.emplace_back(i, j);
    out.arrows = std::move(next);
    detail::normalize_arrows(out);
    return out;
}

// ---------------------------------------------------------------------------
// Seeds
// ---------------------------------------------------------------------------

/**
 * @brief A quiver together with a tableau label at every vertex.
 *
 * All labels share one ambient SSYT(n, [m]).  Trivial frozen labels (solid
 * columns) are carried explicitly: they keep every exchange relation
 * Zᵐ-homogeneous, which is what pins down mutation results exactly rather
 * than up to ~.
 */
struct Seed {
    int n = 0;
    int m = 0;
    Quiver quiver;
    std::map<VertexId, Tableau> labels;

    [[nodiscard]] const Tableau& label(const VertexId& v) const {
        auto it = labels.find(v);
        if (it == labels.end())
            fail(ErrorCode::InvalidInput, "no label at vertex " + detail::vertex_name(v));
        return it->second;
    }

    /// Labels of the mutable vertices, in vertex order.
    [[nodiscard]] std::vector<Tableau> mutable_labels() const {
        std::vector<Tableau> out;
        for (const auto& v : quiver.vertices)
            if (!quiver.is_frozen(v)) out.push_back(label(v));
        return out;
    }

    friend bool operator==(const Seed& a, const Seed& b) {
        return a.n == b.n && a.m == b.m && a.quiver == b.quiver && a.labels == b.labels;
    }
    friend bool operator!=(const Seed& a, const Seed& b) { return !(a == b); }
};

/// Builds a seed, checking that every vertex carries a label in SSYT(n, [m]).
inline Seed make_seed(int n, int m, Quiver quiver, std::map<VertexId, Tableau> labels) {
    Seed s;
    s.n = n;
    s.m = m;
    for (const auto& v : quiver.vertices) {
        auto it = labels.find(v);
        if (it == labels.end())
            fail(ErrorCode::InvalidInput, "vertex " + detail::vertex_name(v) + " has no label");
        if (it->second.n != n || it->second.m != m)
            fail(ErrorCode::DimensionMismatch,
                 "label at " + detail::vertex_name(v) + " lives in a different SSYT(n, [m])");
    }
    if (labels.size() != quiver.vertices.size())
        fail(ErrorCode::InvalidInput, "label map names a vertex outside the quiver");
    s.quiver = std::move(quiver);
    s.labels = std::move(labels);
    return s;
}

/**
 * @brief The initial seed for Gr(n, m) with its quotient-ring bookkeeping.
 *
 * Grid vertices (i, t) for i ∈ [1, n−1], t ∈ [0, ℓ] with ℓ = m−n−1; row t = ℓ
 * is frozen.  The label at (i, t) is the Plücker column
 * [1, n−i] ∪ [n−i+t+2, n+t+1].  The trivial frozen vertices (0, 0) and
 * (n, t), t ∈ [0, ℓ], carry the solid columns and absorb the Zᵐ-grading.
 * Arrows: (i,t) → (i,t−1), (i,t) → (i−1,t), (i,t) → (i+1,t+1), restricted to
 * the vertex set, plus (1,0) → (0,0); arrows between frozen vertices are
 * dropped.
 * @throws Error{BadDimensions} unless 2 ≤ n < m.
 */
inline Seed initial_seed(int n, int m) {
    if (n < 2 || m <= n) fail(ErrorCode::BadDimensions, "initial seed needs 2 <= n < m");
    const int ell = m - n - 1;
    std::vector<VertexId> vertices;
    std::set<VertexId> frozen;
    std::map<VertexId, Tableau> labels;
    const auto add = [&](int i, int t, bool froz) {
        const VertexId v{i, t};
        vertices.push_back(v);
        if (froz) frozen.insert(v);
        if (i == 0)
            labels.emplace(v, solid_tableau(1, n, m));
        else
            labels.emplace(v, from_columns(n, m, {kr_plucker(i, t, n)}));
    };
    add(0, 0, true);
    for (int i = 1; i <= n - 1; ++i)
        for (int t = 0; t <= ell; ++t) add(i, t, t == ell);
    for (int t = 0; t <= ell; ++t) add(n, t, true);
    std::vector<std::pair<VertexId, VertexId>> arrows;
    for (int i = 1; i <= n; ++i) {
        for (int t = 0; t <= ell; ++t) {
            if (t >= 1 && i <= n - 1) arrows.push_back({{i, t}, {i, t - 1}}); // up
            if (i >= 2) arrows.push_back({{i, t}, {i - 1, t}});               // left
            if (i <= n - 1 && t + 1 <= ell) arrows.push_back({{i, t}, {i + 1, t + 1}}); // diag
        }
    }
    arrows.push_back({{1, 0}, {0, 0}});
    return make_seed(n, m, make_quiver(std::move(vertices), std::move(frozen), std::move(arrows)),
                     std::move(labels));
}

namespace detail {

/// ∪-product of the labels at the given vertices (with multiplicity).
inline Tableau side_product(const Seed& s, const std::vector<VertexId>& vs) {
    Tableau acc = unit_tableau(s.n, s.m);
    for (const auto& v : vs) acc = unite(acc, s.label(v));
    return acc;
}

/// Sign of a weight difference in the positive-root order: +1 when a > b,
/// −1 when a < b, 0 when equal or incomparable.  Writes d = wa − wb as
/// Σ c_i α_i over the simple roots of sl_n; comparability means the c_i all
/// share one sign.  n·c_i = Σ_j min(i,j)(n − max(i,j)) d_j stays integral.
inline int weight_compare(const WeightVector& wa, const WeightVector& wb, int n) {
    const int r = n - 1;
    bool all_nonneg = true, all_nonpos = true, zero = true;
    for (int i = 1; i <= r; ++i) {
        long long num = 0;
        for (int j = 1; j <= r; ++j)
            num += static_cast<long long>(std::min(i, j)) * (n - std::max(i, j)) *
                   (wa[j - 1] - wb[j - 1]);
        if (num != 0) zero = false;
        if (num < 0) all_nonneg = false;
        if (num > 0) all_nonpos = false;
    }
    if (zero) return 0;
    if (all_nonneg) return 1;
    if (all_nonpos) return -1;
    return 0;
}

} // namespace detail

/**
 * @brief Seed mutation at a mutable vertex @p k via the monoid rule.
 *
 * The replacement label is T′ = T_k⁻¹ · max{∪_{i→k} T_i, ∪_{k→i} T_i}: the
 * two exchange sides are compared in the weight order, the winner is divided
 * by T_k in the free monoid on fundamental columns, and the quotient class is
 * lifted to the content forced by homogeneity (both sides share one content,
 * which the trivial frozens guarantee for seeds reachable from initial_seed).
 *
 * @throws Error{FrozenVertex}  at a frozen or unknown vertex.
 * @throws Error{AmbiguousMax}  when neither side strictly dominates.
 * @throws Error{NotAFactor}    when T_k does not divide the winning side.
 */
inline Seed mutate_seed(const Seed& s, const VertexId& k) {
    if (!s.quiver.has_vertex(k))
        fail(ErrorCode::FrozenVertex, "mutation at unknown vertex " + detail::vertex_name(k));
    if (s.quiver.is_frozen(k))
        fail(ErrorCode::FrozenVertex, "mutation at frozen vertex " + detail::vertex_name(k));
    const Tableau& tk = s.label(k);
    const Tableau in_side = detail::side_product(s, s.quiver.arrows_in(k));
    const Tableau out_side = detail::side_product(s, s.quiver.arrows_out(k));
    if (content(in_side) != content(out_side))
        fail(ErrorCode::IncomparableDegrees,
             "exchange at " + detail::vertex_name(k) + " is not Z^m-homogeneous");
    const int cmp = detail::weight_compare(weight(in_side), weight(out_side), s.n);
    if (cmp == 0)
        fail(ErrorCode::AmbiguousMax,
             "neither exchange side dominates at " + detail::vertex_name(k));
    const Tableau& winner = cmp > 0 ? in_side : out_side;

    // Divide in the free monoid on fundamental columns: strip T_k's factors.
    std::vector<Column> num = fundamental_factors(winner);
    for (const auto& c : fundamental_factors(tk)) {
        auto it = std::find(num.begin(), num.end(), c);
        if (it == num.end())
            fail(ErrorCode::NotAFactor, "label at " + detail::vertex_name(k) +
                                            " does not divide the dominant exchange side");
        num.erase(it);
    }
    Tableau quotient = unit_tableau(s.n, s.m);
    for (const auto& c : num) quotient = unite(quotient, from_columns(s.n, s.m, {c}));

    // Lift the ~-class to the content forced by homogeneity.
    ContentVector target = content(winner);
    const ContentVector ck = content(tk);
    for (int i = 0; i < s.m; ++i) target[i] -= ck[i];
    const ContentLift lift = content_lift(quotient, target);
    if (lift.localized)
        fail(ErrorCode::NotInLattice,
             "mutated label at " + detail::vertex_name(k) + " is not a genuine tableau");

    Seed out = s;
    out.quiver = mutate_quiver(s.quiver, k);
    out.labels[k] = lift.value.num;
    return out;
}

/**
 * @brief Verifies the exchange relation at @p k between genuine characters.
 *
 * Computes T′ by mutate_seed and checks
 * ch(T_k) · ch(T′) = Π_{i→k} ch(T_i) + Π_{k→i} ch(T_i) in the quotient ring,
 * using the polynomial parts (the frozen denominators are units there).
 * @throws Error{KTooLarge} when a label's gap weight exceeds @p max_k.
 */
inline bool exchange_check(const Seed& s, const VertexId& k,
                           int max_k = kDefaultCharacterCap, int threads = 1) {
    const Seed mutated = mutate_seed(s, k);
    const auto poly = [&](const Tableau& t) { return ch_parts(t, max_k, threads).poly; };
    PluckerPolynomial lhs = multiply(poly(s.label(k)), poly(mutated.label(k)));
    PluckerPolynomial in_prod = plucker_one(s.n, s.m);
    for (const auto& v : s.quiver.arrows_in(k)) in_prod = multiply(in_prod, poly(s.label(v)));
    PluckerPolynomial out_prod = plucker_one(s.n, s.m);
    for (const auto& v : s.quiver.arrows_out(k)) out_prod = multiply(out_prod, poly(s.label(v)));
    return quotient_equal(lhs, in_prod + out_prod);
}

// ---------------------------------------------------------------------------
// g-vectors
// ---------------------------------------------------------------------------

/**
 * @brief Exponents over the initial Kirillov–Reshetikhin cluster variables.
 *
 * One integer per grid slot (i, t) ∈ [1, n−1] × [0, ℓ].  Writing a dominant
 * monomial as Π Y_{i,i−2j−2}^{a_{i,j}}, the slot value is
 * g_{i,j} = a_{i,j} − a_{i,j+1} (with a_{i,ℓ+1} = 0), the unique solution of
 * Σ_{k=j}^{ℓ} g_{i,k} = a_{i,j}.
 */
struct GVector {
    int n = 0;
    int ell = 0;
    std::vector<std::vector<int>> grid; ///< grid[i−1][t], i ∈ [1,n−1], t ∈ [0,ℓ]

    [[nodiscard]] int at(int i, int t) const {
        if (i < 1 || i > n - 1 || t < 0 || t > ell)
            fail(ErrorCode::OutOfRange, "g-vector slot outside the grid");
        return grid[static_cast<size_t>(i - 1)][static_cast<size_t>(t)];
    }

    friend bool operator==(const GVector& a, const GVector& b) {
        return a.n == b.n && a.ell == b.ell && a.grid == b.grid;
    }
    friend bool operator!=(const GVector& a, const GVector& b) { return !(a == b); }

    friend GVector operator+(const GVector& a, const GVector& b) {
        if (a.n != b.n || a.ell != b.ell)
            fail(ErrorCode::DimensionMismatch, "g-vectors over different grids");
        GVector c = a;
        for (size_t i = 0; i < c.grid.size(); ++i)
            for (size_t t = 0; t < c.grid[i].size(); ++t) c.grid[i][t] += b.grid[i][t];
        return c;
    }
};

/**
 * @brief g-vector of a dominant monomial in the window C_ℓ.
 *
 * @throws Error{OutOfWindow} when some factor Y_{i,s} has i outside [1, n−1]
 *         or spectral index j = (i−s−2)/2 outside [0, ℓ].
 * @throws Error{OutOfRange}  when @p mono is not dominant.
 */
inline GVector g_vector(const Monomial& mono, int n, int ell) {
    if (n < 2) fail(ErrorCode::BadDimensions, "g-vector needs n >= 2");
    if (ell < 0) fail(ErrorCode::OutOfWindow, "negative window length");
    std::vector<std::vector<long long>> a(static_cast<size_t>(n - 1),
                                          std::vector<long long>(static_cast<size_t>(ell) + 2, 0));
    for (const auto& [v, e] : mono.factors) {
        const auto [i, s] = v;
        if (e < 0) fail(ErrorCode::OutOfRange, "g-vector needs a dominant monomial");
        if (i < 1 || i > n - 1)
            fail(ErrorCode::OutOfWindow, "factor node " + std::to_string(i) + " outside [1, n-1]");
        const int j = (i - s) / 2 - 1;
        if (j < 0 || j > ell)
            fail(ErrorCode::OutOfWindow,
                 "Y[" + std::to_string(i) + "," + std::to_string(s) + "] outside the window C_" +
                     std::to_string(ell));
        a[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] += e;
    }
    GVector g;
    g.n = n;
    g.ell = ell;
    g.grid.assign(static_cast<size_t>(n - 1), std::vector<int>(static_cast<size_t>(ell) + 1, 0));
    for (int i = 0; i < n - 1; ++i)
        for (int t = 0; t <= ell; ++t)
            g.grid[static_cast<size_t>(i)][static_cast<size_t>(t)] =
                static_cast<int>(a[static_cast<size_t>(i)][static_cast<size_t>(t)] -
                                 a[static_cast<size_t>(i)][static_cast<size_t>(t) + 1]);
    return g;
}

/// g-vector of a tableau class: g_vector(Ψ(T), ℓ) over T's own rank.
inline GVector g_vector(const Tableau& t, int ell) { return g_vector(psi(t), t.n, ell); }

/**
 * @brief Exponents of @p t as a ∪-Laurent monomial in the labels of
 *        @p initial, content-exact.
 *
 * The grid exponents come from the g-vector of Ψ(t); the leftover content is
 * a unique integer combination of the solid columns carried by the trivial
 * frozen vertices.  Every tableau of SSYT(n, [m]) admits exactly one such
 * expansion over the initial seed.
 */
inline std::map<VertexId, int> g_factorization(const Tableau& t, const Seed& initial) {
    if (t.n != initial.n || t.m != initial.m)
        fail(ErrorCode::DimensionMismatch, "tableau lives in a different SSYT(n, [m])");
    const int n = initial.n;
    const int ell = initial.m - initial.n - 1;
    const GVector g = g_vector(t, ell);
    std::map<VertexId, int> out;
    ContentVector residue = content(t);
    for (int i = 1; i <= n - 1; ++i) {
        for (int j = 0; j <= ell; ++j) {
            const int e = g.at(i, j);
            out[{i, j}] = e;
            if (e == 0) continue;
            const ContentVector c = content(initial.label({i, j}));
            for (int x = 0; x < t.m; ++x) residue[x] -= e * c[x];
        }
    }
    // The residue is trivial: solve it over the solid columns, smallest
    // start first (each start is the first position its window covers).
    std::vector<long long> solid(static_cast<size_t>(t.m - t.n + 1), 0);
    for (int srt = 0; srt < t.m - t.n + 1; ++srt) {
        solid[static_cast<size_t>(srt)] = residue[srt];
        for (int x = srt; x < srt + t.n; ++x) residue[x] -= solid[static_cast<size_t>(srt)];
    }
    for (long long r : residue)
        require_internal(r == 0, "g-factorization residue must be a sum of solid columns");
    out[{0, 0}] = static_cast<int>(solid[0]);
    for (int tt = 0; tt <= ell; ++tt) out[{n, tt}] = static_cast<int>(solid[static_cast<size_t>(tt) + 1]);
    return out;
}

// ---------------------------------------------------------------------------
// c-vectors
// ---------------------------------------------------------------------------

/**
 * @brief Expands each initial tableau as a ∪-Laurent monomial in a distant
 *        cluster: T⁰_i = ∪_j (T_j)^{c[i][j]}.
 *
 * Both lists must enumerate full clusters of one SSYT(n, [m]) (including
 * frozen and trivial labels) in a fixed order; columns of the result are the
 * c-vectors of the distant cluster.  Solved over the fundamental-column
 * exponents of the canonical initial seed.
 * @throws Error{NotExpressible} when the expansion fails or is non-integral.
 */
inline std::vector<std::vector<long long>> c_vectors(const std::vector<Tableau>& distant,
                                                     const std::vector<Tableau>& initial) {
    if (distant.empty() || initial.empty())
        fail(ErrorCode::InvalidInput, "c_vectors needs nonempty clusters");
    const int n = distant.front().n;
    const int m = distant.front().m;
    for (const auto& t : distant)
        if (t.n != n || t.m != m)
            fail(ErrorCode::DimensionMismatch, "distant labels live in one SSYT(n, [m])");
    for (const auto& t : initial)
        if (t.n != n || t.m != m)
            fail(ErrorCode::DimensionMismatch, "initial labels live in one SSYT(n, [m])");
    const Seed seed0 = initial_seed(n, m);
    // Coordinates: exponents over the canonical initial vertices, flattened.
    std::vector<VertexId> order = seed0.quiver.vertices;
    const auto coords = [&](const Tableau& t) {
        const auto f = g_factorization(t, seed0);
        std::vector<Rat> v;
        v.reserve(order.size());
        for (const auto& vx : order) v.emplace_back(f.at(vx));
        return v;
    };
    const size_t dim = order.size();
    const size_t cols = distant.size();
    std::vector<std::vector<Rat>> a(dim, std::vector<Rat>(cols));
    for (size_t j = 0; j < cols; ++j) {
        const auto cj = coords(distant[j]);
        for (size_t d = 0; d < dim; ++d) a[d][j] = cj[d];
    }
    // One elimination, many right-hand sides: [A | B] with B the initial coords.
    std::vector<std::vector<Rat>> rhs(dim, std::vector<Rat>(initial.size()));
    for (size_t i = 0; i < initial.size(); ++i) {
        const auto ci = coords(initial[i]);
        for (size_t d = 0; d < dim; ++d) rhs[d][i] = ci[d];
    }
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < dim; ++col) {
        size_t p = row;
        while (p < dim && a[p][col] == 0) ++p;
        if (p == dim) continue;
        std::swap(a[p], a[row]);
        std::swap(rhs[p], rhs[row]);
        const Rat inv = Rat(1) / a[row][col];
        for (size_t j = col; j < cols; ++j) a[row][j] *= inv;
        for (auto& r : rhs[row]) r *= inv;
        for (size_t r2 = 0; r2 < dim; ++r2) {
            if (r2 == row || a[r2][col] == 0) continue;
            const Rat f = a[r2][col];
            for (size_t j = col; j < cols; ++j) a[r2][j] -= f * a[row][j];
            for (size_t j = 0; j < rhs[r2].size(); ++j) rhs[r2][j] -= f * rhs[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    // Rows below the pivots must be zero on every right-hand side.
    for (size_t r2 = row; r2 < dim; ++r2)
        for (const auto& v : rhs[r2])
            if (v != 0)
                fail(ErrorCode::NotExpressible,
                     "initial label is not a Laurent monomial in the distant cluster");
    std::vector<std::vector<long long>> c(initial.size(), std::vector<long long>(cols, 0));
    for (size_t r2 = 0; r2 < pivot_col.size(); ++r2) {
        for (size_t i = 0; i < initial.size(); ++i) {
            const Rat& v = rhs[r2][i];
            if (boost::multiprecision::denominator(v) != 1)
                fail(ErrorCode::NotExpressible, "expansion exponent is not an integer");
            c[i][pivot_col[r2]] =
                boost::multiprecision::numerator(v).convert_to<long long>();
        }
    }
    return c;
}

// ---------------------------------------------------------------------------
// Closure of the exchange graph
// ---------------------------------------------------------------------------

/// Result of mutating a seed in all directions until no new cluster appears.
struct ClosureResult {
    std::vector<Seed> seeds;                ///< one representative per cluster
    std::vector<Tableau> mutable_variables; ///< distinct mutable labels, sorted
    bool complete = false;                  ///< false when a limit truncated the walk
};

/**
 * @brief Breadth-first closure of the exchange graph from @p start.
 *
 * Clusters are identified by the sorted multiset of their labels, so
 * revisiting a cluster through a different vertex order is detected.  Stops
 * early when @p max_depth (if ≥ 0) or @p max_seeds is exhausted;
 * `complete` reports whether the graph was fully explored.
 */
inline ClosureResult cluster_closure(const Seed& start, int max_depth = -1,
                                     std::size_t max_seeds = 100000) {
    const auto key = [](const Seed& s) {
        std::vector<Tableau> ls;
        ls.reserve(s.labels.size());
        for (const auto& [v, t] : s.labels) ls.push_back(t);
        std::sort(ls.begin(), ls.end());
        std::string k;
        for (const auto& t : ls) {
            for (const auto& row : t.rows)
                for (int x : row) k += std::to_string(x) + ",";
            k += ";";
        }
        return k;
    };
    ClosureResult out;
    out.complete = true;
    std::set<std::string> seen;
    std::set<Tableau> vars;
    std::deque<std::pair<Seed, int>> queue;
    seen.insert(key(start));
    queue.emplace_back(start, 0);
    while (!queue.empty()) {
        auto [seed, depth] = std::move(queue.front());
        queue.pop_front();
        for (const auto& t : seed.mutable_labels()) vars.insert(t);
        out.seeds.push_back(seed);
        if (max_depth >= 0 && depth >= max_depth) {
            out.complete = false;
            continue;
        }
        for (const auto& v : seed.quiver.vertices) {
            if (seed.quiver.is_frozen(v)) continue;
            Seed next = mutate_seed(seed, v);
            if (!seen.insert(key(next)).second) continue;
            if (out.seeds.size() + queue.size() >= max_seeds) {
                out.complete = false;
                continue;
            }
            queue.emplace_back(std::move(next), depth + 1);
        }
    }
    out.mutable_variables.assign(vars.begin(), vars.end());
    return out;
}

} // namespace grtab

#endif // GRTAB_CLUSTER_HPP
