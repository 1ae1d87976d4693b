#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "grtab/monomials.hpp"
#include "grtab/symmetric.hpp"
#include "grtab/tableaux.hpp"

using namespace grtab;

namespace {

Tableau tab(int n, int m, std::vector<std::vector<int>> rows) {
    return make_tableau(n, m, std::move(rows));
}

Tableau cols(int n, int m, std::vector<Column> cs) { return from_columns(n, m, cs); }

Tableau random_tableau(std::mt19937& rng, int n, int m, int ncols) {
    Tableau t = unit_tableau(n, m);
    for (int c = 0; c < ncols; ++c) {
        std::vector<int> pool(m);
        std::iota(pool.begin(), pool.end(), 1);
        std::shuffle(pool.begin(), pool.end(), rng);
        Column col(pool.begin(), pool.begin() + n);
        std::sort(col.begin(), col.end());
        t = unite(t, cols(n, m, {col}));
    }
    return t;
}

// Product of Y-variables with multiplicities.
Monomial mono(std::vector<std::pair<YVar, long long>> fs) {
    Monomial m;
    for (const auto& [v, e] : fs) m.multiply_by(v, e);
    return m;
}

Monomial Y(int i, int s) { return mono({{{i, s}, 1}}); }

// The root monomial A_{i,s} as a Laurent monomial in the Y's.
Monomial root_a(int i, int s, int n) {
    Monomial a;
    a.multiply_by({i, s + 1});
    a.multiply_by({i, s - 1});
    if (i - 1 >= 1) a.multiply_by({i - 1, s}, -1);
    if (i + 1 <= n - 1) a.multiply_by({i + 1, s}, -1);
    return a;
}

Multisegment ms(std::vector<std::pair<int, int>> segs) {
    Multisegment out;
    for (const auto& [b, e] : segs) out.push_back({b, e});
    return out;
}

// Whether the permutation w1 (one-line, 1-based) realizes the multisegment
// from the sorted endpoint vectors.
bool realizes(const std::vector<int>& mu, const std::vector<int>& lambda,
              const std::vector<int>& w1, const Multisegment& target) {
    const int k = static_cast<int>(w1.size());
    std::vector<int> winv(k);
    for (int q = 0; q < k; ++q) winv[w1[q] - 1] = q;
    Multisegment got;
    for (int a = 0; a < k; ++a) got.push_back({mu[winv[a]], lambda[a]});
    return canonical_multisegment(got) == canonical_multisegment(target);
}

Multisegment random_multisegment(std::mt19937& rng, int kmax, long long degcap) {
    const int k = 1 + static_cast<int>(rng() % kmax);
    Multisegment out;
    long long deg = 0;
    for (int j = 0; j < k; ++j) {
        const int b = -5 + static_cast<int>(rng() % 9);
        const int len = 1 + static_cast<int>(rng() % 3);
        if (deg + len > degcap) break;
        deg += len;
        out.push_back({b, b + len - 1});
    }
    if (out.empty()) out.push_back({0, 0});
    return out;
}

} // namespace

TEST_CASE("fundamental dictionary") {
    CHECK(fundamental_column(1, -1, 3) == Column{1, 2, 4});
    CHECK(fundamental_column(2, -16, 3) == Column{9, 11, 12});
    CHECK(column_to_fundamental({1, 2, 4}, 3) == YVar{1, -1});
    CHECK(column_to_fundamental({9, 11, 12}, 3) == YVar{2, -16});

    // Round trip over a grid of nodes and shifts.
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i <= n - 1; ++i)
            for (int b = 1; b <= 6; ++b) {
                const int s = i - 2 * b;
                Column c = fundamental_column(i, s, n);
                CHECK(column_gap_weight(c) == 1);
                CHECK(column_to_fundamental(c, n) == YVar{i, s});
            }

    // Inverse over every gap-weight-one column of SSYT(3,[8]).
    for (int a = 1; a <= 8; ++a)
        for (int b = a + 1; b <= 8; ++b)
            for (int c = b + 1; c <= 8; ++c) {
                Column col{a, b, c};
                if (column_gap_weight(col) != 1) continue;
                const auto [i, s] = column_to_fundamental(col, 3);
                CHECK(fundamental_column(i, s, 3) == col);
            }

    CHECK_THROWS_WITH_AS(column_to_fundamental({2, 3, 4}, 3), doctest::Contains("NotFundamental"),
                         Error);
    CHECK_THROWS_WITH_AS(column_to_fundamental({1, 3, 6}, 3), doctest::Contains("NotFundamental"),
                         Error);
    CHECK_THROWS_WITH_AS(column_to_fundamental({1, 2}, 3), doctest::Contains("DimensionMismatch"),
                         Error);
    CHECK_THROWS_WITH_AS(fundamental_column(1, 0, 3), doctest::Contains("ParityError"), Error);
    CHECK_THROWS_WITH_AS(fundamental_column(3, -1, 3), doctest::Contains("OutOfRange"), Error);
    CHECK_THROWS_WITH_AS(fundamental_column(1, 1, 3), doctest::Contains("OutOfRange"), Error);
}

TEST_CASE("psi") {
    CHECK(psi(tab(3, 6, {{1, 2}, {3, 4}, {5, 6}})) ==
          mono({{{1, -3}, 1}, {{2, 0}, 1}, {{1, -5}, 1}, {{2, -2}, 1}}));
    CHECK(psi(unit_tableau(3, 6)).is_unit());
    CHECK(psi(cols(3, 6, {{1, 3, 6}})) == mono({{{1, -5}, 1}, {{1, -3}, 1}, {{2, 0}, 1}}));
    // The same product split differently: {1,3,6} u {2,4,5}.
    CHECK(psi(cols(3, 6, {{1, 3, 6}, {2, 4, 5}})) ==
          psi(cols(3, 6, {{1, 3, 6}})) * psi(cols(3, 6, {{2, 4, 5}})));

    std::mt19937 rng(411);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const int m = n + 2 + static_cast<int>(rng() % 4);
        Tableau s = random_tableau(rng, n, m, 1 + rng() % 3);
        Tableau t = random_tableau(rng, n, m, 1 + rng() % 3);
        // Monoid homomorphism.
        CHECK(psi(unite(s, t)) == psi(s) * psi(t));
        // Constant on ~-classes: solid factors vanish.
        const int i = 1 + static_cast<int>(rng() % (m - n + 1));
        CHECK(psi(unite(s, solid_tableau(i, n, m))) == psi(s));
        // The exponent sum counts the fundamental factors.
        CHECK(psi(s).degree() == static_cast<long long>(fundamental_factors(s).size()));
    }
}

TEST_CASE("phi_tilde") {
    Monomial m1 = mono({{{1, -5}, 1}, {{1, -3}, 1}, {{2, -2}, 1}, {{2, 0}, 1}});
    Tableau t1 = phi_tilde(m1, 3, 6);
    CHECK(t1.columns() ==
          std::vector<Column>{{1, 3, 4}, {2, 3, 5}, {2, 4, 5}, {3, 4, 6}});
    Tableau rep = tab(3, 6, {{1, 2}, {3, 4}, {5, 6}});
    CHECK(reduce(rep) == rep);
    CHECK(equivalent(t1, rep));
    CHECK(reduce(t1) == rep);

    CHECK(phi_tilde(Monomial{}, 3, 6).is_unit());
    CHECK(phi_tilde(mono({{{2, -4}, 1}, {{1, -1}, 1}}), 3, 6).columns() ==
          std::vector<Column>{{1, 2, 4}, {3, 5, 6}});

    CHECK_THROWS_WITH_AS(phi_tilde(Y(1, -7), 3, 6), doctest::Contains("OutOfWindow"), Error);
    CHECK_THROWS_WITH_AS(phi_tilde(Y(1, 1), 3, 6), doctest::Contains("OutOfWindow"), Error);
    CHECK_THROWS_WITH_AS(phi_tilde(Y(3, -3), 3, 6), doctest::Contains("OutOfWindow"), Error);
    CHECK_THROWS_WITH_AS(phi_tilde(Y(1, -2), 3, 6), doctest::Contains("ParityError"), Error);
    CHECK_THROWS_WITH_AS(phi_tilde(mono({{{1, -1}, -1}}), 3, 6), doctest::Contains("OutOfRange"),
                         Error);
    CHECK_THROWS_WITH_AS(phi_tilde(Y(1, -1), 3, 3), doctest::Contains("BadDimensions"), Error);
}

TEST_CASE("psi and phi_tilde are mutually inverse") {
    // psi o phi_tilde = id on every dominant window monomial of degree <= 3.
    for (const auto& [n, m] : std::vector<std::pair<int, int>>{{3, 6}, {3, 7}, {4, 7}}) {
        std::vector<YVar> vars;
        for (int i = 1; i <= n - 1; ++i)
            for (int k = 0; k <= m - n - 1; ++k) vars.push_back({i, i - 2 * k - 2});
        const int v = static_cast<int>(vars.size());
        // Multisets of size <= 3 as weakly increasing index triples.
        for (int a = 0; a <= v; ++a)
            for (int b = a; b <= v; ++b)
                for (int c = b; c <= v; ++c) {
                    Monomial M;
                    for (int idx : {a, b, c})
                        if (idx < v) M.multiply_by(vars[idx]);
                    Tableau t = phi_tilde(M, n, m);
                    CHECK(psi(t) == M);
                    // Weight bookkeeping: each Y_{i,s} contributes omega_i.
                    WeightVector expect(n - 1, 0);
                    for (const auto& [var, e] : M.factors) expect[var.first - 1] += e;
                    CHECK(weight(t) == expect);
                }
    }

    // phi_tilde o psi lands on the small-gaps representative of the class.
    std::mt19937 rng(412);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const int m = n + 2 + static_cast<int>(rng() % 4);
        Tableau t = random_tableau(rng, n, m, 1 + rng() % 3);
        CHECK(phi_tilde(psi(t), n, m) == small_gaps_form(t).prime);
    }
}

TEST_CASE("KR monomials and columns") {
    CHECK(kr_monomial(1, 3, -5) == mono({{{1, -5}, 1}, {{1, -3}, 1}, {{1, -1}, 1}}));
    CHECK(kr_plucker(1, 0, 3) == Column{1, 2, 4});
    CHECK(kr_plucker(2, 1, 3) == Column{1, 4, 5});

    // The two-interval column is the class of the matching KR monomial.
    for (int n = 2; n <= 4; ++n)
        for (int i = 1; i <= n - 1; ++i)
            for (int t = 0; t <= 3; ++t) {
                const int m = n + t + 1;
                Tableau col = cols(n, m, {kr_plucker(i, t, n)});
                CHECK(psi(col) == kr_monomial(i, t + 1, i - 2 * (t + 1)));
            }

    // Row n of the grid carries solid (frozen) columns.
    CHECK(is_trivial(cols(3, 6, {kr_plucker(3, 1, 3)})));
    CHECK(psi(cols(3, 6, {kr_plucker(3, 1, 3)})).is_unit());

    CHECK_THROWS_WITH_AS(kr_monomial(1, 0, -1), doctest::Contains("OutOfRange"), Error);
    CHECK_THROWS_WITH_AS(kr_plucker(0, 0, 3), doctest::Contains("OutOfRange"), Error);
    CHECK_THROWS_WITH_AS(kr_plucker(1, -1, 3), doctest::Contains("OutOfRange"), Error);
}

TEST_CASE("multisegment dictionary") {
    CHECK(monomial_to_multisegment(
              mono({{{2, 0}, 1}, {{2, -4}, 1}, {{4, -4}, 1}, {{2, -8}, 1}})) ==
          canonical_multisegment(ms({{0, 1}, {-3, 0}, {-2, -1}, {-4, -3}})));
    CHECK(monomial_to_multisegment(Monomial{}).empty());
    CHECK(multisegment_to_monomial({}).is_unit());
    CHECK(monomial_to_multisegment(mono({{{2, -4}, 1}, {{1, -1}, 1}})) ==
          canonical_multisegment(ms({{0, 0}, {-2, -1}})));

    std::mt19937 rng(413);
    for (int trial = 0; trial < 200; ++trial) {
        Multisegment a = random_multisegment(rng, 5, 12);
        Monomial M = multisegment_to_monomial(a);
        CHECK(monomial_to_multisegment(M) == canonical_multisegment(a));
        CHECK(multisegment_degree(a) == multisegment_degree(monomial_to_multisegment(M)));
        // Degree compatibility: a length-i segment maps to a node-i variable.
        long long wdeg = 0;
        for (const auto& [v, e] : M.factors) wdeg += v.first * e;
        CHECK(wdeg == multisegment_degree(a));
        // Monoid property.
        Multisegment b = random_multisegment(rng, 5, 12);
        Multisegment both = a;
        both.insert(both.end(), b.begin(), b.end());
        CHECK(multisegment_to_monomial(both) ==
              multisegment_to_monomial(a) * multisegment_to_monomial(b));
    }

    CHECK_THROWS_WITH_AS(monomial_to_multisegment(Y(1, 0)), doctest::Contains("ParityError"),
                         Error);
    CHECK_THROWS_WITH_AS(multisegment_to_monomial(ms({{2, 1}})), doctest::Contains("OutOfRange"),
                         Error);
}

TEST_CASE("segment profile") {
    {
        auto p = segment_profile(ms({{0, 1}, {-1, 0}, {-1, -1}, {-2, -2}}));
        CHECK(p.k == 4);
        CHECK(p.mu == std::vector<int>{0, -1, -1, -2});
        CHECK(p.lambda == std::vector<int>{1, 0, -1, -2});
        CHECK(p.w == std::vector<int>{1, 3, 2, 4});
    }
    {
        auto p = segment_profile(ms({{0, 0}, {-2, -1}}));
        CHECK(p.mu == std::vector<int>{0, -2});
        CHECK(p.lambda == std::vector<int>{0, -1});
        CHECK(p.w == std::vector<int>{1, 2});
    }
    {
        auto p = segment_profile(ms({{3, 5}}));
        CHECK(p.k == 1);
        CHECK(p.w == std::vector<int>{1});
    }
    // Constant right endpoints: every permutation realizes the multisegment,
    // so the profile must pick the longest element outright.
    CHECK(segment_profile(ms({{0, 2}, {-1, 2}, {-2, 2}})).w == std::vector<int>{3, 2, 1});
    CHECK(segment_profile(ms({{0, 0}, {0, 1}, {0, 2}})).w == std::vector<int>{3, 2, 1});

    // Brute-force maximality for k <= 6: w realizes the input, no realizing
    // permutation is longer, and the maximum length is attained uniquely.
    std::mt19937 rng(414);
    for (int trial = 0; trial < 80; ++trial) {
        Multisegment m = random_multisegment(rng, 6, 18);
        auto p = segment_profile(m);
        CHECK(realizes(p.mu, p.lambda, p.w, m));
        const long long lw = coxeter_length(p.w);
        std::vector<int> perm(p.k);
        std::iota(perm.begin(), perm.end(), 1);
        int max_hits = 0;
        do {
            if (!realizes(p.mu, p.lambda, perm, m)) continue;
            const long long l = coxeter_length(perm);
            CHECK(l <= lw);
            if (l == lw) {
                ++max_hits;
                CHECK(perm == p.w);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(max_hits == 1);
    }

    CHECK_THROWS_WITH_AS(segment_profile({}), doctest::Contains("OutOfRange"), Error);
    CHECK_THROWS_WITH_AS(segment_profile(ms({{2, 0}})), doctest::Contains("OutOfRange"), Error);
}

TEST_CASE("Nakajima partial order") {
    std::mt19937 rng(415);

    CHECK(monomial_leq(Y(2, -2), Y(1, -3) * Y(1, -1), 3));
    CHECK_FALSE(monomial_leq(Y(1, -3) * Y(1, -1), Y(2, -2), 3));
    CHECK_FALSE(monomial_leq(Y(1, -1), Y(2, -2), 3));
    CHECK_FALSE(monomial_leq(Y(2, -2), Y(1, -1), 3));

    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        Monomial M;
        for (int f = 0; f < 1 + static_cast<int>(rng() % 3); ++f) {
            const int i = 1 + static_cast<int>(rng() % (n - 1));
            M.multiply_by({i, i - 2 * (1 + static_cast<int>(rng() % 4))});
        }
        CHECK(monomial_leq(M, M, n));
        // Multiplying by root monomials moves strictly up.
        Monomial up = M;
        for (int f = 0; f < 1 + static_cast<int>(rng() % 2); ++f) {
            const int i = 1 + static_cast<int>(rng() % (n - 1));
            const int s = -static_cast<int>(rng() % 7);
            up = up * root_a(i, s, n);
        }
        CHECK(monomial_leq(M, up, n));
        CHECK_FALSE(monomial_leq(up, M, n));
    }

    // Cross-check against tableau dominance on every same-content pair of
    // two-column SSYT(3,[8]).
    std::vector<Tableau> all;
    std::vector<Column> singles;
    for (int a = 1; a <= 8; ++a)
        for (int b = a + 1; b <= 8; ++b)
            for (int c = b + 1; c <= 8; ++c) singles.push_back({a, b, c});
    for (const auto& c1 : singles)
        for (const auto& c2 : singles)
            if (c1 <= c2) all.push_back(unite(cols(3, 8, {c1}), cols(3, 8, {c2})));
    std::map<ContentVector, std::vector<const Tableau*>> by_content;
    for (const auto& t : all) by_content[content(t)].push_back(&t);
    long long compared = 0;
    for (const auto& [cv, group] : by_content)
        for (const Tableau* s : group)
            for (const Tableau* t : group) {
                CHECK(dominance_leq(*s, *t) == monomial_leq(psi(*s), psi(*t), 3));
                ++compared;
            }
    CHECK(compared > 1000);
}

TEST_CASE("Zelevinsky duality") {
    Multisegment mt1 = ms(
        {{0, 0}, {-1, -1}, {-2, -1}, {-3, -2}, {-3, -2}, {-4, -3}, {-4, -4}, {-5, -5}});
    CHECK(zelevinsky_dual(mt1) ==
          canonical_multisegment(ms({{-3, 0}, {-2, -1}, {-5, -2}, {-4, -3}})));

    // The same multisegment arises from the nine-column tableau class.
    Tableau t1 = tab(3, 9, {{1, 3, 4}, {2, 6, 7}, {5, 8, 9}});
    CHECK(monomial_to_multisegment(psi(t1)) == canonical_multisegment(mt1));

    CHECK(zelevinsky_dual(ms({{0, 2}})) == canonical_multisegment(ms({{0, 0}, {1, 1}, {2, 2}})));
    CHECK(zelevinsky_dual(ms({{0, 0}, {1, 1}})) == canonical_multisegment(ms({{0, 1}})));
    CHECK(zelevinsky_dual(ms({{0, 1}})) == canonical_multisegment(ms({{0, 0}, {1, 1}})));
    CHECK(zelevinsky_dual({}).empty());

    std::mt19937 rng(416);
    for (int trial = 0; trial < 200; ++trial) {
        Multisegment m = random_multisegment(rng, 6, 12);
        Multisegment d = zelevinsky_dual(m);
        CHECK(multisegment_degree(d) == multisegment_degree(m));
        CHECK(zelevinsky_dual(d) == canonical_multisegment(m));
    }
}

TEST_CASE("Lapid-Minguez reality") {
    {
        auto r = lm_reality(ms({{0, 1}, {-2, 0}, {-1, -1}, {-3, -2}}));
        CHECK(r.status == LMStatus::NonReal4231);
        CHECK(r.witness == canonical_multisegment(ms({{0, 1}, {-2, 0}, {-1, -1}, {-3, -2}})));
    }
    {
        // Same pattern inside a larger regular multisegment.
        auto r = lm_reality(ms({{0, 1}, {-2, 0}, {-1, -1}, {-3, -2}, {10, 20}}));
        CHECK(r.status == LMStatus::NonReal4231);
        CHECK(r.witness == canonical_multisegment(ms({{0, 1}, {-2, 0}, {-1, -1}, {-3, -2}})));
    }
    {
        auto r = lm_reality(ms({{-1, 3}, {0, 2}, {-3, 1}, {-2, 0}}));
        CHECK(r.status == LMStatus::NonReal3412);
        CHECK(r.witness == canonical_multisegment(ms({{-1, 3}, {0, 2}, {-3, 1}, {-2, 0}})));
    }
    CHECK(lm_reality(ms({{0, 4}})).status == LMStatus::Real);
    CHECK(lm_reality(ms({{0, 3}, {-1, 2}, {-2, 1}, {-3, 0}})).status == LMStatus::Real);
    CHECK(lm_reality(ms({{0, 0}, {2, 2}})).status == LMStatus::Real);

    // Nonregular input: repeated left or right endpoints.
    Multisegment mt1 = ms(
        {{0, 0}, {-1, -1}, {-2, -1}, {-3, -2}, {-3, -2}, {-4, -3}, {-4, -4}, {-5, -5}});
    CHECK(lm_reality(mt1).status == LMStatus::NotApplicable);
    CHECK(lm_reality(ms({{0, 1}, {-1, 1}})).status == LMStatus::NotApplicable);

    CHECK_THROWS_WITH_AS(lm_reality(ms({{3, 2}})), doctest::Contains("OutOfRange"), Error);
    {
        Multisegment big;
        for (int j = 0; j <= 24; ++j) big.push_back({-j, j});
        CHECK_THROWS_WITH_AS(lm_reality(big), doctest::Contains("KTooLarge"), Error);
    }
}
