#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "grtab/characters.hpp"
#include "grtab/monomials.hpp"
#include "grtab/plucker.hpp"
#include "grtab/symmetric.hpp"
#include "grtab/tableaux.hpp"

using namespace grtab;

namespace {

Tableau tab(int n, int m, std::vector<std::vector<int>> rows) {
    return make_tableau(n, m, std::move(rows));
}

Tableau cols(int n, int m, std::vector<Column> cs) { return from_columns(n, m, cs); }

Monomial mono(std::vector<YVar> vars) {
    Monomial m;
    for (const auto& v : vars) m.multiply_by(v);
    return m;
}

QCharFormula formula(std::vector<std::pair<std::vector<YVar>, long long>> terms) {
    QCharFormula f;
    for (auto& [key, c] : terms) {
        std::sort(key.begin(), key.end());
        f.terms[key] = c;
    }
    return f;
}

PluckerPolynomial coordinate(int n, int m, Column c) {
    return straighten(n, m, {{Int(1), {std::move(c)}}});
}

// Independent determinant oracle: Laplace expansion along the first row.
Rat det_laplace(const std::vector<std::vector<Rat>>& b) {
    const size_t n = b.size();
    if (n == 1) return b[0][0];
    Rat sum = 0;
    for (size_t j = 0; j < n; ++j) {
        if (b[0][j] == 0) continue;
        std::vector<std::vector<Rat>> sub(n - 1, std::vector<Rat>(n - 1));
        for (size_t r = 1; r < n; ++r) {
            size_t jj = 0;
            for (size_t c = 0; c < n; ++c)
                if (c != j) sub[r - 1][jj++] = b[r][c];
        }
        const Rat term = b[0][j] * det_laplace(sub);
        sum += (j % 2 ? -term : term);
    }
    return sum;
}

RationalMatrix random_matrix(std::mt19937& rng, int n, int m) {
    for (;;) {
        std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(m));
        for (int r = 0; r < n; ++r)
            for (int j = 0; j < m; ++j)
                rows[r][j] = Rat(static_cast<int>(rng() % 19) - 9, 1 + static_cast<int>(rng() % 3));
        try {
            return make_rational_matrix(n, m, std::move(rows));
        } catch (const Error&) {
            // singular draw; retry
        }
    }
}

std::vector<std::vector<Rat>> random_square(std::mt19937& rng, int k) {
    std::vector<std::vector<Rat>> a(k, std::vector<Rat>(k));
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
            a[r][c] = Rat(static_cast<int>(rng() % 19) - 9, 1 + static_cast<int>(rng() % 3));
    return a;
}

// Totally positive point: Vandermonde rows 1, x_j, x_j^2, ... at strictly
// increasing positive nodes.  Every minor is a generalized Vandermonde
// determinant, hence strictly positive.
RationalMatrix tp_point(std::mt19937& rng, int n, int m) {
    std::vector<Rat> xs;
    Rat x(0);
    for (int j = 0; j < m; ++j) {
        x += Rat(1 + static_cast<int>(rng() % 7), 1 + static_cast<int>(rng() % 3));
        xs.push_back(x);
    }
    std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(m));
    for (int j = 0; j < m; ++j) {
        Rat pw(1);
        for (int r = 0; r < n; ++r) {
            rows[r][j] = pw;
            pw *= xs[static_cast<size_t>(j)];
        }
    }
    return make_rational_matrix(n, m, std::move(rows));
}

// Every one- and two-column member of SSYT(3, [m]).
std::vector<Tableau> two_column_family(int m) {
    std::vector<Column> singles;
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
            for (int c = b + 1; c <= m; ++c) singles.push_back({a, b, c});
    std::vector<Tableau> out;
    for (const auto& c : singles) out.push_back(from_columns(3, m, {c}));
    for (const auto& a : singles)
        for (const auto& b : singles) {
            bool ok = true;
            for (int r = 0; r < 3 && ok; ++r) ok = a[static_cast<size_t>(r)] <= b[static_cast<size_t>(r)];
            if (ok) out.push_back(from_columns(3, m, {a, b}));
        }
    return out;
}

// Random tableau whose columns all have gap weight one.
std::optional<Tableau> random_small_gaps(std::mt19937& rng, int n, int m, int k) {
    std::vector<Column> cs;
    for (int t = 0; t < k; ++t) {
        const int i = 1 + static_cast<int>(rng() % (m - n));
        const int j = i + 1 + static_cast<int>(rng() % (n - 1));
        Column c;
        for (int v = i; v <= i + n; ++v)
            if (v != j) c.push_back(v);
        cs.push_back(std::move(c));
    }
    try {
        return from_columns(n, m, cs);
    } catch (const Error&) {
        return std::nullopt;
    }
}

// The four-column small-gaps representative used throughout the Gr(3,6) cases.
Tableau quartic_prime() {
    return small_gaps_form(cols(3, 6, {{1, 3, 5}, {2, 4, 6}})).prime;
}

PluckerPolynomial quartic_expected() {
    return straighten(3, 6, {{Int(-1), {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}}},
                             {Int(1), {{1, 2, 4}, {2, 3, 4}, {3, 4, 5}, {3, 5, 6}}},
                             {Int(-1), {{1, 3, 4}, {2, 3, 4}, {2, 4, 5}, {3, 5, 6}}},
                             {Int(-1), {{1, 2, 4}, {2, 3, 5}, {3, 4, 5}, {3, 4, 6}}},
                             {Int(1), {{1, 3, 4}, {2, 3, 5}, {2, 4, 5}, {3, 4, 6}}}});
}

} // namespace

TEST_CASE("q-character of a product of two fundamentals") {
    const Monomial m = mono({{2, -4}, {1, -1}});
    const auto generic = formula({{{{1, -1}, {2, -4}}, 1}, {{{3, -3}}, -1}});
    CHECK(qchar_formula(m, 6) == generic);
    CHECK(qchar_formula(m, 4) == generic);
    // At n = 3 the third fundamental factor is the top exterior power, a unit.
    CHECK(qchar_formula(m, 3) == formula({{{{1, -1}, {2, -4}}, 1}, {{}, -1}}));
    // The u-sweep is schedule independent.
    CHECK(qchar_formula(m, 6, 9, 3) == qchar_formula(m, 6, 9, 1));
}

TEST_CASE("q-character of the degree-four module and its specializations") {
    const Monomial m = mono({{2, 0}, {2, -2}, {1, -3}, {1, -5}});
    // The same monomial arises from the two-column tableau with columns
    // {1,3,5}, {2,4,6}.
    CHECK(psi(cols(3, 6, {{1, 3, 5}, {2, 4, 6}})).factors == m.factors);

    const auto generic = formula({{{{2, -2}, {4, -2}}, 1},
                                  {{{3, -3}, {3, -1}}, -1},
                                  {{{1, -1}, {2, -4}, {3, -1}}, 1},
                                  {{{2, -4}, {2, -2}, {2, 0}}, -1},
                                  {{{1, -5}, {1, -3}, {1, -1}, {3, -1}}, -1},
                                  {{{1, -5}, {1, -3}, {2, -2}, {2, 0}}, 1}});
    CHECK(qchar_formula(m, 6) == generic);
    CHECK(qchar_formula(m, 5) == generic);

    // n = 4 only folds the Y_{4,-2} factor into a unit.
    CHECK(qchar_formula(m, 4) == formula({{{{2, -2}}, 1},
                                          {{{3, -3}, {3, -1}}, -1},
                                          {{{1, -1}, {2, -4}, {3, -1}}, 1},
                                          {{{2, -4}, {2, -2}, {2, 0}}, -1},
                                          {{{1, -5}, {1, -3}, {1, -1}, {3, -1}}, -1},
                                          {{{1, -5}, {1, -3}, {2, -2}, {2, 0}}, 1}}));

    // n = 3 kills the Y_{4,-2} term entirely and folds both Y_3 factors.
    CHECK(qchar_formula(m, 3) == formula({{{}, -1},
                                          {{{1, -1}, {2, -4}}, 1},
                                          {{{2, -4}, {2, -2}, {2, 0}}, -1},
                                          {{{1, -5}, {1, -3}, {1, -1}}, -1},
                                          {{{1, -5}, {1, -3}, {2, -2}, {2, 0}}, 1}}));

    CHECK(qchar_formula(m, 3, 9, 4) == qchar_formula(m, 3));
}

TEST_CASE("q-character units, caps, and input validation") {
    CHECK(qchar_formula(Monomial{}, 3) == formula({{{}, 1}}));
    CHECK(qchar_formula(mono({{2, -4}}), 6) == formula({{{{2, -4}}, 1}}));

    Monomial bad;
    bad.factors[{1, 0}] = -1;
    CHECK_THROWS_WITH_AS(qchar_formula(bad, 3), doctest::Contains("dominant"), Error);
    CHECK_THROWS_WITH_AS(qchar_formula(mono({{1, -1}}), 1), doctest::Contains("rank"), Error);
    CHECK_THROWS_WITH_AS(qchar_formula(kr_monomial(1, 10, -1), 3),
                         doctest::Contains("exceeds the character cap"), Error);
    CHECK_THROWS_WITH_AS(qchar_formula(mono({{1, -1}}), 3, 11), doctest::Contains("character cap"),
                         Error);
    CHECK_THROWS_WITH_AS(qchar_formula(mono({{1, -1}}), 3, 0), doctest::Contains("character cap"),
                         Error);

    // Degree ten is admitted when the cap is raised to the hard limit; the
    // leading term of the formula is the monomial's own factorization.
    const auto big = qchar_formula(kr_monomial(1, 10, -1), 6, 10);
    std::vector<YVar> lead;
    for (int t = 0; t < 10; ++t) lead.push_back({1, 2 * t - 1});
    CHECK(big.terms.at(lead) == 1);
}

TEST_CASE("Kirillov-Reshetikhin modules at length two") {
    // Generic rank: [i,s][i,s-2] minus the neighbor product.
    CHECK(qchar_formula(kr_monomial(2, 2, -2), 6) ==
          formula({{{{2, -2}, {2, 0}}, 1}, {{{1, -1}, {3, -1}}, -1}}));
    // n = 3 folds the Y_3 neighbor into a unit.
    CHECK(qchar_formula(kr_monomial(2, 2, -2), 3) ==
          formula({{{{2, -2}, {2, 0}}, 1}, {{{1, -1}}, -1}}));
    // i = 1: the left neighbor is the trivial module.
    CHECK(qchar_formula(kr_monomial(1, 2, -3), 3) ==
          formula({{{{1, -3}, {1, -1}}, 1}, {{{2, -2}}, -1}}));
    // i = n - 1 at n = 4: the right neighbor folds.
    CHECK(qchar_formula(kr_monomial(3, 2, -1), 4) ==
          formula({{{{3, -1}, {3, 1}}, 1}, {{{2, 0}}, -1}}));
}

TEST_CASE("character index of a small-gaps tableau") {
    const Tableau tq = quartic_prime();
    CHECK(tq == cols(3, 6, {{1, 3, 4}, {2, 3, 5}, {2, 4, 5}, {3, 4, 6}}));
    CHECK(equivalent(tq, cols(3, 6, {{1, 3, 5}, {2, 4, 6}})));

    const CharacterIndex idx = character_index(tq);
    CHECK(idx.k == 4);
    CHECK(idx.iseq == std::vector<int>{1, 2, 2, 3});
    CHECK(idx.jseq == std::vector<int>{2, 3, 4, 5});
    CHECK(idx.wT == make_permutation({1, 3, 2, 4}));

    // The multisegment route produces the same index data.
    const CharacterIndex via = character_index(monomial_to_multisegment(psi(tq)), 3);
    CHECK(via.k == idx.k);
    CHECK(via.iseq == idx.iseq);
    CHECK(via.jseq == idx.jseq);
    CHECK(via.wT == idx.wT);

    const Tableau t7 = tab(4, 8, {{1, 1, 2, 2, 3, 3, 4},
                                  {2, 2, 3, 3, 5, 5, 5},
                                  {4, 4, 4, 4, 6, 6, 6},
                                  {5, 5, 6, 6, 7, 7, 8}});
    const CharacterIndex i7 = character_index(t7);
    CHECK(i7.k == 7);
    CHECK(i7.iseq == std::vector<int>{1, 1, 2, 2, 3, 3, 4});
    CHECK(i7.jseq == std::vector<int>{3, 3, 4, 4, 5, 5, 7});
    CHECK(i7.wT == make_permutation({2, 1, 6, 5, 4, 3, 7}));

    // Columns of gap weight != 1 are rejected.
    CHECK_THROWS_WITH_AS(character_index(cols(3, 6, {{1, 3, 5}})),
                         doctest::Contains("not fundamental"), Error);
    CHECK_THROWS_AS(character_index(solid_tableau(2, 3, 6)), Error);
}

TEST_CASE("permuted tableaux") {
    const Tableau t7 = tab(4, 8, {{1, 1, 2, 2, 3, 3, 4},
                                  {2, 2, 3, 3, 5, 5, 5},
                                  {4, 4, 4, 4, 6, 6, 6},
                                  {5, 5, 6, 6, 7, 7, 8}});
    const CharacterIndex i7 = character_index(t7);

    // u = w_T reproduces the tableau itself.
    auto back = p_u_T(i7.wT, t7);
    REQUIRE(back.has_value());
    CHECK(*back == t7);

    auto moved = p_u_T(make_permutation({3, 1, 2, 4, 5, 7, 6}), t7);
    REQUIRE(moved.has_value());
    CHECK(*moved == cols(4, 8, {{2, 4, 5, 6}, {1, 2, 4, 5}, {1, 2, 3, 5}, {2, 3, 5, 6},
                                {3, 4, 6, 7}, {4, 6, 7, 8}, {3, 4, 5, 6}}));

    // Out-of-window pairings vanish.
    CHECK_FALSE(p_u_T(make_permutation({7, 1, 2, 3, 4, 5, 6}), t7).has_value());
    CHECK_FALSE(p_u_T(make_permutation({1, 7, 2, 3, 4, 5, 6}), t7).has_value());
    CHECK_FALSE(p_u_T(make_permutation({2, 3, 4, 5, 6, 7, 1}), t7).has_value());

    CHECK_THROWS_WITH_AS(p_u_T(make_permutation({1, 2, 3}), t7), doctest::Contains("degree"),
                         Error);

    // On the quartic, the identity lies in the same double coset as w_T.
    const Tableau tq = quartic_prime();
    auto same = p_u_T(identity_permutation(4), tq);
    REQUIRE(same.has_value());
    CHECK(*same == tq);
}

TEST_CASE("ch_small_gaps golden values") {
    // Two-term Gr(3,6) character.
    CHECK(ch_small_gaps(cols(3, 6, {{1, 2, 4}, {3, 5, 6}})) ==
          straighten(3, 6, {{Int(1), {{1, 2, 4}, {3, 5, 6}}}, {Int(-1), {{1, 2, 3}, {4, 5, 6}}}}));

    // Two-term Gr(4,7) character.
    CHECK(ch_small_gaps(cols(4, 7, {{1, 2, 3, 5}, {3, 4, 6, 7}})) ==
          straighten(4, 7, {{Int(1), {{1, 2, 3, 5}, {3, 4, 6, 7}}},
                            {Int(-1), {{1, 2, 3, 4}, {3, 5, 6, 7}}}}));

    // The four-column representative sums to five standard monomials.
    const Tableau tq = quartic_prime();
    const auto q = ch_small_gaps(tq);
    CHECK(q == quartic_expected());
    CHECK(ch_small_gaps(tq, 9, 3) == q);

    // Degenerate cases.
    CHECK(ch_small_gaps(cols(3, 6, {})) == plucker_one(3, 6));
    CHECK(ch_small_gaps(cols(3, 6, {{1, 2, 4}})) == coordinate(3, 6, {1, 2, 4}));
    CHECK_THROWS_AS(ch_small_gaps(cols(3, 6, {{1, 3, 5}})), Error);
}

TEST_CASE("ch clears its frozen denominator") {
    const Tableau t = cols(3, 6, {{1, 3, 5}, {2, 4, 6}});
    const ChParts parts = ch_parts(t);
    CHECK(parts.poly == quartic_expected());
    CHECK(parts.exps == std::vector<long long>{0, -1, -1, 0});

    const ChResult r = ch(t);
    CHECK(r.in_ring);
    CHECK(r.value.frozen == std::vector<long long>(4, 0));
    CHECK(r.value == straighten(3, 6, {{Int(1), {{1, 3, 5}, {2, 4, 6}}},
                                       {Int(-1), {{1, 3, 4}, {2, 5, 6}}},
                                       {Int(-1), {{1, 2, 5}, {3, 4, 6}}},
                                       {Int(1), {{1, 2, 4}, {3, 5, 6}}},
                                       {Int(-2), {{1, 2, 3}, {4, 5, 6}}}}));

    // Multiplying back by the cleared denominator recovers the small-gaps
    // character exactly.
    CHECK(multiply(r.value, plucker_from_tableau(cols(3, 6, {{2, 3, 4}, {3, 4, 5}}))) ==
          parts.poly);

    // Independent evaluation oracle for the coefficient of the last term.
    std::mt19937 rng(20260823u);
    for (int trial = 0; trial < 5; ++trial) {
        const RationalMatrix x = random_matrix(rng, 3, 6);
        const Rat den = evaluate(coordinate(3, 6, {2, 3, 4}), x) *
                        evaluate(coordinate(3, 6, {3, 4, 5}), x);
        if (den == 0) continue;
        CHECK(evaluate(parts.poly, x) == evaluate(r.value, x) * den);
    }

    // Appending a trivial factor multiplies the cleared value accordingly.
    const Tableau t2 = unite(t, solid_tableau(2, 3, 6));
    const ChResult r2 = ch(t2);
    CHECK(r2.in_ring);
    CHECK(r2.value == multiply(r.value, plucker_from_tableau(solid_tableau(2, 3, 6))));

    // ch_parts only moves the exponent vector under ~-equivalence.
    const ChParts parts2 = ch_parts(t2);
    CHECK(parts2.poly == parts.poly);
    CHECK(parts2.exps == std::vector<long long>{0, 0, -1, 0});
}

TEST_CASE("ch quotient identity in Gr(4,7)") {
    const Tableau t = cols(4, 7, {{1, 2, 4, 6}, {2, 3, 5, 7}});
    const auto expr = straighten(
        4, 7,
        {{Int(1), {{2, 3, 5, 6}}},
         {Int(-1), {{2, 4, 5, 6}, {3, 5, 6, 7}}},
         {Int(1), {{1, 2, 3, 5}, {2, 4, 5, 6}, {3, 4, 6, 7}}},
         {Int(-1), {{1, 2, 4, 5}, {2, 3, 5, 6}, {3, 4, 6, 7}}},
         {Int(-1), {{1, 2, 3, 5}, {2, 3, 4, 6}, {2, 4, 5, 6}, {3, 4, 5, 7}}},
         {Int(1), {{1, 2, 4, 5}, {2, 3, 4, 6}, {2, 3, 5, 6}, {3, 4, 5, 7}}}});
    CHECK(quotient_equal(ch_parts(t).poly, expr));
}

TEST_CASE("triangularity over the two-column family") {
    int checked = 0;
    for (const Tableau& t : two_column_family(6)) {
        const Tableau tp = small_gaps_form(t).prime;
        if (tp.column_count() == 0) continue;  // frozen classes have unit character
        const auto poly = ch_small_gaps(tp);
        REQUIRE(poly.terms.count(tp) == 1);
        CHECK(poly.terms.at(tp) == Int(1));
        for (const auto& [key, c] : poly.terms) {
            CHECK(dominance_leq(key, tp));
            if (!(key == tp)) CHECK_FALSE(dominance_leq(tp, key));
        }
        ++checked;
    }
    CHECK(checked > 150);
}

TEST_CASE("characters are nonnegative at totally positive points") {
    std::mt19937 rng(7u);
    // Sanity: every Plucker coordinate of the Vandermonde point is positive.
    const RationalMatrix probe = tp_point(rng, 3, 6);
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 5; ++b)
            for (int c = b + 1; c <= 6; ++c) CHECK(minor_at(probe, {a, b, c}) > 0);

    std::vector<RationalMatrix> pts;
    for (int i = 0; i < 3; ++i) pts.push_back(tp_point(rng, 3, 6));
    for (const Tableau& t : two_column_family(6)) {
        const auto poly = ch_parts(t).poly;
        for (const auto& x : pts) CHECK(evaluate(poly, x) >= 0);
    }

    const auto quartic = ch_parts(cols(3, 6, {{1, 3, 5}, {2, 4, 6}})).poly;
    for (int i = 0; i < 10; ++i) CHECK(evaluate(quartic, tp_point(rng, 3, 6)) >= 0);
}

TEST_CASE("products expand triangularly") {
    std::mt19937 rng(11u);
    int done = 0;
    while (done < 5) {
        const auto a = random_small_gaps(rng, 3, 7, 1 + static_cast<int>(rng() % 2));
        const auto b = random_small_gaps(rng, 3, 7, 1 + static_cast<int>(rng() % 2));
        if (!a || !b) continue;
        Tableau u = unite(*a, *b);
        auto diff = multiply(ch_small_gaps(*a), ch_small_gaps(*b)) - ch_small_gaps(u);
        for (const auto& [key, c] : diff.terms) {
            CHECK(dominance_leq(key, u));
            CHECK_FALSE(key == u);
        }
        ++done;
    }
}

TEST_CASE("T-system relations hold in the quotient ring") {
    const auto poly_of = [](int i, int s, int n, int m) {
        if (i == 0 || i == n) return plucker_one(n, m);
        return ch_parts(phi_tilde(mono({{i, s}}), n, m)).poly;
    };
    const auto check_window = [&](int n, int m) {
        for (int i = 1; i < n; ++i) {
            for (int k = 0; k + n + 2 <= m; ++k) {
                const int s = i - 2 * k - 2;
                const auto lhs = multiply(poly_of(i, s, n, m), poly_of(i, s - 2, n, m));
                const auto kr = ch_parts(phi_tilde(kr_monomial(i, 2, s - 2), n, m)).poly;
                const auto rhs = kr + multiply(poly_of(i - 1, s - 1, n, m),
                                               poly_of(i + 1, s - 1, n, m));
                CHECK(quotient_equal(lhs, rhs));
            }
        }
    };
    check_window(3, 8);
    check_window(4, 7);
}

TEST_CASE("reality") {
    // Single columns are real.
    CHECK(reality_test(cols(3, 6, {{1, 4, 6}})).real);

    // The two-column Gr(3,6) cluster variable is real.
    CHECK(reality_test(cols(3, 6, {{1, 3, 5}, {2, 4, 6}})).real);

    // The Gr(4,8) example is not, and its defect is a single Plucker
    // coordinate in the quotient ring.
    const Tableau t4 = cols(4, 8, {{1, 2, 4, 6}, {3, 5, 7, 8}});
    const RealityResult r = reality_test(t4);
    CHECK_FALSE(r.real);
    CHECK_FALSE(r.defect.is_zero());
    CHECK(quotient_equal(r.defect, coordinate(4, 8, {1, 2, 7, 8})));

    // The defect is itself a character: the tableau below has
    // ch equal to it modulo frozens.
    const Tableau g = cols(4, 8, {{1, 2, 3, 4}, {1, 2, 5, 6}, {3, 4, 7, 8}, {5, 6, 7, 8}});
    CHECK(quotient_equal(r.defect, ch_parts(g).poly));

    // Verdicts are ~-invariant.
    CHECK_FALSE(reality_test(unite(t4, solid_tableau(3, 4, 8))).real);

    // Beyond the cap the test refuses instead of sweeping S_16.
    const Tableau t1 = tab(3, 9, {{1, 3, 4}, {2, 6, 7}, {5, 8, 9}});
    CHECK_THROWS_WITH_AS(reality_test(t1), doctest::Contains("exceeds the character cap"), Error);
}

TEST_CASE("primeness") {
    // Fundamental columns are prime.
    CHECK(primeness_test(cols(3, 6, {{1, 2, 4}})).prime);

    // The two-term character does not factor.
    CHECK(primeness_test(cols(3, 6, {{1, 2, 4}, {3, 5, 6}})).prime);

    // Three-column prime example in Gr(3,8).
    CHECK(primeness_test(tab(3, 8, {{1, 3, 4}, {2, 5, 6}, {4, 7, 8}})).prime);

    // Composite example: the product of a column and a two-column tableau.
    const Tableau t = tab(3, 8, {{1, 3, 4}, {2, 5, 6}, {7, 8, 8}});
    const PrimenessResult pr = primeness_test(t);
    CHECK_FALSE(pr.prime);
    REQUIRE(pr.witness.has_value());
    const auto& [wa, wb] = *pr.witness;
    const bool a_is_column = equivalent(wa, cols(3, 8, {{1, 2, 8}}));
    const Tableau other = a_is_column ? wb : wa;
    CHECK(equivalent(a_is_column ? wa : wb, cols(3, 8, {{1, 2, 8}})));
    CHECK(equivalent(other, cols(3, 8, {{3, 5, 7}, {4, 6, 8}})));

    // The witness factorization really multiplies to the character.
    CHECK(quotient_equal(multiply(ch_parts(wa).poly, ch_parts(wb).poly), ch_parts(t).poly));
}

TEST_CASE("MS matrix") {
    const auto ms = ms_matrix(3, 5);
    using C = Column;
    const std::vector<std::vector<std::optional<C>>> expected = {
        {C{2, 3, 4}, C{1, 3, 4}, C{1, 2, 4}, C{1, 2, 3}, std::nullopt},
        {std::nullopt, C{3, 4, 5}, C{2, 4, 5}, C{2, 3, 5}, C{2, 3, 4}},
        {std::nullopt, std::nullopt, C{1, 4, 5}, C{1, 3, 5}, C{1, 3, 4}},
        {std::nullopt, std::nullopt, std::nullopt, C{1, 2, 5}, C{1, 2, 4}},
        {std::nullopt, std::nullopt, std::nullopt, std::nullopt, C{1, 2, 3}}};
    REQUIRE(ms.size() == 5);
    for (size_t r = 0; r < 5; ++r) {
        REQUIRE(ms[r].size() == 5);
        for (size_t c = 0; c < 5; ++c) CHECK(ms[r][c] == expected[r][c]);
    }

    std::mt19937 rng(3u);
    const RationalMatrix x = random_matrix(rng, 3, 5);
    const auto a = ms_matrix_at(x);
    for (size_t r = 0; r < 5; ++r)
        for (size_t c = 0; c < 5; ++c) {
            if (ms[r][c])
                CHECK(a[r][c] == minor_at(x, *ms[r][c]));
            else
                CHECK(a[r][c] == 0);
        }

    CHECK_THROWS_WITH_AS(ms_matrix(3, 3), doctest::Contains("ms_matrix"), Error);
    CHECK_THROWS_AS(ms_matrix(1, 5), Error);
}

TEST_CASE("KL immanants") {
    std::mt19937 rng(17u);

    // Degree one and two.
    const auto a1 = random_square(rng, 1);
    CHECK(kl_immanant(make_permutation({1}), a1) == a1[0][0]);

    const auto a2 = random_square(rng, 2);
    CHECK(kl_immanant(make_permutation({1, 2}), a2) == a2[0][0] * a2[1][1] - a2[0][1] * a2[1][0]);
    CHECK(kl_immanant(make_permutation({2, 1}), a2) == a2[0][1] * a2[1][0]);

    // The identity immanant is the determinant; the w0 immanant is the
    // antidiagonal monomial.
    const auto a3 = random_square(rng, 3);
    CHECK(kl_immanant(make_permutation({1, 2, 3}), a3) == det_laplace(a3));
    CHECK(kl_immanant(make_permutation({3, 2, 1}), a3) == a3[0][2] * a3[1][1] * a3[2][0]);

    // Inversion against the KL basis: the matrix monomial of w expands as
    // sum_v P_{w,v}(1) Imm_v.
    for (int k = 3; k <= 4; ++k) {
        const auto a = random_square(rng, k);
        KLTable table(k);
        Permutation w = identity_permutation(k);
        do {
            Rat monomial(1);
            for (int i = 0; i < k; ++i)
                monomial *= a[static_cast<size_t>(i)][static_cast<size_t>(w[static_cast<size_t>(i)] - 1)];
            Rat sum(0);
            Permutation v = identity_permutation(k);
            do {
                const long long p = table.kl_at_one(w, v);
                if (p != 0) sum += Rat(p) * kl_immanant(v, a);
            } while (std::next_permutation(v.begin(), v.end()));
            CHECK(sum == monomial);
        } while (std::next_permutation(w.begin(), w.end()));
    }

    CHECK_THROWS_WITH_AS(kl_immanant(make_permutation({1, 2}), a3),
                         doctest::Contains("matrix size"), Error);
    std::vector<std::vector<Rat>> ragged = {{Rat(1), Rat(2)}, {Rat(3)}};
    CHECK_THROWS_WITH_AS(kl_immanant(make_permutation({1, 2}), ragged),
                         doctest::Contains("square"), Error);
}

TEST_CASE("generalized submatrix") {
    std::mt19937 rng(23u);
    const auto a = random_square(rng, 4);
    const auto sub = generalized_submatrix(a, {1, 2, 2}, {2, 3, 4});
    REQUIRE(sub.size() == 3);
    CHECK(sub[0][0] == a[0][1]);
    CHECK(sub[1][0] == a[1][1]);
    CHECK(sub[2][0] == a[1][1]);
    CHECK(sub[0][2] == a[0][3]);
    CHECK(sub[2][2] == a[1][3]);

    CHECK_THROWS_WITH_AS(generalized_submatrix(a, {1, 2}, {1, 2, 3}),
                         doctest::Contains("differ in length"), Error);
    CHECK_THROWS_WITH_AS(generalized_submatrix(a, {0, 1}, {1, 2}),
                         doctest::Contains("out of range"), Error);
    CHECK_THROWS_WITH_AS(generalized_submatrix(a, {2, 1}, {1, 2}),
                         doctest::Contains("weakly increasing"), Error);
    std::vector<std::vector<Rat>> ragged = {{Rat(1), Rat(2)}, {Rat(3)}};
    CHECK_THROWS_WITH_AS(generalized_submatrix(ragged, {1, 2}, {1, 2}),
                         doctest::Contains("square"), Error);
}

TEST_CASE("immanant consistency of characters") {
    std::mt19937 rng(29u);

    const Tableau two = cols(3, 6, {{1, 2, 4}, {3, 5, 6}});
    const auto two_poly = ch_small_gaps(two);
    for (int i = 0; i < 10; ++i) {
        const RationalMatrix x = random_matrix(rng, 3, 6);
        const ImmanantCheck res = immanant_check(two, x);
        CHECK(res.match);
        CHECK(res.character_value == evaluate(two_poly, x));
        CHECK(res.immanant_value == res.character_value);
    }

    // Degree one.
    CHECK(immanant_check(cols(3, 6, {{1, 2, 4}}), random_matrix(rng, 3, 6)).match);

    // Random small-gaps tableaux of degree at most 4 in Gr(3,7).
    int done = 0;
    while (done < 10) {
        const auto t = random_small_gaps(rng, 3, 7, 1 + static_cast<int>(rng() % 4));
        if (!t) continue;
        CHECK(immanant_check(*t, random_matrix(rng, 3, 7)).match);
        ++done;
    }

    // Mismatched ambient dimensions are rejected.
    CHECK_THROWS_AS(immanant_check(two, random_matrix(rng, 3, 7)), Error);
}
