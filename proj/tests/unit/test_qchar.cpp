#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace qtwist;
using namespace testsupport;

namespace {

YMonomial Y(Node i, std::int64_t s, std::int64_t e = 1) { return YMonomial::var(i, s, e); }
CAMonomial A(Node i, std::int64_t s, std::int64_t e = 1) { return CAMonomial::A(i, s, e); }

/// Weyl dimension formula, prod_{alpha>0} <lambda+rho, alpha^vee> / <rho, alpha^vee>.
std::int64_t weyl_dimension(const CartanDatum& g, const WeightVector& lambda)
{
    // <mu, alpha^vee> = sum_i c_i d_i mu_i / d_alpha with alpha = sum c_i alpha_i and
    // d_alpha = (alpha, alpha)/2 = sum_i c_i d_i C-weighted; computed via the invariant form.
    Rational num(1), den(1);
    for (const auto& a : g.positive_roots()) {
        WeightVector aw = g.to_omega(a);
        std::int64_t norm = g.pairing(a, aw); // (alpha, alpha)
        std::int64_t lr = 0, r = 0;
        for (Node i = 1; i <= g.rank(); ++i) {
            lr += a(i) * g.symmetrizer(i) * (lambda(i) + 1);
            r += a(i) * g.symmetrizer(i);
        }
        num *= Rational(2 * lr, norm);
        den *= Rational(2 * r, norm);
    }
    const Rational d = num / den;
    REQUIRE(d.denominator() == 1);
    return d.numerator();
}

} // namespace

TEST_CASE("KR highest weights")
{
    auto a1 = build_cartan("A1");
    CHECK(kr_highest_weight(a1, 1, 1) == Y(1, -1));
    CHECK(kr_highest_weight(a1, 1, 3) == Y(1, -5) * Y(1, -3) * Y(1, -1));
    CHECK(kr_highest_weight(build_cartan("B2"), 1, 2) == Y(1, -6) * Y(1, -2));
    CHECK_THROWS_AS(kr_highest_weight(a1, 1, 0), math_error);
}

TEST_CASE("Closed KR characters")
{
    auto a1 = build_cartan("A1");
    CAPoly expect;
    expect.add(CAMonomial{}, 1);
    expect.add(A(1, 0, -1), 1);
    expect.add(A(1, 0, -1) * A(1, -2, -1), 1);
    CHECK(kr_normalized_closed(a1, 1, 2) == expect);

    auto a2 = build_cartan("A2");
    CAPoly e2;
    e2.add(CAMonomial{}, 1);
    e2.add(A(1, 0, -1), 1);
    e2.add(A(1, 0, -1) * A(2, 1, -1), 1);
    CHECK(kr_normalized_closed(a2, 1, 1) == e2);

    YPoly y;
    y.add(Y(1, -1), 1);
    y.add(Y(1, 1, -1), 1);
    CHECK(kr_qchar_closed(a1, 1, 1).poly == y);
    CHECK_THROWS_AS(kr_normalized_closed(build_cartan("B2"), 1, 1), math_error);
}

TEST_CASE("Frenkel-Mukhin expansion agrees with the closed forms")
{
    auto a1 = build_cartan("A1");
    for (int k = 1; k <= 8; ++k) {
        const auto fm = fm_expand(a1, kr_highest_weight(a1, 1, k));
        CHECK(fm == kr_qchar_closed(a1, 1, k));
        CHECK(fm.poly.total() == k + 1);
    }
    auto a2 = build_cartan("A2");
    for (Node i : {1, 2})
        for (int k = 1; k <= 6; ++k) {
            INFO("i=" << i << " k=" << k);
            const auto fm = fm_expand(a2, kr_highest_weight(a2, i, k));
            CHECK(fm == kr_qchar_closed(a2, i, k));
            CHECK(fm.poly.total() == (k + 1) * (k + 2) / 2);
        }
    YPoly fund;
    fund.add(Y(1, -1), 1);
    fund.add(Y(1, 1, -1) * Y(2, 0), 1);
    fund.add(Y(2, 2, -1), 1);
    CHECK(fm_expand(a2, Y(1, -1)).poly == fund);
}

TEST_CASE("Dimensions of KR modules and minimal affinizations match the Weyl formula")
{
    for (const char* label : {"A2", "A3", "B2", "C3", "G2"}) {
        const auto g = build_cartan(label);
        for (Node i = 1; i <= g.rank(); ++i)
            for (int k = 1; k <= (g.rank() >= 3 ? 2 : 3); ++k) {
                INFO(label << " i=" << i << " k=" << k);
                const auto M = kr_highest_weight(g, i, k);
                const auto q = fm_expand(g, M);
                if (g.family() == 'A') CHECK(q.poly.total() == weyl_dimension(g, wt_degree(g, M)));
                // KR modules are at least as large as the irreducible g-module of the same weight
                CHECK(q.poly.total() >= weyl_dimension(g, wt_degree(g, M)));
            }
    }
    auto a2 = build_cartan("A2");
    for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 3; ++l) {
            YMonomial M = kr_highest_weight(a2, 1, k);
            for (int t = 1; t <= l; ++t) M *= Y(2, 2 * t);
            INFO("k=" << k << " l=" << l);
            CHECK(fm_expand(a2, M).poly.total() == (k + 1) * (l + 1) * (k + l + 2) / 2);
        }
    // the k = 2, l = 1 case has 15 monomials, all with multiplicity one
    const auto q = fm_expand(a2, Y(1, -3) * Y(1, -1) * Y(2, 2));
    CHECK(q.poly.size() == 15);
}

TEST_CASE("Structural properties of q-characters")
{
    auto a2 = build_cartan("A2");
    auto b2 = build_cartan("B2");
    std::vector<std::pair<CartanDatum, YMonomial>> cases = {
        {a2, kr_highest_weight(a2, 1, 3)},
        {a2, Y(1, -3) * Y(1, -1) * Y(2, 2) * Y(2, 4)},
        {b2, kr_highest_weight(b2, 2, 2)},
        {b2, Y(1, -2) * Y(2, 3)},
    };
    for (const auto& [g, M] : cases) {
        const auto q = fm_expand(g, M);
        CHECK(q.poly.coeff(M) == 1);
        std::size_t dominant = 0;
        for (const auto& [m, c] : q.poly) {
            CHECK(c > 0);
            CHECK_NOTHROW(y_ratio_to_a(g, m / M));
            if (m.is_dominant()) ++dominant;
        }
        CHECK(dominant == 1);
        const auto ch = usual_char_from_qchar(g, q.poly);
        for (Node i = 1; i <= g.rank(); ++i) CHECK(weyl_act_echar(g, WeylWord{i}, ch) == ch);
        // T_w M occurs with coefficient one for every w
        for (const auto& [Mat, len] : weyl_group_bfs(g)) {
            (void)len;
            WeylWord w;
            for (int t = 0; t < 500 && word_matrix(g, w) != Mat; ++t) w = random_word(g, 4);
            REQUIRE(word_matrix(g, w) == Mat);
            CHECK(q.poly.coeff(braid_act_word(g, reduce_word(g, w), 1, M)) == 1);
        }
    }
    CHECK_THROWS_AS(fm_expand(a2, Y(1, -1, -1)), math_error);
    CHECK_THROWS_AS(fm_expand(a2, Y(3, 0)), math_error);
    try {
        (void)fm_expand(a2, kr_highest_weight(a2, 1, 6), 10);
        FAIL("no cap");
    } catch (const math_error& e) {
        CHECK(e.code() == "step-cap-exceeded");
    }
}

TEST_CASE("w-normalized q-characters")
{
    auto a1 = build_cartan("A1");
    const auto q1 = kr_qchar_closed(a1, 1, 1);
    CAPoly expect;
    expect.add(CAMonomial{}, 1);
    expect.add(A(1, 0), 1);
    CHECK(w_normalized_qchar(a1, q1, WeylWord{1}) == expect);
    CHECK(w_normalized_qchar(a1, q1, WeylWord{}) == kr_normalized_closed(a1, 1, 1));

    auto a2 = build_cartan("A2");
    for (Node i : {1, 2})
        for (int k = 1; k <= 6; ++k) {
            const auto q = kr_qchar_closed(a2, i, k);
            for (const auto& [Mat, len] : weyl_group_bfs(a2)) {
                (void)len;
                WeylWord w;
                for (int t = 0; t < 500 && word_matrix(a2, w) != Mat; ++t) w = random_word(a2, 4);
                const Cone cone(a2, w);
                const auto n = w_normalized_qchar(a2, q, w);
                CHECK(n.total() == q.poly.total());
                CHECK(n.coeff(CAMonomial{}) == 1);
                for (const auto& [m, c] : n) CHECK(cone.contains(root_degree(a2, m)));
            }
        }
}

TEST_CASE("Provider memoizes and routes through its backing")
{
    auto a2 = build_cartan("A2");
    QCharProvider closed(QCharProvider::Engine::closed);
    QCharProvider fm;
    int misses = 0;
    fm.set_backing([&](const CartanDatum&, const YMonomial&, const std::function<QCharacter()>& run) {
        ++misses;
        return run();
    });
    for (int k = 1; k <= 4; ++k) CHECK(closed.kr_times(a2, 1, k, YMonomial{}) == fm.kr_times(a2, 1, k, YMonomial{}));
    for (int k = 1; k <= 4; ++k) (void)fm.kr_times(a2, 1, k, YMonomial{});
    CHECK(misses == 4);
    CHECK(fm.memo_size() == 4);
}
