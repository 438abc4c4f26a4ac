#include <catch_amalgamated.hpp>

#include "support.hpp"

#include <sstream>

using namespace qtwist;
using namespace testsupport;

namespace {

const std::vector<std::string> all_labels = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4",
                                             "D5", "E6", "E7", "E8", "F4", "G2"};

/// Positive roots as the orbit of the simple roots under reflections, computed from C alone.
std::set<std::vector<std::int64_t>> positive_roots_by_orbit(const CartanDatum& g)
{
    const int n = g.rank();
    std::set<std::vector<std::int64_t>> all;
    std::vector<std::vector<std::int64_t>> todo;
    for (int i = 0; i < n; ++i) {
        std::vector<std::int64_t> a(n, 0);
        a[i] = 1;
        if (all.insert(a).second) todo.push_back(a);
    }
    while (!todo.empty()) {
        auto b = todo.back();
        todo.pop_back();
        for (int i = 0; i < n; ++i) {
            std::int64_t p = 0;
            for (int j = 0; j < n; ++j) p += g.cartan(i + 1, j + 1) * b[j];
            auto c = b;
            c[i] -= p;
            if (all.insert(c).second) todo.push_back(c);
        }
    }
    std::set<std::vector<std::int64_t>> pos;
    for (const auto& r : all)
        if (std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x >= 0; })) pos.insert(r);
    return pos;
}

} // namespace

static std::string testing_word(const WeylWord& w)
{
    std::ostringstream os;
    for (Node i : w.letters) os << 's' << i;
    return w.empty() ? "e" : os.str();
}

TEST_CASE("Cartan tables for small types")
{
    auto a1 = build_cartan("A1");
    CHECK(a1.cartan(1, 1) == 2);
    CHECK(a1.symmetrizer(1) == 1);
    CHECK(a1.bar(1) == 1);

    auto a2 = build_cartan('A', 2);
    CHECK(a2.cartan(1, 2) == -1);
    CHECK(a2.cartan(2, 1) == -1);
    CHECK(a2.bar(1) == 2);

    auto b2 = build_cartan("B2");
    CHECK(b2.symmetrizer(1) == 2);
    CHECK(b2.symmetrizer(2) == 1);
    // <alpha_i, omega_j> = delta_ij d_i
    for (Node i = 1; i <= 2; ++i)
        for (Node j = 1; j <= 2; ++j) CHECK(b2.pairing(b2.alpha(i), b2.omega(j)) == (i == j ? b2.symmetrizer(i) : 0));

    auto g2 = build_cartan("G2");
    CHECK(g2.cartan(1, 2) == -3);
    CHECK(g2.symmetrizer(1) == 1);
    CHECK(g2.symmetrizer(2) == 3);
    CHECK(g2.lacing() == 3);
}

TEST_CASE("Unsupported types are rejected")
{
    for (const char* bad : {"Z3", "A0", "B1", "D3", "E5", "E9", "F3", "G3", "A", "Ax"}) {
        INFO(bad);
        try {
            (void)build_cartan(bad);
            FAIL("accepted");
        } catch (const math_error& e) {
            CHECK(e.code() == "unsupported-type");
        }
    }
}

TEST_CASE("Structural invariants for all finite types")
{
    const std::map<std::string, std::size_t> n_pos = {{"A1", 1}, {"A2", 3},  {"A3", 6},  {"A4", 10}, {"B2", 4},  {"B3", 9},
                                                      {"B4", 16}, {"C2", 4}, {"C3", 9},  {"C4", 16}, {"D4", 12}, {"D5", 20},
                                                      {"E6", 36}, {"E7", 63}, {"E8", 120}, {"F4", 24}, {"G2", 6}};
    const std::map<std::string, int> h_dual = {{"A1", 2}, {"A2", 3}, {"A3", 4}, {"A4", 5}, {"B2", 3}, {"B3", 5},
                                               {"B4", 7}, {"C2", 3}, {"C3", 4}, {"C4", 5}, {"D4", 6}, {"D5", 8},
                                               {"E6", 12}, {"E7", 18}, {"E8", 30}, {"F4", 9}, {"G2", 4}};
    for (const auto& label : all_labels) {
        INFO(label);
        const auto g = build_cartan(label);
        const int n = g.rank();
        for (Node i = 1; i <= n; ++i) {
            CHECK(g.cartan(i, i) == 2);
            for (Node j = 1; j <= n; ++j) {
                CHECK(g.symmetrizer(i) * g.cartan(i, j) == g.symmetrizer(j) * g.cartan(j, i));
                if (i != j) CHECK((g.cartan(i, j) <= 0 && g.cartan(i, j) >= -3));
            }
            CHECK(g.bar(g.bar(i)) == i);
            // w0(alpha_i) = -alpha_{bar i}
            CHECK(weyl_act_root(g, g.longest_word(), g.alpha(i)) == -g.alpha(g.bar(i)));
            // A-variables have weight alpha_i: 2 omega_i - sum_j (-C_ji) omega_j
            WeightVector expect(static_cast<std::size_t>(n));
            for (Node j = 1; j <= n; ++j) expect(j) = g.cartan(j, i);
            CHECK(g.to_omega(g.alpha(i)) == expect);
        }
        const auto orbit = positive_roots_by_orbit(g);
        CHECK(orbit.size() == n_pos.at(label));
        std::set<std::vector<std::int64_t>> mine;
        for (const auto& r : g.positive_roots()) mine.insert(r.c);
        CHECK(mine == orbit);
        CHECK(g.longest_word().size() == n_pos.at(label));
        CHECK(g.coxeter_number() * n == 2 * static_cast<int>(n_pos.at(label)));
        CHECK(g.dual_coxeter() == h_dual.at(label));
    }
}

TEST_CASE("Weight and root coordinates round-trip")
{
    for (const auto& label : all_labels) {
        const auto g = build_cartan(label);
        for (int t = 0; t < 20; ++t) {
            RootVector b(static_cast<std::size_t>(g.rank()));
            for (auto& x : b.c) x = uniform(-5, 5);
            auto back = g.to_root(g.to_omega(b));
            REQUIRE(back);
            CHECK(*back == b);
        }
    }
    auto a2 = build_cartan("A2");
    CHECK_FALSE(a2.to_root(a2.omega(1)));
    auto rc = a2.root_coords(a2.omega(1));
    CHECK(rc[0] == Rational(2, 3));
    CHECK(rc[1] == Rational(1, 3));
}

TEST_CASE("Weyl action examples")
{
    auto a1 = build_cartan("A1");
    CHECK(weyl_act_weight(a1, WeylWord{1}, a1.omega(1)) == -a1.omega(1));
    auto a2 = build_cartan("A2");
    CHECK(weyl_act_root(a2, WeylWord{1}, a2.alpha(1)) == -a2.alpha(1));
    // s2 s1 (alpha1 + alpha2) = s2(alpha2) = -alpha2
    CHECK(weyl_act_root(a2, WeylWord{2, 1}, RootVector{1, 1}) == RootVector{0, -1});
    // s2 s1 (-alpha1) = s2(alpha1) = alpha1 + alpha2
    CHECK(weyl_act_root(a2, WeylWord{2, 1}, RootVector{-1, 0}) == RootVector{1, 1});
}

TEST_CASE("Weyl group order, lengths and reduced words against a matrix BFS")
{
    const std::map<std::string, std::size_t> order = {{"A1", 2}, {"A2", 6}, {"B2", 8}, {"G2", 12}, {"A3", 24}, {"B3", 48}, {"C3", 48}};
    for (const auto& [label, size] : order) {
        INFO(label);
        const auto g = build_cartan(label);
        const auto W = weyl_group_bfs(g);
        CHECK(W.size() == size);
        int longest = 0;
        for (const auto& [M, len] : W) longest = std::max(longest, len);
        CHECK(static_cast<std::size_t>(longest) == g.longest_word().size());
        CHECK(W.at(word_matrix(g, g.longest_word())) == longest);

        for (int t = 0; t < 200; ++t) {
            const auto w = random_word(g, 12);
            const auto red = reduce_word(g, w);
            const auto M = word_matrix(g, w);
            CHECK(word_matrix(g, red) == M);
            CHECK(static_cast<int>(red.size()) == W.at(M));
            CHECK(inversion_count(g, w) == W.at(M));
            CHECK(same_element(g, w, red));
            // the matrix oracle agrees with the library action
            WeightVector lam(static_cast<std::size_t>(g.rank()));
            for (auto& x : lam.c) x = uniform(-4, 4);
            WeightVector expect(static_cast<std::size_t>(g.rank()));
            for (int r = 0; r < g.rank(); ++r)
                for (int c = 0; c < g.rank(); ++c) expect.c[r] += M[r][c] * lam.c[c];
            CHECK(weyl_act_weight(g, w, lam) == expect);
        }
    }
}

TEST_CASE("Unknown letters in words are rejected")
{
    auto a2 = build_cartan("A2");
    CHECK_THROWS_AS(reduce_word(a2, WeylWord{1, 3}), math_error);
}

TEST_CASE("Cone membership agrees with brute-force enumeration")
{
    for (const char* label : {"A2", "B2", "G2"}) {
        const auto g = build_cartan(label);
        for (const auto& [M, len] : weyl_group_bfs(g)) {
            (void)len;
            // recover a word for M
            WeylWord w;
            for (int t = 0; t < 2000 && word_matrix(g, w) != M; ++t) w = random_word(g, 6);
            REQUIRE(word_matrix(g, w) == M);
            INFO(label << " w=" << ::testing_word(w));
            const Cone cone(g, w);
            std::vector<RootVector> gens;
            for (Node i = 1; i <= g.rank(); ++i) gens.push_back(weyl_act_root(g, w, -g.alpha(i)));
            std::map<RootVector, std::int64_t> spanned;
            for (std::int64_t a = 0; a <= 3; ++a)
                for (std::int64_t b = 0; a + b <= 3; ++b) spanned.emplace(a * gens[0] + b * gens[1], a + b);
            for (std::int64_t x = -9; x <= 9; ++x)
                for (std::int64_t y = -9; y <= 9; ++y) {
                    const RootVector v{x, y};
                    const auto c = cone.coords(v);
                    auto it = spanned.find(v);
                    if (it != spanned.end()) {
                        REQUIRE(c);
                        CHECK(c->height == it->second);
                        CHECK(cone.height(v) == it->second);
                    } else if (c) {
                        CHECK(c->height > 3);
                    }
                }
        }
    }
}

TEST_CASE("Cone of the identity is the negative cone")
{
    auto a2 = build_cartan("A2");
    Cone e(a2, WeylWord{});
    auto c = e.coords(RootVector{-1, -2});
    REQUIRE(c);
    CHECK(c->height == 3);
    CHECK_FALSE(e.contains(RootVector{1, 0}));
    // s1 cone contains alpha1
    Cone s1(a2, WeylWord{1});
    CHECK(s1.contains(RootVector{1, 0}));
    CHECK_FALSE(s1.contains(RootVector{-1, 0}));
    auto w = cone_coords(a2, a2.omega(1), WeylWord{});
    CHECK_FALSE(w);
}
