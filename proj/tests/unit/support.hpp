#pragma once

// Random generators and small independent oracles shared by the unit tests.

#include <map>
#include <random>
#include <set>
#include <vector>

#include "qtwist/qtwist.hpp"

namespace testsupport {

using namespace qtwist;

inline std::mt19937_64& rng()
{
    static std::mt19937_64 r(20240611);
    return r;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline YMonomial random_y(const CartanDatum& g, int factors = 4, std::int64_t spread = 6)
{
    YMonomial m;
    for (int t = 0; t < factors; ++t)
        m *= YMonomial::var(static_cast<Node>(uniform(1, g.rank())), uniform(-spread, spread), uniform(-2, 2));
    return m;
}

inline LWeightMonomial random_psi(const CartanDatum& g, int factors = 4, std::int64_t spread = 6)
{
    LWeightMonomial m;
    for (int t = 0; t < factors; ++t) m.psi.add({static_cast<Node>(uniform(1, g.rank())), uniform(-spread, spread)}, uniform(-2, 2));
    for (Node i = 1; i <= g.rank(); ++i) m.wt.add(i, uniform(-3, 3));
    return m;
}

inline CAMonomial random_ca(const CartanDatum& g, int factors = 3, std::int64_t spread = 6, bool with_e = true)
{
    CAMonomial m;
    for (int t = 0; t < factors; ++t) m.a.add({static_cast<Node>(uniform(1, g.rank())), uniform(-spread, spread)}, uniform(-2, 2));
    if (with_e)
        for (Node i = 1; i <= g.rank(); ++i) m.e.add(i, uniform(-2, 2));
    return m;
}

template <class Mono, class Gen>
SparsePoly<Mono> random_poly(Gen gen, int terms = 4)
{
    SparsePoly<Mono> p;
    for (int t = 0; t < terms; ++t) p.add(gen(), uniform(-3, 3));
    return p;
}

/// Matrix of s_i on weight coordinates, built from the Cartan matrix alone:
/// (s_i lambda)_j = lambda_j - lambda_i C(j,i).
inline std::vector<std::vector<std::int64_t>> reflection_matrix(const CartanDatum& g, Node i)
{
    const int n = g.rank();
    std::vector<std::vector<std::int64_t>> M(n, std::vector<std::int64_t>(n, 0));
    for (int r = 0; r < n; ++r) M[r][r] = 1;
    for (int j = 0; j < n; ++j) M[j][i - 1] -= g.cartan(j + 1, i);
    return M;
}

using IntMatrix = std::vector<std::vector<std::int64_t>>;

inline IntMatrix multiply(const IntMatrix& A, const IntMatrix& B)
{
    const std::size_t n = A.size();
    IntMatrix C(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
    return C;
}

/// Breadth-first enumeration of W as matrices on weight coordinates; the value is the length.
inline std::map<IntMatrix, int> weyl_group_bfs(const CartanDatum& g)
{
    const int n = g.rank();
    IntMatrix id(n, std::vector<std::int64_t>(n, 0));
    for (int r = 0; r < n; ++r) id[r][r] = 1;
    std::map<IntMatrix, int> seen{{id, 0}};
    std::vector<IntMatrix> frontier{id};
    for (int len = 1; !frontier.empty(); ++len) {
        std::vector<IntMatrix> next;
        for (const auto& w : frontier)
            for (Node i = 1; i <= n; ++i) {
                IntMatrix v = multiply(w, reflection_matrix(g, i));
                if (seen.emplace(v, len).second) next.push_back(v);
            }
        frontier = std::move(next);
    }
    return seen;
}

inline IntMatrix word_matrix(const CartanDatum& g, const WeylWord& w)
{
    const int n = g.rank();
    IntMatrix M(n, std::vector<std::int64_t>(n, 0));
    for (int r = 0; r < n; ++r) M[r][r] = 1;
    for (Node i : w.letters) M = multiply(M, reflection_matrix(g, i));
    return M;
}

inline WeylWord random_word(const CartanDatum& g, int max_len)
{
    WeylWord w;
    const auto len = uniform(0, max_len);
    for (std::int64_t t = 0; t < len; ++t) w.letters.push_back(static_cast<Node>(uniform(1, g.rank())));
    return w;
}

} // namespace testsupport
