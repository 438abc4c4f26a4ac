#pragma once

// Finite-type root data: Cartan matrices (Bourbaki numbering), weight and root
// lattices, Weyl group words and the cones w(Lambda_-).
//
// Conventions used throughout the library:
//   * nodes are 1-based labels (Node), matching the text syntax Y[1,0];
//   * C(i,j) = <alpha_i^vee, alpha_j>, so alpha_j = sum_i C(i,j) omega_i;
//   * d_i is the symmetrizer with D*C symmetric and <alpha_i, omega_j> = delta_ij d_i.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "errors.hpp"

namespace qtwist {

using Node = int;
using Rational = boost::rational<std::int64_t>;

/// Integer vector in a fixed basis; the tag keeps omega- and alpha-coordinates apart.
template <class Tag>
struct LatticeVector {
    std::vector<std::int64_t> c;

    LatticeVector() = default;
    explicit LatticeVector(std::size_t n) : c(n, 0) {}
    explicit LatticeVector(std::vector<std::int64_t> v) : c(std::move(v)) {}
    LatticeVector(std::initializer_list<std::int64_t> il) : c(il) {}

    std::size_t size() const noexcept { return c.size(); }
    /// 1-based coordinate access.
    std::int64_t& operator()(Node i) { return c.at(static_cast<std::size_t>(i - 1)); }
    std::int64_t operator()(Node i) const { return c.at(static_cast<std::size_t>(i - 1)); }

    bool is_zero() const
    {
        return std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x == 0; });
    }

    LatticeVector& operator+=(const LatticeVector& o)
    {
        for (std::size_t k = 0; k < c.size(); ++k) c[k] += o.c[k];
        return *this;
    }
    LatticeVector& operator-=(const LatticeVector& o)
    {
        for (std::size_t k = 0; k < c.size(); ++k) c[k] -= o.c[k];
        return *this;
    }
    friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
    friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
    friend LatticeVector operator-(LatticeVector a)
    {
        for (auto& x : a.c) x = -x;
        return a;
    }
    friend LatticeVector operator*(std::int64_t s, LatticeVector a)
    {
        for (auto& x : a.c) x *= s;
        return a;
    }

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

struct omega_basis_tag;
struct root_basis_tag;

/// Weight in the fundamental-weight basis.
using WeightVector = LatticeVector<omega_basis_tag>;
/// Element of the root lattice Lambda in the simple-root basis.
using RootVector = LatticeVector<root_basis_tag>;

/// A word s_{i_1} ... s_{i_r}; as an operator the rightmost letter acts first.
struct WeylWord {
    std::vector<Node> letters;

    WeylWord() = default;
    WeylWord(std::initializer_list<Node> il) : letters(il) {}
    explicit WeylWord(std::vector<Node> v) : letters(std::move(v)) {}

    std::size_t size() const noexcept { return letters.size(); }
    bool empty() const noexcept { return letters.empty(); }

    WeylWord inverse() const { return WeylWord(std::vector<Node>(letters.rbegin(), letters.rend())); }
    friend WeylWord operator*(const WeylWord& a, const WeylWord& b)
    {
        WeylWord r = a;
        r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
        return r;
    }

    friend bool operator==(const WeylWord&, const WeylWord&) = default;
    friend auto operator<=>(const WeylWord&, const WeylWord&) = default;
};

class CartanDatum {
public:
    char family() const noexcept { return m_family; }
    int rank() const noexcept { return m_rank; }
    const std::string& label() const noexcept { return m_label; }

    int cartan(Node i, Node j) const { return m_C.at(idx(i)).at(idx(j)); }
    int symmetrizer(Node i) const { return m_d.at(idx(i)); }
    int coxeter_number() const noexcept { return m_coxeter; }
    int dual_coxeter() const noexcept { return m_dual_coxeter; }
    int lacing() const noexcept { return m_lacing; }
    /// The involution with w0(alpha_i) = -alpha_{bar i}.
    Node bar(Node i) const { return m_bar.at(idx(i)); }

    const std::vector<RootVector>& positive_roots() const noexcept { return m_positive; }
    /// A reduced word for the longest element.
    const WeylWord& longest_word() const noexcept { return m_w0; }

    bool valid_node(Node i) const noexcept { return i >= 1 && i <= m_rank; }

    WeightVector omega(Node i) const
    {
        WeightVector v(rank());
        v(i) = 1;
        return v;
    }
    RootVector alpha(Node i) const
    {
        RootVector v(rank());
        v(i) = 1;
        return v;
    }

    WeightVector to_omega(const RootVector& beta) const
    {
        WeightVector out(rank());
        for (Node k = 1; k <= m_rank; ++k)
            for (Node j = 1; j <= m_rank; ++j) out(k) += cartan(k, j) * beta(j);
        return out;
    }

    /// Exact simple-root coordinates of a weight.
    std::vector<Rational> root_coords(const WeightVector& lambda) const
    {
        std::vector<Rational> out(static_cast<std::size_t>(m_rank), Rational(0));
        for (int r = 0; r < m_rank; ++r)
            for (int k = 0; k < m_rank; ++k) out[r] += m_Cinv[r][k] * lambda.c[k];
        return out;
    }

    /// Root-lattice view of lambda, or nullopt when lambda is not in Lambda.
    std::optional<RootVector> to_root(const WeightVector& lambda) const
    {
        RootVector out(rank());
        auto rc = root_coords(lambda);
        for (int r = 0; r < m_rank; ++r) {
            if (rc[r].denominator() != 1) return std::nullopt;
            out.c[r] = rc[r].numerator();
        }
        return out;
    }

    /// s_i on a weight: lambda - <alpha_i^vee, lambda> alpha_i.
    WeightVector reflect(Node i, WeightVector lambda) const
    {
        const std::int64_t p = lambda(i);
        for (Node j = 1; j <= m_rank; ++j) lambda(j) -= p * cartan(j, i);
        return lambda;
    }

    RootVector reflect(Node i, RootVector beta) const
    {
        std::int64_t p = 0;
        for (Node j = 1; j <= m_rank; ++j) p += cartan(i, j) * beta(j);
        beta(i) -= p;
        return beta;
    }

    /// Invariant form (alpha, lambda) for alpha in Lambda, lambda in P: <alpha_i, omega_j> = delta_ij d_i.
    std::int64_t pairing(const RootVector& alpha, const WeightVector& lambda) const
    {
        std::int64_t s = 0;
        for (Node i = 1; i <= m_rank; ++i) s += alpha(i) * lambda(i) * symmetrizer(i);
        return s;
    }

    friend bool operator==(const CartanDatum& a, const CartanDatum& b) { return a.m_label == b.m_label; }

    friend CartanDatum build_cartan(char family, int rank);

private:
    CartanDatum() = default;

    std::size_t idx(Node i) const
    {
        if (!valid_node(i)) throw math_error("unknown-node", "node " + std::to_string(i) + " not in " + m_label);
        return static_cast<std::size_t>(i - 1);
    }

    void finish();

    char m_family = 'A';
    int m_rank = 0;
    std::string m_label;
    std::vector<std::vector<int>> m_C;
    std::vector<int> m_d;
    std::vector<std::vector<Rational>> m_Cinv;
    int m_coxeter = 0;
    int m_dual_coxeter = 0;
    int m_lacing = 1;
    std::vector<Node> m_bar;
    std::vector<RootVector> m_positive;
    WeylWord m_w0;
};

// ---------------------------------------------------------------------------
// Weyl group actions

inline WeightVector weyl_act_weight(const CartanDatum& g, const WeylWord& w, WeightVector lambda)
{
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) lambda = g.reflect(*it, lambda);
    return lambda;
}

inline RootVector weyl_act_root(const CartanDatum& g, const WeylWord& w, RootVector beta)
{
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) beta = g.reflect(*it, beta);
    return beta;
}

inline bool is_positive_root_vector(const RootVector& b)
{
    return !b.is_zero() && std::all_of(b.c.begin(), b.c.end(), [](std::int64_t x) { return x >= 0; });
}

/// Number of positive roots sent to negative roots.
inline int inversion_count(const CartanDatum& g, const WeylWord& w)
{
    int n = 0;
    for (const auto& a : g.positive_roots())
        if (!is_positive_root_vector(weyl_act_root(g, w, a))) ++n;
    return n;
}

/// Reduced word for the same group element. Letters are appended left to right; when
/// w s_i is shorter than w the exchange condition locates the letter to delete.
inline WeylWord reduce_word(const CartanDatum& g, const WeylWord& word)
{
    std::vector<Node> red;
    for (Node i : word.letters) {
        if (!g.valid_node(i)) throw math_error("unknown-node", "letter " + std::to_string(i) + " in Weyl word");
        RootVector beta = g.alpha(i);
        bool deleted = false;
        for (std::size_t t = red.size(); t-- > 0;) {
            if (beta == g.alpha(red[t])) {
                red.erase(red.begin() + static_cast<std::ptrdiff_t>(t));
                deleted = true;
                break;
            }
            beta = g.reflect(red[t], beta);
        }
        if (!deleted) red.push_back(i);
    }
    return WeylWord(std::move(red));
}

inline int word_length(const CartanDatum& g, const WeylWord& w) { return static_cast<int>(reduce_word(g, w).size()); }

/// The image of rho = sum omega_i identifies a group element uniquely.
inline WeightVector element_signature(const CartanDatum& g, const WeylWord& w)
{
    WeightVector rho(g.rank());
    for (auto& x : rho.c) x = 1;
    return weyl_act_weight(g, w, rho);
}

inline bool same_element(const CartanDatum& g, const WeylWord& a, const WeylWord& b)
{
    return element_signature(g, a) == element_signature(g, b);
}

// ---------------------------------------------------------------------------
// Cones w(Lambda_-) = sum_i N w(-alpha_i)

/// Coordinates of a degree in the cone w(Lambda_-) together with its height.
struct ConeCoords {
    std::vector<std::int64_t> coords;
    std::int64_t height = 0;
};

/// Precomputed frame for the cone w(Lambda_-): the integer matrix of w^{-1} on root coordinates.
class Cone {
public:
    Cone() = default;
    Cone(const CartanDatum& g, const WeylWord& w) : m_word(reduce_word(g, w)), m_rank(g.rank())
    {
        const WeylWord inv = m_word.inverse();
        m_inv.assign(static_cast<std::size_t>(m_rank), std::vector<std::int64_t>(static_cast<std::size_t>(m_rank)));
        for (Node j = 1; j <= m_rank; ++j) {
            RootVector col = weyl_act_root(g, inv, g.alpha(j));
            for (Node r = 1; r <= m_rank; ++r) m_inv[r - 1][j - 1] = col(r);
        }
    }

    const WeylWord& word() const noexcept { return m_word; }
    int rank() const noexcept { return m_rank; }

    /// Coordinates c with lambda = sum c_i w(-alpha_i), c_i >= 0; nullopt when outside the cone.
    std::optional<ConeCoords> coords(const RootVector& lambda) const
    {
        ConeCoords out;
        out.coords.resize(static_cast<std::size_t>(m_rank));
        for (int r = 0; r < m_rank; ++r) {
            std::int64_t v = 0;
            for (int j = 0; j < m_rank; ++j) v -= m_inv[r][j] * lambda.c[j];
            if (v < 0) return std::nullopt;
            out.coords[r] = v;
            out.height += v;
        }
        return out;
    }

    /// Linear height functional; equals the cone height on cone elements.
    std::int64_t height(const RootVector& lambda) const
    {
        std::int64_t h = 0;
        for (int r = 0; r < m_rank; ++r)
            for (int j = 0; j < m_rank; ++j) h -= m_inv[r][j] * lambda.c[j];
        return h;
    }

    bool contains(const RootVector& lambda) const { return coords(lambda).has_value(); }

    friend bool operator==(const Cone& a, const Cone& b) { return a.m_inv == b.m_inv; }

private:
    WeylWord m_word;
    int m_rank = 0;
    std::vector<std::vector<std::int64_t>> m_inv;
};

inline std::optional<ConeCoords> cone_coords(const CartanDatum& g, const RootVector& lambda, const WeylWord& w)
{
    return Cone(g, w).coords(lambda);
}

inline std::optional<ConeCoords> cone_coords(const CartanDatum& g, const WeightVector& lambda, const WeylWord& w)
{
    auto root = g.to_root(lambda);
    if (!root) return std::nullopt;
    return Cone(g, w).coords(*root);
}

// ---------------------------------------------------------------------------
// Construction

namespace detail {

inline void link(std::vector<std::vector<int>>& C, int i, int j, int cij = -1, int cji = -1)
{
    C[i - 1][j - 1] = cij;
    C[j - 1][i - 1] = cji;
}

} // namespace detail

inline void CartanDatum::finish()
{
    const auto n = static_cast<std::size_t>(m_rank);

    // Exact inverse by Gauss-Jordan over Q.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) a[r][k] = Rational(m_C[r][k]);
        a[r][n + r] = Rational(1);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (a[piv][col] == Rational(0)) ++piv;
        std::swap(a[piv], a[col]);
        const Rational p = a[col][col];
        for (auto& x : a[col]) x /= p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == Rational(0)) continue;
            const Rational f = a[r][col];
            for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
        }
    }
    m_Cinv.assign(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) m_Cinv[r][k] = a[r][n + k];

    // Positive roots: closure of the simple roots under reflections.
    std::set<RootVector> roots;
    std::vector<RootVector> frontier;
    for (Node i = 1; i <= m_rank; ++i) {
        roots.insert(alpha(i));
        frontier.push_back(alpha(i));
    }
    while (!frontier.empty()) {
        RootVector b = frontier.back();
        frontier.pop_back();
        for (Node i = 1; i <= m_rank; ++i) {
            RootVector r = reflect(i, b);
            if (roots.insert(r).second) frontier.push_back(r);
        }
    }
    m_positive.clear();
    for (const auto& r : roots)
        if (is_positive_root_vector(r)) m_positive.push_back(r);
    std::sort(m_positive.begin(), m_positive.end(), [](const RootVector& x, const RootVector& y) {
        auto hx = std::accumulate(x.c.begin(), x.c.end(), std::int64_t{0});
        auto hy = std::accumulate(y.c.begin(), y.c.end(), std::int64_t{0});
        return hx != hy ? hx < hy : x < y;
    });

    // Longest element: extend while some simple root stays positive.
    m_w0 = WeylWord{};
    for (bool grew = true; grew;) {
        grew = false;
        for (Node i = 1; i <= m_rank; ++i) {
            if (is_positive_root_vector(weyl_act_root(*this, m_w0, alpha(i)))) {
                m_w0.letters.push_back(i);
                grew = true;
                break;
            }
        }
    }

    m_bar.assign(n, 0);
    for (Node i = 1; i <= m_rank; ++i) {
        RootVector img = -weyl_act_root(*this, m_w0, alpha(i));
        for (Node j = 1; j <= m_rank; ++j)
            if (img == alpha(j)) m_bar[i - 1] = j;
    }
}

/// Finite-type Cartan datum in Bourbaki numbering.
inline CartanDatum build_cartan(char family, int rank)
{
    auto unsupported = [&] {
        return math_error("unsupported-type", std::string(1, family) + std::to_string(rank));
    };
    const bool ok = (family == 'A' && rank >= 1) || (family == 'B' && rank >= 2) || (family == 'C' && rank >= 2) ||
                    (family == 'D' && rank >= 4) || (family == 'E' && rank >= 6 && rank <= 8) ||
                    (family == 'F' && rank == 4) || (family == 'G' && rank == 2);
    if (!ok || rank > 12) throw unsupported();

    CartanDatum g;
    g.m_family = family;
    g.m_rank = rank;
    g.m_label = std::string(1, family) + std::to_string(rank);
    auto& C = g.m_C;
    C.assign(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), 0));
    for (int i = 0; i < rank; ++i) C[i][i] = 2;
    g.m_d.assign(static_cast<std::size_t>(rank), 1);

    using detail::link;
    switch (family) {
    case 'A':
        for (int i = 1; i < rank; ++i) link(C, i, i + 1);
        g.m_coxeter = g.m_dual_coxeter = rank + 1;
        break;
    case 'B':
        for (int i = 1; i < rank - 1; ++i) link(C, i, i + 1);
        link(C, rank - 1, rank, -1, -2);
        for (int i = 0; i < rank - 1; ++i) g.m_d[i] = 2;
        g.m_coxeter = 2 * rank;
        g.m_dual_coxeter = 2 * rank - 1;
        g.m_lacing = 2;
        break;
    case 'C':
        for (int i = 1; i < rank - 1; ++i) link(C, i, i + 1);
        link(C, rank - 1, rank, -2, -1);
        g.m_d[rank - 1] = 2;
        g.m_coxeter = 2 * rank;
        g.m_dual_coxeter = rank + 1;
        g.m_lacing = 2;
        break;
    case 'D':
        for (int i = 1; i < rank - 1; ++i) link(C, i, i + 1);
        link(C, rank - 2, rank);
        g.m_coxeter = g.m_dual_coxeter = 2 * rank - 2;
        break;
    case 'E':
        link(C, 1, 3);
        link(C, 3, 4);
        link(C, 2, 4);
        for (int i = 4; i < rank; ++i) link(C, i, i + 1);
        g.m_coxeter = g.m_dual_coxeter = (rank == 6 ? 12 : rank == 7 ? 18 : 30);
        break;
    case 'F':
        link(C, 1, 2);
        link(C, 2, 3, -1, -2);
        link(C, 3, 4);
        g.m_d = {2, 2, 1, 1};
        g.m_coxeter = 12;
        g.m_dual_coxeter = 9;
        g.m_lacing = 2;
        break;
    case 'G':
        link(C, 1, 2, -3, -1);
        g.m_d = {1, 3};
        g.m_coxeter = 6;
        g.m_dual_coxeter = 4;
        g.m_lacing = 3;
        break;
    default:
        throw unsupported();
    }
    g.finish();
    return g;
}

/// Parses labels such as "A2", "B2", "G2", "E6".
inline CartanDatum build_cartan(std::string_view label)
{
    if (label.size() < 2) throw math_error("unsupported-type", std::string(label));
    const char fam = label[0];
    int rank = 0;
    for (char ch : label.substr(1)) {
        if (ch < '0' || ch > '9') throw math_error("unsupported-type", std::string(label));
        rank = rank * 10 + (ch - '0');
        if (rank > 100) throw math_error("unsupported-type", std::string(label));
    }
    return build_cartan(fam, rank);
}

} // namespace qtwist
