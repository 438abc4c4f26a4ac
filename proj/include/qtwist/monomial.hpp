#pragma once

// Exponent maps and the three monomial flavors:
//   YMonomial      products of Y_{i,aq^s}
//   CAMonomial     products of A_{i,aq^s} and e^{lambda}, lambda in the root lattice
//   LWeightMonomial products of Psi_{i,aq^s} times q^{lambda}, lambda in P

#include <algorithm>
#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "cartan.hpp"

namespace qtwist {

/// The spectral parameter a*q^shift attached to a node.
struct SpectralIndex {
    Node node = 1;
    std::int64_t shift = 0;

    friend bool operator==(const SpectralIndex&, const SpectralIndex&) = default;
    friend auto operator<=>(const SpectralIndex&, const SpectralIndex&) = default;
};

/// Finite map Key -> nonzero integer, kept sorted by key.
template <class Key>
class ExponentMap {
public:
    using value_type = std::pair<Key, std::int64_t>;
    using const_iterator = typename std::vector<value_type>::const_iterator;

    ExponentMap() = default;

    static ExponentMap single(const Key& k, std::int64_t e)
    {
        ExponentMap m;
        m.add(k, e);
        return m;
    }

    std::int64_t get(const Key& k) const
    {
        auto it = find(k);
        return it != m_terms.end() && it->first == k ? it->second : 0;
    }

    void add(const Key& k, std::int64_t e)
    {
        if (e == 0) return;
        auto it = std::lower_bound(m_terms.begin(), m_terms.end(), k,
                                   [](const value_type& p, const Key& key) { return p.first < key; });
        if (it != m_terms.end() && it->first == k) {
            it->second += e;
            if (it->second == 0) m_terms.erase(it);
        } else {
            m_terms.insert(it, {k, e});
        }
    }

    bool empty() const noexcept { return m_terms.empty(); }
    std::size_t size() const noexcept { return m_terms.size(); }
    const_iterator begin() const noexcept { return m_terms.begin(); }
    const_iterator end() const noexcept { return m_terms.end(); }

    ExponentMap& operator+=(const ExponentMap& o)
    {
        if (o.empty()) return *this;
        if (empty()) return *this = o;
        std::vector<value_type> out;
        out.reserve(m_terms.size() + o.m_terms.size());
        auto a = m_terms.begin();
        auto b = o.m_terms.begin();
        while (a != m_terms.end() || b != o.m_terms.end()) {
            if (b == o.m_terms.end() || (a != m_terms.end() && a->first < b->first)) {
                out.push_back(*a++);
            } else if (a == m_terms.end() || b->first < a->first) {
                out.push_back(*b++);
            } else {
                if (auto s = a->second + b->second; s != 0) out.emplace_back(a->first, s);
                ++a;
                ++b;
            }
        }
        m_terms = std::move(out);
        return *this;
    }

    ExponentMap scaled(std::int64_t s) const
    {
        if (s == 0) return {};
        ExponentMap r = *this;
        for (auto& p : r.m_terms) p.second *= s;
        return r;
    }

    bool all_nonnegative() const
    {
        return std::all_of(m_terms.begin(), m_terms.end(), [](const value_type& p) { return p.second >= 0; });
    }

    friend ExponentMap operator+(ExponentMap a, const ExponentMap& b) { return a += b; }
    friend ExponentMap operator-(const ExponentMap& a, const ExponentMap& b) { return a + b.scaled(-1); }

    friend bool operator==(const ExponentMap&, const ExponentMap&) = default;
    friend auto operator<=>(const ExponentMap&, const ExponentMap&) = default;

private:
    const_iterator find(const Key& k) const
    {
        return std::lower_bound(m_terms.begin(), m_terms.end(), k,
                                [](const value_type& p, const Key& key) { return p.first < key; });
    }

    std::vector<value_type> m_terms;
};

struct YMonomial {
    ExponentMap<SpectralIndex> y;

    static YMonomial var(Node i, std::int64_t s, std::int64_t e = 1)
    {
        return {ExponentMap<SpectralIndex>::single({i, s}, e)};
    }

    bool is_one() const noexcept { return y.empty(); }
    bool is_dominant() const { return y.all_nonnegative(); }
    /// No negative power of any Y_{j,.}.
    bool is_dominant_at(Node j) const
    {
        return std::all_of(y.begin(), y.end(), [j](const auto& p) { return p.first.node != j || p.second >= 0; });
    }

    YMonomial inverse() const { return {y.scaled(-1)}; }
    YMonomial pow(std::int64_t n) const { return {y.scaled(n)}; }

    YMonomial& operator*=(const YMonomial& o)
    {
        y += o.y;
        return *this;
    }
    friend YMonomial operator*(YMonomial a, const YMonomial& b) { return a *= b; }
    friend YMonomial operator/(const YMonomial& a, const YMonomial& b) { return {a.y - b.y}; }

    friend bool operator==(const YMonomial&, const YMonomial&) = default;
    friend auto operator<=>(const YMonomial&, const YMonomial&) = default;
};

/// Monomial in A_{i,s} and e^{lambda}; e holds lambda in simple-root coordinates (sparse).
struct CAMonomial {
    ExponentMap<SpectralIndex> a;
    ExponentMap<Node> e;

    static CAMonomial A(Node i, std::int64_t s, std::int64_t n = 1)
    {
        return {ExponentMap<SpectralIndex>::single({i, s}, n), {}};
    }
    static CAMonomial E(const RootVector& lambda)
    {
        CAMonomial m;
        for (Node i = 1; i <= static_cast<Node>(lambda.size()); ++i) m.e.add(i, lambda(i));
        return m;
    }

    bool is_one() const noexcept { return a.empty() && e.empty(); }
    bool is_pure_e() const noexcept { return a.empty(); }
    bool is_e_free() const noexcept { return e.empty(); }

    CAMonomial inverse() const { return {a.scaled(-1), e.scaled(-1)}; }

    CAMonomial& operator*=(const CAMonomial& o)
    {
        a += o.a;
        e += o.e;
        return *this;
    }
    friend CAMonomial operator*(CAMonomial x, const CAMonomial& y) { return x *= y; }
    friend CAMonomial operator/(const CAMonomial& x, const CAMonomial& y) { return x * y.inverse(); }

    friend bool operator==(const CAMonomial&, const CAMonomial&) = default;
    friend auto operator<=>(const CAMonomial&, const CAMonomial&) = default;
};

/// Psi-monomial with weight prefactor q^{lambda}; wt holds lambda in omega coordinates (sparse).
struct LWeightMonomial {
    ExponentMap<SpectralIndex> psi;
    ExponentMap<Node> wt;

    static LWeightMonomial var(Node i, std::int64_t s, std::int64_t e = 1)
    {
        return {ExponentMap<SpectralIndex>::single({i, s}, e), {}};
    }
    static LWeightMonomial weight(const WeightVector& lambda)
    {
        LWeightMonomial m;
        for (Node i = 1; i <= static_cast<Node>(lambda.size()); ++i) m.wt.add(i, lambda(i));
        return m;
    }

    bool is_one() const noexcept { return psi.empty() && wt.empty(); }

    LWeightMonomial inverse() const { return {psi.scaled(-1), wt.scaled(-1)}; }

    LWeightMonomial& operator*=(const LWeightMonomial& o)
    {
        psi += o.psi;
        wt += o.wt;
        return *this;
    }
    friend LWeightMonomial operator*(LWeightMonomial x, const LWeightMonomial& y) { return x *= y; }
    friend LWeightMonomial operator/(const LWeightMonomial& x, const LWeightMonomial& y) { return x * y.inverse(); }

    friend bool operator==(const LWeightMonomial&, const LWeightMonomial&) = default;
    friend auto operator<=>(const LWeightMonomial&, const LWeightMonomial&) = default;
};

/// Monomial e^{lambda} with lambda in the weight lattice (omega coordinates); usual characters.
struct EMonomial {
    ExponentMap<Node> wt;

    friend EMonomial operator*(EMonomial x, const EMonomial& y)
    {
        x.wt += y.wt;
        return x;
    }
    friend bool operator==(const EMonomial&, const EMonomial&) = default;
    friend auto operator<=>(const EMonomial&, const EMonomial&) = default;
};

template <class Tag>
LatticeVector<Tag> densify(const ExponentMap<Node>& m, int rank)
{
    LatticeVector<Tag> v(static_cast<std::size_t>(rank));
    for (const auto& [i, x] : m) v(i) = x;
    return v;
}

template <class Tag>
ExponentMap<Node> sparsify(const LatticeVector<Tag>& v)
{
    ExponentMap<Node> m;
    for (Node i = 1; i <= static_cast<Node>(v.size()); ++i) m.add(i, v(i));
    return m;
}

// ---------------------------------------------------------------------------
// Degrees

inline WeightVector wt_degree(const CartanDatum& g, const YMonomial& m)
{
    WeightVector v(g.rank());
    for (const auto& [k, x] : m.y) v(k.node) += x;
    return v;
}

/// Lambda-degree in root coordinates: deg A_{i,s} = alpha_i plus the e-part.
inline RootVector root_degree(const CartanDatum& g, const CAMonomial& m)
{
    RootVector v = densify<root_basis_tag>(m.e, g.rank());
    for (const auto& [k, x] : m.a) v(k.node) += x;
    return v;
}

inline WeightVector wt_degree(const CartanDatum& g, const CAMonomial& m) { return g.to_omega(root_degree(g, m)); }

inline WeightVector wt_degree(const CartanDatum& g, const LWeightMonomial& m)
{
    return densify<omega_basis_tag>(m.wt, g.rank());
}

inline WeightVector wt_degree(const CartanDatum& g, const EMonomial& m) { return densify<omega_basis_tag>(m.wt, g.rank()); }

} // namespace qtwist
