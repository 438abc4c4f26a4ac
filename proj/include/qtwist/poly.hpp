#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <type_traits>

#include "monomial.hpp"

namespace qtwist {

/// Finite Z-linear combination of monomials; zero coefficients are never stored.
template <class Mono>
class SparsePoly {
public:
    using map_type = std::map<Mono, std::int64_t>;
    using const_iterator = typename map_type::const_iterator;

    SparsePoly() = default;
    SparsePoly(const Mono& m, std::int64_t c = 1) { add(m, c); }

    static SparsePoly one() { return SparsePoly(Mono{}); }

    void add(const Mono& m, std::int64_t c)
    {
        if (c == 0) return;
        auto [it, inserted] = m_terms.try_emplace(m, c);
        if (!inserted && (it->second += c) == 0) m_terms.erase(it);
    }

    std::int64_t coeff(const Mono& m) const
    {
        auto it = m_terms.find(m);
        return it == m_terms.end() ? 0 : it->second;
    }

    bool empty() const noexcept { return m_terms.empty(); }
    std::size_t size() const noexcept { return m_terms.size(); }
    const_iterator begin() const noexcept { return m_terms.begin(); }
    const_iterator end() const noexcept { return m_terms.end(); }
    const map_type& terms() const noexcept { return m_terms; }

    /// Sum of coefficients (the dimension, for a character).
    std::int64_t total() const
    {
        std::int64_t s = 0;
        for (const auto& [m, c] : m_terms) s += c;
        return s;
    }

    SparsePoly& operator+=(const SparsePoly& o)
    {
        for (const auto& [m, c] : o.m_terms) add(m, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o)
    {
        for (const auto& [m, c] : o.m_terms) add(m, -c);
        return *this;
    }
    SparsePoly& operator*=(std::int64_t s)
    {
        if (s == 0) {
            m_terms.clear();
            return *this;
        }
        for (auto& [m, c] : m_terms) c *= s;
        return *this;
    }

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(std::int64_t s, SparsePoly a) { return a *= s; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b)
    {
        SparsePoly r;
        for (const auto& [ma, ca] : a.m_terms)
            for (const auto& [mb, cb] : b.m_terms) r.add(ma * mb, ca * cb);
        return r;
    }
    friend SparsePoly operator*(const SparsePoly& a, const Mono& m)
    {
        SparsePoly r;
        for (const auto& [ma, ca] : a.m_terms) r.m_terms.emplace(ma * m, ca);
        return r;
    }

    /// Apply a monomial map term by term, accumulating coefficients.
    template <class F>
    auto map_monomials(F&& f) const
    {
        using Out = std::decay_t<decltype(f(std::declval<const Mono&>()))>;
        SparsePoly<Out> r;
        for (const auto& [m, c] : m_terms) r.add(f(m), c);
        return r;
    }

    template <class Pred>
    SparsePoly filter(Pred&& p) const
    {
        SparsePoly r;
        for (const auto& [m, c] : m_terms)
            if (p(m, c)) r.m_terms.emplace(m, c);
        return r;
    }

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

private:
    map_type m_terms;
};

using YPoly = SparsePoly<YMonomial>;
using CAPoly = SparsePoly<CAMonomial>;
using LWeightPoly = SparsePoly<LWeightMonomial>;
using EPoly = SparsePoly<EMonomial>;

} // namespace qtwist
