#pragma once

// Truncated elements of the completion of Z[e^{alpha}, A_{i,s}] along the cone w(Lambda_-).

#include <algorithm>
#include <string>
#include <utility>

#include "rings.hpp"

namespace qtwist {

class GradedSeries {
public:
    GradedSeries() = default;
    GradedSeries(const CartanDatum& g, const WeylWord& w, std::int64_t height_cap)
        : m_rank(g.rank()), m_cone(g, w), m_cap(height_cap)
    {
    }
    GradedSeries(int rank, Cone cone, std::int64_t height_cap) : m_rank(rank), m_cone(std::move(cone)), m_cap(height_cap) {}

    /// Terms above the cap are dropped; a degree outside the cone throws "degree-outside-cone".
    static GradedSeries from_poly(const CartanDatum& g, const WeylWord& w, std::int64_t height_cap, const CAPoly& p)
    {
        GradedSeries s(g, w, height_cap);
        for (const auto& [m, c] : p) s.add(m, c);
        return s;
    }

    const Cone& cone() const noexcept { return m_cone; }
    const WeylWord& cone_word() const noexcept { return m_cone.word(); }
    std::int64_t height_cap() const noexcept { return m_cap; }
    int rank() const noexcept { return m_rank; }
    const CAPoly& terms() const noexcept { return m_terms; }
    std::size_t size() const noexcept { return m_terms.size(); }

    RootVector degree(const CAMonomial& m) const
    {
        RootVector v = densify<root_basis_tag>(m.e, m_rank);
        for (const auto& [k, x] : m.a) v(k.node) += x;
        return v;
    }

    std::int64_t height(const CAMonomial& m) const
    {
        auto cc = m_cone.coords(degree(m));
        if (!cc) throw math_error("degree-outside-cone", "monomial degree not in the grading cone");
        return cc->height;
    }

    void add(const CAMonomial& m, std::int64_t c)
    {
        if (c == 0) return;
        if (height(m) > m_cap) return;
        m_terms.add(m, c);
    }

    /// Same terms viewed with a smaller cap.
    GradedSeries truncated(std::int64_t cap) const
    {
        GradedSeries r(m_rank, m_cone, std::min(cap, m_cap));
        for (const auto& [m, c] : m_terms)
            if (height(m) <= r.m_cap) r.m_terms.add(m, c);
        return r;
    }

    GradedSeries& operator+=(const GradedSeries& o)
    {
        check_compatible(o);
        for (const auto& [m, c] : o.m_terms) add(m, c);
        return *this;
    }
    GradedSeries& operator-=(const GradedSeries& o)
    {
        check_compatible(o);
        for (const auto& [m, c] : o.m_terms) add(m, -c);
        return *this;
    }
    friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
    friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }

    /// Product truncated back to the common cap.
    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b)
    {
        a.check_compatible(b);
        GradedSeries r(a.m_rank, a.m_cone, std::min(a.m_cap, b.m_cap));
        std::vector<std::pair<std::int64_t, std::pair<const CAMonomial*, std::int64_t>>> bs;
        for (const auto& [m, c] : b.m_terms) bs.push_back({b.height(m), {&m, c}});
        std::sort(bs.begin(), bs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        for (const auto& [ma, ca] : a.m_terms) {
            const std::int64_t ha = a.height(ma);
            for (const auto& [hb, mc] : bs) {
                if (ha + hb > r.m_cap) break;
                r.m_terms.add(ma * *mc.first, ca * mc.second);
            }
        }
        return r;
    }

    friend bool operator==(const GradedSeries& a, const GradedSeries& b)
    {
        return a.m_cap == b.m_cap && a.m_cone == b.m_cone && a.m_terms == b.m_terms;
    }

    /// Coefficient of the degree-0 part, which must be concentrated on the monomial 1.
    bool has_unit_leading_term() const
    {
        bool ok = false;
        for (const auto& [m, c] : m_terms) {
            if (height(m) != 0) continue;
            if (!m.is_one() || c != 1) return false;
            ok = true;
        }
        return ok;
    }

private:
    void check_compatible(const GradedSeries& o) const
    {
        if (!(m_cone == o.m_cone)) throw math_error("cone-mismatch", "series graded by different cones");
    }

    int m_rank = 0;
    Cone m_cone;
    std::int64_t m_cap = 0;
    CAPoly m_terms;
};

/// The unique c with c * a = S up to the height cap, solved one height at a time.
inline GradedSeries graded_divide(const GradedSeries& S, const GradedSeries& a)
{
    if (!a.has_unit_leading_term()) throw math_error("non-unit-leading-term", "divisor has no unit constant term");
    if (!(S.cone() == a.cone())) throw math_error("cone-mismatch", "dividend and divisor graded by different cones");
    const std::int64_t cap = std::min(S.height_cap(), a.height_cap());
    GradedSeries c(S.rank(), S.cone(), cap);
    GradedSeries residual = S.truncated(cap);
    for (std::int64_t h = 0; h <= cap; ++h) {
        GradedSeries layer(S.rank(), S.cone(), cap);
        for (const auto& [m, coeff] : residual.terms())
            if (residual.height(m) == h) layer.add(m, coeff);
        if (layer.terms().empty()) continue;
        c += layer;
        residual -= layer * a.truncated(cap);
    }
    return c;
}

} // namespace qtwist
