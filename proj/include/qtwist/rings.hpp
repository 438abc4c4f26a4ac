#pragma once

// Substitutions between the Y-, A- and Psi-pictures, and usual characters.

#include <algorithm>
#include <limits>
#include <string>

#include "poly.hpp"

namespace qtwist {

/// Y-expansion of a single A_{i,s}.
inline YMonomial a_variable_to_y(const CartanDatum& g, Node i, std::int64_t s)
{
    const int di = g.symmetrizer(i);
    YMonomial m = YMonomial::var(i, s - di) * YMonomial::var(i, s + di);
    for (Node j = 1; j <= g.rank(); ++j) {
        switch (g.cartan(j, i)) {
        case -1:
            m *= YMonomial::var(j, s, -1);
            break;
        case -2:
            m *= YMonomial::var(j, s - 1, -1) * YMonomial::var(j, s + 1, -1);
            break;
        case -3:
            m *= YMonomial::var(j, s - 2, -1) * YMonomial::var(j, s, -1) * YMonomial::var(j, s + 2, -1);
            break;
        default:
            break;
        }
    }
    return m;
}

/// Substitute every A_{i,s}; the e-part must be trivial.
inline YMonomial a_expand_to_y(const CartanDatum& g, const CAMonomial& m)
{
    if (!m.e.empty()) throw math_error("not-an-A-monomial", "e-part present in A-to-Y expansion");
    YMonomial out;
    for (const auto& [k, n] : m.a) out *= a_variable_to_y(g, k.node, k.shift).pow(n);
    return out;
}

inline YPoly a_expand_to_y(const CartanDatum& g, const CAPoly& p)
{
    return p.map_monomials([&](const CAMonomial& m) { return a_expand_to_y(g, m); });
}

/// Inverse of a_expand_to_y. The lowest-shift Y of A_{i,s} is Y_{i,s-d_i} and no other variable of
/// A_{i,s} sits that low, so the exponents can be read off from the bottom up.
inline CAMonomial y_ratio_to_a(const CartanDatum& g, const YMonomial& m)
{
    CAMonomial out;
    if (m.is_one()) return out;
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    for (const auto& [k, e] : m.y) hi = std::max(hi, k.shift);
    YMonomial rest = m;
    while (!rest.is_one()) {
        std::int64_t t = std::numeric_limits<std::int64_t>::max();
        for (const auto& [k, e] : rest.y) t = std::min(t, k.shift);
        YMonomial step;
        for (const auto& [k, e] : rest.y) {
            if (k.shift != t) continue;
            const std::int64_t s = t + g.symmetrizer(k.node);
            if (s > hi - 1) throw math_error("not-an-A-monomial", "residual Y exponent at shift " + std::to_string(t));
            out.a.add({k.node, s}, e);
            step *= a_variable_to_y(g, k.node, s).pow(e);
        }
        rest = rest / step;
    }
    return out;
}

/// Y_{i,s} -> q^{omega_i} Psi_{i,s-d_i} Psi^{-1}_{i,s+d_i}.
inline LWeightMonomial embed_y_as_lweight(const CartanDatum& g, const YMonomial& m)
{
    LWeightMonomial out;
    for (const auto& [k, e] : m.y) {
        const int d = g.symmetrizer(k.node);
        out.wt.add(k.node, e);
        out.psi.add({k.node, k.shift - d}, e);
        out.psi.add({k.node, k.shift + d}, -e);
    }
    return out;
}

inline LWeightPoly embed_y_as_lweight(const CartanDatum& g, const YPoly& p)
{
    return p.map_monomials([&](const YMonomial& m) { return embed_y_as_lweight(g, m); });
}

// ---------------------------------------------------------------------------
// Usual characters: forget spectral parameters, keep e^{wt}.

inline EMonomial to_e(const CartanDatum& g, const WeightVector& lambda)
{
    (void)g;
    return {sparsify(lambda)};
}

template <class Mono>
EPoly usual_char_from_qchar(const CartanDatum& g, const SparsePoly<Mono>& p)
{
    return p.map_monomials([&](const Mono& m) { return to_e(g, wt_degree(g, m)); });
}

/// e^{lambda} -> e^{w lambda}.
inline EPoly weyl_act_echar(const CartanDatum& g, const WeylWord& w, const EPoly& p)
{
    return p.map_monomials([&](const EMonomial& m) {
        return to_e(g, weyl_act_weight(g, w, densify<omega_basis_tag>(m.wt, g.rank())));
    });
}

} // namespace qtwist
