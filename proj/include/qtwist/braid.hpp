#pragma once

// Braid group actions T_i on Y-monomials and on l-weights.

#include "rings.hpp"

namespace qtwist {

namespace detail {

inline void check_dir(int dir)
{
    if (dir != 1 && dir != -1) throw math_error("bad-direction", "direction must be +1 or -1, got " + std::to_string(dir));
}

/// T_i^{dir} Y_{i,s}.
inline YMonomial braid_image_y(const CartanDatum& g, Node i, int dir, std::int64_t s)
{
    const int di = g.symmetrizer(i);
    YMonomial m = YMonomial::var(i, s + 2 * dir * di, -1);
    for (Node j = 1; j <= g.rank(); ++j) {
        switch (g.cartan(j, i)) {
        case -1:
            m *= YMonomial::var(j, s + dir * di);
            break;
        case -2:
            m *= YMonomial::var(j, s + dir) * YMonomial::var(j, s + 3 * dir);
            break;
        case -3:
            m *= YMonomial::var(j, s + dir) * YMonomial::var(j, s + 3 * dir) * YMonomial::var(j, s + 5 * dir);
            break;
        default:
            break;
        }
    }
    return m;
}

/// T_i^{dir} Psi_{i,s}; note the products run over C_ij rather than C_ji.
inline ExponentMap<SpectralIndex> braid_image_psi(const CartanDatum& g, Node i, int dir, std::int64_t s)
{
    const int di = g.symmetrizer(i);
    ExponentMap<SpectralIndex> m;
    m.add({i, s + 2 * dir * di}, -1);
    for (Node j = 1; j <= g.rank(); ++j) {
        switch (g.cartan(i, j)) {
        case -1:
            m.add({j, s + dir * di}, 1);
            break;
        case -2:
            m.add({j, s}, 1);
            m.add({j, s + 2 * dir}, 1);
            break;
        case -3:
            m.add({j, s - dir}, 1);
            m.add({j, s + dir}, 1);
            m.add({j, s + 3 * dir}, 1);
            break;
        default:
            break;
        }
    }
    return m;
}

} // namespace detail

inline YMonomial braid_act_y(const CartanDatum& g, Node i, int dir, const YMonomial& m)
{
    detail::check_dir(dir);
    if (!g.valid_node(i)) throw math_error("unknown-node", "braid generator " + std::to_string(i));
    YMonomial out;
    for (const auto& [k, e] : m.y) {
        if (k.node == i)
            out *= detail::braid_image_y(g, i, dir, k.shift).pow(e);
        else
            out *= YMonomial::var(k.node, k.shift, e);
    }
    return out;
}

inline LWeightMonomial braid_act_lweight(const CartanDatum& g, Node i, int dir, const LWeightMonomial& m)
{
    detail::check_dir(dir);
    if (!g.valid_node(i)) throw math_error("unknown-node", "braid generator " + std::to_string(i));
    LWeightMonomial out;
    for (const auto& [k, e] : m.psi) {
        if (k.node == i)
            out.psi += detail::braid_image_psi(g, i, dir, k.shift).scaled(e);
        else
            out.psi.add(k, e);
    }
    out.wt = sparsify(g.reflect(i, densify<omega_basis_tag>(m.wt, g.rank())));
    return out;
}

inline YMonomial braid_act(const CartanDatum& g, Node i, int dir, const YMonomial& m) { return braid_act_y(g, i, dir, m); }
inline LWeightMonomial braid_act(const CartanDatum& g, Node i, int dir, const LWeightMonomial& m)
{
    return braid_act_lweight(g, i, dir, m);
}

/// T_w = T_{i_1} ... T_{i_r} for dir = +1 (rightmost letter acts first), and T_w^{-1} for dir = -1.
/// The word is used verbatim: pass a reduced word when w is meant as a Weyl group element.
template <class Mono>
Mono braid_act_word(const CartanDatum& g, const WeylWord& w, int dir, Mono x)
{
    detail::check_dir(dir);
    if (dir == 1)
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) x = braid_act(g, *it, 1, x);
    else
        for (Node i : w.letters) x = braid_act(g, i, -1, x);
    return x;
}

template <class Mono>
SparsePoly<Mono> braid_act_word(const CartanDatum& g, const WeylWord& w, int dir, const SparsePoly<Mono>& p)
{
    return p.map_monomials([&](const Mono& m) { return braid_act_word(g, w, dir, m); });
}

} // namespace qtwist
