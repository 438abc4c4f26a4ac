#pragma once

// q-characters: Kirillov-Reshetikhin highest weights, closed forms in types A1/A2, the
// Frenkel-Mukhin expansion, and w-normalization.

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "braid.hpp"
#include "series.hpp"

namespace qtwist {

struct QCharacter {
    YPoly poly;
    YMonomial head;

    friend bool operator==(const QCharacter&, const QCharacter&) = default;
};

/// M_k = prod_{t=1..k} Y_{i, base + d_i(1 - 2t)}.
inline YMonomial kr_highest_weight(const CartanDatum& g, Node i, int k, std::int64_t base_shift = 0)
{
    if (k < 1) throw math_error("bad-argument", "KR length must be positive");
    const int d = g.symmetrizer(i);
    YMonomial m;
    for (int t = 1; t <= k; ++t) m *= YMonomial::var(i, base_shift + d * (1 - 2 * t));
    return m;
}

/// Normalized KR characters from the explicit formulas, as A-polynomials (head removed).
inline CAPoly kr_normalized_closed(const CartanDatum& g, Node i, int k, std::int64_t base_shift = 0)
{
    if (k < 1) throw math_error("bad-argument", "KR length must be positive");
    CAPoly out;
    if (g.family() == 'A' && g.rank() == 1) {
        CAMonomial chain;
        out.add(chain, 1);
        for (int t = 0; t < k; ++t) {
            chain *= CAMonomial::A(1, base_shift - 2 * t, -1);
            out.add(chain, 1);
        }
        return out;
    }
    if (g.family() == 'A' && g.rank() == 2 && (i == 1 || i == 2)) {
        const Node p = i;
        const Node r = 3 - i;
        for (int n = -1; n <= k - 1; ++n) {
            for (int m = -1; m <= n; ++m) {
                CAMonomial term;
                for (int l = 0; l <= n; ++l) term *= CAMonomial::A(p, base_shift - 2 * l, -1);
                for (int s = 0; s <= m; ++s) term *= CAMonomial::A(r, base_shift + 1 - 2 * s, -1);
                out.add(term, 1);
            }
        }
        return out;
    }
    throw math_error("unsupported-datum", "closed KR formula only for A1 and A2, got " + g.label());
}

inline QCharacter kr_qchar_closed(const CartanDatum& g, Node i, int k, std::int64_t base_shift = 0)
{
    QCharacter q;
    q.head = kr_highest_weight(g, i, k, base_shift);
    q.poly = a_expand_to_y(g, kr_normalized_closed(g, i, k, base_shift)) * q.head;
    return q;
}

namespace detail {

/// Normalized q-character of the U_{q_j}(sl2)-simple module with highest weight given by the
/// Y_{j,.} part of m: q-strings in general position, each contributing a chain of A^{-1}.
inline CAPoly rank_one_character(const CartanDatum& g, Node j, const YMonomial& m)
{
    const std::int64_t step = 2 * g.symmetrizer(j);
    std::map<std::int64_t, std::int64_t> points;
    for (const auto& [k, e] : m.y)
        if (k.node == j && e > 0) points[k.shift] += e;

    CAPoly result = CAPoly::one();
    while (!points.empty()) {
        std::int64_t top = points.begin()->first;
        std::int64_t len = 0;
        for (std::int64_t s = top;; s += step) {
            auto it = points.find(s);
            if (it == points.end()) break;
            if (--it->second == 0) points.erase(it);
            top = s;
            ++len;
        }
        CAPoly string;
        CAMonomial chain;
        string.add(chain, 1);
        for (std::int64_t u = 0; u < len; ++u) {
            chain *= CAMonomial::A(j, top + step / 2 - step * u, -1);
            string.add(chain, 1);
        }
        result = result * string;
    }
    return result;
}

inline std::int64_t a_depth(const CAMonomial& a)
{
    std::int64_t d = 0;
    for (const auto& [k, e] : a.a) d -= e;
    return d;
}

} // namespace detail

inline constexpr std::size_t default_fm_step_cap = 200000;

/// Frenkel-Mukhin expansion of chi_q(L(M)). Monomials are processed by depth (number of A^{-1}
/// factors below M); each j-dominant monomial whose j-coloring is incomplete spawns the rank-one
/// character of its j-part. Throws "fm-inconsistent" when the coloring rules cannot be satisfied.
inline QCharacter fm_expand(const CartanDatum& g, const YMonomial& M, std::size_t step_cap = default_fm_step_cap)
{
    if (!M.is_dominant()) throw math_error("not-dominant", "highest weight must have nonnegative exponents");
    for (const auto& [k, e] : M.y)
        if (!g.valid_node(k.node)) throw math_error("unknown-node", "node " + std::to_string(k.node));

    struct Entry {
        std::int64_t coeff = 0;
        std::vector<std::int64_t> colored;
    };
    const auto n = static_cast<std::size_t>(g.rank());
    std::map<std::size_t, std::map<YMonomial, Entry>> layers;
    layers[0][M] = Entry{1, std::vector<std::int64_t>(n, 0)};

    struct Spawn {
        YMonomial ratio;
        std::int64_t mult;
        std::size_t depth;
    };
    std::map<Node, std::map<YMonomial, std::vector<Spawn>>> rank_one_memo;
    auto rank_one = [&](Node j, const YMonomial& m) -> const std::vector<Spawn>& {
        YMonomial part;
        for (const auto& [k, e] : m.y)
            if (k.node == j) part.y.add(k, e);
        auto& slot = rank_one_memo[j];
        auto it = slot.find(part);
        if (it != slot.end()) return it->second;
        std::vector<Spawn> spawns;
        for (const auto& [a, c] : detail::rank_one_character(g, j, part))
            spawns.push_back({a_expand_to_y(g, a), c, static_cast<std::size_t>(detail::a_depth(a))});
        return slot.emplace(part, std::move(spawns)).first->second;
    };

    QCharacter out;
    out.head = M;
    std::size_t steps = 0;
    for (auto layer = layers.begin(); layer != layers.end(); ++layer) {
        const std::size_t d = layer->first;
        for (auto& [m, ent] : layer->second) {
            if (++steps > step_cap) throw math_error("step-cap-exceeded", "after " + std::to_string(step_cap) + " monomials");
            if (d > 0) {
                ent.coeff = *std::max_element(ent.colored.begin(), ent.colored.end());
                if (m.is_dominant()) throw math_error("fm-inconsistent", "second dominant monomial at depth " + std::to_string(d));
            }
            for (Node j = 1; j <= g.rank(); ++j) {
                auto& cj = ent.colored[static_cast<std::size_t>(j - 1)];
                if (!m.is_dominant_at(j)) {
                    if (cj != ent.coeff)
                        throw math_error("fm-inconsistent", "node " + std::to_string(j) + " coloring incomplete at depth " +
                                                                std::to_string(d));
                    continue;
                }
                if (cj >= ent.coeff) continue;
                const std::int64_t r = ent.coeff - cj;
                for (const auto& [ratio, mult, depth] : rank_one(j, m)) {
                    if (depth == 0) {
                        cj += r * mult;
                        continue;
                    }
                    auto& target = layers[d + depth][m * ratio];
                    if (target.colored.empty()) target.colored.assign(n, 0);
                    target.colored[static_cast<std::size_t>(j - 1)] += r * mult;
                }
            }
            out.poly.add(m, ent.coeff);
        }
    }
    return out;
}

/// Memo of q-characters keyed by datum and highest weight. Shared across a sweep so that KR
/// characters are expanded once per k.
class QCharProvider {
public:
    enum class Engine { fm, closed };
    /// Optional store sitting between the memo and the computation (e.g. an on-disk cache):
    /// called with the datum, the highest weight and the computation to run on a miss.
    using Backing = std::function<QCharacter(const CartanDatum&, const YMonomial&, const std::function<QCharacter()>&)>;

    explicit QCharProvider(Engine engine = Engine::fm, std::size_t step_cap = default_fm_step_cap)
        : m_engine(engine), m_step_cap(step_cap)
    {
    }

    const QCharacter& get(const CartanDatum& g, const YMonomial& M)
    {
        std::lock_guard<std::mutex> lock(m_mutex);
        auto key = std::make_pair(g.label(), M);
        auto it = m_memo.find(key);
        if (it != m_memo.end()) return it->second;
        return m_memo.emplace(key, compute(g, M, [&] { return fm_expand(g, M, m_step_cap); })).first->second;
    }

    /// KR character L(M_k m); the closed engine is used when requested and available (m = 1, A1/A2).
    const QCharacter& kr_times(const CartanDatum& g, Node i, int k, const YMonomial& m)
    {
        const YMonomial M = kr_highest_weight(g, i, k) * m;
        if (m_engine == Engine::closed && m.is_one() && g.family() == 'A' && g.rank() <= 2) {
            std::lock_guard<std::mutex> lock(m_mutex);
            auto key = std::make_pair(g.label(), M);
            auto it = m_memo.find(key);
            if (it != m_memo.end()) return it->second;
            return m_memo.emplace(key, compute(g, M, [&] { return kr_qchar_closed(g, i, k); })).first->second;
        }
        return get(g, M);
    }

    std::size_t memo_size() const { return m_memo.size(); }
    void set_backing(Backing b) { m_backing = std::move(b); }

private:
    QCharacter compute(const CartanDatum& g, const YMonomial& M, const std::function<QCharacter()>& run) const
    {
        return m_backing ? m_backing(g, M, run) : run();
    }

    Engine m_engine;
    std::size_t m_step_cap;
    std::mutex m_mutex;
    std::map<std::pair<std::string, YMonomial>, QCharacter> m_memo;
    Backing m_backing;
};

/// chi_q / T_w(head) rewritten in A-variables; every degree must lie in w(Lambda_-).
inline CAPoly w_normalized_qchar(const CartanDatum& g, const QCharacter& q, const WeylWord& w)
{
    const WeylWord wr = reduce_word(g, w);
    const YMonomial extremal = braid_act_word(g, wr, 1, q.head);
    const Cone cone(g, wr);
    CAPoly out;
    for (const auto& [m, c] : q.poly) {
        CAMonomial a = y_ratio_to_a(g, m / extremal);
        if (!cone.contains(root_degree(g, a)))
            throw math_error("normalization-not-in-cone", "degree of a normalized monomial leaves the cone");
        out.add(a, c);
    }
    return out;
}

} // namespace qtwist
