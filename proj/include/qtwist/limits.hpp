#pragma once

// The projection pi_R, projected limits, the constant/non-constant factorization, the flip
// c -> c^{-1}, and the closed product formulas for the constant parts.

#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "io/text.hpp"
#include "qchar.hpp"

namespace qtwist {

/// A_{i,s}^{+-1} -> e^{+-alpha_i} for s < R; everything else untouched.
inline CAMonomial project_piR(std::int64_t R, const CAMonomial& m)
{
    CAMonomial out;
    out.e = m.e;
    for (const auto& [k, x] : m.a) {
        if (k.shift < R)
            out.e.add(k.node, x);
        else
            out.a.add(k, x);
    }
    return out;
}

inline CAPoly project_piR(std::int64_t R, const CAPoly& p)
{
    return p.map_monomials([R](const CAMonomial& m) { return project_piR(R, m); });
}

inline GradedSeries project_piR(std::int64_t R, const GradedSeries& s)
{
    GradedSeries out(s.rank(), s.cone(), s.height_cap());
    for (const auto& [m, c] : s.terms()) out.add(project_piR(R, m), c);
    return out;
}

// ---------------------------------------------------------------------------
// Stabilization sweeps

struct SweepStep {
    std::int64_t R = 0;
    int k = 0;
    std::string fingerprint;
};

struct LimitReport {
    bool converged = false;
    /// First R of the window of agreeing inner limits.
    std::optional<std::int64_t> stable_from_R;
    /// For each R visited, the first k of its stable window (absent if the k sweep ran out).
    std::vector<std::pair<std::int64_t, std::optional<int>>> inner_stable_k;
    GradedSeries value;
    std::vector<SweepStep> sweep_log;
    /// Empty on success, otherwise "k_max" or "R_min".
    std::string exhausted;
};

class no_limit_error : public math_error {
public:
    explicit no_limit_error(LimitReport report)
        : math_error("no-limit-detected", "sweep exhausted " + report.exhausted), m_report(std::move(report))
    {
    }
    const LimitReport& report() const noexcept { return m_report; }

private:
    LimitReport m_report;
};

struct SweepConfig {
    std::int64_t height_cap = 6;
    int k_max = 12;
    /// Default: -(2 * max d_i * height_cap + 6).
    std::optional<std::int64_t> R_min;
    int window = 3;
    /// Inner windows may only start at k >= height_cap + k_offset.
    int k_offset = 2;
};

inline std::int64_t default_R_min(const CartanDatum& g, std::int64_t height_cap)
{
    int dmax = 1;
    for (Node i = 1; i <= g.rank(); ++i) dmax = std::max(dmax, g.symmetrizer(i));
    return -(2 * dmax * height_cap + 6);
}

inline std::string fingerprint(const CartanDatum& g, const GradedSeries& s)
{
    const std::string text = io::to_text(g, s);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016zx", std::hash<std::string>{}(text));
    return std::string(buf) + ":" + std::to_string(s.size());
}

/// pi^{w}_{q,infty}(m) truncated at the height cap. For R = 0, -1, ... the truncations of
/// pi_R(chi_q^w(L(M_k m))) are swept over k until `window` consecutive values agree; the inner
/// limits are then compared across consecutive R in the same way.
inline LimitReport projected_limit(const CartanDatum& g, const WeylWord& w, Node i, const YMonomial& m,
                                   const SweepConfig& cfg, QCharProvider& provider)
{
    if (!g.valid_node(i)) throw math_error("unknown-node", "KR node " + std::to_string(i));
    const WeylWord wr = reduce_word(g, w);
    const std::int64_t N = cfg.height_cap;
    const std::int64_t R_min = cfg.R_min.value_or(default_R_min(g, N));
    const Cone cone(g, wr);

    std::vector<std::optional<GradedSeries>> normalized(static_cast<std::size_t>(cfg.k_max) + 1);
    auto chi_w = [&](int k) -> const GradedSeries& {
        auto& slot = normalized[static_cast<std::size_t>(k)];
        if (!slot) slot = GradedSeries::from_poly(g, wr, N, w_normalized_qchar(g, provider.kr_times(g, i, k, m), wr));
        return *slot;
    };

    LimitReport report;
    std::vector<GradedSeries> outer;
    for (std::int64_t R = 0; R >= R_min; --R) {
        std::vector<GradedSeries> inner;
        std::optional<int> stable_k;
        for (int k = 1; k <= cfg.k_max; ++k) {
            inner.push_back(project_piR(R, chi_w(k)));
            report.sweep_log.push_back({R, k, fingerprint(g, inner.back())});
            const int first = k - cfg.window + 1;
            if (first < N + cfg.k_offset || first < 1) continue;
            const auto n = inner.size();
            bool same = true;
            for (int t = 1; t < cfg.window && same; ++t) same = inner[n - 1 - t] == inner.back();
            if (same) {
                stable_k = first;
                break;
            }
        }
        report.inner_stable_k.push_back({R, stable_k});
        if (!stable_k) {
            report.exhausted = "k_max";
            throw no_limit_error(std::move(report));
        }
        outer.push_back(inner.back());
        if (static_cast<int>(outer.size()) >= cfg.window) {
            const auto n = outer.size();
            bool same = true;
            for (int t = 1; t < cfg.window && same; ++t) same = outer[n - 1 - t] == outer.back();
            if (same) {
                report.converged = true;
                report.stable_from_R = R + cfg.window - 1;
                report.value = outer.back();
                return report;
            }
        }
    }
    report.exhausted = "R_min";
    throw no_limit_error(std::move(report));
}

inline LimitReport projected_limit(const CartanDatum& g, const WeylWord& w, Node i, const YMonomial& m,
                                   const SweepConfig& cfg)
{
    QCharProvider provider;
    return projected_limit(g, w, i, m, cfg, provider);
}

// ---------------------------------------------------------------------------
// Factorization and the constant part

struct Factorization {
    GradedSeries c;
    GradedSeries a;
};

/// a = the e-free part of S, c = S / a; c must consist of pure e-monomials.
inline Factorization factor_const_nonconst(const GradedSeries& S)
{
    GradedSeries a(S.rank(), S.cone(), S.height_cap());
    for (const auto& [m, c] : S.terms())
        if (m.is_e_free()) a.add(m, c);
    GradedSeries c = graded_divide(S, a);
    for (const auto& [m, coeff] : c.terms())
        if (!m.is_pure_e()) throw math_error("factorization-failed", "constant part has a term with A-variables");
    if (!(c * a == S)) throw math_error("factorization-failed", "c * a differs from the series");
    return {std::move(c), std::move(a)};
}

/// e^{lambda} -> e^{-lambda}, regraded by the cone w * w0.
inline GradedSeries const_flip(const CartanDatum& g, const GradedSeries& c)
{
    const WeylWord target = reduce_word(g, c.cone_word() * g.longest_word());
    GradedSeries out(g, target, c.height_cap());
    for (const auto& [m, coeff] : c.terms()) {
        if (!m.is_pure_e()) throw math_error("flip-left-cone", "flip applies to pure e-series only");
        CAMonomial f = m.inverse();
        if (!out.cone().contains(out.degree(f))) throw math_error("flip-left-cone", "flipped degree outside the cone");
        out.add(f, coeff);
    }
    return out;
}

namespace detail {

/// prod over positive roots of (1 - e^{sign*alpha})^{-mult(alpha)}, truncated in the given cone.
inline GradedSeries geometric_product(const CartanDatum& g, const WeylWord& cone_word, std::int64_t N, int sign,
                                      const std::function<std::int64_t(const RootVector&)>& mult)
{
    GradedSeries out(g, cone_word, N);
    out.add(CAMonomial{}, 1);
    for (const auto& alpha : g.positive_roots()) {
        const std::int64_t p = mult(alpha);
        for (std::int64_t rep = 0; rep < p; ++rep) {
            GradedSeries geo(g, cone_word, N);
            const RootVector step = sign * alpha;
            const std::int64_t h = out.cone().height(step);
            if (h <= 0) throw math_error("degree-outside-cone", "product formula factor not graded positively");
            RootVector deg(g.rank());
            for (std::int64_t n = 0; n * h <= N; ++n, deg += step) geo.add(CAMonomial::E(deg), 1);
            out = out * geo;
        }
    }
    return out;
}

} // namespace detail

/// prod_{alpha > 0} (1 / (1 - e^{alpha}))^{alpha(omega^vee_{bar i})}, graded by the cone w0(Lambda_-).
inline GradedSeries w0_product_formula(const CartanDatum& g, Node i, std::int64_t N)
{
    const Node ib = g.bar(i);
    return detail::geometric_product(g, g.longest_word(), N, 1, [ib](const RootVector& a) { return a(ib); });
}

/// prod_{alpha > 0} (1 / (1 - e^{-alpha}))^{max(0, alpha(mu))}, mu a coweight in the omega^vee basis.
inline GradedSeries shifted_const_formula(const CartanDatum& g, const std::vector<std::int64_t>& mu, std::int64_t N)
{
    if (static_cast<int>(mu.size()) != g.rank()) throw math_error("bad-argument", "coweight has wrong length");
    return detail::geometric_product(g, WeylWord{}, N, -1, [&](const RootVector& a) {
        std::int64_t v = 0;
        for (std::size_t k = 0; k < mu.size(); ++k) v += a.c[k] * mu[k];
        return std::max<std::int64_t>(0, v);
    });
}

/// Replace each monomial by e^{degree}: the usual character of a graded series.
inline GradedSeries usual_char(const GradedSeries& s)
{
    GradedSeries out(s.rank(), s.cone(), s.height_cap());
    for (const auto& [m, c] : s.terms()) out.add(CAMonomial::E(s.degree(m)), c);
    return out;
}

/// e^{lambda} -> e^{w lambda}; heights are preserved, so the result is graded by the cone w*(source cone).
inline GradedSeries weyl_act_series(const CartanDatum& g, const WeylWord& w, const GradedSeries& s)
{
    GradedSeries out(g, reduce_word(g, w * s.cone_word()), s.height_cap());
    for (const auto& [m, c] : s.terms()) {
        if (!m.is_pure_e()) throw math_error("bad-argument", "Weyl action applies to pure e-series only");
        out.add(CAMonomial::E(weyl_act_root(g, w, s.degree(m))), c);
    }
    return out;
}

/// Agreement of two series graded by possibly different cones, on the window of degrees whose
/// height is within both caps. A term of one series outside the other's cone is a disagreement.
inline bool agree_on_common_window(const GradedSeries& x, const GradedSeries& y)
{
    auto one_way = [](const GradedSeries& p, const GradedSeries& q) {
        for (const auto& [m, c] : p.terms()) {
            auto cc = q.cone().coords(q.degree(m));
            if (!cc) return false;
            if (cc->height <= q.height_cap() && q.terms().coeff(m) != c) return false;
        }
        return true;
    };
    return one_way(x, y) && one_way(y, x);
}

/// Product of two series lying in Lambda_- (cone e) but graded by other cones, recomputed in the
/// cone e up to the height where both inputs are complete.
inline GradedSeries product_in_cone_e(const CartanDatum& g, const GradedSeries& x, const GradedSeries& y, std::int64_t N_e)
{
    GradedSeries xe(g, WeylWord{}, N_e), ye(g, WeylWord{}, N_e);
    for (const auto& [m, c] : x.terms()) xe.add(m, c);
    for (const auto& [m, c] : y.terms()) ye.add(m, c);
    return xe * ye;
}

/// Largest ratio between heights in the cone w and in the cone e over the simple roots:
/// max_j |ht(w^{-1} alpha_j)|.
inline std::int64_t cone_height_ratio(const CartanDatum& g, const WeylWord& w)
{
    std::int64_t K = 1;
    for (Node j = 1; j <= g.rank(); ++j) {
        const RootVector v = weyl_act_root(g, w.inverse(), g.alpha(j));
        std::int64_t h = 0;
        for (auto x : v.c) h += x;
        K = std::max<std::int64_t>(K, h < 0 ? -h : h);
    }
    return K;
}

} // namespace qtwist
