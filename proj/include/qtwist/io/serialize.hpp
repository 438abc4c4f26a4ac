#pragma once

// JSON and LaTeX output. JSON layout:
//   {"datum": "A2", "head": "...", "terms": [{"mono": "...", "coeff": 1}, ...],
//    "grading": null | {"cone": "2,1"}, "truncation": null | {"height": 6}}
// LaTeX writes the spectral shift s as aq^{s} and lists series terms by height.

#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "text.hpp"

namespace qtwist::io {

using json = nlohmann::json;

template <class Mono>
json to_json(const CartanDatum& g, const SparsePoly<Mono>& p, const std::optional<std::string>& head = std::nullopt)
{
    json out{{"datum", g.label()}, {"head", head ? json(*head) : json(nullptr)}, {"terms", json::array()},
             {"grading", nullptr}, {"truncation", nullptr}};
    for (const auto& [m, c] : p) out["terms"].push_back({{"mono", to_text(g, m)}, {"coeff", c}});
    return out;
}

inline json to_json(const CartanDatum& g, const GradedSeries& s, const std::optional<std::string>& head = std::nullopt)
{
    json out{{"datum", g.label()}, {"head", head ? json(*head) : json(nullptr)}, {"terms", json::array()},
             {"grading", {{"cone", to_text(g, s.cone_word())}}}, {"truncation", {{"height", s.height_cap()}}}};
    for (const auto& [m, c] : height_ordered(s)) out["terms"].push_back({{"mono", to_text(g, m)}, {"coeff", c}});
    return out;
}

namespace detail {

inline std::string latex_spectral(std::int64_t s)
{
    if (s == 0) return "a";
    if (s == 1) return "aq";
    return "aq^{" + std::to_string(s) + "}";
}

inline void latex_vars(std::ostream& os, const char* name, const ExponentMap<SpectralIndex>& m)
{
    for (const auto& [k, e] : m) {
        os << name;
        if (e != 1) os << "^{" << e << "}";
        os << "_{" << k.node << "," << latex_spectral(k.shift) << "}";
    }
}

/// 2\alpha_1+\alpha_2, -\omega_1, ...
inline std::string latex_combination(const ExponentMap<Node>& v, const char* basis)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : v) {
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        const std::int64_t a = c < 0 ? -c : c;
        if (a != 1) os << a;
        os << basis << "_" << i;
        first = false;
    }
    return os.str();
}

template <class It, class F>
std::string latex_join(It first, It last, F&& body_of)
{
    std::ostringstream os;
    bool lead = true;
    for (; first != last; ++first) {
        const auto& [m, c] = *first;
        const std::string body = body_of(m);
        std::int64_t a = c;
        if (a < 0) {
            os << '-';
            a = -a;
        } else if (!lead) {
            os << '+';
        }
        if (body.empty())
            os << a;
        else if (a != 1)
            os << a << body;
        else
            os << body;
        lead = false;
    }
    return lead ? "0" : os.str();
}

} // namespace detail

/// Monomial bodies; the empty string stands for 1.
inline std::string latex_body(const CartanDatum&, const YMonomial& m)
{
    std::ostringstream os;
    detail::latex_vars(os, "Y", m.y);
    return os.str();
}

inline std::string latex_body(const CartanDatum&, const CAMonomial& m)
{
    std::ostringstream os;
    detail::latex_vars(os, "A", m.a);
    if (!m.e.empty()) os << "e^{" << detail::latex_combination(m.e, "\\alpha") << "}";
    return os.str();
}

inline std::string latex_body(const CartanDatum&, const LWeightMonomial& m)
{
    std::ostringstream os;
    if (!m.wt.empty()) os << "q^{" << detail::latex_combination(m.wt, "\\omega") << "}";
    detail::latex_vars(os, "\\Psi", m.psi);
    return os.str();
}

inline std::string latex_body(const CartanDatum&, const EMonomial& m)
{
    return m.wt.empty() ? "" : "e^{" + detail::latex_combination(m.wt, "\\omega") + "}";
}

template <class Mono>
std::string to_latex(const CartanDatum& g, const Mono& m)
{
    const std::string b = latex_body(g, m);
    return b.empty() ? "1" : b;
}

template <class Mono>
std::string to_latex(const CartanDatum& g, const SparsePoly<Mono>& p)
{
    return detail::latex_join(p.begin(), p.end(), [&](const Mono& m) { return latex_body(g, m); });
}

inline std::string to_latex(const CartanDatum& g, const GradedSeries& s)
{
    auto terms = height_ordered(s);
    return detail::latex_join(terms.begin(), terms.end(), [&](const CAMonomial& m) { return latex_body(g, m); });
}

} // namespace qtwist::io
