#pragma once

// Canonical text form, e.g. "Y[1,-1]Y[2,2]^2", "A[1,0]^-1e[1,0]", "q^w[1,0]Psi[1,2]".
// Polynomials print as "Y[1,-1] + Y[1,1]^-1" with integer coefficients as "3*...".

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "../series.hpp"

namespace qtwist::io {

namespace detail {

inline void put_power(std::ostream& os, std::int64_t e)
{
    if (e != 1) os << '^' << e;
}

inline void put_vars(std::ostream& os, const char* name, const ExponentMap<SpectralIndex>& m)
{
    for (const auto& [k, e] : m) {
        os << name << '[' << k.node << ',' << k.shift << ']';
        put_power(os, e);
    }
}

inline void put_vector(std::ostream& os, const ExponentMap<Node>& m, int rank)
{
    os << '[';
    for (Node i = 1; i <= rank; ++i) os << (i > 1 ? "," : "") << m.get(i);
    os << ']';
}

} // namespace detail

inline std::string to_text(const CartanDatum&, const YMonomial& m)
{
    if (m.is_one()) return "1";
    std::ostringstream os;
    detail::put_vars(os, "Y", m.y);
    return os.str();
}

inline std::string to_text(const CartanDatum& g, const CAMonomial& m)
{
    if (m.is_one()) return "1";
    std::ostringstream os;
    detail::put_vars(os, "A", m.a);
    if (!m.e.empty()) {
        os << 'e';
        detail::put_vector(os, m.e, g.rank());
    }
    return os.str();
}

inline std::string to_text(const CartanDatum& g, const LWeightMonomial& m)
{
    if (m.is_one()) return "1";
    std::ostringstream os;
    if (!m.wt.empty()) {
        os << "q^w";
        detail::put_vector(os, m.wt, g.rank());
    }
    detail::put_vars(os, "Psi", m.psi);
    return os.str();
}

/// Usual-character monomial e^{lambda} with lambda in omega coordinates, printed as x[...].
inline std::string to_text(const CartanDatum& g, const EMonomial& m)
{
    if (m.wt.empty()) return "1";
    std::ostringstream os;
    os << "x";
    detail::put_vector(os, m.wt, g.rank());
    return os.str();
}

template <class It, class F>
std::string join_terms(It first, It last, F&& mono_text)
{
    std::ostringstream os;
    bool lead = true;
    for (; first != last; ++first) {
        const auto& [m, c] = *first;
        const std::string body = mono_text(m);
        std::int64_t a = c;
        if (lead) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (body == "1")
            os << a;
        else if (a != 1)
            os << a << '*' << body;
        else
            os << body;
        lead = false;
    }
    if (lead) return "0";
    return os.str();
}

template <class Mono>
std::string to_text(const CartanDatum& g, const SparsePoly<Mono>& p)
{
    return join_terms(p.begin(), p.end(), [&](const Mono& m) { return to_text(g, m); });
}

/// Terms ordered by cone height, then canonically.
inline std::vector<std::pair<CAMonomial, std::int64_t>> height_ordered(const GradedSeries& s)
{
    std::vector<std::pair<std::int64_t, std::pair<CAMonomial, std::int64_t>>> tmp;
    for (const auto& [m, c] : s.terms()) tmp.push_back({s.height(m), {m, c}});
    std::stable_sort(tmp.begin(), tmp.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<std::pair<CAMonomial, std::int64_t>> out;
    for (auto& t : tmp) out.push_back(std::move(t.second));
    return out;
}

inline std::string to_text(const CartanDatum& g, const GradedSeries& s)
{
    auto terms = height_ordered(s);
    return join_terms(terms.begin(), terms.end(), [&](const CAMonomial& m) { return to_text(g, m); });
}

inline std::string to_text(const CartanDatum&, const WeylWord& w)
{
    std::string s;
    for (std::size_t k = 0; k < w.letters.size(); ++k) s += (k ? "," : "") + std::to_string(w.letters[k]);
    return s.empty() ? "e" : s;
}

} // namespace qtwist::io
