#pragma once

// Parser for the text forms printed by text.hpp.
//
//   poly    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (['*'] factor)*
//   factor  := integer | atom ['^' ['+'|'-'] integer]
//   atom    := 'Y[' i ',' s ']' | 'A[' i ',' s ']' | 'Psi[' i ',' s ']'
//            | 'e[' c1 ',' ... ']' | 'q^w[' c1 ',' ... ']' | 'x[' c1 ',' ... ']'
//
// Whitespace is ignored between tokens. Node indices are checked against the datum.

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "../errors.hpp"
#include "../poly.hpp"

namespace qtwist::io {

struct Factor {
    enum class Kind { integer, Y, A, Psi, e, qw, x };
    Kind kind = Kind::integer;
    std::vector<std::int64_t> args;
    std::int64_t power = 1;
    std::size_t pos = 0;
};

struct TermAst {
    int sign = 1;
    std::vector<Factor> factors;
    std::size_t pos = 0;
};

struct ExprAst {
    std::vector<TermAst> terms;
};

namespace detail {

class Lexer {
public:
    explicit Lexer(std::string_view text) : m_text(text) {}

    std::size_t pos() const noexcept { return m_pos; }

    void skip_ws()
    {
        while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) ++m_pos;
    }

    bool at_end()
    {
        skip_ws();
        return m_pos >= m_text.size();
    }

    char peek()
    {
        skip_ws();
        return m_pos < m_text.size() ? m_text[m_pos] : '\0';
    }

    bool accept(std::string_view tok)
    {
        skip_ws();
        if (m_text.substr(m_pos, tok.size()) != tok) return false;
        m_pos += tok.size();
        return true;
    }

    void expect(std::string_view tok)
    {
        if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
    }

    std::int64_t integer()
    {
        skip_ws();
        const std::size_t start = m_pos;
        bool neg = false;
        if (m_pos < m_text.size() && (m_text[m_pos] == '-' || m_text[m_pos] == '+')) neg = m_text[m_pos++] == '-';
        if (m_pos >= m_text.size() || !std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
            m_pos = start;
            fail("expected an integer");
        }
        std::int64_t v = 0;
        while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
            if (v > (INT64_MAX - 9) / 10) fail("integer out of range");
            v = v * 10 + (m_text[m_pos++] - '0');
        }
        return neg ? -v : v;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, m_pos); }

private:
    std::string_view m_text;
    std::size_t m_pos = 0;
};

inline std::vector<std::int64_t> bracket_list(Lexer& lx)
{
    std::vector<std::int64_t> v;
    lx.expect("[");
    v.push_back(lx.integer());
    while (lx.accept(",")) v.push_back(lx.integer());
    lx.expect("]");
    return v;
}

inline bool starts_factor(Lexer& lx)
{
    const char c = lx.peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'Y' || c == 'A' || c == 'P' || c == 'e' || c == 'q' ||
           c == 'x';
}

inline Factor parse_factor(Lexer& lx)
{
    Factor f;
    lx.skip_ws();
    f.pos = lx.pos();
    const char c = lx.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
        f.args = {lx.integer()};
        return f;
    }
    using K = Factor::Kind;
    if (lx.accept("Psi"))
        f.kind = K::Psi;
    else if (lx.accept("q^w"))
        f.kind = K::qw;
    else if (lx.accept("Y"))
        f.kind = K::Y;
    else if (lx.accept("A"))
        f.kind = K::A;
    else if (lx.accept("e"))
        f.kind = K::e;
    else if (lx.accept("x"))
        f.kind = K::x;
    else
        lx.fail("expected a factor");
    f.args = bracket_list(lx);
    if ((f.kind == K::Y || f.kind == K::A || f.kind == K::Psi) && f.args.size() != 2)
        throw parse_error("spectral variable takes [node,shift]", f.pos);
    if (lx.accept("^")) f.power = lx.integer();
    return f;
}

} // namespace detail

inline ExprAst parse_ast(std::string_view text)
{
    detail::Lexer lx(text);
    ExprAst ast;
    bool first = true;
    while (true) {
        TermAst t;
        lx.skip_ws();
        t.pos = lx.pos();
        if (lx.accept("+"))
            t.sign = 1;
        else if (lx.accept("-"))
            t.sign = -1;
        else if (!first)
            break;
        t.factors.push_back(detail::parse_factor(lx));
        while (true) {
            if (lx.accept("*")) {
                t.factors.push_back(detail::parse_factor(lx));
                continue;
            }
            if (!lx.at_end() && detail::starts_factor(lx)) {
                t.factors.push_back(detail::parse_factor(lx));
                continue;
            }
            break;
        }
        ast.terms.push_back(std::move(t));
        first = false;
    }
    if (!lx.at_end()) lx.fail("unexpected character '" + std::string(1, lx.peek()) + "'");
    return ast;
}

namespace detail {

inline void check_node(const CartanDatum& g, std::int64_t i, std::size_t pos)
{
    if (i < 1 || i > g.rank())
        throw parse_error("unknown node " + std::to_string(i) + " for " + g.label(), pos);
}

inline void check_vector(const CartanDatum& g, const Factor& f)
{
    if (static_cast<int>(f.args.size()) != g.rank())
        throw parse_error("vector must have " + std::to_string(g.rank()) + " entries for " + g.label(), f.pos);
}

template <class Mono>
const char* flavor_name();
template <>
inline const char* flavor_name<YMonomial>() { return "Y-monomial"; }
template <>
inline const char* flavor_name<CAMonomial>() { return "A/e-monomial"; }
template <>
inline const char* flavor_name<LWeightMonomial>() { return "Psi-monomial"; }
template <>
inline const char* flavor_name<EMonomial>() { return "x-monomial"; }

template <class Mono>
void apply_factor(const CartanDatum& g, const Factor& f, Mono& m)
{
    using K = Factor::Kind;
    auto wrong = [&]() { throw parse_error(std::string("factor not allowed in a ") + flavor_name<Mono>(), f.pos); };
    if constexpr (std::is_same_v<Mono, YMonomial>) {
        if (f.kind != K::Y) wrong();
        check_node(g, f.args[0], f.pos);
        m.y.add({static_cast<Node>(f.args[0]), f.args[1]}, f.power);
    } else if constexpr (std::is_same_v<Mono, CAMonomial>) {
        if (f.kind == K::A) {
            check_node(g, f.args[0], f.pos);
            m.a.add({static_cast<Node>(f.args[0]), f.args[1]}, f.power);
        } else if (f.kind == K::e) {
            check_vector(g, f);
            for (std::size_t k = 0; k < f.args.size(); ++k) m.e.add(static_cast<Node>(k + 1), f.args[k] * f.power);
        } else {
            wrong();
        }
    } else if constexpr (std::is_same_v<Mono, LWeightMonomial>) {
        if (f.kind == K::Psi) {
            check_node(g, f.args[0], f.pos);
            m.psi.add({static_cast<Node>(f.args[0]), f.args[1]}, f.power);
        } else if (f.kind == K::qw) {
            check_vector(g, f);
            for (std::size_t k = 0; k < f.args.size(); ++k) m.wt.add(static_cast<Node>(k + 1), f.args[k] * f.power);
        } else {
            wrong();
        }
    } else {
        if (f.kind != K::x) wrong();
        check_vector(g, f);
        for (std::size_t k = 0; k < f.args.size(); ++k) m.wt.add(static_cast<Node>(k + 1), f.args[k] * f.power);
    }
}

template <class Mono>
std::pair<std::int64_t, Mono> build_term(const CartanDatum& g, const TermAst& t)
{
    std::int64_t coeff = t.sign;
    Mono m{};
    for (const auto& f : t.factors) {
        if (f.kind == Factor::Kind::integer)
            coeff *= f.args[0];
        else
            apply_factor(g, f, m);
    }
    return {coeff, m};
}

} // namespace detail

template <class Mono>
SparsePoly<Mono> parse_poly(const CartanDatum& g, std::string_view text)
{
    SparsePoly<Mono> p;
    for (const auto& t : parse_ast(text).terms) {
        auto [c, m] = detail::build_term<Mono>(g, t);
        p.add(m, c);
    }
    return p;
}

/// A single monomial with coefficient 1.
template <class Mono>
Mono parse_monomial(const CartanDatum& g, std::string_view text)
{
    const ExprAst ast = parse_ast(text);
    if (ast.terms.size() != 1) throw parse_error("expected a single monomial", ast.terms.size() > 1 ? ast.terms[1].pos : 0);
    auto [c, m] = detail::build_term<Mono>(g, ast.terms.front());
    if (c != 1) throw parse_error("monomial must have coefficient 1", ast.terms.front().pos);
    return m;
}

inline YMonomial parse_y_monomial(const CartanDatum& g, std::string_view t) { return parse_monomial<YMonomial>(g, t); }
inline CAMonomial parse_ca_monomial(const CartanDatum& g, std::string_view t) { return parse_monomial<CAMonomial>(g, t); }
inline LWeightMonomial parse_lweight_monomial(const CartanDatum& g, std::string_view t)
{
    return parse_monomial<LWeightMonomial>(g, t);
}

/// "2,1" or "s2s1" style words; "e" or "" is the identity.
inline WeylWord parse_word(const CartanDatum& g, std::string_view text)
{
    WeylWord w;
    std::size_t pos = 0;
    auto skip = [&]() {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',' || text[pos] == 's'))
            ++pos;
    };
    skip();
    if (text.substr(pos) == "e") return w;
    while (pos < text.size()) {
        if (!std::isdigit(static_cast<unsigned char>(text[pos]))) throw parse_error("expected a node index", pos);
        const std::size_t start = pos;
        std::int64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) v = v * 10 + (text[pos++] - '0');
        detail::check_node(g, v, start);
        w.letters.push_back(static_cast<Node>(v));
        skip();
    }
    return w;
}

/// Comma-separated integers, e.g. a coweight "1,0".
inline std::vector<std::int64_t> parse_int_list(std::string_view text)
{
    detail::Lexer lx(text);
    std::vector<std::int64_t> v;
    if (lx.at_end()) return v;
    v.push_back(lx.integer());
    while (lx.accept(",")) v.push_back(lx.integer());
    if (!lx.at_end()) lx.fail("unexpected character");
    return v;
}

} // namespace qtwist::io
