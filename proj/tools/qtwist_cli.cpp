// qtwist: command-line front end.
// Exit codes: 0 ok, 1 verification refuted or internal failure, 2 parse error,
// 3 math-domain error, 4 no limit detected.

#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qtwist/qtwist.hpp"

namespace {

using namespace qtwist;
namespace qio = qtwist::io;

enum class Format { text, json, latex };

struct Common {
    std::string type = "A2";
    std::string out = "text";
};

Format format_of(const std::string& s)
{
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "latex") return Format::latex;
    throw parse_error("unknown output format '" + s + "'", 0);
}

template <class Mono>
std::string render(const CartanDatum& g, const SparsePoly<Mono>& p, Format f, const std::optional<std::string>& head = {})
{
    switch (f) {
    case Format::json:
        return qio::to_json(g, p, head).dump(2);
    case Format::latex:
        return qio::to_latex(g, p);
    default:
        return qio::to_text(g, p);
    }
}

std::string render(const CartanDatum& g, const GradedSeries& s, Format f, const std::optional<std::string>& head = {})
{
    switch (f) {
    case Format::json:
        return qio::to_json(g, s, head).dump(2);
    case Format::latex:
        return qio::to_latex(g, s);
    default:
        return qio::to_text(g, s);
    }
}

template <class Mono>
std::string render_mono(const CartanDatum& g, const Mono& m, Format f)
{
    if (f == Format::latex) return qio::to_latex(g, m);
    if (f == Format::json) return qio::to_json(g, SparsePoly<Mono>(m)).dump(2);
    return qio::to_text(g, m);
}

struct Context {
    bool no_cache = false;
    std::unique_ptr<qio::Cache> cache;

    const qio::Cache* store()
    {
        if (no_cache) return nullptr;
        if (!cache) cache = std::make_unique<qio::Cache>(qio::Cache::default_dir());
        return cache.get();
    }

    /// KR characters go through the cache so sweeps over different w share them.
    void attach(QCharProvider& provider, const std::string& engine)
    {
        const qio::Cache* c = store();
        if (!c) return;
        provider.set_backing([c, engine](const CartanDatum& g, const YMonomial& M, const std::function<QCharacter()>& run) {
            const std::string request = "qchar-poly engine=" + engine + " hw=" + qio::to_text(g, M);
            const std::string payload = qio::cached(c, g.label(), request, [&] { return qio::to_text(g, run().poly); });
            return QCharacter{qio::parse_poly<YMonomial>(g, payload), M};
        });
    }
};

QCharProvider::Engine engine_of(const std::string& s)
{
    if (s == "fm") return QCharProvider::Engine::fm;
    if (s == "closed") return QCharProvider::Engine::closed;
    throw parse_error("unknown engine '" + s + "'", 0);
}

/// Highest weight as a KR weight M_k for the closed engine.
std::pair<Node, int> as_kr(const CartanDatum& g, const YMonomial& M)
{
    if (M.y.size() >= 1) {
        const Node i = M.y.begin()->first.node;
        const int k = static_cast<int>(M.y.size());
        if (kr_highest_weight(g, i, k) == M) return {i, k};
    }
    throw math_error("unsupported-datum", "closed engine needs a KR highest weight Y[i,-1]Y[i,-3]...");
}

std::string roots_report(const CartanDatum& g, Format f)
{
    if (f == Format::json) {
        qio::json j{{"datum", g.label()}, {"rank", g.rank()}};
        qio::json C = qio::json::array();
        for (Node i = 1; i <= g.rank(); ++i) {
            qio::json row = qio::json::array();
            for (Node k = 1; k <= g.rank(); ++k) row.push_back(g.cartan(i, k));
            C.push_back(row);
        }
        j["cartan"] = C;
        qio::json d = qio::json::array();
        for (Node i = 1; i <= g.rank(); ++i) d.push_back(g.symmetrizer(i));
        j["symmetrizer"] = d;
        j["coxeter_number"] = g.coxeter_number();
        j["dual_coxeter_number"] = g.dual_coxeter();
        j["lacing"] = g.lacing();
        qio::json roots = qio::json::array();
        for (const auto& r : g.positive_roots()) roots.push_back(r.c);
        j["positive_roots"] = roots;
        j["longest_word"] = g.longest_word().letters;
        qio::json bar = qio::json::array();
        for (Node i = 1; i <= g.rank(); ++i) bar.push_back(g.bar(i));
        j["bar"] = bar;
        return j.dump(2);
    }
    std::ostringstream os;
    os << "datum " << g.label() << "\ncartan";
    for (Node i = 1; i <= g.rank(); ++i) {
        os << (i > 1 ? " |" : "");
        for (Node k = 1; k <= g.rank(); ++k) os << ' ' << g.cartan(i, k);
    }
    os << "\nsymmetrizer";
    for (Node i = 1; i <= g.rank(); ++i) os << ' ' << g.symmetrizer(i);
    os << "\nh " << g.coxeter_number() << " h_dual " << g.dual_coxeter() << " lacing " << g.lacing();
    os << "\nlongest_word " << qio::to_text(g, g.longest_word());
    os << "\npositive_roots " << g.positive_roots().size();
    for (const auto& r : g.positive_roots()) {
        os << "\n ";
        for (std::size_t k = 0; k < r.c.size(); ++k) os << (k ? "," : "") << r.c[k];
    }
    return os.str();
}

std::string verify_text(const CaseReport& r)
{
    std::ostringstream os;
    os << r.name << ": " << verdict_name(r.overall()) << "\n";
    for (const auto& c : r.clauses) {
        os << "  " << c.clause << ": " << verdict_name(c.verdict);
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
        if (c.verdict != Verdict::confirmed && !c.witness.empty()) os << "    got " << c.witness << "\n";
    }
    if (r.overall() == Verdict::inconclusive && !r.sweep_log.empty()) {
        os << "  sweep log:\n";
        for (const auto& s : r.sweep_log) os << "    R=" << s.R << " k=" << s.k << " " << s.fingerprint << "\n";
    }
    return os.str();
}

qio::json verify_json(const CaseReport& r)
{
    qio::json j{{"case", r.name}, {"description", r.description}, {"verdict", verdict_name(r.overall())}};
    qio::json cl = qio::json::array();
    for (const auto& c : r.clauses)
        cl.push_back({{"clause", c.clause}, {"verdict", verdict_name(c.verdict)}, {"detail", c.detail}, {"witness", c.witness}});
    j["clauses"] = cl;
    qio::json log = qio::json::array();
    for (const auto& s : r.sweep_log) log.push_back({{"R", s.R}, {"k", s.k}, {"fingerprint", s.fingerprint}});
    j["sweep_log"] = log;
    return j;
}

void print_sweep_log(const LimitReport& rep)
{
    std::cerr << "sweep log (" << rep.sweep_log.size() << " steps, exhausted " << rep.exhausted << "):\n";
    for (const auto& s : rep.sweep_log) std::cerr << "  R=" << s.R << " k=" << s.k << " " << s.fingerprint << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"qtwist: q-characters, braid group actions and projected limits"};
    app.require_subcommand(1);
    Context ctx;
    app.add_flag("--no-cache", ctx.no_cache, "Neither read nor write the on-disk cache");

    Common co;
    auto common = [&co](CLI::App* sub) {
        sub->add_option("--type", co.type, "Cartan type, e.g. A2, B3, G2")->capture_default_str();
        sub->add_option("--out", co.out, "text | json | latex")->capture_default_str();
    };

    auto* roots = app.add_subcommand("roots", "Cartan data, positive roots and a reduced word for w0");
    common(roots);

    std::string word, expr;
    bool inverse = false;
    auto* braid = app.add_subcommand("braid-act", "Apply T_w (or T_w^{-1}) to a Y- or Psi-monomial");
    common(braid);
    std::string dir_text = "+1";
    braid->add_option("--word,--w", word, "Word, e.g. 2,1 (rightmost acts first)")->required();
    braid->add_option("--expr", expr, "Y[...] monomial or q^w[...]Psi[...] l-weight")->required();
    braid->add_option("--dir", dir_text, "+1 for T_w, -1 for T_w^{-1}")->capture_default_str();
    braid->add_flag("--inverse", inverse, "Same as --dir -1");

    std::string hw, engine = "fm";
    std::size_t step_cap = default_fm_step_cap;
    auto* qchar = app.add_subcommand("qchar", "q-character of L(M)");
    common(qchar);
    qchar->add_option("--hw", hw, "Dominant Y-monomial")->required();
    qchar->add_option("--engine", engine, "fm | closed")->capture_default_str();
    qchar->add_option("--step-cap", step_cap, "Frenkel-Mukhin step budget")->capture_default_str();

    auto* wnorm = app.add_subcommand("wnorm", "w-normalized q-character in A-variables");
    common(wnorm);
    wnorm->add_option("--hw", hw, "Dominant Y-monomial")->required();
    wnorm->add_option("--w,--word", word, "Weyl group word")->required();
    wnorm->add_option("--engine", engine, "fm | closed")->capture_default_str();

    std::int64_t R = 0;
    auto* project = app.add_subcommand("project", "Apply pi_R to a polynomial in A[i,s] and e[...]");
    common(project);
    project->add_option("--R", R, "Threshold")->required();
    project->add_option("--expr", expr, "Polynomial")->required();

    Node node = 1;
    std::string m_text = "1";
    SweepConfig cfg;
    std::optional<std::int64_t> rmin;
    bool show_log = false, flip = false;
    auto limit_opts = [&](CLI::App* sub) {
        common(sub);
        sub->add_option("--w,--word", word, "Weyl group word")->required();
        sub->add_option("--i", node, "KR node")->capture_default_str();
        sub->add_option("--m", m_text, "Extra Y-monomial m")->capture_default_str();
        sub->add_option("--height", cfg.height_cap, "Height cap N")->capture_default_str();
        sub->add_option("--kmax", cfg.k_max, "Largest KR length")->capture_default_str();
        sub->add_option("--rmin", rmin, "Lowest R (default -(2 dmax N + 6))");
        sub->add_option("--window", cfg.window, "Stability window")->capture_default_str();
        sub->add_option("--engine", engine, "fm | closed")->capture_default_str();
        sub->add_flag("--log", show_log, "Print the sweep log to stderr");
    };
    auto* limit = app.add_subcommand("limit", "Projected limit pi^w_{q,infty}(m), truncated");
    limit_opts(limit);
    auto* factorize = app.add_subcommand("factorize", "Constant and non-constant parts of a projected limit");
    limit_opts(factorize);
    factorize->add_flag("--flip", flip, "Also print c^{-1} a in the cone e");

    std::string case_name;
    bool all = false, list = false;
    auto* verify = app.add_subcommand("verify", "Run catalog cases");
    verify->add_option("--case", case_name, "Case name");
    verify->add_flag("--all", all, "Run every case");
    verify->add_flag("--list", list, "List case names");
    verify->add_option("--out", co.out, "text | json")->capture_default_str();

    std::string cache_action;
    auto* cache = app.add_subcommand("cache", "Inspect the on-disk cache");
    cache->add_option("action", cache_action, "path | list | clear")->required()->check(CLI::IsMember({"path", "list", "clear"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Format fmt = format_of(co.out);
        auto out = [](const std::string& s) { std::cout << s << (s.empty() || s.back() != '\n' ? "\n" : ""); };

        if (*cache) {
            qio::Cache c(qio::Cache::default_dir());
            if (cache_action == "path") {
                out(c.dir().string());
            } else if (cache_action == "list") {
                for (const auto& e : c.list()) std::cout << e.key << " " << e.length << " " << e.created << " " << e.meta << "\n";
            } else {
                out("removed " + std::to_string(c.clear()));
            }
            return 0;
        }

        if (*verify) {
            if (list) {
                for (const auto& e : catalog()) std::cout << e.name << "  " << e.description << "\n";
                return 0;
            }
            if (!all && case_name.empty()) throw parse_error("verify needs --case, --all or --list", 0);
            QCharProvider provider;
            ctx.attach(provider, "fm");
            std::vector<CaseReport> reports;
            if (all)
                for (const auto& e : catalog()) reports.push_back(verify_report(e.name, provider));
            else
                reports.push_back(verify_report(case_name, provider));
            bool refuted = false;
            std::size_t n_conf = 0, n_inc = 0;
            qio::json arr = qio::json::array();
            for (const auto& r : reports) {
                refuted |= r.overall() == Verdict::refuted;
                n_conf += r.overall() == Verdict::confirmed;
                n_inc += r.overall() == Verdict::inconclusive;
                if (fmt == Format::json)
                    arr.push_back(verify_json(r));
                else
                    std::cout << verify_text(r);
            }
            if (fmt == Format::json)
                out(arr.dump(2));
            else
                std::cout << "summary: " << reports.size() << " cases, " << n_conf << " confirmed, "
                          << reports.size() - n_conf - n_inc << " refuted, " << n_inc << " inconclusive\n";
            return refuted ? 1 : 0;
        }

        const CartanDatum g = build_cartan(co.type);

        if (*roots) {
            out(roots_report(g, fmt));
            return 0;
        }

        if (*braid) {
            const WeylWord w = qio::parse_word(g, word);
            if (dir_text != "+1" && dir_text != "1" && dir_text != "-1") throw parse_error("--dir must be +1 or -1", 0);
            const int dir = inverse || dir_text == "-1" ? -1 : 1;
            if (expr.find("Psi") != std::string::npos || expr.find("q^w") != std::string::npos)
                out(render_mono(g, braid_act_word(g, w, dir, qio::parse_lweight_monomial(g, expr)), fmt));
            else
                out(render_mono(g, braid_act_word(g, w, dir, qio::parse_y_monomial(g, expr)), fmt));
            return 0;
        }

        if (*project) {
            out(render(g, project_piR(R, qio::parse_poly<CAMonomial>(g, expr)), fmt));
            return 0;
        }

        const char* fmt_name = co.out.c_str();

        if (*qchar || *wnorm) {
            const YMonomial M = qio::parse_y_monomial(g, hw);
            const auto eng = engine_of(engine);
            auto compute_q = [&]() -> QCharacter {
                if (eng == QCharProvider::Engine::closed) {
                    auto [i, k] = as_kr(g, M);
                    return kr_qchar_closed(g, i, k);
                }
                return fm_expand(g, M, step_cap);
            };
            if (*qchar) {
                const std::string request = std::string("qchar engine=") + engine + " hw=" + qio::to_text(g, M) +
                                            " cap=" + std::to_string(step_cap) + " out=" + fmt_name;
                out(qio::cached(ctx.store(), g.label(), request,
                                [&] { return render(g, compute_q().poly, fmt, qio::to_text(g, M)); }));
            } else {
                const WeylWord w = reduce_word(g, qio::parse_word(g, word));
                const std::string request = std::string("wnorm engine=") + engine + " hw=" + qio::to_text(g, M) +
                                            " w=" + qio::to_text(g, w) + " out=" + fmt_name;
                out(qio::cached(ctx.store(), g.label(), request,
                                [&] { return render(g, w_normalized_qchar(g, compute_q(), w), fmt, qio::to_text(g, M)); }));
            }
            return 0;
        }

        if (*limit || *factorize) {
            const WeylWord w = reduce_word(g, qio::parse_word(g, word));
            const YMonomial m = qio::parse_y_monomial(g, m_text);
            cfg.R_min = rmin;
            const std::int64_t r_min = rmin.value_or(default_R_min(g, cfg.height_cap));
            const std::string head = qio::to_text(g, limit_lweight(g, w, node, m));
            const std::string request = std::string(*limit ? "limit" : "factorize") + " engine=" + engine +
                                        " w=" + qio::to_text(g, w) + " i=" + std::to_string(node) + " m=" + qio::to_text(g, m) +
                                        " N=" + std::to_string(cfg.height_cap) + " kmax=" + std::to_string(cfg.k_max) +
                                        " rmin=" + std::to_string(r_min) + " window=" + std::to_string(cfg.window) +
                                        " flip=" + std::to_string(flip) + " out=" + fmt_name;
            const std::string meta = qio::json{{"height", cfg.height_cap}, {"kmax", cfg.k_max}, {"rmin", r_min}}.dump();
            out(qio::cached(
                ctx.store(), g.label(), request,
                [&] {
                    QCharProvider provider(engine_of(engine));
                    ctx.attach(provider, engine);
                    LimitReport rep = projected_limit(g, w, node, m, cfg, provider);
                    if (show_log) print_sweep_log(rep);
                    if (*limit) return render(g, rep.value, fmt, head);
                    Factorization f = factor_const_nonconst(rep.value);
                    std::optional<GradedSeries> flipped;
                    if (flip) {
                        const std::int64_t Ne = cfg.height_cap / cone_height_ratio(g, w);
                        flipped = product_in_cone_e(g, const_flip(g, f.c), f.a, Ne);
                    }
                    if (fmt == Format::json) {
                        qio::json j{{"head", head}, {"c", qio::to_json(g, f.c)}, {"a", qio::to_json(g, f.a)}};
                        if (flipped) j["flip"] = qio::to_json(g, *flipped);
                        return j.dump(2);
                    }
                    std::string s = "head: " + head + "\nc: " + render(g, f.c, fmt) + "\na: " + render(g, f.a, fmt);
                    if (flipped) s += "\nflip: " + render(g, *flipped, fmt);
                    return s;
                },
                meta));
            return 0;
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const no_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        print_sweep_log(e.report());
        return 4;
    } catch (const math_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
