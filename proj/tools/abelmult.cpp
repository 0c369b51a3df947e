// Command-line front end: eta, groebner, mult, center, verify, reproduce.

#include "abelmult/abelmult.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace abelmult;
using json = nlohmann::json;

namespace {

struct Common {
    std::string ordering = "grevlex";
    std::string format = "text";
    bool records() const { return format == "records"; }
    MonomialOrdering order() const { return MonomialOrdering(parse_order_kind(ordering)); }
};

struct EquationInput {
    std::string file;
    std::string family;
    std::string a, b, lead;

    void attach(CLI::App* app) {
        app->add_option("file", file, "equation file ('-' reads stdin)");
        app->add_option("--family", family, "cubic | quartic | scaled-quartic (inline equation)");
        app->add_option("--A", a, "coefficient of z^3 (inline equation)");
        app->add_option("--B", b, "coefficient of z^2 (inline equation)");
        app->add_option("--lead", lead, "coefficient of z^4 for scaled-quartic");
    }

    EquationSpec load() const {
        if (!file.empty()) {
            if (file == "-") return parse_equation(std::cin);
            std::ifstream in(file);
            if (!in) throw std::runtime_error("cannot open '" + file + "'");
            return parse_equation(in);
        }
        if (family.empty()) throw std::invalid_argument("give an equation file or --family/--A/--B");
        std::string text = "family: " + family + "\nA: " + (a.empty() ? "0" : a) + "\nB: " + (b.empty() ? "0" : b) + "\n";
        if (!lead.empty()) text += "lead: " + lead + "\n";
        return parse_equation(text);
    }
};

std::string read_all(const std::string& file) {
    if (file == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open '" + file + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Generators separated by ';' or newlines; '#' starts a comment.
std::vector<std::string> split_generators(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    bool comment = false;
    for (char ch : text) {
        if (ch == '\n') comment = false;
        if (comment) continue;
        if (ch == '#') {
            comment = true;
            continue;
        }
        if (ch == ';' || ch == '\n') {
            if (!detail::trim(cur).empty()) out.push_back(detail::trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!detail::trim(cur).empty()) out.push_back(detail::trim(cur));
    return out;
}

json poly_list(const std::vector<ParamPoly>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(p.str());
    return a;
}

/// Real point: "a=1/2, b=-0.25" (rationals or decimals).
RealAssignment<long double> parse_real_point(const std::string& text) {
    std::string s = detail::trim(text);
    if (!s.empty() && s.front() == '{' && s.back() == '}') s = s.substr(1, s.size() - 2);
    RealAssignment<long double> out;
    for (auto& [part, off] : detail::split_keep_offset(s, ',')) {
        if (detail::trim(part).empty()) continue;
        auto sep = part.find_first_of(":=");
        if (sep == std::string::npos) throw ParseError("expected name=value", 1, static_cast<int>(off) + 1);
        auto name = detail::trim(part.substr(0, sep));
        auto value = detail::trim(part.substr(sep + 1));
        try {
            out[name] = value.find('.') != std::string::npos || value.find('e') != std::string::npos
                            ? std::stold(value)
                            : Rational::parse(value).to_long_double();
        } catch (const std::exception&) {
            throw ParseError("bad number '" + value + "'", 1, static_cast<int>(off + sep) + 2);
        }
    }
    return out;
}

int cmd_eta(const Common& c, const EquationInput& in, int K, bool show_bases, const std::vector<std::string>& seed) {
    auto eq = in.load();
    EtaOptions opt;
    opt.ordering = c.order();
    for (const auto& s : seed) opt.seed.push_back(parse_poly(s, eq.symbols()));
    opt.stop_when_trivial = false;
    auto seq = eta_sequence(eq, K, opt);
    for (int k = 2; k <= seq.computed(); ++k) {
        if (c.records()) {
            json r{{"k", k}, {"eta", seq.eta(k).str()}, {"trivial", seq.basis(k).is_trivial()}};
            if (show_bases) r["basis"] = poly_list(seq.basis(k).primitive_generators());
            std::cout << r.dump() << "\n";
        } else {
            std::cout << "eta" << k << " = " << seq.eta(k) << "\n";
            if (show_bases) std::cout << "  G" << k << " = " << seq.basis(k).str() << "\n";
        }
    }
    if (!c.records())
        std::cout << (seq.trivial_at ? "ideal becomes <1> at G" + std::to_string(seq.trivial_at) : "ideal never <1>")
                  << "\n";
    return 0;
}

int cmd_groebner(const Common& c, const std::string& file, const std::string& inline_gens,
                 const std::vector<std::string>& smallest) {
    std::string text = inline_gens.empty() ? read_all(file) : inline_gens;
    auto gens_text = split_generators(text);
    if (gens_text.empty()) throw std::invalid_argument("groebner: no generators");
    SymbolList names;
    for (const auto& g : gens_text)
        for (auto& n : scan_symbols(g)) names.push_back(n);
    auto syms = make_symbols(names);
    std::vector<ParamPoly> gens;
    for (const auto& g : gens_text) gens.push_back(parse_poly(g, syms));
    auto ord = smallest.empty() ? c.order() : MonomialOrdering::with_smallest(parse_order_kind(c.ordering), *syms, smallest);
    auto g = buchberger(std::span<const ParamPoly>(gens), syms, ord);
    if (c.records()) {
        std::cout << json{{"ordering", c.ordering}, {"trivial", g.is_trivial()}, {"basis", poly_list(g.primitive_generators())}}
                         .dump()
                  << "\n";
    } else {
        for (const auto& p : g.primitive_generators()) std::cout << p << "\n";
    }
    return 0;
}

int cmd_mult(const Common& c, const EquationInput& in, const std::string& at, int Kmax) {
    auto eq = in.load();
    auto point = parse_assignment(at);
    auto m = multiplicity_at(eq, point, Kmax);
    json r{{"status", to_string(m.status)}, {"k", m.k}, {"stability", to_string(m.stability)}};
    if (m.status == MultiplicityStatus::finite) {
        r["V_k(1)"] = m.leading_value.str();
        r["a_k(1)"] = (-m.leading_value / Rational(m.k)).str();
    }
    if (c.records()) {
        std::cout << r.dump() << "\n";
    } else if (m.status == MultiplicityStatus::finite) {
        std::cout << "k=" << m.k << " " << to_string(m.stability) << "  V_k(1)=" << m.leading_value.str()
                  << "  a_k(1)=" << (-m.leading_value / Rational(m.k)).str() << "\n";
    } else {
        std::cout << to_string(m.status) << " (all V_k(1) vanish for k <= " << m.k << ")\n";
    }
    return 0;
}

int cmd_center(const Common& c, const EquationInput& in, const std::string& at) {
    auto eq = in.load();
    if (!at.empty()) eq = eq.substitute(parse_assignment(at), true);
    auto cert = find_certificate(eq);
    json r{{"certificate", to_string(cert.kind)}};
    if (cert.lambda) r["lambda"] = cert.lambda->str();
    if (cert.s) r["s"] = cert.s->str();
    if (c.records()) {
        std::cout << r.dump() << "\n";
    } else {
        std::cout << "certificate " << to_string(cert.kind);
        if (cert.lambda) std::cout << "  lambda=" << cert.lambda->str();
        std::cout << "\n";
        if (cert.s) std::cout << "  s(t) = " << cert.s->str() << "\n";
    }
    return 0;
}

int cmd_verify(const Common& c, const EquationInput& in, const std::string& at, const std::string& variety,
               std::size_t root, const LadderOptions& lo, const std::string& csv) {
    auto eq = in.load();
    RealAssignment<long double> point;
    if (!variety.empty()) {
        auto gens_text = split_generators(std::ifstream(variety) ? read_all(variety) : variety);
        std::vector<ParamPoly> gens;
        for (const auto& g : gens_text) gens.push_back(parse_poly(g, eq.symbols()));
        auto g = buchberger(std::span<const ParamPoly>(gens), eq.symbols(), MonomialOrdering(OrderKind::lex));
        auto p = solve_real_point(g, root);
        if (!p) throw std::runtime_error("verify: no real point on the given variety");
        point = *p;
    }
    for (const auto& [k, v] : parse_real_point(at)) point[k] = v;
    NumericEquation<long double> ne(eq, point);
    auto res = estimate_multiplicity(ne, lo);
    if (!csv.empty()) {
        std::ofstream out(csv);
        if (!out) throw std::runtime_error("cannot write '" + csv + "'");
        write_csv(out, res.points);
    }
    const bool finite = res.verdict == NumericVerdict::finite;
    const char* stab = res.coeff < 0 ? "stable" : "unstable";
    if (c.records()) {
        json r{{"verdict", to_string(res.verdict)}};
        if (finite) r.update({{"k", res.k}, {"slope", static_cast<double>(res.slope)},
                              {"coeff", static_cast<double>(res.coeff)}, {"stability", stab}});
        json pt = json::object();
        for (const auto& [k, v] : point) pt[k] = static_cast<double>(v);
        r["point"] = pt;
        std::cout << r.dump() << "\n";
    } else if (finite) {
        std::cout.precision(10);
        std::cout << "k=" << res.k << " slope=" << static_cast<double>(res.slope)
                  << " coeff=" << static_cast<double>(res.coeff) << " " << stab << "\n";
    } else {
        std::cout << "CENTER-LIKE (no ladder point above the noise floor)\n";
    }
    return 0;
}

int cmd_reproduce(const Common& c, std::vector<std::string> ids, bool all, bool heavy, bool list, unsigned workers,
                  std::optional<double> budget) {
    if (list) {
        for (const auto& r : registry())
            std::cout << r.id << (r.heavy ? " (heavy)" : "") << "  [" << to_string(r.kind) << "]  " << r.source << "\n";
        return 0;
    }
    std::vector<const CaseRecord*> recs;
    if (all || heavy)
        for (const auto& r : registry())
            if (!r.heavy || heavy) recs.push_back(&r);
    for (const auto& id : ids) recs.push_back(&find_case(id));
    if (recs.empty()) throw std::invalid_argument("reproduce: give case ids, --all or --heavy");
    RunOptions opt;
    opt.ordering = parse_order_kind(c.ordering);
    opt.budget_seconds = budget;
    auto reports = run_cases(recs, opt, workers, [&](const CaseReport& r) {
        if (c.records()) {
            json checks = json::array();
            for (const auto& ch : r.checks) checks.push_back({{"name", ch.name}, {"passed", ch.passed}, {"detail", ch.detail}});
            json j{{"id", r.id}, {"outcome", to_string(r.outcome)}, {"kind", to_string(r.kind)}, {"source", r.source},
                   {"seconds", r.seconds}, {"checks", checks}};
            j["mu"] = r.mu ? json(*r.mu) : json(nullptr);
            if (!r.message.empty()) j["message"] = r.message;
            std::cout << j.dump() << std::endl;
            return;
        }
        std::cout << to_string(r.outcome) << "  " << r.id;
        if (r.mu) std::cout << "  mu=" << *r.mu;
        std::printf("  (%.2fs)\n", r.seconds);
        if (!r.message.empty()) std::cout << "    " << r.message << "\n";
        for (const auto& ch : r.checks)
            if (!ch.passed) std::cout << "    failed: " << ch.name << "\n      " << ch.detail << "\n";
        std::cout.flush();
    });
    bool ok = std::all_of(reports.begin(), reports.end(), [](const CaseReport& r) { return r.outcome == Outcome::pass; });
    if (!c.records()) {
        std::size_t passed = std::count_if(reports.begin(), reports.end(), [](const CaseReport& r) { return r.outcome == Outcome::pass; });
        std::cout << passed << "/" << reports.size() << " cases passed\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multiplicity of the zero periodic solution of Abel-type equations"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--ordering", common.ordering, "monomial ordering")
        ->check(CLI::IsMember({"lex", "grlex", "grevlex"}))
        ->capture_default_str();
    app.add_option("--format", common.format, "output format")->check(CLI::IsMember({"text", "records"}))->capture_default_str();

    EquationInput eta_in, mult_in, center_in, verify_in;
    int K = 8, Kmax = 12;
    bool bases = false;
    std::vector<std::string> seed;
    auto* eta = app.add_subcommand("eta", "print eta_2..eta_K");
    eta_in.attach(eta);
    eta->add_option("--K", K, "last index")->capture_default_str();
    eta->add_flag("--bases", bases, "also print each G_k");
    eta->add_option("--seed", seed, "extra generators placed in the ideal first");

    std::string gfile, ggens;
    std::vector<std::string> smallest;
    auto* grob = app.add_subcommand("groebner", "reduced Groebner basis of a generator list");
    grob->add_option("file", gfile, "generators, ';' or newline separated ('-' reads stdin)");
    grob->add_option("--gens", ggens, "generators given inline");
    grob->add_option("--smallest", smallest, "symbols ranked smallest, in order");

    std::string at;
    auto* mult = app.add_subcommand("mult", "exact multiplicity at a rational point");
    mult_in.attach(mult);
    mult->add_option("--at", at, "assignment like {a: 1, b: -2/3}")->required();
    mult->add_option("--Kmax", Kmax, "largest k examined")->capture_default_str();

    std::string center_at;
    auto* center = app.add_subcommand("center", "look for a center certificate (cubic family)");
    center_in.attach(center);
    center->add_option("--at", center_at, "optional (partial) assignment");

    std::string verify_at, variety, csv;
    std::size_t root = 0;
    LadderOptions lo;
    double step = static_cast<double>(lo.step), escape = static_cast<double>(lo.escape);
    auto* verify = app.add_subcommand("verify", "numeric multiplicity from the displacement map");
    verify_in.attach(verify);
    verify->add_option("--at", verify_at, "point; decimals allowed");
    verify->add_option("--variety", variety, "generators (';'-separated or a file); a real point is solved from their lex basis");
    verify->add_option("--root", root, "which real root to take at each solve step")->capture_default_str();
    verify->add_option("--step", step, "RK4 step")->capture_default_str();
    verify->add_option("--escape", escape, "escape threshold")->capture_default_str();
    verify->add_option("--min-exp", lo.min_exponent, "largest |c| is 2^-min")->capture_default_str();
    verify->add_option("--max-exp", lo.max_exponent, "smallest |c| is 2^-max")->capture_default_str();
    verify->add_option("--csv", csv, "write (c, q) pairs");

    std::vector<std::string> ids;
    bool all = false, heavy = false, list = false;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::optional<double> budget;
    auto* rep = app.add_subcommand("reproduce", "run registry cases");
    rep->add_option("ids", ids, "case ids");
    rep->add_flag("--all", all, "every case except the heavy ones");
    rep->add_flag("--heavy", heavy, "every case including the heavy ones");
    rep->add_flag("--list", list, "list case ids");
    rep->add_option("--workers", workers, "worker threads")->capture_default_str();
    rep->add_option("--budget", budget, "per-case time cap in seconds");

    CLI11_PARSE(app, argc, argv);
    lo.step = step;
    lo.escape = escape;
    try {
        if (*eta) return cmd_eta(common, eta_in, K, bases, seed);
        if (*grob) return cmd_groebner(common, gfile, ggens, smallest);
        if (*mult) return cmd_mult(common, mult_in, at, Kmax);
        if (*center) return cmd_center(common, center_in, center_at);
        if (*verify) return cmd_verify(common, verify_in, verify_at, variety, root, lo, csv);
        if (*rep) return cmd_reproduce(common, ids, all, heavy, list, workers, budget);
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
