#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lame/ansatz.hpp"
#include "lame/greens.hpp"
#include "lame/hauptmodul.hpp"
#include "lame/spectral.hpp"
#include "lame/sturm.hpp"
#include "lame/type_one.hpp"

namespace lame::cli {

using json = nlohmann::ordered_json;

namespace {

json cxj(cx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json cx_list(const std::vector<cx>& v)
{
    json a = json::array();
    for (const auto& z : v) a.push_back(cxj(z));
    return a;
}

cx parse_cx(const std::string& s)
{
    const auto comma = s.find(',');
    try {
        std::size_t used = 0;
        if (comma == std::string::npos) {
            const double re = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return {re, 0.0};
        }
        const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
        const double re = std::stod(a, &used);
        if (used != a.size()) throw std::invalid_argument(s);
        const double im = std::stod(b, &used);
        if (used != b.size()) throw std::invalid_argument(s);
        return {re, im};
    } catch (const std::logic_error&) {
        throw DomainError("cannot parse complex number '" + s + "' (expected re,im)");
    }
}

json poly_json(const CxPoly& p)
{
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(cxj(c));
    return a;
}

json sym_json(const SymPoly& p)
{
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) terms.push_back({{"B", m[0]}, {"g2", m[1]}, {"g3", m[2]}, {"coeff", c.str()}});
    return json{{"expr", p.to_string()}, {"terms", terms}};
}

json divisor_json(const DivisorList& d)
{
    json pts = json::array();
    for (std::size_t i = 0; i < d.points().size(); ++i) {
        const Coords c = d.coords()[i];
        pts.push_back({{"z", cxj(d.points()[i])}, {"s", c.s}, {"t", c.t}});
    }
    return pts;
}

json lattice_json(const Lattice& L)
{
    const cx legendre = L.eta1() * L.omega2() - L.eta2() * L.omega1() - cx(0.0, 2.0 * std::numbers::pi);
    return json{{"tau", cxj(L.tau())},
                {"g2", cxj(L.g2())},
                {"g3", cxj(L.g3())},
                {"e", cx_list({L.e1(), L.e2(), L.e3()})},
                {"eta1", cxj(L.eta1())},
                {"eta2", cxj(L.eta2())},
                {"delta", cxj(L.delta())},
                {"j", cxj(j_invariant(L))},
                {"legendre_residual", std::abs(legendre)}};
}

void flatten(const json& j, const std::string& path, std::ostream& os)
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "." + std::to_string(i), os);
    } else {
        std::string v = j.is_string() ? j.get<std::string>() : j.dump();
        if (v.find_first_of(",\"") != std::string::npos) {
            std::string q = "\"";
            for (char ch : v) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
            v = q + "\"";
        }
        os << path << "," << v << "\n";
    }
}

struct Options {
    std::string tau = "0,1";
    std::string B = "0,0";
    int n = 1;
    int grid = 32;
    int terms = 8;
    bool symbolic = false;
    std::string which = "ell";
    std::string out;
    std::string format = "json";
    double tol = 1e-8;
};

json cmd_selftest(double tol)
{
    json checks = json::array();
    auto check = [&](const std::string& name, const std::function<std::pair<bool, double>()>& f) {
        bool pass = false;
        double value = NAN;
        std::string error;
        try {
            std::tie(pass, value) = f();
        } catch (const Error& e) {
            error = e.what();
        }
        json c{{"name", name}, {"pass", pass}, {"value", value}};
        if (!error.empty()) c["error"] = error;
        checks.push_back(c);
    };
    const Lattice sq(1.0, cx(0.0, 1.0));
    const Lattice hex(1.0, std::polar(1.0, std::numbers::pi / 3.0));
    const Lattice gen(1.0, cx(0.3, 1.1));
    const SymPoly B = SymPoly::B(), g2 = SymPoly::g2(), g3 = SymPoly::g3();

    check("legendre relation", [&] {
        const double r = std::abs(gen.eta1() * gen.omega2() - gen.eta2() * gen.omega1() - cx(0.0, 2.0 * std::numbers::pi));
        return std::pair{r < tol, r};
    });
    check("spectral polynomial n=1", [&] {
        return std::pair{ell_symbolic(1) == SymPoly(4) * B * B * B - g2 * B - g3, 0.0};
    });
    check("brioschi-halphen p1 p2", [&] {
        const bool ok = p_symbolic(1) == B * B - Rational(3, 4) * g2 && p_symbolic(2) == B * B * B - SymPoly(7) * g2 * B + SymPoly(20) * g3;
        return std::pair{ok, 0.0};
    });
    check("real roots of ell_2 on 1.3i", [&] {
        const int c = count_roots(ell_poly(2, Lattice(1.0, cx(0.0, 1.3))));
        return std::pair{c == 5, static_cast<double>(c)};
    });
    check("critical points square", [&] {
        const auto cs = critical_points(sq);
        return std::pair{cs.count == 3 && cs.max_residual < 1e-10, static_cast<double>(cs.count)};
    });
    check("critical points hexagonal", [&] {
        const auto cs = critical_points(hex);
        return std::pair{cs.count == 5 && cs.max_residual < 1e-10, static_cast<double>(cs.count)};
    });
    check("fiber round trip n=2", [&] {
        const Fiber F = fiber(2, 7.0, sq);
        double worst = 0.0;
        for (const auto& d : F.sheets) worst = std::max({worst, std::abs(B_of(d) - 7.0), is_in_Xn(d).residual});
        return std::pair{F.sheets.size() == 2 && worst < 1e-7, worst};
    });
    check("lame residual n=2", [&] {
        const Fiber F = fiber(2, cx(3.0, 1.0), gen);
        const auto r = lame_residual(F.sheets[0], default_samples(F.sheets[0]));
        return std::pair{r.in_yn && r.ode < 1e-5, r.ode};
    });
    check("infinity tangent n=4", [&] {
        const auto t = infinity_tangent(4);
        return std::pair{t.power_residual < tol && t.min_abs_t > 1e-6 && t.min_pair_sum > 1e-6, t.power_residual};
    });
    check("determinant at roots of unity n=5", [&] {
        const Cyclotomic d = d_n_roots_of_unity(5);
        return std::pair{d.is_rational() && d.rational() == 24, 0.0};
    });
    check("type I count n=2", [&] {
        const int c = count_typeI(2, gen);
        return std::pair{c == 3, static_cast<double>(c)};
    });
    check("type I solver n=2", [&] {
        const auto s = typeI_solve(2, gen);
        double worst = 0.0;
        for (const auto& x : s) worst = std::max(worst, x.residual);
        return std::pair{s.size() == 3 && worst < tol, worst};
    });
    check("hauptmodul T and S laws", [&] {
        const double r = std::max(transform_check(cx(0.2, 1.1), Transform::T), transform_check(cx(0.2, 1.1), Transform::S));
        return std::pair{r < tol, r};
    });
    check("type II hexagonal n=1", [&] {
        const auto h = typeII_search(1, hex);
        return std::pair{h.size() == 1, static_cast<double>(h.size())};
    });

    int passed = 0;
    for (const auto& c : checks) passed += c["pass"].get<bool>() ? 1 : 0;
    return json{{"checks", checks}, {"passed", passed}, {"failed", static_cast<int>(checks.size()) - passed}};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Lame equations, spectral curves and mean field equations on flat tori"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    if (const char* env = std::getenv("LAME_TOL")) {
        try {
            o.tol = std::stod(env);
        } catch (const std::logic_error&) {
            err << "error: LAME_TOL is not a number\n";
            return 2;
        }
    }
    app.add_option("--tol", o.tol, "residual tolerance for pass/fail flags (env LAME_TOL)")->check(CLI::PositiveNumber);
    app.add_option("--out", o.out, "write output to this file");
    app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto tau_opt = [&](CLI::App* s) { s->add_option("--tau", o.tau, "tau as re,im")->required(); };
    auto n_opt = [&](CLI::App* s, int lo, int hi) { s->add_option("--n", o.n, "order")->required()->check(CLI::Range(lo, hi)); };

    auto* lattice = app.add_subcommand("lattice", "lattice invariants");
    tau_opt(lattice);
    auto* ell = app.add_subcommand("ell-poly", "spectral polynomial coefficients");
    n_opt(ell, 1, 12);
    ell->add_option("--tau", o.tau, "tau as re,im");
    ell->add_flag("--symbolic", o.symbolic, "exact coefficients in B, g2, g3");
    auto* pp = app.add_subcommand("p-poly", "Brioschi-Halphen polynomial coefficients");
    n_opt(pp, 0, 12);
    pp->add_option("--tau", o.tau, "tau as re,im");
    pp->add_flag("--symbolic", o.symbolic, "exact coefficients in B, g2, g3");
    auto* st = app.add_subcommand("sturm", "distinct real roots via Sturm chains");
    n_opt(st, 0, 12);
    tau_opt(st);
    st->add_option("--which", o.which, "ell or p")->check(CLI::IsMember({"ell", "p"}));
    auto* gc = app.add_subcommand("green-crit", "critical points of the Green function");
    tau_opt(gc);
    gc->add_option("--grid", o.grid, "seed grid size")->check(CLI::Range(32, 1024));
    auto* fb = app.add_subcommand("fiber", "divisors over a point of the spectral curve");
    n_opt(fb, 1, 12);
    tau_opt(fb);
    fb->add_option("--B", o.B, "B as re,im")->required();
    auto* t1 = app.add_subcommand("type1", "half-integer type I solutions");
    n_opt(t1, 0, 12);
    tau_opt(t1);
    auto* t2 = app.add_subcommand("type2-scan", "Green-equation zeros along the spectral curve");
    n_opt(t2, 1, 6);
    tau_opt(t2);
    t2->add_option("--grid", o.grid, "seed grid size per axis")->check(CLI::Range(1, 256));
    auto* hp = app.add_subcommand("haupt", "Hauptmodul value and Taylor coefficients");
    tau_opt(hp);
    hp->add_option("--terms", o.terms, "highest coefficient index")->check(CLI::Range(0, 32));
    auto* inf = app.add_subcommand("infinity", "tangent direction at the point at infinity");
    n_opt(inf, 2, 10);
    auto* self = app.add_subcommand("selftest", "invariant suite");

    // CLI11 wants argv order without the program name
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    // type2-scan defaults to a coarser grid than green-crit
    if (t2->parsed() && t2->count("--grid") == 0) o.grid = 8;

    int code = 0;
    json result;
    try {
        auto L = [&] { return Lattice(1.0, parse_cx(o.tau)); };
        if (lattice->parsed()) {
            result = lattice_json(L());
        } else if (ell->parsed()) {
            if (o.symbolic) result = json{{"n", o.n}, {"ell", sym_json(ell_symbolic(o.n))}};
            else result = json{{"n", o.n}, {"tau", cxj(parse_cx(o.tau))}, {"coeffs", poly_json(ell_poly(o.n, L()))}};
        } else if (pp->parsed()) {
            if (o.symbolic) result = json{{"n", o.n}, {"p", sym_json(p_symbolic(o.n))}};
            else result = json{{"n", o.n}, {"tau", cxj(parse_cx(o.tau))}, {"coeffs", poly_json(p_poly(o.n, L()))}};
        } else if (st->parsed()) {
            const Lattice l = L();
            const CxPoly p = o.which == "ell" ? ell_poly(o.n, l) : p_poly(o.n, l);
            result = json{{"n", o.n}, {"tau", cxj(l.tau())}, {"which", o.which}, {"degree", p.degree()}, {"count", count_roots(p)}};
        } else if (gc->parsed()) {
            const Lattice l = L();
            const CriticalSet cs = critical_points(l, o.grid);
            json pts = json::array();
            for (const auto& z : cs.points) {
                const Coords c = l.canonical_coords(z);
                pts.push_back({{"z", cxj(z)}, {"s", c.s}, {"t", c.t}, {"grad_abs", std::abs(green_grad(z, l))}});
            }
            result = json{{"tau", cxj(l.tau())}, {"count", cs.count}, {"points", pts},
                          {"near_degenerate", cs.near_degenerate}, {"max_residual", cs.max_residual}};
        } else if (fb->parsed()) {
            const Lattice l = L();
            const Fiber F = fiber(o.n, parse_cx(o.B), l);
            json sheets = json::array();
            for (const auto& d : F.sheets) {
                const Membership m = is_in_Xn(d);
                sheets.push_back({{"points", divisor_json(d)}, {"B_of", cxj(B_of(d))}, {"in_Xn", m.member},
                                  {"residual", m.residual}, {"ok", m.member && m.residual < o.tol}});
            }
            result = json{{"n", o.n}, {"tau", cxj(l.tau())}, {"B", cxj(F.point.B)}, {"C", cxj(F.point.C)},
                          {"ramified", F.ramified}, {"sheets", sheets}};
            if (F.sheets.size() == 2) result["negation_distance"] = F.sheets[0].negated().coord_distance(F.sheets[1]);
        } else if (t1->parsed()) {
            const Lattice l = L();
            result = json{{"n", o.n}, {"tau", cxj(l.tau())}, {"count", count_typeI(o.n, l)}};
            if (o.n <= 2) {
                json sols = json::array();
                for (const auto& s : typeI_solve(o.n, l))
                    sols.push_back({{"z", cx_list(s.zs)}, {"z_tilde", cx_list(s.zts)}, {"points", cx_list(s.points)},
                                    {"multiplicity", s.multiplicity}, {"residual", s.residual}, {"ok", s.residual < o.tol}});
                result["solutions"] = sols;
            } else {
                result["solutions"] = nullptr;
            }
        } else if (t2->parsed()) {
            const Lattice l = L();
            SweepSpec sw;
            sw.grid = o.grid;
            json hits = json::array();
            for (const auto& h : typeII_search(o.n, l, sw))
                hits.push_back({{"B", cxj(h.point.B)}, {"C", cxj(h.point.C)}, {"points", divisor_json(h.divisor)},
                                {"residual", h.residual}, {"ok", h.residual < o.tol}});
            result = json{{"n", o.n}, {"tau", cxj(l.tau())}, {"grid", o.grid}, {"hits", hits}};
        } else if (hp->parsed()) {
            const cx tau = parse_cx(o.tau);
            if (!(tau.imag() > 0.0)) throw DomainError("haupt: Im tau > 0 required");
            const PowerSeries a = a_coeffs(tau, o.terms);
            result = json{{"tau", cxj(tau)}, {"h", cxj(hauptmodul(tau))}, {"a", cx_list(a.coeffs())}};
        } else if (inf->parsed()) {
            const InfinityTangent t = infinity_tangent(o.n);
            json taus = json::array(), sb = json::array();
            for (const auto& r : t.tau) taus.push_back(r.str());
            for (const auto& r : t.sbar) sb.push_back(r.str());
            result = json{{"n", o.n}, {"t", cx_list(t.t)}, {"tau", taus}, {"sbar", sb}, {"power_residual", t.power_residual},
                          {"min_abs_t", t.min_abs_t}, {"min_pair_sum", t.min_pair_sum}};
        } else if (self->parsed()) {
            result = cmd_selftest(o.tol);
            if (result["failed"].get<int>() > 0) code = 1;
        }
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericsError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 1;
    }

    std::ostringstream text;
    if (o.format == "csv") {
        text << "key,value\n";
        flatten(result, "", text);
    } else {
        text << result.dump(2) << "\n";
    }
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) {
            err << "error: cannot open " << o.out << "\n";
            return 2;
        }
        f << text.str();
    } else {
        out << text.str();
    }
    return code;
}

int run(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace lame::cli
