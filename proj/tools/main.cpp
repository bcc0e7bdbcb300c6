#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "padicspec/diagram.hpp"
#include "padicspec/errors.hpp"
#include "padicspec/fp_factor.hpp"
#include "padicspec/hensel.hpp"
#include "padicspec/padic_int.hpp"
#include "padicspec/parse.hpp"
#include "padicspec/poly.hpp"
#include "padicspec/prime.hpp"
#include "padicspec/report_json.hpp"
#include "padicspec/spectrum.hpp"
#include "padicspec/valuation.hpp"

using nlohmann::ordered_json;
using namespace padicspec;

namespace {

ordered_json base(const char* command) {
    ordered_json j;
    j["schema_version"] = 1;
    j["command"] = command;
    return j;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int fail(const char* kind, const std::string& message) {
    ordered_json j;
    j["schema_version"] = 1;
    j["error"] = {{"kind", kind}, {"message", message}};
    emit(j);
    return 1;
}

mpz_class parse_mpz(const std::string& s) {
    if (s.empty()) throw ParseError(0, "empty integer");
    try {
        return mpz_class(s);
    } catch (const std::invalid_argument&) {
        throw ParseError(0, "not an integer: '" + s + "'");
    }
}

/// "a/b" or "a", canonicalized; rejects zero denominators.
std::pair<mpz_class, mpz_class> parse_rat(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return {parse_mpz(s), 1};
    mpz_class num = parse_mpz(s.substr(0, slash));
    mpz_class den = parse_mpz(s.substr(slash + 1));
    if (den == 0) throw std::domain_error("zero denominator: " + s);
    mpq_class q(num, den);
    q.canonicalize();
    return {q.get_num(), q.get_den()};
}

std::vector<IntPoly> parse_anchor_list(const std::string& s) {
    std::vector<IntPoly> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        if (comma == std::string::npos) comma = s.size();
        std::string piece = s.substr(start, comma - start);
        const auto a = piece.find_first_not_of(" \t");
        const auto b = piece.find_last_not_of(" \t");
        if (a != std::string::npos) out.push_back(parse_poly(piece.substr(a, b - a + 1)));
        start = comma + 1;
        if (comma == s.size()) break;
    }
    return out;
}

ordered_json valuation_json(const Valuation& v) {
    return v.is_infinite() ? ordered_json("infinity") : ordered_json(v.finite_value());
}

ordered_json certificate_json(const HenselCertificate& c) {
    ordered_json j;
    j["v_f"] = valuation_json(c.v_f);
    j["v_fprime"] = valuation_json(c.v_fprime);
    j["strong"] = c.strong_ok;
    j["weak"] = c.weak_ok;
    j["working_precision"] = c.working_precision;
    return j;
}

ordered_json qp_result_json(const QpResult& r) {
    ordered_json j;
    switch (r.verdict) {
    case QpVerdict::Irreducible:
        j["verdict"] = "irreducible";
        j["certificate"] = r.certificate;
        break;
    case QpVerdict::Reducible:
        j["verdict"] = "reducible";
        j["witness"] = witness_json(*r.witness);
        break;
    case QpVerdict::Undecided:
        j["verdict"] = "undecided";
        j["note"] = r.note;
        break;
    }
    return j;
}

struct VpArgs {
    std::string value;
    std::uint64_t p = 0;
};

struct EmbedArgs {
    std::string value;
    std::uint64_t p = 0;
    unsigned depth = 5;
};

struct LiftArgs {
    std::string poly, seed;
    std::uint64_t p = 0;
    unsigned prec = 50;
};

struct RootsArgs {
    std::string poly;
    std::uint64_t p = 0;
    unsigned prec = 50;
    unsigned depth = 0;
    bool depth_set = false;
};

struct IrredArgs {
    std::string poly, over = "qp";
    std::uint64_t p = 0;
    unsigned prec = 50;
    bool decide = false;
};

struct ClassifyArgs {
    std::string poly, space = "zp";
    std::uint64_t p = 0;
    bool p_set = false;
    std::vector<std::uint64_t> primes;
    bool decide = false;
};

struct DrawArgs {
    std::string anchors, format = "svg", out = "-";
    std::uint64_t p = 0;
    bool p_set = false;
    std::vector<std::uint64_t> primes;
    unsigned budget = 7;
};

int run_vp(const VpArgs& a) {
    Prime p(a.p);
    auto [num, den] = parse_rat(a.value);
    const Valuation v = vp_rat(num, den, p);
    ordered_json j = base("vp");
    j["value"] = a.value;
    j["p"] = a.p;
    j["valuation"] = valuation_json(v);
    j["abs"] = abs_p(v, p).get_str();
    emit(j);
    return 0;
}

int run_embed(const EmbedArgs& a) {
    Prime p(a.p);
    auto [num, den] = parse_rat(a.value);
    const PadicInt x = embed_rational(num, den, p, a.depth);
    ordered_json j = base("embed");
    j["value"] = a.value;
    j["p"] = a.p;
    j["depth"] = a.depth;
    ordered_json seq = ordered_json::array();
    for (unsigned k = 1; k <= a.depth; ++k) seq.push_back(json_int(x.truncate(k)));
    j["truncations"] = seq;
    emit(j);
    return 0;
}

int run_lift(const LiftArgs& a) {
    Prime p(a.p);
    const IntPoly f = parse_poly(a.poly);
    const mpz_class seed = parse_mpz(a.seed);
    const LiftedRoot r = lift(f, p, seed, a.prec);

    const mpz_class& alpha = r.alpha.residue();
    mpz_class modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), p.value(), r.alpha.precision());
    mpz_class acc = 0;
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * alpha + f.coeff(static_cast<std::size_t>(i));
        mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), modulus.get_mpz_t());
    }
    const mpz_class diff = alpha - seed;
    const mpz_class pz(static_cast<unsigned long>(p.value()));
    const bool seed_ok = mpz_divisible_p(diff.get_mpz_t(), pz.get_mpz_t()) != 0;

    ordered_json j = base("lift");
    j["poly"] = f.to_string();
    j["p"] = a.p;
    j["seed"] = json_int(seed);
    j["precision"] = a.prec;
    j["alpha"] = {{"residue", json_int(alpha)}, {"precision", r.alpha.precision()}};
    j["certificate"] = certificate_json(r.certificate);
    j["checks"] = {{"f_alpha_vanishes", acc == 0}, {"matches_seed_mod_p", seed_ok}};
    emit(j);
    return 0;
}

int run_roots(const RootsArgs& a) {
    Prime p(a.p);
    const IntPoly f = parse_poly(a.poly);
    const std::vector<LiftedRoot> rs =
        a.depth_set ? roots_in_zp(f, p, a.prec, a.depth) : roots_in_zp(f, p, a.prec);
    ordered_json j = base("roots");
    j["poly"] = f.to_string();
    j["p"] = a.p;
    j["precision"] = a.prec;
    if (a.depth_set) j["search_depth"] = a.depth;
    ordered_json arr = ordered_json::array();
    for (const auto& r : rs) {
        arr.push_back({{"residue", json_int(r.alpha.residue())},
                       {"precision", r.alpha.precision()},
                       {"kind", r.kind == RootKind::Certified ? "certified" : "exact-at-precision"}});
    }
    j["roots"] = arr;
    emit(j);
    return 0;
}

int run_irred(const IrredArgs& a) {
    Prime p(a.p);
    const IntPoly f = parse_poly(a.poly);
    ordered_json result;

    if (a.over == "fp") {
        const FpPoly g = reduce_mod_p(f, p);
        if (g.degree() < 1)
            throw std::domain_error("f mod p is constant; irreducibility over F_p needs degree >= 1");
        if (fp_is_irreducible(g)) {
            result["verdict"] = "irreducible";
        } else {
            result["verdict"] = "reducible";
            ordered_json factors = ordered_json::array();
            for (const auto& [fac, mult] : fp_factor(g).factors)
                factors.push_back({{"factor", fac.to_string()}, {"multiplicity", mult}});
            result["factors"] = factors;
        }
    } else if (a.over == "zp") {
        if (f.degree() < 1)
            throw std::domain_error("irreducibility needs degree >= 1, got " + f.to_string());
        if (!is_primitive_at(f, p)) {
            long long k = -1;
            for (const auto& c : f.coeffs()) {
                const Valuation v = vp_int(c, p);
                if (!v.is_infinite() && (k < 0 || v.finite_value() < k)) k = v.finite_value();
            }
            mpz_class pk;
            mpz_ui_pow_ui(pk.get_mpz_t(), p.value(), static_cast<unsigned long>(k));
            std::vector<mpz_class> reduced;
            for (const auto& c : f.coeffs()) reduced.push_back(c / pk);
            result["verdict"] = "reducible";
            ReducibleWitness w;
            w.kind = "factor";
            w.value = pk.get_str() + "*(" + IntPoly(reduced).to_string() + ")";
            result["witness"] = witness_json(w);
        } else {
            result = qp_result_json(qp_irreducible(f, p, a.prec));
        }
    } else {
        result = qp_result_json(qp_irreducible(f, p, a.prec));
    }

    if (a.decide && result["verdict"] == "undecided")
        return fail("domain", "verdict is undecided: " + result["note"].get<std::string>());

    ordered_json j = base("irred");
    j["poly"] = f.to_string();
    j["p"] = a.p;
    j["over"] = a.over;
    j["result"] = result;
    emit(j);
    return 0;
}

int run_classify(const ClassifyArgs& a) {
    const IntPoly f = parse_poly(a.poly);
    ordered_json j = base("classify");

    if (a.space == "zp") {
        Prime p(a.p);
        const FiberReport rep = zp_fiber_report(f, p);
        if (a.decide && rep.generic.verdict == QpVerdict::Undecided)
            return fail("domain", "generic verdict is undecided: " + rep.generic.note);
        j["report"] = fiber_report_json(rep);

        ordered_json points = ordered_json::array();
        points.push_back({{"ideal", "(" + f.to_string() + ")"},
                          {"classification", classify_json(classify_ideal(p, {f}, false))}});
        for (const auto& ff : rep.rows.at(0).factors) {
            std::vector<mpz_class> coeffs = ff.factor.coeffs();
            const IntPoly g(std::move(coeffs));
            points.push_back(
                {{"ideal", "(" + std::to_string(p.value()) + "," + g.to_string() + ")"},
                 {"classification", classify_json(classify_ideal(p, {g}, true))}});
        }
        j["points"] = points;
    } else {
        std::vector<Prime> primes;
        primes.reserve(a.primes.size());
        for (auto q : a.primes) primes.emplace_back(q);
        const FiberReport rep = z_fiber_report(f, primes);
        if (a.decide && rep.generic.verdict == QpVerdict::Undecided)
            return fail("domain", "generic verdict is undecided: " + rep.generic.note);
        j["report"] = fiber_report_json(rep);
    }
    emit(j);
    return 0;
}

int run_draw(const DrawArgs& a) {
    const std::vector<IntPoly> anchors = parse_anchor_list(a.anchors);
    DiagramSpec spec;
    if (a.p_set) {
        spec = plan_zp_diagram(Prime(a.p), anchors);
    } else {
        std::vector<Prime> primes;
        primes.reserve(a.primes.size());
        for (auto q : a.primes) primes.emplace_back(q);
        spec = plan_global_diagram(primes, anchors, a.budget);
    }
    RenderOptions opts;
    opts.format = a.format == "tikz" ? RenderOptions::Format::Tikz : RenderOptions::Format::Svg;
    const std::string doc = render(spec, opts);

    if (a.out == "-") {
        std::cout << doc;
        return 0;
    }
    std::ofstream os(a.out, std::ios::binary);
    os << doc;
    os.flush();
    if (!os) throw std::domain_error("cannot write file: " + a.out);
    ordered_json j = base("draw");
    j["format"] = a.format;
    j["out"] = a.out;
    j["bytes"] = doc.size();
    emit(j);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-adic arithmetic, Hensel lifting, and point classification on Spec Z_p[T]"};
    app.require_subcommand(1);

    VpArgs vp_args;
    auto* vp_cmd = app.add_subcommand("vp", "p-adic valuation and absolute value of a rational");
    vp_cmd->add_option("value", vp_args.value, "integer or rational a/b")->required();
    vp_cmd->add_option("--p", vp_args.p, "prime")->required();

    EmbedArgs embed_args;
    auto* embed_cmd =
        app.add_subcommand("embed", "truncation sequence of a rational embedded in Z_p");
    embed_cmd->add_option("value", embed_args.value, "p-adically integral rational")->required();
    embed_cmd->add_option("--p", embed_args.p, "prime")->required();
    embed_cmd->add_option("--depth", embed_args.depth, "number of truncations (default 5)")
        ->check(CLI::Range(1u, 100000u));

    LiftArgs lift_args;
    auto* lift_cmd = app.add_subcommand("lift", "Hensel-lift a seed to a certified root");
    lift_cmd->add_option("--poly", lift_args.poly, "polynomial in T over Z")->required();
    lift_cmd->add_option("--p", lift_args.p, "prime")->required();
    lift_cmd->add_option("--seed", lift_args.seed, "integer seed residue")->required();
    lift_cmd->add_option("--prec", lift_args.prec, "target precision in p-adic digits (default 50)")
        ->check(CLI::Range(1u, 100000u));

    RootsArgs roots_args;
    auto* roots_cmd = app.add_subcommand("roots", "all Z_p roots found by seed search + lifting");
    roots_cmd->add_option("--poly", roots_args.poly, "polynomial in T over Z")->required();
    roots_cmd->add_option("--p", roots_args.p, "prime")->required();
    roots_cmd->add_option("--prec", roots_args.prec, "working precision (default 50)")
        ->check(CLI::Range(1u, 100000u));
    auto* depth_opt = roots_cmd->add_option("--depth", roots_args.depth,
                                            "seed search depth (default: from the discriminant)");
    depth_opt->check(CLI::Range(1u, 20u));

    IrredArgs irred_args;
    auto* irred_cmd = app.add_subcommand("irred", "irreducibility over F_p, Z_p, or Q_p");
    irred_cmd->add_option("--poly", irred_args.poly, "polynomial in T over Z")->required();
    irred_cmd->add_option("--p", irred_args.p, "prime")->required();
    irred_cmd->add_option("--over", irred_args.over, "coefficient ring (default qp)")
        ->check(CLI::IsMember({"fp", "zp", "qp"}));
    irred_cmd->add_option("--prec", irred_args.prec, "working precision (default 50)")
        ->check(CLI::Range(1u, 100000u));
    irred_cmd->add_flag("--decide", irred_args.decide,
                        "treat an undecided verdict as an error (exit 1)");

    ClassifyArgs classify_args;
    auto* classify_cmd =
        app.add_subcommand("classify", "fiber report and point classification for (f)");
    classify_cmd->add_option("--poly", classify_args.poly, "polynomial in T over Z")->required();
    classify_cmd->add_option("--space", classify_args.space, "zp (Spec Z_p[T]) or z (Spec Z[T])")
        ->check(CLI::IsMember({"zp", "z"}));
    auto* cp_opt = classify_cmd->add_option("--p", classify_args.p, "prime (space zp)");
    classify_cmd->add_option("--primes", classify_args.primes, "fiber primes (space z)")
        ->delimiter(',');
    classify_cmd->add_flag("--decide", classify_args.decide,
                           "treat an undecided generic verdict as an error (exit 1)");

    DrawArgs draw_args;
    auto* draw_cmd = app.add_subcommand("draw", "render a spectrum diagram (SVG or TikZ)");
    draw_cmd->add_option("--anchors", draw_args.anchors, "comma-separated polynomials in T");
    auto* dp_opt = draw_cmd->add_option("--p", draw_args.p, "single prime: draw Spec Z_p[T]");
    draw_cmd->add_option("--primes", draw_args.primes, "prime list: draw Spec Z[T]")
        ->delimiter(',');
    draw_cmd->add_option("--format", draw_args.format, "svg or tikz (default svg)")
        ->check(CLI::IsMember({"svg", "tikz"}));
    draw_cmd->add_option("--out", draw_args.out, "output path, - for stdout (default -)");
    draw_cmd->add_option("--budget", draw_args.budget,
                         "max labeled closed points per fiber (default 7)")
        ->check(CLI::Range(1u, 200u));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    classify_args.p_set = cp_opt->count() > 0;
    draw_args.p_set = dp_opt->count() > 0;
    roots_args.depth_set = depth_opt->count() > 0;

    if (classify_cmd->parsed()) {
        if (classify_args.space == "zp" && !classify_args.p_set) {
            std::cerr << "classify: --space zp requires --p\n";
            return 2;
        }
        if (classify_args.space == "z" && classify_args.primes.empty()) {
            std::cerr << "classify: --space z requires --primes\n";
            return 2;
        }
    }
    if (draw_cmd->parsed() && draw_args.p_set == !draw_args.primes.empty()) {
        std::cerr << "draw: exactly one of --p or --primes is required\n";
        return 2;
    }

    try {
        if (vp_cmd->parsed()) return run_vp(vp_args);
        if (embed_cmd->parsed()) return run_embed(embed_args);
        if (lift_cmd->parsed()) return run_lift(lift_args);
        if (roots_cmd->parsed()) return run_roots(roots_args);
        if (irred_cmd->parsed()) return run_irred(irred_args);
        if (classify_cmd->parsed()) return run_classify(classify_args);
        if (draw_cmd->parsed()) return run_draw(draw_args);
    } catch (const ParseError& e) {
        return fail("parse", e.what());
    } catch (const PrecisionError& e) {
        return fail("precision", e.what());
    } catch (const SizeError& e) {
        return fail("size", e.what());
    } catch (const HenselHypothesisError& e) {
        return fail("hensel-hypothesis", e.what());
    } catch (const std::exception& e) {
        return fail("domain", e.what());
    }
    return 2;
}
