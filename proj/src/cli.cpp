#include "motfilt/cli.hpp"

#include "motfilt/curve_zeta.hpp"
#include "motfilt/derham.hpp"
#include "motfilt/json_util.hpp"
#include "motfilt/motfilt.hpp"
#include "motfilt/number_ring.hpp"
#include "motfilt/selftest.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#ifdef _WIN32
#include <io.h>
#define MOTFILT_ISATTY _isatty
#define MOTFILT_FILENO _fileno
#else
#include <unistd.h>
#define MOTFILT_ISATTY isatty
#define MOTFILT_FILENO fileno
#endif

namespace cli {

using homalg::FinAbGroup;
using homalg::Int;
using homalg::Rat;
using nlohmann::json;

namespace {

// Lossy flat view: one "dotted.path<TAB>value" line per leaf, arrays indexed.
void flatten_tsv(const json& j, const std::string& path, std::string& out) {
    if (j.is_object()) {
        if (j.empty()) {
            out += path + "\t{}\n";
            return;
        }
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten_tsv(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    } else if (j.is_array()) {
        if (j.empty()) {
            out += path + "\t[]\n";
            return;
        }
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten_tsv(j[i], path + "." + std::to_string(i), out);
    } else if (j.is_string()) {
        out += path + "\t" + j.get<std::string>() + "\n";
    } else {
        out += path + "\t" + j.dump() + "\n";
    }
}

json group_json(const FinAbGroup& g) {
    json j;
    j["group"] = g.to_string();
    j["free_rank"] = static_cast<std::int64_t>(g.free_rank());
    json factors = json::array();
    for (const auto& f : g.invariant_factors()) factors.push_back(homalg::int_to_json(f));
    j["invariant_factors"] = factors;
    if (g.is_finite()) j["order"] = homalg::int_to_json(g.order());
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

numring::NumberRing load_ring(const std::string& path) {
    return numring::NumberRing::from_json(load_json_file(path));
}

motfilt::HodgeDiamond load_diamond(const std::string& path) {
    return motfilt::HodgeDiamond::from_json(load_json_file(path));
}

zeta::CurveZeta load_curve(const std::string& path) {
    return zeta::CurveZeta::from_json(load_json_file(path));
}

const char* kind_name(motfilt::PieceKind k) {
    switch (k) {
        case motfilt::PieceKind::ExteriorPower: return "exterior_power";
        case motfilt::PieceKind::DeRhamCompleted: return "derham_completed";
        case motfilt::PieceKind::DeRhamCompletedTrunc: return "derham_completed_truncated";
        case motfilt::PieceKind::DeRhamTruncated: return "derham_truncated";
    }
    return "unknown";
}

bool stderr_color_enabled() {
    if (std::getenv("MOTFILT_NO_COLOR") != nullptr) return false;
    return MOTFILT_ISATTY(MOTFILT_FILENO(stderr)) != 0;
}

} // namespace

json Report::to_json() const {
    json j;
    j["command"] = command;
    j["inputs"] = inputs;
    if (pass.has_value()) j["pass"] = *pass;
    j["results"] = results;
    return j;
}

std::string Report::render(const std::string& format) const {
    if (format == "tsv") {
        std::string out;
        flatten_tsv(to_json(), "", out);
        return out;
    }
    return to_json().dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact invariants of the motivic filtration on THH, with zeta special values"};
    app.name("motfilt");
    app.require_subcommand(1);
    app.fallthrough(); // lets --format follow the subcommand

    std::string format = "json";
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "tsv"}))
        ->capture_default_str();

    std::string ring_path, curve_path, diamond_path;
    std::string theory_str = "THH", only;
    long degree = 0, n = 0, jweight = 0, p = 0;
    std::uint64_t seed = selftest::kDefaultSeed;

    auto* sc_thhz = app.add_subcommand("thh-z", "homotopy group of THH of the integers");
    sc_thhz->add_option("--degree", degree, "homotopy degree i")->required();

    auto* sc_thhof = app.add_subcommand("thh-of", "homotopy group of THH of a number ring");
    sc_thhof->add_option("--ring", ring_path, "ring JSON file")->required();
    sc_thhof->add_option("--degree", degree, "homotopy degree i")->required();

    auto* sc_lambda = app.add_subcommand("lambda", "exterior power of the cotangent complex");
    sc_lambda->add_option("--ring", ring_path, "ring JSON file")->required();
    sc_lambda->add_option("--degree", degree, "exterior degree i >= 0")->required();

    auto* sc_lomega2 =
        app.add_subcommand("lomega2", "cohomology of the level-2 truncated de Rham complex");
    sc_lomega2->add_option("--ring", ring_path, "ring JSON file")->required();

    auto* sc_fpeuler = app.add_subcommand(
        "fp-euler", "multiplicative Euler characteristic of truncated de Rham over F_p");
    sc_fpeuler->add_option("--p", p, "prime")->required();
    sc_fpeuler->add_option("--n", n, "truncation level")->required();

    auto* sc_cinf = app.add_subcommand("cinf", "archimedean correcting factor");
    sc_cinf->add_option("--diamond", diamond_path, "Hodge diamond JSON file")->required();
    sc_cinf->add_option("--n", n, "weight")->required();

    auto* sc_milne = app.add_subcommand("milne", "finite-field correcting exponent");
    sc_milne->add_option("--diamond", diamond_path, "Hodge diamond JSON file")->required();
    sc_milne->add_option("--n", n, "weight")->required();

    auto* sc_graded = app.add_subcommand("graded", "graded piece of the motivic filtration");
    sc_graded->add_option("--theory", theory_str, "THH, TP, TC-, or TC+")->capture_default_str();
    sc_graded->add_option("--n", n, "filtration weight")->required();
    sc_graded->add_option("--j", jweight, "inner weight >= 0")->required();
    sc_graded->add_option("--ring", ring_path, "evaluate the THH piece over this ring");

    auto* sc_vcinf = app.add_subcommand(
        "verify-cinf", "check the fiber-sequence product against the closed form");
    sc_vcinf->add_option("--ring", ring_path, "ring JSON file (point diamond)");
    sc_vcinf->add_option("--diamond", diamond_path, "Hodge diamond JSON file");
    sc_vcinf->add_option("--n", n, "weight")->required();

    auto* sc_zeta = app.add_subcommand("zeta", "zeta numerator of a curve over F_q");
    sc_zeta->add_option("--curve", curve_path, "curve JSON file")->required();

    auto* sc_special = app.add_subcommand("special", "leading coefficient at an integer argument");
    sc_special->add_option("--curve", curve_path, "curve JSON file")->required();
    sc_special->add_option("--n", n, "integer argument")->required();

    auto* sc_cond = app.add_subcommand("conductor", "conductor of a curve over F_q");
    sc_cond->add_option("--curve", curve_path, "curve JSON file")->required();

    auto* sc_vfe = app.add_subcommand("verify-fe", "check the doubled functional-equation identity");
    sc_vfe->add_option("--curve", curve_path, "curve JSON file")->required();
    sc_vfe->add_option("--diamond", diamond_path, "Hodge diamond JSON file (defaults to the curve's)");
    sc_vfe->add_option("--n", n, "integer argument")->required();

    auto* sc_self = app.add_subcommand("selftest", "run the acceptance suite");
    sc_self->add_option("--seed", seed, "seed for the random-property criteria")
        ->capture_default_str();
    sc_self->add_option("--only", only, "run only criteria whose id contains this substring");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    Report rep;
    try {
        if (sc_thhz->parsed()) {
            rep.command = "thh-z";
            rep.inputs["degree"] = degree;
            rep.results["group"] = motfilt::thh_z_homotopy(degree).to_string();
        } else if (sc_thhof->parsed()) {
            rep.command = "thh-of";
            const auto r = load_ring(ring_path);
            rep.inputs["ring"] = r.to_json();
            rep.inputs["degree"] = degree;
            rep.results = group_json(motfilt::thh_of_homotopy(r, degree).group);
        } else if (sc_lambda->parsed()) {
            rep.command = "lambda";
            const auto r = load_ring(ring_path);
            rep.inputs["ring"] = r.to_json();
            rep.inputs["degree"] = degree;
            const auto lp = derham::lambda_power(r, degree);
            rep.results = group_json(lp.group);
            rep.results["exterior_degree"] = lp.exterior_degree;
            rep.results["homological_degree"] = lp.homological_degree;
        } else if (sc_lomega2->parsed()) {
            rep.command = "lomega2";
            const auto r = load_ring(ring_path);
            rep.inputs["ring"] = r.to_json();
            const auto c = derham::lomega_two_term(r);
            rep.results["h0"] = group_json(homalg::cohomology(c, 0));
            rep.results["h1"] = group_json(homalg::cohomology(c, 1));
            rep.results["euler_rank"] = homalg::euler_rank(c);
        } else if (sc_fpeuler->parsed()) {
            rep.command = "fp-euler";
            rep.inputs["p"] = p;
            rep.inputs["n"] = n;
            rep.results["euler_order"] = homalg::int_to_json(derham::fp_lomega_euler(Int(p), n));
        } else if (sc_cinf->parsed()) {
            rep.command = "cinf";
            const auto h = load_diamond(diamond_path);
            rep.inputs["diamond"] = h.to_json();
            rep.inputs["n"] = n;
            rep.results["value"] = homalg::rat_str(motfilt::c_infinity(h, n));
        } else if (sc_milne->parsed()) {
            rep.command = "milne";
            const auto h = load_diamond(diamond_path);
            rep.inputs["diamond"] = h.to_json();
            rep.inputs["n"] = n;
            rep.results["exponent"] = motfilt::milne_exponent(h, n);
        } else if (sc_graded->parsed()) {
            rep.command = "graded";
            const auto theory = motfilt::theory_from_name(theory_str);
            rep.inputs["theory"] = motfilt::theory_name(theory);
            rep.inputs["n"] = n;
            rep.inputs["j"] = jweight;
            const auto piece = motfilt::graded_piece(theory, n, jweight);
            rep.results["expression"] = piece.expression;
            rep.results["kind"] = kind_name(piece.kind);
            rep.results["shift"] = piece.shift;
            rep.results["epsilon"] = piece.epsilon;
            rep.results["sub_index"] = piece.sub_index;
            if (!ring_path.empty()) {
                if (theory != motfilt::Theory::THH)
                    throw std::invalid_argument("--ring evaluation is implemented for THH pieces only");
                const auto r = load_ring(ring_path);
                rep.inputs["ring"] = r.to_json();
                json groups = json::object();
                for (const auto& [deg, g] : motfilt::evaluate_thh_piece(r, n, jweight))
                    groups[std::to_string(deg)] = g.to_string();
                rep.results["homotopy"] = groups;
            }
        } else if (sc_vcinf->parsed()) {
            rep.command = "verify-cinf";
            if (ring_path.empty() == diamond_path.empty())
                throw std::invalid_argument("verify-cinf needs exactly one of --ring and --diamond");
            std::optional<motfilt::HodgeDiamond> h;
            if (!ring_path.empty()) {
                const auto r = load_ring(ring_path);
                rep.inputs["ring"] = r.to_json();
                h = motfilt::HodgeDiamond::number_ring_point(r.degree());
            } else {
                h = load_diamond(diamond_path);
                rep.inputs["diamond"] = h->to_json();
            }
            rep.inputs["n"] = n;
            const auto res = motfilt::verify_cinf_fiber_seq(*h, n);
            rep.results["product_side"] = homalg::rat_str(res.product_side);
            rep.results["closed_form"] = homalg::rat_str(res.closed_form);
            rep.results["pass"] = res.equal;
            rep.pass = res.equal;
        } else if (sc_zeta->parsed()) {
            rep.command = "zeta";
            const auto z = load_curve(curve_path);
            rep.inputs["curve"] = z.to_json();
            rep.results["q"] = homalg::int_to_json(z.q());
            rep.results["genus"] = z.genus();
            json coeffs = json::array();
            for (const auto& c : z.numerator_poly()) coeffs.push_back(homalg::int_to_json(c));
            rep.results["p_coeffs"] = coeffs;
            rep.results["functional_equation"] = z.functional_equation_holds();
        } else if (sc_special->parsed()) {
            rep.command = "special";
            const auto z = load_curve(curve_path);
            rep.inputs["curve"] = z.to_json();
            rep.inputs["n"] = n;
            const auto sv = zeta::special_value(z, n);
            rep.results["order"] = sv.order;
            rep.results["coeff"] = homalg::rat_str(sv.coeff);
            rep.results["logq_power"] = sv.logq_power;
            rep.results["symbolic"] = sv.value().to_string();
            rep.results["decimal"] = sv.value().to_decimal(50, z.q());
        } else if (sc_cond->parsed()) {
            rep.command = "conductor";
            const auto z = load_curve(curve_path);
            rep.inputs["curve"] = z.to_json();
            const auto c = zeta::bloch_conductor_fq(z);
            rep.results["base"] = homalg::int_to_json(c.base);
            rep.results["exponent"] = c.exponent;
            rep.results["value"] = homalg::rat_str(homalg::rpow(Rat(c.base), c.exponent));
        } else if (sc_vfe->parsed()) {
            rep.command = "verify-fe";
            const auto z = load_curve(curve_path);
            rep.inputs["curve"] = z.to_json();
            rep.inputs["n"] = n;
            std::optional<motfilt::HodgeDiamond> h;
            if (!diamond_path.empty()) {
                h = load_diamond(diamond_path);
                rep.inputs["diamond"] = h->to_json();
            } else {
                h = motfilt::HodgeDiamond::curve_over_fq(z.genus(), z.q());
            }
            const auto fe = zeta::verify_thm_fe(z, *h, n);
            rep.results["lhs"] = fe.lhs;
            rep.results["rhs"] = fe.rhs;
            rep.results["pass"] = fe.pass;
            rep.pass = fe.pass;
        } else if (sc_self->parsed()) {
            rep.command = "selftest";
            rep.inputs["seed"] = seed;
            if (!only.empty()) rep.inputs["only"] = only;
            const auto results = selftest::run_all(seed, only);
            if (results.empty()) throw std::invalid_argument("--only matched no criteria");
            const bool color = stderr_color_enabled();
            const char* green = color ? "\033[32m" : "";
            const char* red = color ? "\033[31m" : "";
            const char* reset = color ? "\033[0m" : "";
            bool all = true;
            json criteria = json::array();
            std::size_t idx = 0;
            for (const auto& cr : results) {
                all = all && cr.pass;
                json c;
                c["id"] = cr.id;
                c["title"] = cr.title;
                c["pass"] = cr.pass;
                c["budget_ms"] = cr.budget_ms;
                criteria.push_back(c);
                std::ostringstream line;
                line << "[" << ++idx << "/" << results.size() << "] " << cr.id << ": "
                     << (cr.pass ? green : red) << (cr.pass ? "PASS" : "FAIL") << reset << " ("
                     << std::fixed << std::setprecision(1) << cr.elapsed_ms << " ms, budget "
                     << cr.budget_ms << " ms)";
                err << line.str() << "\n";
                for (const auto& f : cr.failures) err << "    " << f << "\n";
            }
            rep.results["criteria"] = criteria;
            rep.results["pass"] = all;
            rep.pass = all;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    out << rep.render(format);
    return rep.pass.has_value() && !*rep.pass ? 1 : 0;
}

} // namespace cli
