// Command line front end.  Subcommands wire profiles, constructions,
// verification, finite models, and the standing suite into reproducible
// runs with machine readable reports.
//
// Exit codes: 0 success / verified as expected, 1 verification contrary to
// expectation, 2 usage or input error.

#include "solenoid/json_io.hpp"
#include "solenoid/suite.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using solenoid::Json;

// Inline JSON when the argument looks like a literal, file contents
// otherwise.
Json load_json_arg(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] != '{' && arg[0] != '[' && arg[0] != '"') {
        std::ifstream in(arg);
        if (!in) throw std::invalid_argument("cannot open JSON file: " + arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("invalid JSON in '" + arg + "': " + e.what());
    }
}

struct Output {
    std::string out_path;
    bool quiet = false;

    void emit(const std::string& text) const {
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out) throw std::invalid_argument("cannot write output file: " + out_path);
            out << text;
        }
        if (!quiet) std::cout << text;
    }
};

// Per-flag defaults from --config: a flag the user did not pass takes the
// config object's value under the same key (without leading dashes).
struct ConfigLayer {
    Json values = Json::object();

    void fill(const CLI::Option* opt, std::string& target, const std::string& key) const {
        if (opt->count() == 0 && values.contains(key)) {
            const Json& v = values.at(key);
            target = v.is_string() ? v.get<std::string>() : v.dump();
        }
    }
    void fill(const CLI::Option* opt, double& target, const std::string& key) const {
        if (opt->count() == 0 && values.contains(key)) target = values.at(key).get<double>();
    }
    void fill(const CLI::Option* opt, std::uint64_t& target, const std::string& key) const {
        if (opt->count() == 0 && values.contains(key))
            target = values.at(key).get<std::uint64_t>();
    }
    void fill(const CLI::Option* opt, bool& target, const std::string& key) const {
        if (opt->count() == 0 && values.contains(key)) target = values.at(key).get<bool>();
    }
};

solenoid::Int parse_int(const std::string& text, const std::string& what) {
    try {
        return solenoid::Int(text);
    } catch (const std::exception&) {
        throw std::invalid_argument(what + " is not an integer: " + text);
    }
}

// ----------------------------------------------------------------- aut ----

int cmd_aut(const std::string& profile_arg, const std::string& n_arg, const Output& out) {
    auto profile = solenoid::profile_from_json(load_json_arg(profile_arg));
    const solenoid::Int n = parse_int(n_arg, "n");
    const bool is_aut = solenoid::is_automorphism(profile, n);

    Json result{{"isAut", is_aut}, {"heydeAdmissible", solenoid::heyde_admissible(profile)}};
    if (!is_aut) {
        for (const auto& [prime, exp] : solenoid::factorize(abs(n))) {
            (void)exp;
            if (!profile.has_unbounded(prime)) {
                result["primeWitness"] = solenoid::int_json(prime);
                break;
            }
        }
    }
    Json config{{"profile", solenoid::profile_json(profile)}, {"n", solenoid::int_json(n)}};
    out.emit(solenoid::dump_json(solenoid::make_report("aut", config, result)));
    return 0;
}

// ----------------------------------------------------------- construct ----

int cmd_construct(const solenoid::ConstructionRequest& req, const Output& out) {
    auto r = solenoid::build_construction(req);
    Json config{{"family", req.family},
                {"p", solenoid::int_json(req.p)},
                {"q", solenoid::int_json(req.q)},
                {"c", solenoid::rational_json(req.c)},
                {"scale", solenoid::rational_json(req.scale)},
                {"force", req.force}};
    if (req.q1) config["q1"] = solenoid::int_json(*req.q1);
    if (req.q2) config["q2"] = solenoid::int_json(*req.q2);
    if (req.profile) config["profile"] = solenoid::profile_json(*req.profile);
    out.emit(solenoid::dump_json(
        solenoid::make_report("construct", config, solenoid::construction_json(r))));
    return 0;
}

// -------------------------------------------------------------- verify ----

struct VerifyArgs {
    std::string p = "1";
    std::string q = "1";
    std::string equation;       // catalog token
    std::string equation_file;  // or a full EquationSpec JSON
    std::string dist1;
    std::string dist2;
    std::string grid;  // GridSpec JSON; empty = default for the host
    double tol = 1e-12;
};

int cmd_verify(const VerifyArgs& a, const Output& out) {
    if (a.equation.empty() == a.equation_file.empty())
        throw std::invalid_argument("pass exactly one of --equation and --equation-file");
    auto f0 = solenoid::charfn_from_json(load_json_arg(a.dist1));
    auto f1 = solenoid::charfn_from_json(load_json_arg(a.dist2));
    const solenoid::Int p = parse_int(a.p, "p"), q = parse_int(a.q, "q");

    solenoid::EquationSpec eq =
        a.equation.empty() ? solenoid::equation_from_json(load_json_arg(a.equation_file))
                           : solenoid::equation_from_token(a.equation, p, q);
    solenoid::GridSpec grid = a.grid.empty() ? solenoid::GridSpec::default_for(f0.host())
                                             : solenoid::grid_from_json(load_json_arg(a.grid));

    auto rep = solenoid::verify_equation(eq, f0, f1, grid.enumerate(f0.host()), a.tol);

    Json config{{"p", solenoid::int_json(p)},
                {"q", solenoid::int_json(q)},
                {"equation", solenoid::equation_json(eq)},
                {"grid", solenoid::grid_json(grid)},
                {"tol", a.tol}};
    out.emit(solenoid::dump_json(
        solenoid::make_report("verify", config, solenoid::verification_json(rep))));
    return rep.verdict == solenoid::Verdict::Verified ? 0 : 1;
}

// ------------------------------------------------------------ simulate ----

struct SimulateArgs {
    std::string model;
    std::string p = "1";
    std::string q = "1";
    std::string dist1;
    std::string dist2;
    bool exact = false;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

// A JSON array is a PMF already; an object is a characteristic function
// restricted to the model's quotient.
solenoid::PMF load_pmf(const std::string& arg, const solenoid::FiniteModel& m) {
    Json j = load_json_arg(arg);
    if (j.is_array()) {
        solenoid::PMF p;
        for (const auto& entry : j) p.push_back(solenoid::rational_from_json(entry));
        if (solenoid::Int(p.size()) != m.order)
            throw std::invalid_argument("PMF length does not match the model order");
        solenoid::validate_pmf(p);
        return p;
    }
    return solenoid::charfn_to_pmf(
        solenoid::finite_restriction(solenoid::charfn_from_json(j), m.order));
}

int cmd_simulate(const SimulateArgs& a, const Output& out) {
    if (a.exact == (a.samples > 0))
        throw std::invalid_argument("pass exactly one of --exact and --sample N");
    auto m = solenoid::model_from_json(load_json_arg(a.model));
    const solenoid::Int p = parse_int(a.p, "p"), q = parse_int(a.q, "q");
    auto p0 = load_pmf(a.dist1, m);
    auto p1 = load_pmf(a.dist2, m);
    const std::size_t n = m.order.convert_to<std::size_t>();

    Json config{{"model", solenoid::model_json(m)},
                {"p", solenoid::int_json(p)},
                {"q", solenoid::int_json(q)},
                {"dist1", solenoid::pmf_json(p0)},
                {"dist2", solenoid::pmf_json(p1)},
                {"exact", a.exact}};
    Json result;

    if (a.exact) {
        // Joint law of (L1, L2) = (x1 + x2, p x1 + q x2) as an n x n table.
        std::vector<std::vector<solenoid::Rational>> joint(
            n, std::vector<solenoid::Rational>(n, solenoid::Rational(0)));
        for (std::size_t x1 = 0; x1 < n; ++x1)
            for (std::size_t x2 = 0; x2 < n; ++x2) {
                const solenoid::Int l1 = (solenoid::Int(x1) + solenoid::Int(x2)) % m.order;
                const solenoid::Int l2 =
                    (((p * solenoid::Int(x1) + q * solenoid::Int(x2)) % m.order) + m.order) %
                    m.order;
                joint[l1.convert_to<std::size_t>()][l2.convert_to<std::size_t>()] +=
                    p0[x1] * p1[x2];
            }
        Json table = Json::array();
        for (const auto& row : joint) {
            Json r = Json::array();
            for (const auto& cell : row) r.push_back(solenoid::rational_json(cell));
            table.push_back(std::move(r));
        }
        auto enumeration = solenoid::conditional_symmetry_enumerate(m, p0, p1, p, q);
        result = Json{{"joint", std::move(table)},
                      {"enumeration", solenoid::enumeration_json(enumeration)}};
    } else {
        config["samples"] = a.samples;
        config["seed"] = a.seed;
        auto draws = solenoid::sample_forms(m, p0, p1, p, q, a.samples, a.seed);
        std::vector<std::vector<std::uint64_t>> counts(n, std::vector<std::uint64_t>(n, 0));
        for (const auto& [l1, l2] : draws)
            counts[l1.convert_to<std::size_t>()][l2.convert_to<std::size_t>()] += 1;
        Json table = Json::array();
        for (const auto& row : counts) table.push_back(row);
        result = Json{{"counts", std::move(table)}, {"samples", a.samples}, {"seed", a.seed}};
    }
    out.emit(solenoid::dump_json(solenoid::make_report("simulate", config, result)));
    return 0;
}

// --------------------------------------------------------------- suite ----

int cmd_suite(const std::string& level, bool inject_fault, const Output& out) {
    solenoid::SuiteOptions opts;
    if (level == "small")
        opts.level = solenoid::SuiteLevel::Small;
    else if (level == "full")
        opts.level = solenoid::SuiteLevel::Full;
    else
        throw std::invalid_argument("--level must be small or full, got " + level);
    opts.inject_fault = inject_fault;

    auto r = solenoid::run_suite(opts);
    std::ostringstream text;
    for (const auto& e : r.entries)
        text << (e.passed ? "PASS " : "FAIL ") << e.name << ": " << e.detail << "\n";
    text << "suite " << (r.ok() ? "GREEN" : "RED") << ": " << r.passed << " passed, " << r.failed
         << " failed\n";

    if (!out.out_path.empty()) {
        Json config{{"level", level}, {"injectFault", inject_fault}};
        Output file_only{out.out_path, true};
        file_only.emit(
            solenoid::dump_json(solenoid::make_report("suite", config, solenoid::suite_json(r))));
    }
    if (!out.quiet) std::cout << text.str();
    return r.ok() ? 0 : 1;
}

// -------------------------------------------------------------- render ----

const Json& expect_key(const Json& j, const std::string& key) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument("report is missing field '" + key + "'");
    return j.at(key);
}

std::string plain(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string render_verification(const Json& v) {
    std::ostringstream out;
    const auto pairs = expect_key(v, "pairsChecked").get<std::uint64_t>();
    const auto exact = expect_key(v, "exactPairs").get<std::uint64_t>();
    out << plain(expect_key(v, "verdict")) << " (" << pairs << " pairs";
    if (pairs > 0) {
        if (exact == pairs)
            out << ", exact";
        else
            out << ", " << exact << " exact";
    }
    out << ")";
    const Json& w = expect_key(v, "witness");
    if (!w.is_null())
        out << "; witness (u,v) = (" << plain(expect_key(w, "u")) << ", "
            << plain(expect_key(w, "v")) << "); lhs = " << plain(expect_key(w, "lhs"))
            << ", rhs = " << plain(expect_key(w, "rhs"));
    if (v.contains("note") && !v.at("note").get<std::string>().empty())
        out << "; " << v.at("note").get<std::string>();
    return out.str();
}

std::string render_result(const std::string& command, const Json& r);

std::string render_suite(const Json& r) {
    std::ostringstream out;
    for (const auto& e : expect_key(r, "entries")) {
        out << (expect_key(e, "passed").get<bool>() ? "PASS " : "FAIL ")
            << plain(expect_key(e, "name")) << ": " << plain(expect_key(e, "detail")) << "\n";
    }
    out << "suite " << (expect_key(r, "ok").get<bool>() ? "GREEN" : "RED") << ": "
        << expect_key(r, "passed").get<std::uint64_t>() << " passed, "
        << expect_key(r, "failed").get<std::uint64_t>() << " failed";
    return out.str();
}

std::string render_result(const std::string& command, const Json& r) {
    std::ostringstream out;
    if (command == "aut") {
        out << "automorphism: " << (expect_key(r, "isAut").get<bool>() ? "yes" : "no");
        if (r.contains("primeWitness")) out << "; blocking prime " << plain(r.at("primeWitness"));
        out << "\nadmissible for the symmetry analysis: "
            << (expect_key(r, "heydeAdmissible").get<bool>() ? "yes" : "no");
    } else if (command == "verify") {
        out << render_verification(r);
    } else if (command == "construct") {
        out << "family " << plain(expect_key(r, "family")) << "\nequation "
            << plain(expect_key(expect_key(r, "equation"), "name")) << "\nexpected "
            << plain(expect_key(r, "expected")) << "\nclasses "
            << plain(expect_key(r, "expectedClass1")) << " / "
            << plain(expect_key(r, "expectedClass2"));
        if (r.contains("note") && !r.at("note").get<std::string>().empty())
            out << "\n" << r.at("note").get<std::string>();
    } else if (command == "simulate") {
        if (r.contains("joint")) {
            const Json& e = expect_key(r, "enumeration");
            out << "exact joint law over " << expect_key(r, "joint").size() << " residues\n"
                << "conditionally symmetric: "
                << (expect_key(e, "symmetric").get<bool>() ? "yes" : "no");
            const Json& w = expect_key(e, "witness");
            if (!w.is_null())
                out << "; witness (h,g) = (" << plain(expect_key(w, "h")) << ", "
                    << plain(expect_key(w, "g")) << ")";
        } else {
            out << expect_key(r, "samples").get<std::uint64_t>() << " samples, seed "
                << expect_key(r, "seed").get<std::uint64_t>();
        }
    } else if (command == "suite") {
        out << render_suite(r);
    } else {
        throw std::invalid_argument("unrecognized report command: " + command);
    }
    return out.str();
}

int cmd_render(const std::string& report_arg, const Output& out) {
    Json j = load_json_arg(report_arg);
    std::ostringstream text;
    if (j.is_object() && j.contains("command") && j.contains("result")) {
        const std::string command = plain(expect_key(j, "command"));
        text << command << "\n"
             << render_result(command, expect_key(j, "result")) << "\n";
    } else if (j.is_object() && j.contains("verdict") && j.contains("pairsChecked")) {
        text << render_verification(j) << "\n";
    } else if (j.is_object() && j.contains("entries") && j.contains("ok")) {
        text << render_suite(j) << "\n";
    } else {
        throw std::invalid_argument("unrecognized report shape");
    }
    out.emit(text.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact arithmetic for distributions on a-adic solenoids: construction "
        "families, characteristic-function identities on dual grids, and finite "
        "quotient oracles"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, out_path;
    bool quiet = false;
    app.add_option("--config", config_path, "JSON file with per-flag defaults");
    app.add_option("--out", out_path, "write the report to this file");
    app.add_flag("--quiet", quiet, "suppress stdout");

    // aut
    auto* aut = app.add_subcommand("aut", "is multiplication by n an automorphism");
    std::string aut_profile, aut_n;
    auto* aut_profile_opt = aut->add_option("--profile", aut_profile, "PrimeProfile JSON");
    auto* aut_n_opt = aut->add_option("-n,--n", aut_n, "multiplier");

    // construct
    auto* con = app.add_subcommand("construct", "build a distribution pair by family");
    std::string con_family, con_p = "1", con_q = "1", con_q1, con_q2, con_c = "1/3",
                con_scale = "1", con_profile;
    bool con_force = false;
    auto* con_family_opt =
        con->add_option("--family", con_family, "one of the construction families");
    auto* con_p_opt = con->add_option("--p", con_p, "first coefficient");
    auto* con_q_opt = con->add_option("--q", con_q, "second coefficient");
    auto* con_q1_opt = con->add_option("--q1", con_q1, "explicit first factor of q");
    auto* con_q2_opt = con->add_option("--q2", con_q2, "explicit second factor of q");
    auto* con_c_opt = con->add_option("--c", con_c, "table value, rational in (-1,1)");
    auto* con_scale_opt = con->add_option("--scale", con_scale, "Gaussian exponent scale");
    auto* con_profile_opt = con->add_option("--profile", con_profile, "PrimeProfile JSON");
    auto* con_force_opt =
        con->add_flag("--force", con_force, "build a control that violates its identity");

    // verify
    auto* ver = app.add_subcommand("verify", "check an identity on a dual grid");
    VerifyArgs va;
    auto* ver_p_opt = ver->add_option("--p", va.p, "first coefficient");
    auto* ver_q_opt = ver->add_option("--q", va.q, "second coefficient");
    auto* ver_eq_opt = ver->add_option("--equation", va.equation, "catalog token");
    auto* ver_eqf_opt = ver->add_option("--equation-file", va.equation_file, "EquationSpec JSON");
    auto* ver_d1_opt = ver->add_option("--dist1", va.dist1, "first characteristic function JSON");
    auto* ver_d2_opt = ver->add_option("--dist2", va.dist2, "second characteristic function JSON");
    auto* ver_grid_opt = ver->add_option("--grid", va.grid, "GridSpec JSON");
    auto* ver_tol_opt = ver->add_option("--tol", va.tol, "float comparison tolerance");

    // simulate
    auto* sim = app.add_subcommand("simulate", "joint law of the two forms on a finite model");
    SimulateArgs sa;
    auto* sim_model_opt = sim->add_option("--model", sa.model, "finite model JSON, e.g. {\"Z\":[8]}");
    auto* sim_p_opt = sim->add_option("--p", sa.p, "first coefficient");
    auto* sim_q_opt = sim->add_option("--q", sa.q, "second coefficient");
    auto* sim_d1_opt = sim->add_option("--dist1", sa.dist1, "PMF array or characteristic function JSON");
    auto* sim_d2_opt = sim->add_option("--dist2", sa.dist2, "PMF array or characteristic function JSON");
    auto* sim_exact_opt = sim->add_flag("--exact", sa.exact, "exact joint table");
    auto* sim_n_opt = sim->add_option("--sample", sa.samples, "number of draws");
    auto* sim_seed_opt = sim->add_option("--seed", sa.seed, "RNG seed");

    // suite
    auto* sui = app.add_subcommand("suite", "run the standing verification matrix");
    std::string sui_level = "small";
    bool sui_fault = false;
    auto* sui_level_opt = sui->add_option("--level", sui_level, "small or full");
    auto* sui_fault_opt =
        sui->add_flag("--inject-fault", sui_fault, "plant a broken table; must turn the suite red");

    // render
    auto* ren = app.add_subcommand("render", "report JSON to plain text");
    std::string ren_report;
    auto* ren_report_opt = ren->add_option("report", ren_report, "report JSON (inline or file)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        ConfigLayer cfg;
        if (!config_path.empty()) {
            cfg.values = load_json_arg(config_path);
            if (!cfg.values.is_object())
                throw std::invalid_argument("--config must hold a JSON object");
        }
        Output out{out_path, quiet};

        if (app.got_subcommand(aut)) {
            cfg.fill(aut_profile_opt, aut_profile, "profile");
            cfg.fill(aut_n_opt, aut_n, "n");
            if (aut_profile.empty() || aut_n.empty())
                throw std::invalid_argument("aut needs --profile and -n");
            return cmd_aut(aut_profile, aut_n, out);
        }
        if (app.got_subcommand(con)) {
            cfg.fill(con_family_opt, con_family, "family");
            cfg.fill(con_p_opt, con_p, "p");
            cfg.fill(con_q_opt, con_q, "q");
            cfg.fill(con_q1_opt, con_q1, "q1");
            cfg.fill(con_q2_opt, con_q2, "q2");
            cfg.fill(con_c_opt, con_c, "c");
            cfg.fill(con_scale_opt, con_scale, "scale");
            cfg.fill(con_profile_opt, con_profile, "profile");
            cfg.fill(con_force_opt, con_force, "force");
            if (con_family.empty()) throw std::invalid_argument("construct needs --family");
            solenoid::ConstructionRequest req;
            req.family = con_family;
            req.p = parse_int(con_p, "p");
            req.q = parse_int(con_q, "q");
            if (!con_q1.empty()) req.q1 = parse_int(con_q1, "q1");
            if (!con_q2.empty()) req.q2 = parse_int(con_q2, "q2");
            req.c = solenoid::parse_rational(con_c);
            req.scale = solenoid::parse_rational(con_scale);
            if (!con_profile.empty())
                req.profile = solenoid::profile_from_json(load_json_arg(con_profile));
            req.force = con_force;
            return cmd_construct(req, out);
        }
        if (app.got_subcommand(ver)) {
            cfg.fill(ver_p_opt, va.p, "p");
            cfg.fill(ver_q_opt, va.q, "q");
            cfg.fill(ver_eq_opt, va.equation, "equation");
            cfg.fill(ver_eqf_opt, va.equation_file, "equationFile");
            cfg.fill(ver_d1_opt, va.dist1, "dist1");
            cfg.fill(ver_d2_opt, va.dist2, "dist2");
            cfg.fill(ver_grid_opt, va.grid, "grid");
            cfg.fill(ver_tol_opt, va.tol, "tol");
            if (va.dist1.empty() || va.dist2.empty())
                throw std::invalid_argument("verify needs --dist1 and --dist2");
            return cmd_verify(va, out);
        }
        if (app.got_subcommand(sim)) {
            cfg.fill(sim_model_opt, sa.model, "model");
            cfg.fill(sim_p_opt, sa.p, "p");
            cfg.fill(sim_q_opt, sa.q, "q");
            cfg.fill(sim_d1_opt, sa.dist1, "dist1");
            cfg.fill(sim_d2_opt, sa.dist2, "dist2");
            cfg.fill(sim_exact_opt, sa.exact, "exact");
            cfg.fill(sim_n_opt, sa.samples, "sample");
            cfg.fill(sim_seed_opt, sa.seed, "seed");
            if (sa.model.empty() || sa.dist1.empty() || sa.dist2.empty())
                throw std::invalid_argument("simulate needs --model, --dist1, and --dist2");
            return cmd_simulate(sa, out);
        }
        if (app.got_subcommand(sui)) {
            cfg.fill(sui_level_opt, sui_level, "level");
            cfg.fill(sui_fault_opt, sui_fault, "injectFault");
            return cmd_suite(sui_level, sui_fault, out);
        }
        if (app.got_subcommand(ren)) {
            cfg.fill(ren_report_opt, ren_report, "report");
            if (ren_report.empty()) throw std::invalid_argument("render needs a report argument");
            return cmd_render(ren_report, out);
        }
        throw std::invalid_argument("no subcommand");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
