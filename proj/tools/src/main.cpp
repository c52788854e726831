#include <rotor/error.hpp>
#include <rotor/io.hpp>
#include <rotor/semiconj.hpp>
#include <rotor/suites.hpp>
#include <rotor/sullivan.hpp>
#include <rotor/svg.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace rotor;
using io::json;

namespace {

struct Globals {
    std::uint64_t seed = 20240601;
    std::string json_out;
    bool quiet = false;
};

// Result of one command: the JSON report and the exit code.
struct Outcome {
    json result;
    int code = 0;
};

std::vector<CirclePoint> parse_points(const std::vector<std::string>& texts) {
    std::vector<CirclePoint> out;
    for (const std::string& t : texts) out.push_back(parse_point(t));
    return out;
}

json sup_json(const SupConstruction& s) {
    return json{{"status", status_name(s.status)},
                {"radius", s.radius},
                {"from_limit", s.from_limit},
                {"verified", s.verified},
                {"phi", io::to_json(s.phi)}};
}

std::optional<OrbitClass3> euler_class(const std::string& name) {
    for (OrbitClass3 c : all_orbit_classes) {
        if (name == class_name(c)) return c;
    }
    return std::nullopt;
}

std::optional<NondegClass> sullivan_class(const std::string& name) {
    for (NondegClass c : all_nondeg_classes) {
        if (name == nondeg_class_name(c)) return c;
    }
    return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rotor: exact piecewise-linear circle dynamics"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "Seed for randomized sweeps");
    app.add_option("--json-out", g.json_out, "Also write the JSON report to this file");
    app.add_flag("--quiet", g.quiet, "Do not print the report");

    TranslationCaps caps;
    std::function<Outcome()> run;
    json config;

    // rotnum
    std::string map_path;
    auto* rotnum = app.add_subcommand("rotnum", "Translation number of a lift");
    rotnum->add_option("map", map_path, "Map JSON file")->required();
    rotnum->add_option("--max-period", caps.max_period, "Largest period searched");
    rotnum->add_option("--max-iters", caps.max_iters, "Iterations for the interval estimate");
    rotnum->callback([&] {
        run = [&] { return Outcome{io::to_json(translation_number(io::parse_map_file(map_path), caps))}; };
    });

    // fixedpoints
    std::string action_path;
    auto* fixedpoints = app.add_subcommand("fixedpoints", "Fixed sets of the generators and of the action");
    fixedpoints->add_option("action", action_path, "Action JSON file")->required();
    fixedpoints->callback([&] {
        run = [&] {
            GroupAction a = io::parse_action_file(action_path);
            json per = json::array();
            for (const CircleHomeo& h : a.generators()) per.push_back(io::to_json(fixed_set(h)));
            return Outcome{json{{"generators", per}, {"global", io::to_json(global_fixed_set(a))}}};
        };
    });

    // orbit
    std::string point_text = "0";
    int bound = 64;
    auto* orbit = app.add_subcommand("orbit", "Finite orbit of a point");
    orbit->add_option("action", action_path, "Action JSON file")->required();
    orbit->add_option("--point", point_text, "Base point p/q");
    orbit->add_option("--bound", bound, "Largest orbit size explored");
    orbit->callback([&] {
        run = [&] {
            GroupAction a = io::parse_action_file(action_path);
            auto o = orbit_closure(a, parse_point(point_text), bound);
            json pts = nullptr;
            if (o) {
                pts = json::array();
                for (const CirclePoint& p : *o) pts.push_back(io::to_json(p));
            }
            return Outcome{json{{"point", point_text}, {"bound", bound}, {"orbit", pts}}};
        };
    });

    // euler
    std::string cocycle = "euler";
    std::string args_path;
    auto* euler = app.add_subcommand("euler", "Evaluate the Euler, orientation or obstruction cocycle");
    euler->add_option("--cocycle", cocycle, "euler | orientation | obstruction")
        ->check(CLI::IsMember({"euler", "orientation", "obstruction"}));
    euler->add_option("--args", args_path, "JSON file holding three points or two maps; omitted: print the table");
    euler->callback([&] {
        run = [&] {
            if (args_path.empty()) {
                if (cocycle == "obstruction") throw Error(ErrorCode::InvalidInput, "obstruction needs --args");
                return Outcome{io::to_json(cocycle == "euler" ? euler_table() : orientation_table())};
            }
            json args = io::read_json_file(args_path);
            if (!args.is_array()) throw io::ParseError(args_path, "expected an array");
            if (cocycle == "obstruction") {
                if (args.size() != 2) throw io::ParseError(args_path, "expected two maps");
                CircleHomeo h1 = io::homeo_from_json(args[0], args_path + "#/0");
                CircleHomeo h2 = io::homeo_from_json(args[1], args_path + "#/1");
                return Outcome{json{{"value", obstruction_cocycle(h1, h2)}}};
            }
            if (args.size() != 3) throw io::ParseError(args_path, "expected three points");
            std::vector<CirclePoint> p;
            for (std::size_t i = 0; i < 3; ++i) p.push_back(io::point_from_json(args[i], args_path + "#/" + std::to_string(i)));
            long v = cocycle == "euler" ? euler_cocycle(p[0], p[1], p[2]) : orientation_cocycle(p[0], p[1], p[2]);
            return Outcome{json{{"value", v}, {"class", class_name(classify_triple(p[0], p[1], p[2]))}}};
        };
    });

    // check-semiconj
    std::string a1_path;
    std::string a2_path;
    std::string phi_path;
    auto* check = app.add_subcommand("check-semiconj", "Verify rho1(g) phi = phi rho2(g)");
    check->add_option("rho1", a1_path)->required();
    check->add_option("rho2", a2_path)->required();
    check->add_option("phi", phi_path)->required();
    check->callback([&] {
        run = [&] {
            GroupAction a1 = io::parse_action_file(a1_path);
            GroupAction a2 = io::parse_action_file(a2_path);
            PLLift phi = io::parse_map_file(phi_path);
            bool ok = check_left_semiconjugacy(a1, a2, phi);
            json result{{"left_semiconjugacy", ok}};
            if (ok && a1.has_lifts() && a2.has_lifts()) {
                SemiConjReport rep = analyze_n_gamma(a1, a2, phi);
                json tables = json::array();
                for (const StepTable& t : rep.n_gamma) tables.push_back(io::to_json(t));
                result["n_gamma"] = tables;
            }
            InvariantSets k = injective_invariant_sets(phi);
            result["k_minus"] = io::to_json(k.k_minus);
            result["k_plus"] = io::to_json(k.k_plus);
            return Outcome{result, ok ? 0 : 1};
        };
    });

    // build-semiconj
    SupOptions sup_options;
    std::string svg_path;
    auto* build = app.add_subcommand("build-semiconj", "Sup construction of a left-semi-conjugacy");
    build->add_option("rho1", a1_path)->required();
    build->add_option("rho2", a2_path)->required();
    build->add_option("--radius", sup_options.ball_radius, "Word ball radius");
    build->add_option("--svg", svg_path, "Write the graph of phi as SVG");
    build->callback([&] {
        run = [&] {
            SupConstruction s = construct_semiconjugacy_sup(io::parse_action_file(a1_path), io::parse_action_file(a2_path),
                                                            sup_options);
            if (!svg_path.empty()) svg::emit(s.phi, svg_path, "semi-conjugacy");
            bool bad = s.status == SupConstruction::Status::Stabilized && !s.verified;
            return Outcome{sup_json(s), bad ? 1 : 0};
        };
    });

    // straighten
    auto* straighten = app.add_subcommand("straighten", "Semi-conjugacies between a Z-action and its rotation");
    straighten->add_option("action", action_path)->required();
    straighten->add_option("--radius", sup_options.ball_radius, "Word ball radius");
    straighten->add_option("--svg", svg_path, "Write the graph of the map to the rotation as SVG");
    straighten->callback([&] {
        run = [&] {
            Straightening s = straighten_to_rotation(io::parse_action_file(action_path), sup_options);
            json result{{"conclusive", s.conclusive}, {"rotation_number", io::to_json(s.rotation_number)}};
            if (s.rotation) {
                result["to_rotation"] = sup_json(s.to_rotation);
                result["from_rotation"] = sup_json(s.from_rotation);
                if (!svg_path.empty()) svg::emit(s.from_rotation.phi, svg_path, "to rotation");
            }
            return Outcome{result};
        };
    });

    // glue
    std::vector<std::string> orbit1;
    std::vector<std::string> orbit2;
    auto* glue = app.add_subcommand("glue", "Glue two actions along finite orbits");
    glue->add_option("rho1", a1_path)->required();
    glue->add_option("rho2", a2_path)->required();
    glue->add_option("--orbit1", orbit1, "Orbit of rho1")->required()->delimiter(',');
    glue->add_option("--orbit2", orbit2, "Orbit of rho2")->required()->delimiter(',');
    glue->callback([&] {
        run = [&] {
            Gluing gl = glue_finite_orbit_actions(io::parse_action_file(a1_path), io::parse_action_file(a2_path),
                                                  parse_points(orbit1), parse_points(orbit2));
            json u = json::array();
            json v = json::array();
            for (const Arc& a : gl.u_arcs) u.push_back(io::to_json(a));
            for (const Arc& a : gl.v_arcs) v.push_back(io::to_json(a));
            return Outcome{json{{"action", io::to_json(gl.action)},
                                {"phi1", io::to_json(gl.phi1)},
                                {"phi2", io::to_json(gl.phi2)},
                                {"u_arcs", u},
                                {"v_arcs", v}}};
        };
    });

    // blowup
    std::vector<std::string> widths;
    auto* blowup = app.add_subcommand("blowup", "Replace an orbit by arcs");
    blowup->add_option("action", action_path)->required();
    blowup->add_option("--orbit", orbit1, "Orbit points")->required()->delimiter(',');
    blowup->add_option("--widths", widths, "Arc widths, one per orbit point")->required()->delimiter(',');
    blowup->callback([&] {
        run = [&] {
            std::vector<Rational> ws;
            for (const std::string& w : widths) ws.push_back(parse_rational(w));
            BlowUpResult b = blow_up(io::parse_action_file(action_path), parse_points(orbit1), ws);
            json arcs = json::array();
            for (const Arc& a : b.arcs) arcs.push_back(io::to_json(a));
            return Outcome{json{{"action", io::to_json(b.action)}, {"arcs", arcs}}};
        };
    });

    // collapse
    std::string arcs_path;
    auto* collapse_cmd = app.add_subcommand("collapse", "Collapse an invariant arc system");
    collapse_cmd->add_option("action", action_path)->required();
    collapse_cmd->add_option("--arcs", arcs_path, "JSON file with an array of [start, end] pairs")->required();
    collapse_cmd->add_option("--svg", svg_path, "Write the collapsing map as SVG");
    collapse_cmd->callback([&] {
        run = [&] {
            CollapseResult c = collapse(io::parse_action_file(action_path),
                                        io::arcs_from_json(io::read_json_file(arcs_path), arcs_path + "#"));
            if (!svg_path.empty()) svg::emit(c.phi, svg_path, "collapse");
            return Outcome{json{{"action", io::to_json(c.action)}, {"phi", io::to_json(c.phi)}}};
        };
    });

    // sullivan
    std::vector<std::string> eval_points;
    std::vector<std::string> small_points;
    int radius = 3;
    auto* sullivan = app.add_subcommand("sullivan", "Sullivan cocycle on the double cover");
    auto* eval_opt = sullivan->add_option("--eval", eval_points, "Three points")->expected(3);
    auto* small_opt = sullivan->add_option("--small", small_points, "A finite point set")->expected(1, -1);
    auto* pull_opt = sullivan->add_option("--pullback", action_path, "Action by double cover maps");
    sullivan->add_option("--radius", radius, "Word ball radius for --pullback");
    sullivan->add_option("--point", point_text, "Base point for --pullback");
    eval_opt->excludes(small_opt)->excludes(pull_opt);
    small_opt->excludes(pull_opt);
    sullivan->callback([&] {
        run = [&] {
            if (!eval_points.empty()) {
                std::vector<CirclePoint> p = parse_points(eval_points);
                json result{{"value", sullivan_eval(p[0], p[1], p[2])}};
                if (is_nondegenerate(p)) result["class"] = nondeg_class_name(classify_nondeg_triple(p[0], p[1], p[2]));
                return Outcome{result};
            }
            if (!small_points.empty()) {
                std::vector<CirclePoint> p = parse_points(small_points);
                json result{{"small", is_small(p)}};
                if (p.size() <= 12) result["vanishes_on_cube"] = sullivan_vanishes_on_cube(p);
                return Outcome{result};
            }
            if (!action_path.empty()) {
                ZeroTest z = sullivan_zero_test(io::parse_action_file(action_path), parse_point(point_text), radius);
                json result{{"vanished", z.vanished}, {"orbit_points", z.orbit_points}};
                if (z.witness) {
                    result["witness"] = json::array({io::to_json((*z.witness)[0]), io::to_json((*z.witness)[1]),
                                                     io::to_json((*z.witness)[2])});
                }
                return Outcome{result};
            }
            NondegCochain2 t = sullivan_table();
            NondegAnalysis a = analyze_nondeg_cochain2(t);
            return Outcome{json{{"table", io::to_json(t)}, {"class_index", *a.class_index}}};
        };
    });

    // fuzz
    std::vector<std::string> mutations;
    std::vector<int> criteria;
    int scale = 100;
    auto* fuzz = app.add_subcommand("fuzz", "Run the property suites");
    fuzz->add_option("--mutate", mutations, "Flip a table value: euler:<class> or sullivan:<class>");
    fuzz->add_option("--criteria", criteria, "Criteria to run (default: all)")->delimiter(',');
    fuzz->add_option("--scale", scale, "Sample counts in percent")->check(CLI::Range(1, 1000));
    fuzz->callback([&] {
        run = [&] {
            suites::Config cfg;
            cfg.seed = g.seed;
            cfg.scale_percent = scale;
            for (const std::string& m : mutations) {
                auto colon = m.find(':');
                std::string table = m.substr(0, colon);
                std::string cls = colon == std::string::npos ? "" : m.substr(colon + 1);
                if (auto c = euler_class(cls); table == "euler" && c) {
                    cfg.tables = suites::flip_euler(cfg.tables, *c);
                } else if (auto s = sullivan_class(cls); table == "sullivan" && s) {
                    cfg.tables = suites::flip_sullivan(cfg.tables, *s);
                } else {
                    throw Error(ErrorCode::InvalidInput, "unknown mutation " + m);
                }
            }
            if (criteria.empty()) {
                for (int i = 1; i <= suites::kCriteria; ++i) criteria.push_back(i);
            }
            json reports = json::array();
            bool all = true;
            for (int id : criteria) {
                suites::Report r = suites::run_criterion(id, cfg);
                all = all && r.passed();
                reports.push_back(suites::to_json(r));
            }
            return Outcome{json{{"passed", all}, {"reports", reports}}, all ? 0 : 1};
        };
    });

    // plot
    std::string out_path;
    auto* plot = app.add_subcommand("plot", "Write the graph of a map as SVG");
    plot->add_option("map", map_path)->required();
    plot->add_option("--out", out_path, "SVG file")->required();
    plot->callback([&] {
        run = [&] {
            svg::emit(io::parse_map_file(map_path), out_path, map_path);
            return Outcome{json{{"svg", out_path}}};
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    config = json{{"command", command},
                  {"seed", g.seed},
                  {"max_period", caps.max_period},
                  {"max_iters", caps.max_iters},
                  {"ball_radius", sup_options.ball_radius}};
    json report{{"config", config}};
    int code = 0;
    try {
        Outcome o = run();
        report["result"] = o.result;
        code = o.code;
    } catch (const io::ParseError& e) {
        report["error"] = json{{"code", "parse-error"}, {"message", e.what()}};
        code = 2;
    } catch (const Error& e) {
        report["error"] = json{{"code", code_name(e.code())}, {"message", e.what()}};
        code = e.code() == ErrorCode::ValidationError || e.code() == ErrorCode::InvalidInput ? 2 : 1;
    } catch (const std::exception& e) {
        report["error"] = json{{"code", "io-error"}, {"message", e.what()}};
        code = 2;
    }

    std::string text = report.dump(2) + "\n";
    if (!g.json_out.empty()) io::write_text_atomic(g.json_out, text);
    if (!g.quiet) (code == 0 || report.contains("result") ? std::cout : std::cerr) << text;
    return code;
}
