#include "colorfan/cli.hpp"

#include "colorfan/chow.hpp"
#include "colorfan/geometry.hpp"
#include "colorfan/json_io.hpp"
#include "colorfan/multimatroid.hpp"
#include "colorfan/suite.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>
#include <iostream>

namespace colorfan {

namespace {

PosetPtr load_poset(const std::string& path) {
    return Poset::create(ground_from_json(load_json_file(path)));
}

Json axiom_witness_json(const std::optional<AxiomWitness>& w, const Poset& poset) {
    if (!w) return nullptr;
    Json out;
    if (w->a >= 0) out["set_a"] = set_to_json(poset, w->a);
    if (w->b >= 0) out["set_b"] = set_to_json(poset, w->b);
    out["detail"] = w->detail;
    return out;
}

void write_svg(const std::string& path, const ExactPolytope& piece) {
    if (piece.dim != 2) throw input_error("--emit-svg needs a two-dimensional orthant");
    if (!piece.verts || piece.verts->empty()) throw input_error("nothing to plot");
    // orientation around the centroid; doubles are presentation-only
    std::vector<std::pair<double, double>> pts;
    double cx = 0, cy = 0;
    for (const auto& v : *piece.verts) {
        double x = v(0).convert_to<double>();
        double y = v(1).convert_to<double>();
        pts.emplace_back(x, y);
        cx += x;
        cy += y;
    }
    cx /= static_cast<double>(pts.size());
    cy /= static_cast<double>(pts.size());
    std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
        return std::atan2(a.second - cy, a.first - cx) < std::atan2(b.second - cy, b.first - cx);
    });
    double max_x = 1, max_y = 1;
    for (const auto& [x, y] : pts) {
        max_x = std::max(max_x, x);
        max_y = std::max(max_y, y);
    }
    const double scale = 360.0 / std::max(max_x, max_y);
    const double margin = 20.0, height = max_y * scale + 2 * margin;
    std::ofstream svg(path);
    if (!svg) throw input_error("cannot write '" + path + "'");
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
        << max_x * scale + 2 * margin << "\" height=\"" << height << "\">\n";
    svg << "  <line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\""
        << max_x * scale + 2 * margin << "\" y2=\"" << height - margin
        << "\" stroke=\"#999\"/>\n";
    svg << "  <line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << margin
        << "\" y2=\"0\" stroke=\"#999\"/>\n";
    svg << "  <polygon points=\"";
    for (const auto& [x, y] : pts)
        svg << margin + x * scale << "," << height - margin - y * scale << " ";
    svg << "\" fill=\"#7fb069\" fill-opacity=\"0.5\" stroke=\"#406343\"/>\n</svg>\n";
}

struct VerificationReport {
    std::string instance;
    Rational lhs, rhs;
    std::optional<Rational> third;
    bool equal = false;
    double elapsed_ms = 0;
};

void emit_report(const VerificationReport& r, bool csv, std::ostream& out) {
    if (csv) {
        out << "instance,lhs,rhs,third,equal,elapsed_ms\n";
        out << r.instance << "," << to_string(r.lhs) << "," << to_string(r.rhs) << ","
            << (r.third ? to_string(*r.third) : "") << "," << (r.equal ? "true" : "false") << ","
            << r.elapsed_ms << "\n";
        return;
    }
    Json j{{"instance", r.instance},
           {"lhs", rational_to_json(r.lhs)},
           {"rhs", rational_to_json(r.rhs)},
           {"equal", r.equal},
           {"elapsed_ms", r.elapsed_ms}};
    if (r.third) j["rhs_transversal"] = rational_to_json(*r.third);
    out << j.dump(2) << "\n";
}

int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"pi-colored fans, multimatroids, and their volumes"};
    app.require_subcommand(1);
    bool csv = false;
    app.add_flag("--csv", csv, "emit verification reports as CSV");

    std::string ground_path, ranks_path, divisor_path, divisors_path, sets_path, chain_path,
        config_path, svg_path, method = "both", mode = "general", to_basis, from_basis,
        criteria_arg;
    std::uint64_t seed = 0;
    int budget_n = 4, threads = 0, rejection_budget = 1000;
    bool modular = false;

    auto* describe = app.add_subcommand("describe-fan", "rays, cones, and certification");
    describe->add_option("groundset", ground_path)->required();

    auto* convert_cmd = app.add_subcommand("convert-basis", "change a divisor's basis");
    convert_cmd->add_option("groundset", ground_path)->required();
    convert_cmd->add_option("divisor", divisor_path)->required();
    convert_cmd->add_option("--to", to_basis, "target basis X|F|H")->required();
    convert_cmd->add_option("--from", from_basis, "expected input basis (validated)");

    auto* degree_cmd = app.add_subcommand("degree", "degree of a product of n divisors");
    degree_cmd->add_option("groundset", ground_path)->required();
    degree_cmd->add_option("--divisors", divisors_path, "JSON with a \"divisors\" array")
        ->required();

    auto* axioms = app.add_subcommand("check-axioms", "R1-R3 and BR1-BR4 reports");
    axioms->add_option("groundset", ground_path)->required();
    axioms->add_option("ranks", ranks_path)->required();

    auto* cub = app.add_subcommand("cubicality", "pseudo-cubical / cubical classification");
    cub->add_option("groundset", ground_path)->required();
    cub->add_option("ranks", ranks_path)->required();

    auto* ipc = app.add_subcommand("ipc-volume", "volume of the independence polytopal complex");
    ipc->add_option("groundset", ground_path)->required();
    ipc->add_option("ranks", ranks_path)->required();
    ipc->add_option("--method", method, "triangulation|transversal|both");
    ipc->add_option("--budget-n", budget_n, "transversal-expansion budget");

    auto* nc = app.add_subcommand("normal-complex", "one piece of the normal complex");
    nc->add_option("groundset", ground_path)->required();
    nc->add_option("divisor", divisor_path)->required();
    nc->add_option("--chain", chain_path, "JSON array of colored sets")->required();
    nc->add_option("--emit-svg", svg_path, "write an SVG plot (n = 2 only)");

    auto* va = app.add_subcommand("verify-a", "h-monomial degree vs transversal count");
    va->add_option("groundset", ground_path)->required();
    va->add_option("--sets", sets_path, "JSON with a \"sets\" array")->required();

    auto* vb = app.add_subcommand("verify-b", "degree of D_M^n vs Vol(IPC(M))");
    vb->add_option("groundset", ground_path)->required();
    vb->add_option("ranks", ranks_path)->required();
    vb->add_option("--method", method, "triangulation|transversal|both");
    vb->add_option("--budget-n", budget_n, "transversal-expansion budget");

    auto* suite = app.add_subcommand("run-suite", "run the verification suites");
    suite->add_option("--config", config_path, "JSON config");
    suite->add_option("--criteria", criteria_arg, "comma-separated criterion ids");
    suite->add_option("--seed", seed, "override the suite seed");
    suite->add_option("--threads", threads, "worker cap (also COLORFAN_THREADS)");

    auto* rnd = app.add_subcommand("random", "sample a seeded rank function");
    rnd->add_option("groundset", ground_path)->required();
    rnd->add_option("--mode", mode, "pseudo-cubical|general")->required();
    rnd->add_option("--seed", seed)->required();
    rnd->add_flag("--modular", modular, "general mode: disjoint covers");
    rnd->add_option("--budget", rejection_budget, "rejection budget");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    if (describe->parsed()) {
        auto poset = load_poset(ground_path);
        Fan fan = Fan::build(poset);
        Json rays = Json::array();
        for (int id = 1; id < poset->set_count(); ++id) {
            if (poset->size_of(id) != 1) continue; // singleton rays first
            rays.push_back({{"set", set_to_json(*poset, id)},
                            {"vector", std::vector<std::int64_t>(
                                           fan.ray(id).data(),
                                           fan.ray(id).data() + fan.ambient_dim())}});
        }
        for (int id = 1; id < poset->set_count(); ++id) {
            if (poset->size_of(id) == 1) continue;
            rays.push_back({{"set", set_to_json(*poset, id)},
                            {"vector", std::vector<std::int64_t>(
                                           fan.ray(id).data(),
                                           fan.ray(id).data() + fan.ambient_dim())}});
        }
        std::vector<std::size_t> per_dim;
        for (int d = 0; d <= fan.dim(); ++d) per_dim.push_back(fan.cones_of_dim(d).size());
        Json j{{"ambient_dim", fan.ambient_dim()},
               {"rays", std::move(rays)},
               {"cones_per_dim", per_dim},
               {"unimodular", fan.unimodularity().unimodular},
               {"balanced", fan.top_balancing().balanced}};
        out << j.dump(2) << "\n";
        return 0;
    }

    if (convert_cmd->parsed()) {
        auto poset = load_poset(ground_path);
        Divisor d = divisor_from_json(poset, load_json_file(divisor_path));
        if (!from_basis.empty() && basis_from_name(from_basis) != d.basis)
            throw input_error("divisor file is in basis " + std::string(basis_name(d.basis)) +
                              ", not " + from_basis);
        out << divisor_to_json(convert(d, basis_from_name(to_basis))).dump(2) << "\n";
        return 0;
    }

    if (degree_cmd->parsed()) {
        auto poset = load_poset(ground_path);
        Json j = load_json_file(divisors_path);
        const Json& list = j.is_array() ? j : j.at("divisors");
        std::vector<Divisor> divisors;
        for (const auto& dj : list) divisors.push_back(divisor_from_json(poset, dj));
        Fan fan = Fan::build(poset);
        Rational deg = DegreeEngine(fan).degree(divisors);
        out << Json{{"degree", rational_to_json(deg)}}.dump(2) << "\n";
        return 0;
    }

    if (axioms->parsed()) {
        auto poset = load_poset(ground_path);
        RankFunction rk = rank_from_json(poset, load_json_file(ranks_path));
        auto r = check_R_axioms(rk);
        auto m = check_multimatroid_axioms(rk);
        Json j{{"r_axioms",
                {{"r1", r.r1},
                 {"r2", r.r2},
                 {"r3", r.r3},
                 {"pass", r.pass()},
                 {"witness_r2", axiom_witness_json(r.w2, *poset)},
                 {"witness_r3", axiom_witness_json(r.w3, *poset)}}},
               {"multimatroid_axioms",
                {{"integral", m.integral},
                 {"br1", m.br1},
                 {"br2", m.br2},
                 {"br3", m.br3},
                 {"br4", m.br4},
                 {"pass", m.pass()},
                 {"witness_integral", axiom_witness_json(m.w_integral, *poset)},
                 {"witness_br2", axiom_witness_json(m.w2, *poset)},
                 {"witness_br4", axiom_witness_json(m.w4, *poset)}}}};
        out << j.dump(2) << "\n";
        return 0;
    }

    if (cub->parsed()) {
        auto poset = load_poset(ground_path);
        RankFunction rk = rank_from_json(poset, load_json_file(ranks_path));
        auto rep = cubicality(rk);
        Json j{{"verdict", cubicality_name(rep.verdict)}, {"detail", rep.detail}};
        j["witness_chain"] = rep.witness ? chain_to_json(*poset, *rep.witness) : Json(nullptr);
        out << j.dump(2) << "\n";
        return 0;
    }

    if (ipc->parsed()) {
        auto poset = load_poset(ground_path);
        RankFunction rk = rank_from_json(poset, load_json_file(ranks_path));
        Json j;
        if (method == "triangulation" || method == "both")
            j["triangulation"] = rational_to_json(ipc_volume(rk));
        if (method == "transversal" || method == "both")
            j["transversal"] = rational_to_json(ipc_volume_via_transversals(rk, budget_n));
        if (method == "both")
            j["equal"] = j["triangulation"] == j["transversal"];
        else if (method != "triangulation" && method != "transversal")
            throw input_error("unknown method '" + method + "'");
        out << j.dump(2) << "\n";
        if (method == "both" && !j["equal"].get<bool>()) return 1;
        return 0;
    }

    if (nc->parsed()) {
        auto poset = load_poset(ground_path);
        Divisor d = divisor_from_json(poset, load_json_file(divisor_path));
        Chain chain = chain_from_json(*poset, load_json_file(chain_path));
        ExactPolytope piece = normal_complex_piece(d, chain);
        ensure_vertices(piece, /*assume_bounded=*/true);
        if (!svg_path.empty()) write_svg(svg_path, piece);
        out << Json{{"piece", polytope_to_json(piece)},
                    {"normalized_volume", rational_to_json(normalized_volume(piece))}}
                   .dump(2)
            << "\n";
        return 0;
    }

    if (va->parsed()) {
        auto poset = load_poset(ground_path);
        Json j = load_json_file(sets_path);
        const Json& list = j.is_array() ? j : j.at("sets");
        std::vector<int> sets;
        for (const auto& sj : list) sets.push_back(set_from_json(*poset, sj));
        auto start = std::chrono::steady_clock::now();
        Fan fan = Fan::build(poset);
        DegreeEngine engine(fan);
        auto rep = verify_transversal_identity(engine, sets);
        VerificationReport report;
        report.instance = "h-monomial-vs-transversal";
        report.lhs = rep.degree;
        report.rhs = Rational(rep.transversal);
        report.equal = rep.equal;
        report.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        emit_report(report, csv, out);
        return report.equal ? 0 : 1;
    }

    if (vb->parsed()) {
        auto poset = load_poset(ground_path);
        RankFunction rk = rank_from_json(poset, load_json_file(ranks_path));
        auto start = std::chrono::steady_clock::now();
        Fan fan = Fan::build(poset);
        DegreeEngine engine(fan);
        Divisor d = divisor_of(rk);
        std::vector<Divisor> power(static_cast<std::size_t>(poset->n()), d);
        VerificationReport report;
        report.instance = "divisor-power-vs-volume";
        report.lhs = engine.degree(power);
        if (method == "transversal")
            report.rhs = ipc_volume_via_transversals(rk, budget_n);
        else
            report.rhs = ipc_volume(rk);
        report.equal = report.lhs == report.rhs;
        if (method == "both") {
            report.third = ipc_volume_via_transversals(rk, budget_n);
            report.equal = report.equal && *report.third == report.rhs;
        }
        report.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        emit_report(report, csv, out);
        return report.equal ? 0 : 1;
    }

    if (suite->parsed()) {
        SuiteConfig config;
        if (!config_path.empty()) config = suite_config_from_json(load_json_file(config_path));
        if (seed != 0) config.seed = seed;
        if (threads != 0) config.threads = threads;
        if (!criteria_arg.empty()) {
            config.criteria.clear();
            std::stringstream ss(criteria_arg);
            std::string tok;
            while (std::getline(ss, tok, ',')) config.criteria.push_back(std::stoi(tok));
        }
        auto results = run_suite(config);
        if (csv) {
            out << "id,name,pass,seconds,detail\n";
            for (const auto& r : results)
                out << r.id << "," << r.name << "," << (r.pass ? "true" : "false") << ","
                    << r.seconds << "," << r.detail << "\n";
        } else {
            out << suite_result_to_json(results).dump(2) << "\n";
        }
        bool all = true;
        for (const auto& r : results) all = all && r.pass;
        return all ? 0 : 1;
    }

    if (rnd->parsed()) {
        auto poset = load_poset(ground_path);
        SampleMode m;
        if (mode == "pseudo-cubical" || mode == "pseudo_cubical")
            m = SampleMode::PseudoCubical;
        else if (mode == "general")
            m = SampleMode::General;
        else
            throw input_error("unknown mode '" + mode + "'");
        SampleOptions opts;
        opts.modular = modular;
        opts.rejection_budget = rejection_budget;
        RankFunction rk = random_R_multimatroid(poset, seed, m, opts);
        out << rank_to_json(rk).dump(2) << "\n";
        return 0;
    }

    err << "no subcommand\n";
    return 2;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(std::move(args), out, err);
    } catch (const internal_error& e) {
        err << "internal-consistency error: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace colorfan
