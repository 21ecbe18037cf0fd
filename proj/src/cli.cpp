#include "fracfactor/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "fracfactor/json_io.hpp"

namespace fracfactor::cli {

namespace {

struct Input {
    std::string graph6;
    std::string file;
    std::string format = "graph6";

    void attach(CLI::App& sub)
    {
        auto* g6 = sub.add_option("--graph6", graph6, "graph6 string");
        auto* path = sub.add_option("--file", file, "read the graph from a file")->check(CLI::ExistingFile);
        g6->excludes(path);
        sub.add_option("--input-format", format, "format of --file / stdin input")
            ->check(CLI::IsMember({"graph6", "edges"}));
    }

    [[nodiscard]] Graph load(std::istream& in) const
    {
        if (!graph6.empty())
            return parse_graph6(graph6);
        std::string text;
        if (!file.empty()) {
            std::ifstream f(file);
            if (!f)
                throw std::runtime_error("cannot open " + file);
            text.assign(std::istreambuf_iterator<char>(f), {});
        } else {
            text.assign(std::istreambuf_iterator<char>(in), {});
        }
        if (format == "edges")
            return parse_edge_list(text);
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line))
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                return parse_graph6(line);
        throw std::runtime_error("no graph on input");
    }
};

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoi(item));
    return out;
}

void print(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fractional [a,b]-deleted graph checks and spectral sufficient conditions"};
    app.require_subcommand(1, 1);

    // construct
    auto* construct = app.add_subcommand("construct", "print a graph family member as graph6");
    std::string family = "complete";
    int c_n = 0;
    int c_a = 1;
    int c_missing = 0;
    construct->add_option("--family", family)->check(CLI::IsMember({"complete", "extremal", "dense"}));
    construct->add_option("--n", c_n, "order")->required();
    construct->add_option("--a", c_a, "a for the extremal family");
    construct->add_option("--max-missing", c_missing, "dense: all graphs missing at most this many edges");

    // spectral
    auto* spectral = app.add_subcommand("spectral", "spectral radii and their upper bounds");
    Input s_in;
    double s_tol = kDefaultEigenTol;
    s_in.attach(*spectral);
    spectral->add_option("--tol", s_tol, "eigensolver tolerance")->check(CLI::PositiveNumber);

    // check
    auto* check = app.add_subcommand("check", "is the graph fractional [a,b]-deleted?");
    Input k_in;
    int k_a = 1;
    int k_b = 1;
    int k_max_n = kSubsetGuard;
    std::string k_method = "criterion";
    k_in.attach(*check);
    check->add_option("--a", k_a)->required();
    check->add_option("--b", k_b)->required();
    check->add_option("--max-n", k_max_n, "size guard for subset enumeration");
    check->add_option("--method", k_method)->check(CLI::IsMember({"criterion", "edges", "flow"}));

    // factor
    auto* factor = app.add_subcommand("factor", "does the graph have a fractional (g,f)-factor?");
    Input f_in;
    int f_a = 0;
    int f_b = 0;
    std::string f_g;
    std::string f_f;
    int f_max_n = kSubsetGuard;
    bool f_integer = false;
    f_in.attach(*factor);
    auto* fa = factor->add_option("--a", f_a, "constant lower bound");
    auto* fb = factor->add_option("--b", f_b, "constant upper bound");
    auto* fg = factor->add_option("--g", f_g, "per-vertex lower bounds, comma separated");
    auto* ff = factor->add_option("--f", f_f, "per-vertex upper bounds, comma separated");
    fa->needs(fb);
    fg->needs(ff);
    fa->excludes(fg);
    factor->add_option("--max-n", f_max_n, "size guard for subset enumeration");
    factor->add_flag("--integer", f_integer, "also decide an integer (g,f)-factor (n <= 12)");

    // theorem
    auto* theorem = app.add_subcommand("theorem", "evaluate a sufficient condition on one graph");
    Input t_in;
    std::string t_id = "1.8";
    int t_a = 1;
    int t_b = 3;
    int t_max_n = kSubsetGuard;
    double t_tol = kDefaultEigenTol;
    t_in.attach(*theorem);
    theorem->add_option("--theorem", t_id)->check(CLI::IsMember({"1.4", "1.6", "1.8"}));
    theorem->add_option("--a", t_a)->required();
    theorem->add_option("--b", t_b)->required();
    theorem->add_option("--max-n", t_max_n);
    theorem->add_option("--tol", t_tol)->check(CLI::PositiveNumber);

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "evaluate a theorem on a stream of graph6 lines");
    std::string sc_file;
    std::string sc_id = "1.8";
    std::string sc_format = "json";
    int sc_a = 1;
    int sc_b = 3;
    int sc_max_n = kSubsetGuard;
    double sc_tol = kDefaultEigenTol;
    scan_cmd->add_option("--file", sc_file)->check(CLI::ExistingFile);
    scan_cmd->add_option("--theorem", sc_id)->check(CLI::IsMember({"1.4", "1.6", "1.8"}));
    scan_cmd->add_option("--a", sc_a)->required();
    scan_cmd->add_option("--b", sc_b)->required();
    scan_cmd->add_option("--format", sc_format)->check(CLI::IsMember({"json", "tsv"}));
    scan_cmd->add_option("--max-n", sc_max_n);
    scan_cmd->add_option("--tol", sc_tol)->check(CLI::PositiveNumber);

    // sharpness
    auto* sharp = app.add_subcommand("sharpness", "replay the extremal sharpness construction");
    int h_n = 7;
    int h_a = 1;
    int h_b = 3;
    sharp->add_option("--n", h_n)->required();
    sharp->add_option("--a", h_a)->required();
    sharp->add_option("--b", h_b)->required();

    std::vector<const char*> argv{"fracfactor"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }

    try {
        if (construct->parsed()) {
            if (family == "complete") {
                out << to_graph6(complete(c_n)) << '\n';
            } else if (family == "extremal") {
                out << to_graph6(extremal(c_n, c_a)) << '\n';
            } else {
                for_each_dense_graph(c_n, c_missing, [&out](const Graph& g) { out << to_graph6(g) << '\n'; });
            }
            return ok;
        }

        if (spectral->parsed()) {
            const Graph g = s_in.load(in);
            const SpectralSummary s = spectral_summary(g, s_tol);
            Json fy = nullptr;
            if (g.order() >= 2 && is_connected(g))
                fy = feng_yu_bound(g);
            print(out, Json{{"n", g.order()},
                            {"rho", s.rho},
                            {"q", s.q},
                            {"hsf_bound", hsf_bound(g)},
                            {"feng_yu_bound", fy},
                            {"residual", s.residual},
                            {"tol", s.tol}});
            return ok;
        }

        if (check->parsed()) {
            const Graph g = k_in.load(in);
            OracleOptions opts{k_max_n};
            OracleVerdict v;
            if (k_method == "criterion")
                v = is_fractional_ab_deleted(g, k_a, k_b, opts);
            else if (k_method == "edges")
                v.holds = is_fractional_ab_deleted_by_edges(g, k_a, k_b, opts);
            else
                v.holds = is_fractional_ab_deleted_by_flow(g, k_a, k_b);
            print(out, Json{{"n", g.order()},
                            {"a", k_a},
                            {"b", k_b},
                            {"method", k_method},
                            {"deleted", v.holds},
                            {"witness", v.witness ? to_json(*v.witness) : Json(nullptr)}});
            return v.holds ? ok : property_false;
        }

        if (factor->parsed()) {
            const Graph g = f_in.load(in);
            std::optional<FactorBounds> bounds;
            Json bounds_json;
            if (!f_g.empty()) {
                auto lower = parse_int_list(f_g);
                auto upper = parse_int_list(f_f);
                bounds_json = Json{{"g", lower}, {"f", upper}};
                bounds = FactorBounds::per_vertex(std::move(lower), std::move(upper));
            } else if (*fa) {
                bounds = FactorBounds::constant(f_a, f_b);
                bounds_json = Json{{"a", f_a}, {"b", f_b}};
            } else {
                err << "error: factor needs --a/--b or --g/--f\n";
                return usage;
            }
            bounds->check_order(g.order());
            const auto h = find_fractional_factor(g, *bounds);
            Json result{{"n", g.order()}, {"bounds", bounds_json}, {"has_factor", h.has_value()}};
            if (g.order() <= f_max_n) {
                const OracleVerdict v = has_fractional_gf_factor(g, *bounds, OracleOptions{f_max_n});
                if (v.holds != h.has_value())
                    throw std::logic_error("flow certificate and set criterion disagree");
                result["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
            } else {
                result["witness"] = nullptr;
            }
            result["assignment"] = h ? to_json(*h) : Json(nullptr);
            if (f_integer)
                result["integer_factor"] = has_gf_factor_lovasz(g, *bounds);
            print(out, result);
            return h ? ok : property_false;
        }

        if (theorem->parsed()) {
            const Graph g = t_in.load(in);
            VerifierOptions opts;
            opts.oracle.max_n = t_max_n;
            opts.tol = t_tol;
            const TheoremReport r = eval_theorem(parse_theorem_id(t_id), g, t_a, t_b, opts);
            print(out, to_json(r));
            return r.counterexample() ? counterexample : ok;
        }

        if (scan_cmd->parsed()) {
            ScanOptions opts;
            opts.theorem = parse_theorem_id(sc_id);
            opts.a = sc_a;
            opts.b = sc_b;
            opts.verifier.oracle.max_n = sc_max_n;
            opts.verifier.tol = sc_tol;
            std::ifstream file;
            if (!sc_file.empty()) {
                file.open(sc_file);
                if (!file)
                    throw std::runtime_error("cannot open " + sc_file);
            }
            std::istream& src = sc_file.empty() ? in : file;
            const bool tsv = sc_format == "tsv";
            if (tsv)
                out << tsv_header() << '\n';
            const ScanSummary summary = scan(src, opts, [&](const ScanRecord& r) {
                if (tsv)
                    out << to_tsv(r, opts.theorem) << '\n';
                else
                    print(out, to_json(r));
            });
            print(out, to_json(summary));
            if (!summary.io_error.empty()) {
                err << "error: " << summary.io_error << '\n';
                return usage;
            }
            return summary.counterexamples > 0 ? counterexample : ok;
        }

        if (sharp->parsed()) {
            try {
                print(out, to_json(verify_sharpness(h_n, h_a, h_b)));
                return ok;
            } catch (const SharpnessViolation& e) {
                err << "error: " << e.what() << '\n';
                return property_false;
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

}  // namespace fracfactor::cli
