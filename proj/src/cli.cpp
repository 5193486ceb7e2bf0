#include "pcube/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pcube/checks.hpp"
#include "pcube/convexity.hpp"
#include "pcube/theta.hpp"

namespace pcube {

namespace {

/// Input problems that map to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph load(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") {
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_graph(buffer.str());
    }
    return read_graph_file(path);
}

Vertex parse_vertex(std::string_view token) {
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    Vertex v = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || end != token.data() + token.size())
        throw InputError("not a vertex number: '" + std::string(token) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    while (!text.empty()) {
        const auto cut = text.find(sep);
        parts.push_back(text.substr(0, cut));
        if (cut == std::string_view::npos) break;
        text.remove_prefix(cut + 1);
    }
    return parts;
}

/// "0,1,2" or "{0,1,2}"; "" and "{}" are the empty set.
VertexSet parse_set(std::string_view text, std::size_t n) {
    if (text.size() >= 2 && text.front() == '{' && text.back() == '}') text = text.substr(1, text.size() - 2);
    VertexSet s(n);
    for (auto token : split(text, ',')) {
        const Vertex v = parse_vertex(token);
        if (v >= n) throw InputError("vertex " + std::to_string(v) + " out of range");
        s.insert(v);
    }
    return s;
}

std::vector<std::pair<Vertex, Vertex>> parse_glue(std::string_view text) {
    std::vector<std::pair<Vertex, Vertex>> glue;
    for (auto token : split(text, ',')) {
        const auto parts = split(token, ':');
        if (parts.size() != 2) throw InputError("glue pair '" + std::string(token) + "' is not of the form a:b");
        glue.emplace_back(parse_vertex(parts[0]), parse_vertex(parts[1]));
    }
    return glue;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw InputError("cannot write " + path);
    file << text;
}

int check_command(const Graph& g, const std::string& what, const std::string& set_text, std::ostream& out) {
    const MetricGraph mg(g);
    if (what == "pc") {
        const auto verdict = is_partial_cube_winkler(mg);
        out << "partial cube: " << (verdict.partial_cube ? "yes" : "no");
        if (!verdict.partial_cube) out << " (" << verdict.reason << ")";
        out << "\n";
        return verdict.partial_cube ? 0 : 1;
    }
    if (what == "att") {
        if (!mg.bipartite()) throw InputError("Att-convexity is defined for bipartite graphs only");
        const auto r = is_att_convex(mg);
        out << "att-convex: " << (r.att_convex ? "yes" : "no");
        if (r.witness)
            out << " (Att of copoint " << r.witness->set.to_string() << " at " << r.witness->at << " is "
                << r.witness->att.to_string() << ")";
        out << "\n";
        return r.att_convex ? 0 : 1;
    }
    if (what == "ph") {
        out << "ph = " << pre_hull_number(mg) << "\n";
        return 0;
    }
    // gated
    if (set_text.empty()) throw InputError("--what gated needs --set");
    const auto a = parse_set(set_text, mg.order());
    if (a.empty()) throw InputError("--set must not be empty");
    const auto r = is_gated(mg, a);
    out << "gated: " << (r.gated ? "yes" : "no");
    if (r.ungated) out << " (vertex " << *r.ungated << " has no gate)";
    out << "\n";
    return r.gated ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Geodesic convexity and partial cubes", "pcube"};
    app.require_subcommand(1);

    std::string file, file2, what = "pc", set_text, output, glue_text, json_path, csv_path;
    std::vector<std::string> params, cover;
    std::string family;
    std::size_t class_id = 0;
    VerifyOptions verify;

    auto* check = app.add_subcommand("check", "Test a property of a graph");
    check->add_option("file", file, "Graph file, or - for stdin")->required();
    check->add_option("--what", what, "pc | att | ph | gated")
        ->check(CLI::IsMember({"pc", "att", "ph", "gated"}));
    check->add_option("--set", set_text, "Vertex list for --what gated, e.g. 0,1,2");

    auto* gen_cmd = app.add_subcommand("gen", "Generate a named family member");
    gen_cmd->add_option("family", family)->required();
    gen_cmd->add_option("params", params);
    gen_cmd->add_option("-o,--output", output, "Output file");

    auto* product = app.add_subcommand("product", "Cartesian product of two graphs");
    product->add_option("f", file)->required();
    product->add_option("g", file2)->required();
    product->add_option("-o,--output", output);

    auto* expand = app.add_subcommand("expand", "Expansion along a proper cover");
    expand->add_option("f", file)->required();
    expand->add_option("--cover", cover, "Two vertex lists V0 V1")->required()->expected(2);
    expand->add_option("-o,--output", output);

    auto* contract = app.add_subcommand("contract", "Contract one Theta-class");
    contract->add_option("f", file)->required();
    contract->add_option("--class", class_id, "Class index")->required();
    contract->add_option("-o,--output", output);

    auto* amalgam = app.add_subcommand("amalgam", "Gated amalgam of two graphs");
    amalgam->add_option("f", file)->required();
    amalgam->add_option("g", file2)->required();
    amalgam->add_option("--glue", glue_text, "Pairs a:b, comma separated")->required();
    amalgam->add_option("-o,--output", output);

    auto* embed = app.add_subcommand("embed", "Hypercube labels of a partial cube");
    embed->add_option("f", file, "Graph file, or - for stdin (default)");

    auto* verify_cmd = app.add_subcommand("verify", "Run every check over a corpus");
    verify_cmd->add_option("--n", verify.corpus.max_order, "Exhaustive tier order")->check(CLI::Range(1, 7));
    verify_cmd->add_option("--seed", verify.corpus.seed, "Random tier seed");
    verify_cmd->add_option("--random", verify.corpus.random_count, "Random tier size");
    verify_cmd->add_option("--json", json_path, "Write the JSON report here");
    verify_cmd->add_option("--csv", csv_path, "Write the CSV report here");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "pcube: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*check) return check_command(load(file, in), what, set_text, out);
        if (*gen_cmd) {
            emit(serialize_graph(gen(family, params)), output, out);
            return 0;
        }
        if (*product) {
            emit(serialize_graph(cartesian_product(load(file, in), load(file2, in)).graph), output, out);
            return 0;
        }
        if (*expand) {
            const Graph g = load(file, in);
            const ProperCover c{parse_set(cover[0], g.order()), parse_set(cover[1], g.order())};
            emit(serialize_graph(expansion(g, c).graph), output, out);
            return 0;
        }
        if (*contract) {
            const MetricGraph mg(load(file, in));
            emit(serialize_graph(theta_contraction(mg, class_id).graph), output, out);
            return 0;
        }
        if (*amalgam) {
            const AmalgamSpec spec{load(file, in), load(file2, in), parse_glue(glue_text)};
            emit(serialize_graph(gated_amalgam(spec).graph), output, out);
            return 0;
        }
        if (*embed) {
            const MetricGraph mg(load(file, in));
            const auto verdict = is_partial_cube_winkler(mg);
            if (!verdict.partial_cube) {
                err << "pcube: not a partial cube (" << verdict.reason << ")\n";
                return 1;
            }
            out << serialize_embedding(cube_embedding(mg));
            return 0;
        }
        // verify
        const auto report = run_verification(verify);
        out << report_summary(report);
        out << "total: pass " << report.count(Status::pass) << ", fail " << report.count(Status::fail) << ", skip "
            << report.count(Status::skip) << "\n";
        if (!json_path.empty()) emit(report_to_json(report), json_path, out);
        if (!csv_path.empty()) emit(report_to_csv(report), csv_path, out);
        return report.passed() ? 0 : 1;
    } catch (const NotPartialCubeError& e) {
        err << "pcube: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "pcube: " << e.what() << "\n";
        return 2;
    }
}

} // namespace pcube
