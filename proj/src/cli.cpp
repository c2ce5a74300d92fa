// Copyright 2026 The isored Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isored/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "isored/dynamics.hpp"
#include "isored/equivalence.hpp"
#include "isored/spectra.hpp"
#include "isored/weightlang.hpp"

namespace isored {

namespace {

constexpr const char* kVersion = "isored 0.1.0";

// Exit codes, see cli.hpp.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kDegenerate = 2,
    kEmptySelection = 3,
    kVerifyFailed = 4,
    kNotEquivalent = 5,
};

struct Input {
    std::string path;
    std::string text;
    GraphDocument document;
    Graph graph;
};

Input load_input(const std::string& path) {
    Input in;
    in.path = path;
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    in.text = buf.str();
    in.document = parse_document(in.text);
    in.graph = to_graph(in.document);
    return in;
}

std::set<Label> parse_label_csv(const std::string& csv) {
    std::set<Label> out;
    std::string token;
    std::istringstream stream(csv);
    while (std::getline(stream, token, ',')) {
        while (!token.empty() && token.front() == ' ') token.erase(token.begin());
        while (!token.empty() && token.back() == ' ') token.pop_back();
        if (!token.empty()) out.insert(token);
    }
    return out;
}

std::string join_labels(const std::set<Label>& labels) {
    std::string s;
    for (const auto& l : labels) {
        if (!s.empty()) s += ",";
        s += l;
    }
    return s;
}

std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

std::string complex_to_string(std::complex<double> z) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6);
    if (std::abs(z.imag()) <= 1e-9) {
        out << z.real();
    } else {
        out << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    }
    return out.str();
}

// Single-line edge list for flat reports: "u->v:w; ...".
std::string edges_one_line(const Graph& g) {
    std::string s;
    for (const auto& [pair, w] : g.weights()) {
        if (!s.empty()) s += "; ";
        s += pair.first + "->" + pair.second + ":" + print_weight(w);
    }
    return s;
}

void report_header(std::ostream& out, const std::string& command, const Input& in) {
    out << "report = " << command << "\n";
    out << "tool = " << kVersion << "\n";
    out << "input = " << in.path << "\n";
    out << "input.fnv1a64 = " << fnv1a64_hex(in.text) << "\n";
}

// Table-1 style characteristic table for one orbit step.
void print_characteristic_table(std::ostream& out, const Graph& g, const Rule& rule) {
    auto degree_map = degrees(g);
    std::vector<std::string> header{"node"};
    for (const auto& l : g.labels()) header.push_back(l);

    std::vector<std::vector<std::string>> rows;
    auto add_row = [&](const std::string& name, auto value_of) {
        std::vector<std::string> row{name};
        for (const auto& l : g.labels()) row.push_back(value_of(l));
        rows.push_back(std::move(row));
    };
    add_row("indegree", [&](const Label& l) { return std::to_string(degree_map.at(l).indeg); });
    add_row("outdegree", [&](const Label& l) { return std::to_string(degree_map.at(l).outdeg); });
    add_row("degree", [&](const Label& l) { return std::to_string(degree_map.at(l).total); });
    if (rule.characteristic == Characteristic::Betweenness) {
        auto b = betweenness(g, rule.convention);
        add_row("betweenness", [&](const Label& l) { return std::to_string(b.at(l)); });
    }

    std::vector<std::size_t> widths(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        widths[c] = header[c].size();
        for (const auto& row : rows) widths[c] = std::max(widths[c], row[c].size());
    }
    auto print_row = [&](const std::vector<std::string>& row) {
        out << " ";
        for (std::size_t c = 0; c < row.size(); ++c)
            out << " " << std::setw(static_cast<int>(widths[c])) << row[c];
        out << "\n";
    };
    print_row(header);
    for (const auto& row : rows) print_row(row);
}

int cmd_reduce(const Input& in, const std::string& keep_csv, const std::string& drop_csv,
               bool keep_given, bool drop_given, const std::string& out_path, std::ostream& out,
               std::ostream& err) {
    if (keep_given == drop_given) {
        err << "error: exactly one of --keep/--drop is required\n";
        return kUsage;
    }
    std::set<Label> keep;
    if (keep_given) {
        keep = parse_label_csv(keep_csv);
    } else {
        std::set<Label> drop = parse_label_csv(drop_csv);
        if (drop.empty()) {
            err << "error: --drop lists no vertices\n";
            return kUsage;
        }
        for (const auto& l : in.graph.labels())
            if (!drop.count(l)) keep.insert(l);
        for (const auto& l : drop) in.graph.index_of(l);  // reject unknown labels
    }
    if (keep.empty()) {
        err << "error: the kept vertex set is empty\n";
        return kUsage;
    }

    Graph reduced = reduce_to(in.graph, keep);
    std::string name = in.document.name.empty() ? "reduced" : in.document.name + "-reduced";
    std::string text = serialize_graph(reduced, name);
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw Error("cannot write '" + out_path + "'");
        file << text;
    }
    return kOk;
}

int cmd_orbit(const Input& in, const std::string& rule_spec, const std::string& format,
              std::ostream& out) {
    Rule rule = parse_rule(rule_spec);
    OrbitResult result = orbit(rule, in.graph);
    const Orbit& orb = result.orbit;

    if (format == "dot") {
        for (std::size_t k = 0; k < orb.graphs.size(); ++k)
            out << export_dot(orb.graphs[k], "step" + std::to_string(k));
        return kOk;
    }
    if (format == "report") {
        report_header(out, "orbit", in);
        out << "rule = " << rule.name << "\n";
        out << "characteristic = " << to_string(rule.characteristic) << "\n";
        out << "steps = " << orb.steps() << "\n";
        out << "terminated = " << to_string(orb.terminated) << "\n";
        out << "attractor.uniform = " << (result.report.uniform ? "true" : "false") << "\n";
        for (std::size_t k = 0; k < orb.graphs.size(); ++k) {
            std::string prefix = "step." + std::to_string(k);
            std::string vertices;
            for (const auto& l : orb.graphs[k].labels()) {
                if (!vertices.empty()) vertices += ",";
                vertices += l;
            }
            out << prefix << ".vertices = " << vertices << "\n";
            out << prefix << ".edges = " << edges_one_line(orb.graphs[k]) << "\n";
            if (k < orb.selections.size())
                out << prefix << ".selection = " << join_labels(orb.selections[k]) << "\n";
            auto values = characteristic_values(orb.graphs[k], rule.characteristic, rule.convention);
            std::string vals;
            for (const auto& [l, v] : values.values) {
                if (!vals.empty()) vals += ",";
                vals += l + "=" + rational_to_string(v);
            }
            out << prefix << ".values = " << vals << "\n";
        }
        return kOk;
    }

    out << "orbit of " << in.path << " under rule " << rule.name << "\n";
    for (std::size_t k = 0; k < orb.graphs.size(); ++k) {
        out << "step " << k << ": " << orb.graphs[k].size() << " vertices\n";
        print_characteristic_table(out, orb.graphs[k], rule);
        if (k < orb.selections.size())
            out << "  selected: " << join_labels(orb.selections[k]) << "\n";
    }
    out << "attractor reached after " << orb.steps() << " step" << (orb.steps() == 1 ? "" : "s")
        << " (" << to_string(orb.terminated) << ")\n";
    out << "uniform " << to_string(rule.characteristic) << " at attractor: "
        << (result.report.uniform ? "yes" : "no") << "\n\n";
    out << serialize_graph(orb.attractor(), "attractor");
    return kOk;
}

int cmd_spectrum(const Input& in, const std::string& verify_csv, bool verify_given, int samples,
                 std::uint64_t seed, int jobs, std::ostream& out, std::ostream& err) {
    SpectrumReport report = spectrum(in.graph);
    report_header(out, "spectrum", in);
    out << "char_det = " << print_weight(report.determinant) << "\n";
    for (const auto& r : report.eigenvalues)
        out << "eigenvalue = " << complex_to_string(r.value) << " x" << r.multiplicity << "\n";
    for (const auto& r : report.pole_roots)
        out << "pole = " << complex_to_string(r.value) << " x" << r.multiplicity << "\n";

    if (!verify_given) return kOk;
    std::set<Label> keep = parse_label_csv(verify_csv);
    if (keep.empty()) {
        err << "error: --verify lists no vertices\n";
        return kUsage;
    }
    VerificationRecord record = verify_reduction_identity(in.graph, keep, samples, seed, jobs);
    out << "verify.keep = " << join_labels(keep) << "\n";
    out << "verify.samples = " << record.samples.size() << "\n";
    for (const auto& [vertex, factor] : record.factors)
        out << "verify.factor." << vertex << " = " << print_weight(factor) << "\n";
    out << "verify.identity = det(M_G(λ)-λI) = det(M_R(λ)-λI)";
    for (const auto& [vertex, factor] : record.factors) out << " * (" << print_weight(factor) << ")";
    out << "\n";
    out << "verify.verdict = " << (record.verified ? "verified" : "FAILED") << "\n";
    if (!record.verified) {
        err << "error: determinant identity failed at a sample point\n";
        return kVerifyFailed;
    }
    return kOk;
}

int cmd_equiv(const Input& a, const Input& b, const std::string& rule_spec, const std::string& mode,
              std::optional<std::size_t> bound, std::ostream& out) {
    Rule rule = parse_rule(rule_spec);
    out << "mode = " << mode << "\n";
    out << "rule = " << rule.name << "\n";
    if (mode == "strong") {
        auto left = step(rule, a.graph);
        auto right = step(rule, b.graph);
        auto bijection = isomorphic(left, right);
        out << "equivalent = " << (bijection ? "yes" : "no") << "\n";
        if (bijection) {
            std::string map;
            for (const auto& [from, to] : *bijection) {
                if (!map.empty()) map += ", ";
                map += from + "->" + to;
            }
            out << "bijection = " << map << "\n";
            return kOk;
        }
        return kNotEquivalent;
    }
    if (mode == "weak") {
        auto witness = weak_equiv(rule, a.graph, b.graph, bound);
        out << "equivalent = " << (witness ? "yes" : "no") << "\n";
        if (witness) {
            out << "witness = (" << witness->first << "," << witness->second << ")\n";
            return kOk;
        }
        return kNotEquivalent;
    }
    // attractor mode
    auto comparison = same_attractor(rule, a.graph, b.graph);
    out << "equivalent = " << (comparison.same ? "yes" : "no") << "\n";
    out << "attractor.a = " << edges_one_line(comparison.attractor_g) << "\n";
    out << "attractor.b = " << edges_one_line(comparison.attractor_h) << "\n";
    return comparison.same ? kOk : kNotEquivalent;
}

int cmd_export_dot(const Input& in, const std::string& out_path, std::ostream& out) {
    std::string name = in.document.name.empty() ? "g" : in.document.name;
    std::string text = export_dot(in.graph, name);
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw Error("cannot write '" + out_path + "'");
        file << text;
    }
    return kOk;
}

}  // namespace

std::string fnv1a64_hex(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

std::string export_dot(const Graph& g, const std::string& name) {
    std::ostringstream out;
    const bool undirected = g.undirected();
    out << (undirected ? "graph" : "digraph") << " \"" << name << "\" {\n";
    for (const auto& l : g.labels()) out << "  \"" << l << "\";\n";
    for (const auto& [pair, w] : g.weights()) {
        const auto& [u, v] = pair;
        if (undirected && g.index_of(u) > g.index_of(v)) continue;
        out << "  \"" << u << "\" " << (undirected ? "--" : "->") << " \"" << v << "\" [label=\""
            << print_weight(w) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"isospectral reductions of weighted digraphs", "isored"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string in_path, in_path_b, out_path;
    std::string keep_csv, drop_csv, verify_csv;
    std::string rule_spec;
    std::string format = "text";
    std::string mode = "strong";
    int samples = 20;
    int jobs = 1;
    std::uint64_t seed = 1729;
    std::size_t bound = 0;

    auto* reduce = app.add_subcommand("reduce", "isospectrally reduce a graph onto a vertex subset");
    reduce->add_option("--in", in_path, "input graph document")->required();
    auto* keep_opt = reduce->add_option("--keep", keep_csv, "comma-separated labels to keep");
    auto* drop_opt = reduce->add_option("--drop", drop_csv, "comma-separated labels to eliminate");
    keep_opt->excludes(drop_opt);
    reduce->add_option("--out", out_path, "output path (default: stdout)");

    auto* orbit_cmd = app.add_subcommand("orbit", "iterate a selection rule to its attractor");
    orbit_cmd->add_option("--in", in_path, "input graph document")->required();
    orbit_cmd->add_option("--rule", rule_spec, "tau1|tau2|tau3 or characteristic:fraction:gt|ge")
        ->required();
    orbit_cmd->add_option("--format", format, "text|report|dot")
        ->check(CLI::IsMember({"text", "report", "dot"}));

    auto* spectrum_cmd = app.add_subcommand("spectrum", "characteristic determinant and eigenvalues");
    spectrum_cmd->add_option("--in", in_path, "input graph document")->required();
    auto* verify_opt = spectrum_cmd->add_option(
        "--verify", verify_csv, "verify the reduction identity for this kept vertex set");
    spectrum_cmd->add_option("--samples", samples, "verification sample points")
        ->check(CLI::PositiveNumber);
    spectrum_cmd->add_option("--seed", seed, "sample-point seed");
    spectrum_cmd->add_option("--jobs", jobs, "parallel sample evaluations")
        ->check(CLI::PositiveNumber);

    auto* equiv = app.add_subcommand("equiv", "decide spectral equivalence of two graphs");
    equiv->add_option("a", in_path, "first graph document")->required();
    equiv->add_option("b", in_path_b, "second graph document")->required();
    equiv->add_option("--rule", rule_spec, "selection rule")->required();
    equiv->add_option("--mode", mode, "strong|weak|attractor")
        ->check(CLI::IsMember({"strong", "weak", "attractor"}));
    equiv->add_option("--bound", bound, "orbit-length cap for weak mode");

    auto* dot = app.add_subcommand("export-dot", "render a graph document as DOT");
    dot->add_option("--in", in_path, "input graph document")->required();
    dot->add_option("--out", out_path, "output path (default: stdout)");

    std::vector<const char*> argv;
    argv.push_back("isored");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (app.got_subcommand(reduce))
            return cmd_reduce(load_input(in_path), keep_csv, drop_csv, keep_opt->count() > 0,
                              drop_opt->count() > 0, out_path, out, err);
        if (app.got_subcommand(orbit_cmd)) return cmd_orbit(load_input(in_path), rule_spec, format, out);
        if (app.got_subcommand(spectrum_cmd))
            return cmd_spectrum(load_input(in_path), verify_csv, verify_opt->count() > 0, samples,
                                seed, jobs, out, err);
        if (app.got_subcommand(equiv))
            return cmd_equiv(load_input(in_path), load_input(in_path_b), rule_spec, mode,
                             bound == 0 ? std::nullopt : std::optional<std::size_t>(bound), out);
        if (app.got_subcommand(dot)) return cmd_export_dot(load_input(in_path), out_path, out);
        err << "error: no subcommand\n";
        return kUsage;
    } catch (const DivisionByLambda& e) {
        err << "error: " << e.what() << "\n";
        return kDegenerate;
    } catch (const EmptySelection& e) {
        err << "error: " << e.what() << "\n";
        return kEmptySelection;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace isored
