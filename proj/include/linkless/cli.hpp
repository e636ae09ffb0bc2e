#pragma once

// Command-line front end. run() takes explicit streams so it can be driven
// in-process; tools/linkless.cpp is a thin main() around it.
//
// Exit codes: 0 success / verified / minor found / all linkless,
// 1 no minor, 2 counterexample or obstruction found, 3 cap exceeded,
// 64 usage error, 65 bad input data, 70 spot-check mismatch.

#include <fstream>
#include <iostream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "linkless/extremal.hpp"

namespace linkless::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNoMinor = 1;
inline constexpr int kExitCounterexample = 2;
inline constexpr int kExitCapExceeded = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;
inline constexpr int kExitSoftware = 70;

namespace detail {

inline std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

/// A named graph, or failing that a graph6 string.
inline Graph parse_pattern(const std::string& text) {
    try {
        return named_graph(text);
    } catch (const GraphError&) {
        return from_graph6(text);
    }
}

inline nlohmann::ordered_json model_to_json(const MinorModel& m) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (std::size_t x = 0; x < m.branch_sets.size(); ++x) j[std::to_string(x)] = to_vector(m.branch_sets[x]);
    return j;
}

inline std::string family_name(int index) {
    std::string name = recognize_named_graph(petersen_family().members[index]);
    return name.empty() ? "P" + std::to_string(petersen_family().members[index].vertex_count()) : name;
}

inline int report_exit_code(const VerificationReport& r) {
    if (r.spot_check && r.spot_check->mismatches > 0) return kExitSoftware;
    return r.verdict == Verdict::counterexample ? kExitCounterexample : kExitOk;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linkless embeddability toolkit: Petersen-family minors, graph enumeration and extremal bound checks",
                 "linkless"};
    app.require_subcommand(1);

    std::string format = "text";
    int jobs = 0;
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* family_cmd = app.add_subcommand("family", "List the seven Petersen-family graphs");
    add_format(family_cmd);

    std::string pattern_text, host_file;
    auto* minor_cmd = app.add_subcommand("minor", "Search host graphs (graph6 lines) for a minor");
    minor_cmd->add_option("--pattern", pattern_text, "Pattern: a graph name (K6, K_{3,3}, petersen, C5, ...) or graph6")
        ->required();
    minor_cmd->add_option("--host", host_file, "Read host graphs from this file instead of stdin");

    auto* linkless_cmd = app.add_subcommand("linkless", "Test graph6 lines on stdin for Petersen-family minors");
    add_format(linkless_cmd);

    std::string verify_which;
    int n = 0;
    int p = 0;
    long long t = 0;
    double spot_rate = 0.0;
    bool spot = false;
    bool timing = false;
    auto* verify_cmd = app.add_subcommand("verify", "Exhaustively check a proved bound at one n");
    verify_cmd->add_option("bound", verify_which, "bipartite | four_pattern | complete_minor")
        ->required()
        ->check(CLI::IsMember({"bipartite", "four_pattern", "complete_minor"}));
    auto* conj_cmd = app.add_subcommand("conjecture", "Search for counterexamples to an open bound at one n");
    std::string conj_which;
    conj_cmd->add_option("name", conj_which, "trfree | trfull | kp")
        ->required()
        ->check(CLI::IsMember({"trfree", "trfull", "kp", "triangle_free_3n10", "trfull_t_over_3", "bipartite_kp"}));
    for (CLI::App* sub : {verify_cmd, conj_cmd}) {
        sub->add_option("--n", n, "Vertex count")->required();
        sub->add_option("--p", p, "Clique size for K_p bounds");
        sub->add_option("--jobs", jobs, "Worker threads (LINKLESS_JOBS overrides)");
        sub->add_flag("--spot-check", spot, "Re-decide 1% of scanned graphs with the contraction-based minor test");
        sub->add_option("--spot-rate", spot_rate, "Spot-check fraction (implies --spot-check)");
        sub->add_flag("--timing", timing, "Include elapsed time in the report");
        add_format(sub);
    }

    std::string bound_name;
    auto* bound_cmd = app.add_subcommand("bound", "Evaluate a named edge bound exactly");
    bound_cmd->add_option("name", bound_name, "bipartite | four_pattern | complete_minor | trfree | trfull | kp")->required();
    bound_cmd->add_option("--n", n, "Vertex count")->required();
    bound_cmd->add_option("--p", p, "Clique size");
    bound_cmd->add_option("--t", t, "Triangle count");

    EnumerationSpec gen_spec;
    bool bipartite = false, triangle_free = false;
    std::string resume;
    int list_depth = -1;
    auto* gen_cmd = app.add_subcommand("gen", "Enumerate graphs up to isomorphism as canonical graph6 lines");
    gen_cmd->add_option("--n", gen_spec.n, "Vertex count")->required();
    auto* bip_flag = gen_cmd->add_flag("--bipartite", bipartite, "Bipartite graphs only");
    gen_cmd->add_flag("--triangle-free", triangle_free, "Triangle-free graphs only")->excludes(bip_flag);
    gen_cmd->add_option("--min-edges", gen_spec.min_edges, "Minimum edge count");
    gen_cmd->add_option("--max-edges", gen_spec.max_edges, "Maximum edge count");
    gen_cmd->add_flag("--connected", gen_spec.connected_only, "Connected graphs only");
    gen_cmd->add_option("--jobs", jobs, "Worker threads (LINKLESS_JOBS overrides)");
    gen_cmd->add_option("--resume", resume, "Only the subtree at this token, e.g. 0.3.1");
    gen_cmd->add_option("--list-tokens", list_depth, "Print the subtree tokens at this depth instead of graphs");

    bool check = false;
    std::string convert_to = "g6";
    auto* convert_cmd = app.add_subcommand("convert", "Re-encode graph6 lines from stdin");
    convert_cmd->add_flag("--check", check, "Fail unless every line re-encodes to itself");
    convert_cmd->add_option("--to", convert_to, "g6 | canonical | edges")->check(CLI::IsMember({"g6", "canonical", "edges"}));

    std::vector<const char*> argv{"linkless"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "linkless: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    const bool json = format == "json";
    const int workers = resolve_jobs(jobs);
    try {
        if (family_cmd->parsed()) {
            const PetersenFamily& family = petersen_family();
            if (json) {
                auto arr = nlohmann::ordered_json::array();
                for (std::size_t i = 0; i < family.members.size(); ++i) {
                    const Graph& g = family.members[i];
                    arr.push_back({{"index", i},
                                   {"n", g.vertex_count()},
                                   {"edges", g.edge_count()},
                                   {"name", recognize_named_graph(g)},
                                   {"graph6", family.canonical_bytes[i]}});
                }
                out << arr.dump(2) << "\n";
            } else {
                out << "# index  n  edges  name        graph6\n";
                for (std::size_t i = 0; i < family.members.size(); ++i) {
                    const Graph& g = family.members[i];
                    std::string name = recognize_named_graph(g);
                    out << i << "  " << g.vertex_count() << "  " << g.edge_count() << "  "
                        << (name.empty() ? "-" : name) << "  " << family.canonical_bytes[i] << "\n";
                }
            }
            return kExitOk;
        }

        if (minor_cmd->parsed()) {
            const Graph pattern = detail::parse_pattern(pattern_text);
            std::vector<std::string> lines;
            if (!host_file.empty()) {
                std::ifstream file(host_file);
                if (!file) {
                    err << "linkless: cannot open " << host_file << "\n";
                    return kExitData;
                }
                lines = detail::read_lines(file);
            } else {
                lines = detail::read_lines(in);
            }
            if (lines.empty()) {
                err << "linkless: no host graph given\n";
                return kExitData;
            }
            bool all_found = true;
            for (const auto& line : lines) {
                const Graph host = from_graph6(line);
                if (auto model = find_minor(host, pattern)) {
                    out << detail::model_to_json(*model).dump() << "\n";
                } else {
                    out << "null\n";
                    all_found = false;
                }
            }
            return all_found ? kExitOk : kExitNoMinor;
        }

        if (linkless_cmd->parsed()) {
            const auto lines = detail::read_lines(in);
            bool all_linkless = true;
            for (const auto& line : lines) {
                const Graph g = from_graph6(line);
                const LinklessResult result = check_linkless(g);
                all_linkless = all_linkless && result.linkless;
                if (json) {
                    nlohmann::ordered_json j;
                    j["graph6"] = line;
                    j["linkless"] = result.linkless;
                    if (result.obstruction) {
                        j["obstruction"] = {{"family_index", result.obstruction->family_index},
                                            {"name", detail::family_name(result.obstruction->family_index)},
                                            {"model", detail::model_to_json(result.obstruction->model)}};
                    }
                    out << j.dump() << "\n";
                } else if (result.obstruction) {
                    out << line << "  not linkless: minor of family member " << result.obstruction->family_index << " ("
                        << detail::family_name(result.obstruction->family_index) << ")\n";
                } else {
                    out << line << "  linkless\n";
                }
            }
            return all_linkless ? kExitOk : kExitCounterexample;
        }

        if (verify_cmd->parsed() || conj_cmd->parsed()) {
            ScanOptions options;
            options.jobs = workers;
            if (spot || spot_rate > 0.0) options.spot_check_rate = spot_rate > 0.0 ? spot_rate : 0.01;
            VerificationReport report;
            if (verify_cmd->parsed()) {
                if (verify_which == "bipartite") {
                    report = verify_bipartite_bound(n, options);
                } else if (verify_which == "four_pattern") {
                    report = verify_four_pattern_bound(n, options);
                } else {
                    if (p == 0) {
                        err << "linkless: verify complete_minor needs --p\n";
                        return kExitUsage;
                    }
                    report = verify_complete_minor_bound(p, n, options);
                }
            } else {
                report = check_conjecture(conj_which, n, p == 0 ? std::nullopt : std::optional<int>(p), options);
            }
            if (json) {
                out << report_to_json(report, timing).dump(2) << "\n";
            } else {
                out << report_to_text(report, timing);
            }
            return detail::report_exit_code(report);
        }

        if (bound_cmd->parsed()) {
            out << format_rational(edge_bound(bound_name, n, p, t)) << "\n";
            return kExitOk;
        }

        if (gen_cmd->parsed()) {
            gen_spec.class_filter = bipartite ? ClassFilter::bipartite
                                              : (triangle_free ? ClassFilter::triangle_free : ClassFilter::all);
            Enumerator enumerator(gen_spec);
            if (list_depth >= 0) {
                for (const auto& token : enumerator.tokens_at_depth(list_depth)) out << token << "\n";
                return kExitOk;
            }
            for (const Graph& g : enumerator.collect(workers, resume)) out << to_graph6(g) << "\n";
            return kExitOk;
        }

        if (convert_cmd->parsed()) {
            int mismatches = 0;
            for (const auto& line : detail::read_lines(in)) {
                const Graph g = from_graph6(line);
                std::string encoded = to_graph6(g);
                if (check && encoded != line) {
                    err << "linkless: '" << line << "' re-encodes as '" << encoded << "'\n";
                    ++mismatches;
                }
                if (convert_to == "canonical") {
                    out << canonical_bytes(g) << "\n";
                } else if (convert_to == "edges") {
                    out << g.vertex_count();
                    for (auto [u, v] : g.edges()) out << " " << u << "-" << v;
                    out << "\n";
                } else {
                    out << encoded << "\n";
                }
            }
            return mismatches == 0 ? kExitOk : kExitData;
        }
    } catch (const CapExceeded& e) {
        err << "linkless: cap exceeded: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const std::invalid_argument& e) {
        // GraphError, Graph6Error, EnumerationError, ExtremalError
        err << "linkless: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}

}  // namespace linkless::cli
