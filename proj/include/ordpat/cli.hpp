#pragma once

// Command-line surface.  Subcommands: patterns, families, check, search,
// recognize, classify, oracle, color, chromatic.  Exit status contract:
// 0 = positive or complete answer, 1 = negative answer (non-member or
// violation found), 2 = usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordpat/checker.hpp"
#include "ordpat/colorability.hpp"
#include "ordpat/enumeration.hpp"
#include "ordpat/io.hpp"
#include "ordpat/recognize.hpp"
#include "ordpat/search.hpp"

namespace ordpat::cli {

using json = nlohmann::ordered_json;

namespace detail {

inline std::string read_input(const std::string& path, std::istream& stdin_stream) {
    if (path == "-") {
        std::ostringstream buf;
        buf << stdin_stream.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open graph file '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

inline GraphDocument load_graph(const std::string& path, std::istream& stdin_stream) {
    return parse_graph_auto(read_input(path, stdin_stream), path == "-" ? "<stdin>" : path);
}

inline std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        out.push_back(std::stoi(token));
    }
    return out;
}

inline json pattern_json(const Pattern& p) {
    json j;
    if (auto idx = catalog_index_of(p)) j["index"] = *idx;
    j["name"] = pattern_display_name(p);
    j["text"] = format_pattern(p);
    return j;
}

inline json witness_json(const OccurrenceWitness& w, const VertexOrdering& ord) {
    json j;
    j["pattern"] = pattern_json(w.pattern);
    j["positions"] = w.positions;
    j["vertices"] = w.vertices(ord);
    return j;
}

inline std::string witness_text(const OccurrenceWitness& w, const VertexOrdering& ord) {
    std::ostringstream os;
    os << pattern_display_name(w.pattern) << " at positions";
    for (int p : w.positions) os << ' ' << p;
    os << " (vertices";
    for (int v : w.vertices(ord)) os << ' ' << v;
    os << ")";
    return os.str();
}

inline json recognition_json(const RecognitionResult& r) {
    json j;
    j["class"] = class_name(r.class_id);
    j["complemented"] = r.complemented;
    j["verdict"] = r.member ? "member" : "non-member";
    j["family"] = FamilyBits{r.family_used}.indices();
    if (r.certificate) j["certificate"] = r.certificate->order();
    else j["certificate"] = nullptr;
    if (r.refutation && r.refuted_ordering)
        j["witness"] = witness_json(*r.refutation, *r.refuted_ordering);
    else j["witness"] = nullptr;
    return j;
}

inline std::string join_names(const FamilyBits& bits) {
    std::string out;
    for (int i : bits.indices()) {
        if (!out.empty()) out += ", ";
        out += kCatalogNames[static_cast<std::size_t>(i)];
    }
    return out;
}

} // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err,
                   std::istream& stdin_stream = std::cin) {
    CLI::App app{"forbidden-ordered-pattern toolkit for graph-class recognition"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->envname("ORDPAT_FORMAT")
        ->check(CLI::IsMember({"text", "json"}));
    int oracle_limit = kDefaultOracleLimit;
    app.add_option("--limit", oracle_limit, "exhaustive oracle vertex bound")
        ->envname("ORDPAT_ORACLE_LIMIT");

    auto* cmd_patterns = app.add_subcommand("patterns", "list the 27 three-node patterns");

    auto* cmd_families =
        app.add_subcommand("families", "list the 87 split-minimal families and their classes");

    std::string graph_path, ordering_text, family_text, class_text, kind_text = "lexbfs";
    std::string word_text, prior_text;
    int start_vertex = -1, sweeps = 1;
    bool complement_flag = false, trace_flag = false;

    auto* cmd_check = app.add_subcommand("check", "check an ordering against a pattern family");
    cmd_check->add_option("--graph", graph_path, "graph file or - for stdin")->required();
    cmd_check->add_option("--ordering", ordering_text, "comma-separated vertex ordering")
        ->required();
    cmd_check->add_option("--family", family_text, "pattern family")->required();

    auto* cmd_search = app.add_subcommand("search", "run a graph search");
    cmd_search->add_option("--graph", graph_path, "graph file or - for stdin")->required();
    cmd_search->add_option("--kind", kind_text,
                           "generic|bfs|dfs|lexbfs|lexbfs+|mns|mds");
    cmd_search->add_option("--start", start_vertex, "start vertex");
    cmd_search->add_option("--sweeps", sweeps, "number of sweeps");
    cmd_search->add_option("--prior", prior_text, "prior ordering for lexbfs+");
    cmd_search->add_flag("--trace", trace_flag, "print the per-step trace");

    auto* cmd_recognize = app.add_subcommand("recognize", "certifying class recognition");
    cmd_recognize->add_option("--graph", graph_path, "graph file or - for stdin")->required();
    cmd_recognize->add_option("--class", class_text, "class name")->required();
    cmd_recognize->add_flag("--complement", complement_flag, "recognize the complement class");

    auto* cmd_classify = app.add_subcommand("classify", "recognize all classes");
    cmd_classify->add_option("--graph", graph_path, "graph file or - for stdin")->required();

    auto* cmd_oracle = app.add_subcommand("oracle", "exhaustive ordering search");
    cmd_oracle->add_option("--graph", graph_path, "graph file or - for stdin")->required();
    cmd_oracle->add_option("--family", family_text, "pattern family")->required();

    auto* cmd_color = app.add_subcommand("color", "find an (a,b)-coloring");
    cmd_color->add_option("--graph", graph_path, "graph file or - for stdin")->required();
    cmd_color->add_option("--word", word_text, "letters E/N, e.g. EEN")->required();

    auto* cmd_chromatic = app.add_subcommand("chromatic", "chromatic number via orderings");
    cmd_chromatic->add_option("--graph", graph_path, "graph file or - for stdin")->required();

    std::vector<const char*> argv;
    argv.push_back("ordpat");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    const bool as_json = (format == "json");
    try {
        if (cmd_patterns->parsed()) {
            if (as_json) {
                json arr = json::array();
                for (int i = 0; i < kCatalogSize; ++i) {
                    json j;
                    j["index"] = i;
                    j["name"] = kCatalogNames[static_cast<std::size_t>(i)];
                    j["text"] = format_pattern(catalog_pattern(i));
                    j["full"] = catalog_pattern(i).is_full();
                    arr.push_back(j);
                }
                out << arr.dump(2) << "\n";
            } else {
                for (int i = 0; i < kCatalogSize; ++i)
                    out << i << "\t" << kCatalogNames[static_cast<std::size_t>(i)] << "\t"
                        << format_pattern(catalog_pattern(i)) << "\n";
            }
            return 0;
        }

        if (cmd_families->parsed()) {
            if (as_json) {
                json arr = json::array();
                for (const auto& e : family_catalog()) {
                    json j;
                    j["index"] = e.index;
                    j["family"] = e.family.indices();
                    j["patterns"] = detail::join_names(e.family);
                    if (e.label.trivial) {
                        j["class"] = "trivial";
                    } else {
                        j["class"] = class_name(e.label.class_id);
                        j["complemented"] = e.label.complemented;
                        j["connectivity"] = connectivity_name(e.label.connectivity);
                    }
                    arr.push_back(j);
                }
                out << arr.dump(2) << "\n";
            } else {
                for (const auto& e : family_catalog()) {
                    out << e.index << "\t" << to_string(e.family) << "\t";
                    if (e.label.trivial) {
                        out << "trivial";
                    } else {
                        out << label_text(e.label) << " ("
                            << connectivity_name(e.label.connectivity) << ")";
                    }
                    out << "\t" << detail::join_names(e.family) << "\n";
                }
            }
            return 0;
        }

        if (cmd_check->parsed()) {
            GraphDocument doc = detail::load_graph(graph_path, stdin_stream);
            VertexOrdering ord(detail::parse_int_list(ordering_text));
            if (ord.size() != doc.graph.n())
                throw std::invalid_argument("ordering covers " + std::to_string(ord.size()) +
                                            " of " + std::to_string(doc.graph.n()) + " vertices");
            PatternFamily fam = parse_family(family_text);
            auto witness = find_violation(doc.graph, ord, fam);
            if (as_json) {
                json j;
                j["verdict"] = witness ? "violates" : "avoids";
                j["witness"] = witness ? detail::witness_json(*witness, ord) : json(nullptr);
                out << j.dump(2) << "\n";
            } else if (witness) {
                out << "violates " << detail::witness_text(*witness, ord) << "\n";
            } else {
                out << "avoids\n";
            }
            return witness ? 1 : 0;
        }

        if (cmd_search->parsed()) {
            GraphDocument doc = detail::load_graph(graph_path, stdin_stream);
            SearchKind kind;
            if (kind_text == "generic") kind.kind = SearchAlgo::Generic;
            else if (kind_text == "bfs") kind.kind = SearchAlgo::BFS;
            else if (kind_text == "dfs") kind.kind = SearchAlgo::DFS;
            else if (kind_text == "lexbfs") kind.kind = SearchAlgo::LexBFS;
            else if (kind_text == "lexbfs+") kind.kind = SearchAlgo::LexBFSPlus;
            else if (kind_text == "mns") kind.kind = SearchAlgo::MNS;
            else if (kind_text == "mds") kind.kind = SearchAlgo::MDS;
            else throw std::invalid_argument("unknown search kind '" + kind_text + "'");
            if (start_vertex >= 0) kind.start = start_vertex;
            if (!prior_text.empty()) kind.prior = VertexOrdering(detail::parse_int_list(prior_text));
            SearchResult res = multi_sweep(doc.graph, kind, sweeps);
            if (as_json) {
                json j;
                j["ordering"] = res.ordering.order();
                if (res.layers) j["layers"] = *res.layers;
                if (trace_flag) {
                    json tr = json::array();
                    for (const auto& t : res.trace) {
                        json e;
                        e["vertex"] = t.vertex;
                        e["label"] = t.label;
                        e["degree"] = t.degree;
                        tr.push_back(e);
                    }
                    j["trace"] = tr;
                }
                out << j.dump(2) << "\n";
            } else {
                bool first = true;
                for (int v : res.ordering.order()) {
                    out << (first ? "" : ",") << v;
                    first = false;
                }
                out << "\n";
                if (trace_flag)
                    for (const auto& t : res.trace) {
                        out << t.vertex << " degree=" << t.degree << " label=";
                        for (std::size_t i = 0; i < t.label.size(); ++i)
                            out << (i ? "," : "") << t.label[i];
                        out << "\n";
                    }
            }
            return 0;
        }

        if (cmd_recognize->parsed()) {
            GraphDocument doc = detail::load_graph(graph_path, stdin_stream);
            auto cls = class_by_name(class_text);
            if (!cls)
                throw std::invalid_argument("unknown class '" + class_text +
                                            "'; valid names: " + valid_class_names());
            RecognitionResult res = recognize(doc.graph, *cls, complement_flag);
            if (as_json) {
                out << detail::recognition_json(res).dump(2) << "\n";
            } else if (res.member) {
                out << "member certificate=";
                for (std::size_t i = 0; i < res.certificate->order().size(); ++i)
                    out << (i ? "," : "") << res.certificate->order()[i];
                out << "\n";
            } else {
                out << "non-member";
                if (res.refutation && res.refuted_ordering)
                    out << " witness: " << detail::witness_text(*res.refutation, *res.refuted_ordering);
                out << "\n";
            }
            return res.member ? 0 : 1;
        }

        if (cmd_classify->parsed()) {
            GraphDocument doc = detail::load_graph(graph_path, stdin_stream);
            auto results = classify_all(doc.graph);
            if (as_json) {
                json arr = json::array();
                for (const auto& r : results) arr.push_back(detail::recognition_json(r));
                out << arr.dump(2) << "\n";
            } else {
                for (const auto& r : results) {
                    out << (r.complemented ? "co-" : "") << class_name(r.class_id) << "\t"
                        << (r.member ? "member" : "non-member") << "\n";
                }
            }
            return 0;
        }

        if (cmd_oracle->parsed()) {
            GraphDocument doc = detail::load_graph(graph_path, stdin_stream);
            PatternFamily fam = parse_family(family_text);
            auto ord = oracle_membership(doc.graph, fam, oracle_limit);
            if (as_json) {
                json j;
                j["ordering"] = ord ? json(ord->order()) : json(nullptr);
                out << j.dump(2) << "\n";
            } else if (ord) {
                for (std::size_t i = 0; i < ord->order().size(); ++i)
                    out << (i ? "," : "") << ord->order()[i];
                out << "\n";
            } else {
                out << "none\n";
            }
            return ord ? 0 : 1;
        }

        if (cmd_color->parsed()) {
            GraphDocument doc = detail::load_graph(graph_path, stdin_stream);
            LineWord w = parse_line_word(word_text);
            auto col = ab_colorable_oracle(doc.graph, w,
                                           std::max(oracle_limit, kDefaultColoringLimit));
            if (as_json) {
                if (col) {
                    json parts = json::array();
                    for (std::size_t i = 0; i < col->parts.size(); ++i) {
                        json part;
                        part["kind"] =
                            col->kinds[i] == PartKind::Independent ? "independent" : "clique";
                        part["vertices"] = col->parts[i];
                        parts.push_back(part);
                    }
                    json j;
                    j["parts"] = parts;
                    out << j.dump(2) << "\n";
                } else {
                    json j;
                    j["parts"] = nullptr;
                    out << j.dump(2) << "\n";
                }
            } else if (col) {
                for (std::size_t i = 0; i < col->parts.size(); ++i) {
                    out << (col->kinds[i] == PartKind::Independent ? "independent:" : "clique:");
                    for (int v : col->parts[i]) out << ' ' << v;
                    out << "\n";
                }
            } else {
                out << "none\n";
            }
            return col ? 0 : 1;
        }

        if (cmd_chromatic->parsed()) {
            GraphDocument doc = detail::load_graph(graph_path, stdin_stream);
            int k = mirsky_chromatic(doc.graph, oracle_limit);
            if (as_json) {
                json j;
                j["chromatic"] = k;
                out << j.dump(2) << "\n";
            } else {
                out << k << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace ordpat::cli
