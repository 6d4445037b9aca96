#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dibc/check.hpp"
#include "dibc/constructions.hpp"
#include "dibc/enumerate.hpp"
#include "dibc/exact.hpp"
#include "dibc/generate.hpp"
#include "dibc/io.hpp"
#include "dibc/reduction.hpp"

namespace dibc {

namespace cli_detail {

using nlohmann::json;

inline json coloring_json(const Coloring& c) {
    json j = json::array();
    for (int v = 0; v < c.size(); ++v) j.push_back(c.color_of(v));
    return j;
}

inline std::string spaced_assignment(const Coloring& c) {
    std::ostringstream os;
    for (int v = 0; v < c.size(); ++v) {
        if (v) os << " ";
        os << c.color_of(v);
    }
    return os.str();
}

inline std::string bad_class_reason(const VerificationReport& rep) {
    for (const auto& cr : rep.classes)
        if (!cr.acyclic) return "class " + std::to_string(cr.color) + " induces a directed cycle";
    for (const auto& cr : rep.classes) {
        if (cr.good) continue;
        if (cr.b_plus.empty()) return "class " + std::to_string(cr.color) + " lacks b⁺-vertex";
        return "class " + std::to_string(cr.color) + " lacks b⁻-vertex";
    }
    return "";
}

inline std::string vertex_set(const std::vector<int>& vs) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) os << ",";
        os << vs[i] + 1;
    }
    os << "}";
    return os.str();
}

struct SolveOptions {
    std::string input;
    std::string witness_file;
    bool json_out = false;
};

inline int run_solve(bool want_dib, const SolveOptions& opt, std::ostream& out, std::ostream& err) {
    const Digraph d = read_dgf_file(opt.input);
    const SolveResult res = want_dib ? exact_dib(d) : exact_dc(d);
    const char* name = want_dib ? "dib" : "dc";
    if (!opt.witness_file.empty()) write_coloring_file(res.witness, opt.witness_file);
    if (opt.json_out) {
        json j;
        j["parameter"] = name;
        j["value"] = res.value;
        j["witness"] = coloring_json(res.witness);
        if (!opt.witness_file.empty()) j["witness_file"] = opt.witness_file;
        j["nodes_expanded"] = res.nodes_expanded;
        out << j.dump(2) << "\n";
    } else {
        out << name << " = " << res.value << "\n";
        out << "nodes expanded: " << res.nodes_expanded << "\n";
        if (!opt.witness_file.empty()) out << "witness: " << opt.witness_file << "\n";
        else out << "witness coloring: " << spaced_assignment(res.witness) << "\n";
    }
    err << "elapsed: " << res.elapsed_seconds << "s\n";
    return 0;
}

}  // namespace cli_detail

/// Entry point shared by the binary and the tests. argv excludes the program
/// name. Exit codes: 0 success, 1 assertion or verification failure, 2 usage
/// or input-format error.
inline int cli_main(std::vector<std::string> argv, std::ostream& out, std::ostream& err) {
    using cli_detail::json;
    CLI::App app{"acyclic b-coloring toolkit for digraphs"};
    app.require_subcommand(1);

    // verify
    std::string v_input, v_coloring;
    bool v_json = false;
    auto* cmd_verify = app.add_subcommand("verify", "verify a coloring: acyclicity and b-structure per class");
    cmd_verify->add_option("input", v_input, "digraph in dgf format")->required();
    cmd_verify->add_option("--coloring", v_coloring, "coloring file")->required();
    cmd_verify->add_flag("--json", v_json, "JSON output");

    // reduce
    std::string r_input, r_coloring, r_out;
    bool r_json = false;
    auto* cmd_reduce = app.add_subcommand("reduce", "eliminate classes without b-structure until a b-coloring remains");
    cmd_reduce->add_option("input", r_input, "digraph in dgf format")->required();
    cmd_reduce->add_option("--coloring", r_coloring, "acyclic start coloring")->required();
    cmd_reduce->add_option("--out", r_out, "write the final coloring here");
    cmd_reduce->add_flag("--json", r_json, "JSON output");

    // dc / dib
    cli_detail::SolveOptions dc_opt, dib_opt;
    auto* cmd_dc = app.add_subcommand("dc", "exact dichromatic number");
    cmd_dc->add_option("input", dc_opt.input, "digraph in dgf format")->required();
    cmd_dc->add_option("--witness", dc_opt.witness_file, "write the witness coloring here");
    cmd_dc->add_flag("--json", dc_opt.json_out, "JSON output");
    auto* cmd_dib = app.add_subcommand("dib", "exact dib-chromatic number");
    cmd_dib->add_option("input", dib_opt.input, "digraph in dgf format")->required();
    cmd_dib->add_option("--witness", dib_opt.witness_file, "write the witness coloring here");
    cmd_dib->add_flag("--json", dib_opt.json_out, "JSON output");

    // bounds
    std::string b_input;
    bool b_json = false;
    auto* cmd_bounds = app.add_subcommand("bounds", "structural lower/upper bounds for dib");
    cmd_bounds->add_option("input", b_input, "digraph in dgf format")->required();
    cmd_bounds->add_flag("--json", b_json, "JSON output");

    // construct
    std::string c_id, c_input, c_out;
    uint64_t c_seed = 0;
    long c_attempts = 0;
    int c_y1 = 0, c_y2 = 0, c_r = 0;
    bool c_emit_witness = false, c_json = false;
    auto* cmd_construct = app.add_subcommand("construct", "run a constructive bound and verify its coloring");
    cmd_construct->add_option("id", c_id, "theorem-7|theorem-8|theorem-9|theorem-10|theorem-12|theorem-13|theorem-14")->required();
    cmd_construct->add_option("input", c_input, "digraph in dgf format")->required();
    cmd_construct->add_option("--seed", c_seed, "random seed (default 0)");
    cmd_construct->add_option("--attempts", c_attempts, "sampling budget (0 = automatic)");
    cmd_construct->add_option("--y1", c_y1, "first pair vertex, 1-based (theorem-13)");
    cmd_construct->add_option("--y2", c_y2, "second pair vertex, 1-based (theorem-13)");
    cmd_construct->add_option("--r", c_r, "biclique size (theorem-14)");
    cmd_construct->add_option("--out", c_out, "write the coloring here");
    cmd_construct->add_flag("--emit-witness", c_emit_witness, "print the bad path / partition / biclique");
    cmd_construct->add_flag("--json", c_json, "JSON output");

    // generate
    GenSpec gen;
    std::string g_out;
    auto* cmd_generate = app.add_subcommand("generate", "generate a digraph from a named family");
    cmd_generate->add_option("family", gen.family, "family id")->required();
    cmd_generate->add_option("--na", gen.na, "size of side A");
    cmd_generate->add_option("--nb", gen.nb, "size of side B");
    cmd_generate->add_option("--n", gen.n, "vertex count");
    cmd_generate->add_option("--part", gen.part, "part size (circulant)");
    cmd_generate->add_option("--min-degree", gen.min_degree, "degree floor (default 2)");
    cmd_generate->add_option("--seed", gen.seed, "random seed (default 0)");
    cmd_generate->add_option("--out", g_out, "write dgf here (default stdout)");

    // check
    CheckSpec spec;
    bool k_json = false;
    auto* cmd_check = app.add_subcommand("check", "run a claim over its corpus");
    cmd_check->add_option("id", spec.id, "claim id, see --list")->required();
    cmd_check->add_option("--enumerate", spec.enumerate_n, "full enumeration up to this order");
    cmd_check->add_option("--trials", spec.trials, "sampled corpus size");
    cmd_check->add_option("--seed", spec.seed, "random seed (default 0)");
    cmd_check->add_option("--artifact-dir", spec.artifact_dir, "where violation instances are written");
    cmd_check->add_option("--workers", spec.workers, "worker threads (default: DIB_WORKERS or hardware)");
    cmd_check->add_flag("--json", k_json, "JSON output");

    // enumerate
    int e_n = 0, e_cap = 4;
    bool e_emit = false;
    std::string e_filter;
    auto* cmd_enumerate = app.add_subcommand("enumerate", "stream all loopless digraphs on n labeled vertices");
    cmd_enumerate->add_option("n", e_n, "vertex count")->required();
    cmd_enumerate->add_option("--cap", e_cap, "enumeration cap (default 4)");
    cmd_enumerate->add_option("--filter", e_filter, "bipartite|simple|min-degree-2");
    cmd_enumerate->add_flag("--emit", e_emit, "print every digraph in dgf format");

    std::vector<const char*> cargs;
    cargs.reserve(argv.size() + 1);
    cargs.push_back("dibtool");
    for (const auto& a : argv) cargs.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (cmd_verify->parsed()) {
            const Digraph d = read_dgf_file(v_input);
            std::ifstream cf(v_coloring);
            if (!cf) throw std::runtime_error("cannot open " + v_coloring);
            const Coloring col = read_coloring(cf, d.order());
            const VerificationReport rep = verify(d, col);
            if (v_json) {
                json j;
                j["acyclic"] = rep.is_acyclic;
                j["b_coloring"] = rep.is_b_coloring;
                j["classes"] = json::array();
                for (const auto& cr : rep.classes) {
                    json c;
                    c["color"] = cr.color;
                    c["acyclic"] = cr.acyclic;
                    c["b_plus"] = cr.b_plus;
                    c["b_minus"] = cr.b_minus;
                    c["b_vertices"] = cr.b_vertices;
                    c["b_pair"] = cr.has_b_pair;
                    j["classes"].push_back(c);
                }
                if (!rep.is_b_coloring) j["reason"] = cli_detail::bad_class_reason(rep);
                out << j.dump(2) << "\n";
            } else {
                out << "acyclic: " << (rep.is_acyclic ? "yes" : "no") << "\n";
                if (rep.is_b_coloring) out << "b-coloring: YES (" << col.num_colors() << " colors)\n";
                else out << "b-coloring: NO (" << cli_detail::bad_class_reason(rep) << ")\n";
            }
            return rep.is_b_coloring ? 0 : 1;
        }

        if (cmd_reduce->parsed()) {
            const Digraph d = read_dgf_file(r_input);
            std::ifstream cf(r_coloring);
            if (!cf) throw std::runtime_error("cannot open " + r_coloring);
            const Coloring col = read_coloring(cf, d.order());
            const ReductionTrace trace = reduce_to_b_coloring(d, col);
            if (r_json) {
                json j;
                j["steps"] = json::array();
                for (const auto& step : trace.steps) {
                    json s;
                    s["eliminated_color"] = step.eliminated_color;
                    s["side"] = side_name(step.side);
                    s["resulting_k"] = step.resulting_k;
                    s["buckets"] = json::object();
                    for (const auto& [color, verts] : step.buckets) {
                        json lv = json::array();
                        for (int v : verts) lv.push_back(v + 1);
                        s["buckets"][std::to_string(color)] = lv;
                    }
                    j["steps"].push_back(s);
                }
                j["final"] = cli_detail::coloring_json(trace.final);
                j["final_k"] = trace.final.num_colors();
                out << j.dump(2) << "\n";
            } else {
                int i = 1;
                for (const auto& step : trace.steps) {
                    out << "step " << i++ << ": drop color " << step.eliminated_color << " via "
                        << side_name(step.side) << ", buckets:";
                    bool first = true;
                    for (const auto& [color, verts] : step.buckets) {
                        out << (first ? " " : ", ") << color << "←" << cli_detail::vertex_set(verts);
                        first = false;
                    }
                    out << "\n";
                }
                write_coloring(trace.final, out);
            }
            if (!r_out.empty()) write_coloring_file(trace.final, r_out);
            return 0;
        }

        if (cmd_dc->parsed()) return cli_detail::run_solve(false, dc_opt, out, err);
        if (cmd_dib->parsed()) return cli_detail::run_solve(true, dib_opt, out, err);

        if (cmd_bounds->parsed()) {
            const Digraph d = read_dgf_file(b_input);
            const BoundsReport rep = bounds(d);
            if (b_json) {
                json j;
                j["lower"] = json::array();
                for (const auto& b : rep.lowers) j["lower"].push_back({{"name", b.name}, {"value", b.value}});
                j["upper"] = json::array();
                for (const auto& b : rep.uppers) j["upper"].push_back({{"name", b.name}, {"value", b.value}});
                j["best_lower"] = rep.best_lower();
                j["best_upper"] = rep.best_upper();
                out << j.dump(2) << "\n";
            } else {
                for (const auto& b : rep.lowers) out << "lower " << b.name << ": " << b.value << "\n";
                for (const auto& b : rep.uppers) out << "upper " << b.name << ": " << b.value << "\n";
                out << "dib range: [" << rep.best_lower() << ", " << rep.best_upper() << "]\n";
            }
            return 0;
        }

        if (cmd_construct->parsed()) {
            const Digraph d = read_dgf_file(c_input);
            std::optional<Coloring> result;
            std::string route, witness_text, miss_reason;
            auto oriented_bp = [&]() {
                auto bp = bipartition_of(d);
                if (!bp) throw PreconditionError("digraph is not bipartite");
                if (bp->size_a() > bp->size_b()) std::swap(bp->a, bp->b);
                return Bipartition::from_sides(bp->a, bp->b, d.order());
            };
            if (c_id == "theorem-7") {
                result = disconnected_bipartite_coloring(d);
                route = "disconnected components";
            } else if (c_id == "theorem-8") {
                auto bp = bipartition_of(d);
                if (!bp) throw PreconditionError("digraph is not bipartite");
                RepairedColoring rc = intersection_cover_coloring(d, *bp);
                result = std::move(rc.coloring);
                for (const auto& n : rc.notes) route += (route.empty() ? "" : "; ") + n;
            } else if (c_id == "theorem-9") {
                auto bp = bipartition_of(d);
                if (!bp) throw PreconditionError("digraph is not bipartite");
                RoutedColoring rc = bad_path_three_coloring(d, *bp);
                result = std::move(rc.coloring);
                route = rc.route;
                if (c_emit_witness) {
                    const BadPath p = max_bad_path(d, *bp);
                    witness_text = "bad path (" + std::string(p.odd_are_sources ? "odd sources" : "odd sinks") +
                                   "): " + cli_detail::vertex_set(p.vertices);
                }
            } else if (c_id == "theorem-10") {
                const Bipartition bp = oriented_bp();
                const PartitionColoringResult pr = partition_coloring(d, bp, c_attempts, c_seed);
                if (pr.coloring) {
                    result = pr.coloring;
                    route = "balanced partition found after " + std::to_string(pr.attempts_used) + " attempts";
                    if (c_emit_witness && pr.parts) {
                        for (const auto& part : *pr.parts)
                            witness_text += (witness_text.empty() ? "parts: " : " ") + cli_detail::vertex_set(part);
                    }
                } else {
                    miss_reason = "no balanced partition found within budget (" +
                                  std::to_string(pr.attempts_used) +
                                  " attempts); not a disproof, the bound only promises one under its inequality";
                }
            } else if (c_id == "theorem-12") {
                const Bipartition bp = oriented_bp();
                GreedyColoringResult g = greedy_coloring(d, bp);
                result = std::move(g.coloring);
                route = g.route + " route, colored " + std::to_string(g.colored_b_total) + " large-side vertices";
            } else if (c_id == "theorem-13") {
                const Bipartition bp = oriented_bp();
                if (c_y1 < 1 || c_y2 < 1) throw CLI::ValidationError("construct", "--y1 and --y2 are required for theorem-13");
                const CrossPairColoringResult r =
                    cross_pair_coloring(d, bp, c_y1 - 1, c_y2 - 1, c_attempts, c_seed);
                if (r.coloring) {
                    result = r.coloring;
                    route = "pair count " + std::to_string(r.c_value) + ", " + std::to_string(r.c_value + 1) + " colors";
                } else {
                    miss_reason = "inner partition search missed within budget";
                }
            } else if (c_id == "theorem-14") {
                const Bipartition bp = oriented_bp();
                if (c_r < 1) throw CLI::ValidationError("construct", "--r is required for theorem-14");
                const auto bi = find_one_directional_biclique(d, bp, c_r);
                if (!bi) {
                    miss_reason = "no one-directional biclique of size " + std::to_string(c_r);
                } else {
                    result = biclique_coloring(d, bp, *bi);
                    route = std::string("biclique direction ") + (bi->forward ? "A to B" : "B to A");
                    if (c_emit_witness)
                        witness_text = "biclique: " + cli_detail::vertex_set(bi->a_side) + " " +
                                       (bi->forward ? "->" : "<-") + " " + cli_detail::vertex_set(bi->b_side);
                }
            } else {
                throw CLI::ValidationError("construct", "unknown construction id '" + c_id + "'");
            }

            if (!result) {
                if (c_json) {
                    json j;
                    j["found"] = false;
                    j["reason"] = miss_reason;
                    out << j.dump(2) << "\n";
                } else {
                    out << "miss: " << miss_reason << "\n";
                }
                return 1;
            }
            const VerificationReport rep = verify(d, *result);
            if (c_json) {
                json j;
                j["found"] = true;
                j["colors"] = result->num_colors();
                j["b_coloring"] = rep.is_b_coloring;
                j["route"] = route;
                j["coloring"] = cli_detail::coloring_json(*result);
                if (!witness_text.empty()) j["witness"] = witness_text;
                if (!c_out.empty()) j["coloring_file"] = c_out;
                out << j.dump(2) << "\n";
            } else {
                out << "colors: " << result->num_colors() << "\n";
                out << "verified b-coloring: " << (rep.is_b_coloring ? "yes" : "NO") << "\n";
                out << "route: " << route << "\n";
                if (!witness_text.empty()) out << witness_text << "\n";
                if (c_out.empty()) write_coloring(*result, out);
            }
            if (!c_out.empty()) write_coloring_file(*result, c_out);
            return rep.is_b_coloring ? 0 : 1;
        }

        if (cmd_generate->parsed()) {
            const Digraph d = generate(gen);
            std::vector<std::string> comments = {"family=" + gen.family + " seed=" + std::to_string(gen.seed)};
            if (g_out.empty()) write_dgf(d, out, comments);
            else write_dgf_file(d, g_out, comments);
            return 0;
        }

        if (cmd_check->parsed()) {
            const CheckReport rep = run_check(spec);
            if (k_json) {
                json j;
                j["check"] = rep.id;
                j["mode"] = rep.assert_mode ? "assert" : "explore";
                j["seed"] = rep.seed;
                j["corpus"] = rep.corpus;
                j["instances"] = rep.instances;
                j["violations"] = json::array();
                for (const auto& v : rep.violations)
                    j["violations"].push_back({{"key", v.key}, {"message", v.message}});
                j["notes"] = rep.notes;
                out << j.dump(2) << "\n";
            } else {
                out << rep.canonical_text();
            }
            err << "elapsed: " << rep.wall_seconds << "s\n";
            return (rep.assert_mode && !rep.violations.empty()) ? 1 : 0;
        }

        if (cmd_enumerate->parsed()) {
            auto pass = [&](const Digraph& d) {
                if (e_filter.empty()) return true;
                if (e_filter == "bipartite") return bipartition_of(d).has_value();
                if (e_filter == "simple") return d.is_simple();
                if (e_filter == "min-degree-2") return degree_summary(d).delta >= 2;
                throw CLI::ValidationError("enumerate", "unknown filter '" + e_filter + "'");
            };
            uint64_t count = 0;
            enumerate_all(e_n, [&](const Digraph& d) {
                if (!pass(d)) return;
                ++count;
                if (e_emit) {
                    write_dgf(d, out);
                    out << "\n";
                }
            }, e_cap);
            out << "n=" << e_n << (e_filter.empty() ? "" : (" filter=" + e_filter)) << ": " << count
                << " digraphs\n";
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "hypothesis not satisfied: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace dibc
