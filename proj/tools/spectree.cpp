// Command-line front end for the spectree library.

#include "spectree/campaign.hpp"
#include "spectree/embedding.hpp"
#include "spectree/errors.hpp"
#include "spectree/graph6.hpp"
#include "spectree/spectral.hpp"
#include "spectree/trees.hpp"
#include "spectree/turan.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace spectree;

constexpr int exit_clean = 0;
constexpr int exit_anomalies = 1;
constexpr int exit_usage = 2;
constexpr int exit_defect = 3;

graph build_named(const std::string& name, std::size_t n, std::size_t k)
{
    if (name == "snk")
        return split_graph(n, k);
    if (name == "snk-plus")
        return split_plus_graph(n, k);
    if (name == "star") {
        if (n == 0)
            throw invalid_parameter("star needs n >= 1");
        return star_graph(n - 1);
    }
    if (name == "complete")
        return complete_graph(n);
    throw invalid_parameter("unknown family '" + name + "'");
}

void emit_lines(const std::vector<std::string>& lines, const std::string& path)
{
    if (path.empty()) {
        for (const auto& l : lines)
            std::cout << l << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw error("cannot open '" + path + "' for writing");
    for (const auto& l : lines)
        out << l << '\n';
    if (!out)
        throw error("write to '" + path + "' failed");
}

std::string fixed(double v, int digits = 12)
{
    std::ostringstream s;
    s << std::setprecision(digits) << std::fixed << v;
    return s.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spectral and containment checks for trees of diameter at most four"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Write a named graph as graph6");
    std::string gen_family;
    std::size_t gen_n = 0, gen_k = 0;
    std::string gen_out;
    gen->add_option("--family", gen_family, "snk | snk-plus | star | complete")->required()
        ->check(CLI::IsMember({"snk", "snk-plus", "star", "complete"}));
    gen->add_option("--n", gen_n, "order")->required();
    gen->add_option("--k", gen_k, "clique size (snk, snk-plus)");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // trees
    auto* trees = app.add_subcommand("trees", "List trees of diameter at most four");
    std::size_t trees_order = 0;
    bool trees_classify = false;
    std::string trees_family;
    trees->add_option("--order", trees_order, "tree order")->required();
    trees->add_flag("--classify", trees_classify, "append p, p', e(F), diameter and name");
    trees->add_option("--family", trees_family, "all | script-T | T-star (order must be 2k+3)")
        ->check(CLI::IsMember({"all", "script-T", "T-star"}));

    // mu
    auto* mu = app.add_subcommand("mu", "Spectral radius");
    std::string mu_file, mu_family;
    std::size_t mu_n = 0, mu_k = 0;
    double mu_tol = 1e-10;
    mu->add_option("file", mu_file, "graph6 file");
    mu->add_option("--family", mu_family, "snk | snk-plus | star | complete");
    mu->add_option("--n", mu_n, "order for --family");
    mu->add_option("--k", mu_k, "k for --family");
    mu->add_option("--tolerance", mu_tol, "power-iteration residual tolerance");

    // certificate
    auto* cert = app.add_subcommand("certificate", "Column sums of A^2 - aA - bI");
    std::string cert_file;
    std::int64_t cert_a = 0, cert_b = 0;
    cert->add_option("file", cert_file, "graph6 file")->required();
    cert->add_option("--a", cert_a)->required();
    cert->add_option("--b", cert_b)->required();

    // contains
    auto* contains = app.add_subcommand("contains", "Test whether graphs contain a tree");
    std::string contains_file, contains_tree;
    bool contains_witness = false;
    contains->add_option("--graph", contains_file, "graph6 file")->required();
    contains->add_option("--tree", contains_tree, "star sizes, e.g. \"2,1,1,0\"")->required();
    contains->add_flag("--witness", contains_witness, "print the embedding");

    // turan
    auto* turan = app.add_subcommand("turan", "Turán number of a star forest");
    std::size_t turan_m = 0;
    std::string turan_forest, turan_out;
    bool turan_oracle = false, turan_construct = false;
    turan->add_option("--m", turan_m, "host order")->required();
    turan->add_option("--forest", turan_forest, "star sizes, e.g. \"2,1,1\"")->required();
    turan->add_flag("--oracle", turan_oracle, "also run the exhaustive search (m <= 8)");
    turan->add_flag("--construct", turan_construct, "write the extremal construction as graph6");
    turan->add_option("-o,--output", turan_out, "construction output file (default: stderr)");

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification campaign");
    std::string v_mode, v_source, v_in, v_report, v_format = "jsonl", v_base = "snk";
    std::size_t v_n = 0, v_k = 0, v_count = 100, v_edits = 1;
    std::uint64_t v_seed = 0;
    double v_p = 0.5;
    verify->add_option("--mode", v_mode, "theorem1 | theorem2 | theorem3 | conjecture-b")->required()
        ->check(CLI::IsMember({"theorem1", "theorem2", "theorem3", "conjecture-b"}));
    verify->add_option("--n", v_n)->required();
    verify->add_option("--k", v_k)->required();
    verify->add_option("--source", v_source, "exhaustive | random | perturb | file")->required()
        ->check(CLI::IsMember({"exhaustive", "random", "perturb", "file"}));
    verify->add_option("--count", v_count, "graphs to draw (random, perturb)");
    verify->add_option("--seed", v_seed);
    verify->add_option("--p", v_p, "edge probability (random)");
    verify->add_option("--edits", v_edits, "edge toggles per graph (perturb, 1..3)");
    verify->add_option("--base", v_base, "perturbation base: snk | snk-plus")->check(CLI::IsMember({"snk", "snk-plus"}));
    verify->add_option("--in", v_in, "graph6 input (file)");
    verify->add_option("--report", v_report, "report path")->required();
    verify->add_option("--format", v_format, "jsonl | csv")->check(CLI::IsMember({"jsonl", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_clean : exit_usage;
    }

    try {
        if (*gen) {
            emit_lines({encode_graph6(build_named(gen_family, gen_n, gen_k))}, gen_out);
            return exit_clean;
        }

        if (*trees) {
            std::vector<star_pattern> list;
            if (trees_family.empty()) {
                list = enumerate_diam4_trees(trees_order);
            } else {
                if (trees_order < 7 || trees_order % 2 == 0)
                    throw invalid_parameter("--family needs an odd order 2k+3 with k >= 2");
                const auto which = trees_family == "all" ? family_kind::all
                                 : trees_family == "script-T" ? family_kind::t_script
                                                               : family_kind::t_star;
                list = family_set((trees_order - 3) / 2, which);
            }
            for (const auto& t : list) {
                std::cout << t.to_string();
                if (trees_classify) {
                    auto c = classify(t);
                    std::cout << "\tp=" << c.p << " p'=" << c.p_prime << " e=" << c.forest_edges << " diameter=" << c.diameter;
                    if (c.name)
                        std::cout << " name=" << to_string(*c.name);
                }
                std::cout << '\n';
            }
            return exit_clean;
        }

        if (*mu) {
            std::vector<graph> graphs;
            if (!mu_family.empty())
                graphs.push_back(build_named(mu_family, mu_n, mu_k));
            else if (!mu_file.empty())
                graphs = read_graph6_file(mu_file);
            else
                throw invalid_parameter("mu needs a graph6 file or --family");
            for (const auto& g : graphs) {
                auto est = spectral_radius(g, mu_tol);
                std::cout << fixed(est.value) << ' ' << to_string(est.method) << " residual=" << est.residual
                          << " iterations=" << est.iterations << '\n';
            }
            return exit_clean;
        }

        if (*cert) {
            for (const auto& g : read_graph6_file(cert_file)) {
                auto c = lemma1_certificate(g, cert_a, cert_b);
                std::cout << "graph " << encode_graph6(g) << ": mu' = " << fixed(c.mu_prime) << '\n';
                std::cout << "  column sums:";
                for (auto s : c.column_sums)
                    std::cout << ' ' << s;
                std::cout << '\n';
                std::cout << "  all_nonpositive=" << std::boolalpha << c.all_nonpositive << " all_zero=" << c.all_zero << '\n';
                if (c.all_zero)
                    std::cout << "  verdict: mu(G) = mu'\n";
                else if (c.all_nonpositive)
                    std::cout << "  verdict: mu(G) <= mu'\n";
                else {
                    std::cout << "  verdict: none; violators:";
                    for (auto [v, s] : c.violators)
                        std::cout << ' ' << v << ':' << s;
                    std::cout << '\n';
                }
            }
            return exit_clean;
        }

        if (*contains) {
            auto pattern = star_pattern::parse(contains_tree);
            if (!is_canonical(pattern))
                pattern = canonicalize_pattern(pattern.sizes());
            for (const auto& g : read_graph6_file(contains_file)) {
                auto e = contains_diam4_tree(g, pattern);
                std::cout << encode_graph6(g) << ' ' << (e ? "found" : "missing");
                if (e && contains_witness)
                    std::cout << ' ' << e->to_string();
                std::cout << '\n';
            }
            return exit_clean;
        }

        if (*turan) {
            auto f = star_forest_spec::parse(turan_forest);
            auto r = star_forest_turan(turan_m, f);
            std::optional<turan_result> o;
            if (turan_oracle)
                o = brute_force_turan(turan_m, f);
            std::cout << "m,F,formula_value,arg_i,oracle_value,gap\n";
            std::cout << turan_m << ",\"" << f.to_string() << "\"," << r.value << ',' << r.arg_i << ',';
            if (o) {
                std::cout << o->value << ',' << (o->value - r.value);
            } else {
                std::cout << ',';
            }
            std::cout << '\n';
            if (turan_construct) {
                graph c = r.trivial_regime ? complete_graph(turan_m) : extremal_construction(turan_m, f);
                if (turan_out.empty())
                    std::cerr << "construction: " << encode_graph6(c) << '\n';
                else
                    emit_lines({encode_graph6(c)}, turan_out);
            }
            return exit_clean;
        }

        if (*verify) {
            campaign_config config;
            config.mode = parse_campaign_mode(v_mode);
            config.n = v_n;
            config.k = v_k;
            config.workers = workers_from_environment();
            graph_source source;
            source.kind = parse_source_kind(v_source);
            source.count = v_count;
            source.seed = v_seed;
            source.edge_probability = v_p;
            source.edits = v_edits;
            source.plus_base = v_base == "snk-plus";
            source.path = v_in;
            source.cap_n = cap_from_environment();
            if (source.kind == source_kind::file && v_in.empty())
                throw invalid_parameter("--source file needs --in FILE");

            auto result = run_campaign(config, source);
            for (const auto& w : result.warnings)
                std::cerr << "warning: " << w << '\n';
            std::cerr << "threshold " << fixed(result.threshold.value) << " (" << result.threshold.method << ")\n";
            auto s = write_report(result, parse_report_format(v_format), v_report);
            std::cerr << "records=" << s.records << " meeting_threshold=" << s.meeting_threshold
                      << " anomalous_records=" << s.anomalous_records << " anomalies=" << s.anomaly_count
                      << " wall_seconds=" << fixed(s.wall_seconds, 3) << '\n';
            if (result.terminal_status)
                std::cerr << "stopped early: " << *result.terminal_status << '\n';
            return s.anomaly_count > 0 ? exit_anomalies : exit_clean;
        }
    } catch (const defect_error& e) {
        std::cerr << "internal defect: " << e.what() << '\n';
        return exit_defect;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
