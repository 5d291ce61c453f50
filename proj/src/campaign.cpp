#include "spectree/campaign.hpp"

#include "spectree/canonical.hpp"
#include "spectree/embedding.hpp"
#include "spectree/enumerate.hpp"
#include "spectree/errors.hpp"
#include "spectree/graph6.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <ostream>
#include <random>
#include <set>
#include <thread>

namespace spectree {

namespace {

constexpr double boundary_slack = 1e-9;

std::size_t env_size(const char* name, std::size_t fallback)
{
    const char* raw = std::getenv(name);
    if (!raw || !*raw)
        return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (*end != '\0' || v == 0)
        throw invalid_parameter(std::string(name) + " must be a positive integer (got '" + raw + "')");
    return static_cast<std::size_t>(v);
}

} // namespace

std::string_view to_string(campaign_mode mode)
{
    switch (mode) {
    case campaign_mode::theorem1:
        return "theorem1";
    case campaign_mode::theorem2:
        return "theorem2";
    case campaign_mode::theorem3:
        return "theorem3";
    case campaign_mode::conjecture_b:
        return "conjecture-b";
    }
    return "?";
}

campaign_mode parse_campaign_mode(std::string_view text)
{
    if (text == "theorem1")
        return campaign_mode::theorem1;
    if (text == "theorem2")
        return campaign_mode::theorem2;
    if (text == "theorem3")
        return campaign_mode::theorem3;
    if (text == "conjecture-b" || text == "conjecture_b")
        return campaign_mode::conjecture_b;
    throw invalid_parameter("unknown mode '" + std::string(text) + "'");
}

std::string_view to_string(source_kind kind)
{
    switch (kind) {
    case source_kind::exhaustive:
        return "exhaustive";
    case source_kind::random:
        return "random";
    case source_kind::perturbation:
        return "perturb";
    case source_kind::file:
        return "file";
    }
    return "?";
}

source_kind parse_source_kind(std::string_view text)
{
    if (text == "exhaustive")
        return source_kind::exhaustive;
    if (text == "random")
        return source_kind::random;
    if (text == "perturb" || text == "perturbation")
        return source_kind::perturbation;
    if (text == "file")
        return source_kind::file;
    throw invalid_parameter("unknown source '" + std::string(text) + "'");
}

std::size_t workers_from_environment()
{
    return env_size("SPECTREE_WORKERS", 1);
}

std::size_t cap_from_environment()
{
    return env_size("SPECTREE_CAP_N", 8);
}

source_batch materialize_source(const graph_source& source, std::size_t n, std::size_t k)
{
    source_batch batch;
    switch (source.kind) {
    case source_kind::exhaustive:
        batch.graphs = enumerate_graphs(n, source.cap_n);
        break;
    case source_kind::random: {
        if (!(source.edge_probability >= 0.0 && source.edge_probability <= 1.0))
            throw invalid_parameter("edge probability must lie in [0, 1]");
        std::mt19937_64 rng(source.seed);
        batch.graphs.reserve(source.count);
        for (std::size_t c = 0; c < source.count; ++c) {
            graph g(n);
            for (vertex i = 0; i < n; ++i)
                for (vertex j = i + 1; j < n; ++j)
                    if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < source.edge_probability)
                        g.add_edge(i, j);
            batch.graphs.push_back(std::move(g));
        }
        break;
    }
    case source_kind::perturbation: {
        if (source.edits < 1 || source.edits > 3)
            throw invalid_parameter("perturbation edits must be 1, 2 or 3");
        const graph base = source.plus_base ? split_plus_graph(n, k) : split_graph(n, k);
        std::mt19937_64 rng(source.seed);
        std::uniform_int_distribution<vertex> pick(0, n - 1);
        std::set<std::vector<std::uint64_t>> seen;
        const std::size_t max_attempts = 50 * source.count + 100;
        for (std::size_t attempt = 0; attempt < max_attempts && batch.graphs.size() < source.count; ++attempt) {
            graph g = base;
            std::set<edge> toggled;
            while (toggled.size() < source.edits) {
                vertex u = pick(rng), v = pick(rng);
                if (u == v)
                    continue;
                toggled.insert({std::min(u, v), std::max(u, v)});
            }
            for (auto [u, v] : toggled)
                g.toggle_edge(u, v);
            if (seen.insert(certificate(g)).second)
                batch.graphs.push_back(std::move(g));
        }
        if (batch.graphs.size() < source.count)
            batch.shortfall = "source exhausted: " + std::to_string(batch.graphs.size()) + " distinct perturbations of " +
                              std::to_string(source.count) + " requested";
        break;
    }
    case source_kind::file: {
        batch.graphs = read_graph6_file(source.path);
        for (std::size_t i = 0; i < batch.graphs.size(); ++i)
            if (batch.graphs[i].order() != n)
                throw precondition_error(source.path + ": graph on line " + std::to_string(i + 1) + " has order " +
                                         std::to_string(batch.graphs[i].order()) + ", expected " + std::to_string(n));
        break;
    }
    }
    return batch;
}

threshold_value threshold_mu(campaign_mode mode, std::size_t n, std::size_t k)
{
    if (mode != campaign_mode::conjecture_b)
        return {split_mu_closed_form(n, k), "closed-form"};
    auto est = spectral_radius(split_plus_graph(n, k), 1e-10);
    return {est.value, std::string(to_string(est.method))};
}

std::vector<star_pattern> campaign_family(campaign_mode mode, std::size_t k)
{
    switch (mode) {
    case campaign_mode::theorem1:
        return family_set(k, family_kind::t_script);
    case campaign_mode::theorem2:
        return {make_named_tree(named_tree::t4, k), make_named_tree(named_tree::t5, k)};
    case campaign_mode::theorem3:
        return {make_named_tree(named_tree::t2, k), make_named_tree(named_tree::t3, k)};
    case campaign_mode::conjecture_b:
        return family_set(k, family_kind::all);
    }
    return {};
}

std::size_t advisory_min_k(campaign_mode mode)
{
    switch (mode) {
    case campaign_mode::theorem1:
        return 8;
    case campaign_mode::theorem2:
        return 4;
    case campaign_mode::theorem3:
        return 3;
    case campaign_mode::conjecture_b:
        return 2;
    }
    return 2;
}

verification_record evaluate_graph(const campaign_config& config, const std::vector<star_pattern>& family,
                                   const threshold_value& threshold, std::size_t graph_id, const graph& g)
{
    verification_record r;
    r.graph_id = graph_id;
    r.graph6 = encode_graph6(g);
    r.n = config.n;
    r.k = config.k;
    r.threshold = threshold.value;

    std::vector<vertex> best_component;
    for (auto& comp : connected_components(g)) {
        if (best_component.empty())
            best_component = comp;
        if (comp.size() < 2)
            continue;
        double mu = spectral_radius(g.induced(comp)).value;
        if (mu > r.mu || best_component.size() < 2) {
            r.mu = mu;
            best_component = comp;
        }
    }
    r.component_order = best_component.size();
    r.meets_threshold = r.mu >= threshold.value - boundary_slack;
    r.boundary_hit = std::abs(r.mu - threshold.value) <= boundary_slack;
    switch (config.mode) {
    case campaign_mode::theorem1:
    case campaign_mode::theorem3:
        r.is_excluded_extremal = is_isomorphic_to_split(g, config.k);
        break;
    case campaign_mode::conjecture_b:
        r.is_excluded_extremal = is_isomorphic_to_split_plus(g, config.k);
        break;
    case campaign_mode::theorem2:
        break;
    }
    if (!r.meets_threshold)
        return r;

    std::vector<star_pattern> missing;
    for (const auto& tree : family) {
        tree_verdict v{tree, tree_status::missing, std::nullopt};
        if (auto e = contains_diam4_tree(g, tree)) {
            std::string why;
            if (!is_valid_embedding(g, tree, *e, &why))
                throw defect_error("graph " + std::to_string(graph_id) + ": invalid witness for tree " + tree.to_string() + ": " + why);
            v.status = tree_status::found;
            v.witness = e->to_string();
        } else {
            missing.push_back(tree);
        }
        r.per_tree.push_back(std::move(v));
    }
    if (r.is_excluded_extremal || missing.empty())
        return r;

    std::optional<vertex> cert_vertex;
    std::optional<std::int64_t> cert_value;
    if (best_component.size() >= 2) {
        const auto ki = static_cast<std::int64_t>(config.k);
        const auto ni = static_cast<std::int64_t>(config.n);
        auto cert = lemma1_certificate(g.induced(best_component), ki - 1, ki * (ni - ki));
        for (vertex j = 0; j < best_component.size(); ++j)
            if (cert.column_sums[j] >= 0) {
                cert_vertex = best_component[j];
                cert_value = cert.column_sums[j];
                break;
            }
    }
    for (const auto& tree : missing) {
        if (brute_force_contains(g, pattern_to_graph(tree)))
            throw defect_error("graph " + std::to_string(graph_id) + " (" + r.graph6 + "): brute force finds tree " +
                               tree.to_string() + " that the containment checker reported missing");
        r.anomalies.push_back({tree, true, cert_vertex, cert_value});
    }
    return r;
}

campaign_result run_campaign(const campaign_config& config, const std::vector<graph>& graphs)
{
    if (config.k < 2)
        throw invalid_parameter("campaigns need k >= 2 (got " + std::to_string(config.k) + ")");
    if (2 * config.k + 3 > config.n)
        throw invalid_parameter("campaigns need 2k+3 <= n (got n=" + std::to_string(config.n) + ", k=" + std::to_string(config.k) + ")");
    const auto started = std::chrono::steady_clock::now();

    campaign_result result;
    if (config.k < advisory_min_k(config.mode))
        result.warnings.push_back("k=" + std::to_string(config.k) + " is below " + std::to_string(advisory_min_k(config.mode)) +
                                  ", the advisory minimum for mode " + std::string(to_string(config.mode)) +
                                  "; records are exploratory");
    result.threshold = threshold_mu(config.mode, config.n, config.k);
    const auto family = campaign_family(config.mode, config.k);

    result.records.resize(graphs.size());
    std::vector<std::exception_ptr> failures(graphs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < graphs.size(); i = next++) {
            try {
                result.records[i] = evaluate_graph(config, family, result.threshold, i, graphs[i]);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    const std::size_t workers = std::max<std::size_t>(1, std::min(config.workers, graphs.size()));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }
    for (auto& f : failures)
        if (f)
            std::rethrow_exception(f);

    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

campaign_result run_campaign(const campaign_config& config, const graph_source& source)
{
    if (source.kind == source_kind::exhaustive && config.n > source.cap_n)
        throw resource_error("exhaustive source capped at n <= " + std::to_string(source.cap_n));
    auto batch = materialize_source(source, config.n, config.k);
    auto result = run_campaign(config, batch.graphs);
    result.terminal_status = batch.shortfall;
    return result;
}

report_format parse_report_format(std::string_view text)
{
    if (text == "jsonl")
        return report_format::jsonl;
    if (text == "csv")
        return report_format::csv;
    throw invalid_parameter("unknown report format '" + std::string(text) + "'");
}

std::string record_to_jsonl(const verification_record& r)
{
    using json = nlohmann::ordered_json;
    json j;
    j["graph_id"] = r.graph_id;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["k"] = r.k;
    j["mu"] = r.mu;
    j["threshold"] = r.threshold;
    j["meets_threshold"] = r.meets_threshold;
    j["boundary_hit"] = r.boundary_hit;
    j["is_excluded_extremal"] = r.is_excluded_extremal;
    j["component_order"] = r.component_order;
    j["per_tree"] = json::array();
    for (const auto& v : r.per_tree) {
        json t;
        t["tree"] = v.tree.to_string();
        t["status"] = v.status == tree_status::found ? "found" : "missing";
        if (v.witness)
            t["witness"] = *v.witness;
        j["per_tree"].push_back(std::move(t));
    }
    j["anomalies"] = json::array();
    for (const auto& a : r.anomalies) {
        json t;
        t["tree"] = a.tree.to_string();
        t["brute_force_confirmed"] = a.brute_force_confirmed;
        t["certificate_vertex"] = a.certificate_vertex ? json(*a.certificate_vertex) : json(nullptr);
        t["certificate_value"] = a.certificate_value ? json(*a.certificate_value) : json(nullptr);
        j["anomalies"].push_back(std::move(t));
    }
    return j.dump();
}

std::string csv_header()
{
    return "graph_id,graph6,n,k,mu,threshold,meets_threshold,boundary_hit,is_excluded_extremal,component_order,missing,anomaly_count";
}

namespace {

std::string csv_quote(const std::string& field)
{
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out.push_back('"');
        out.push_back(c);
    }
    return out + "\"";
}

} // namespace

std::string record_to_csv(const verification_record& r)
{
    std::string missing;
    for (const auto& v : r.per_tree)
        if (v.status == tree_status::missing)
            missing += (missing.empty() ? "" : ";") + v.tree.to_string();
    auto flag = [](bool b) { return b ? "true" : "false"; };
    std::string line;
    line += std::to_string(r.graph_id) + ",";
    line += csv_quote(r.graph6) + ",";
    line += std::to_string(r.n) + "," + std::to_string(r.k) + ",";
    line += nlohmann::json(r.mu).dump() + "," + nlohmann::json(r.threshold).dump() + ",";
    line += std::string(flag(r.meets_threshold)) + "," + flag(r.boundary_hit) + "," + flag(r.is_excluded_extremal) + ",";
    line += std::to_string(r.component_order) + ",";
    line += csv_quote(missing) + ",";
    line += std::to_string(r.anomalies.size());
    return line;
}

void write_report(std::ostream& out, const campaign_result& result, report_format format)
{
    if (format == report_format::csv) {
        out << csv_header() << '\n';
        for (const auto& r : result.records)
            out << record_to_csv(r) << '\n';
        return;
    }
    for (const auto& r : result.records)
        out << record_to_jsonl(r) << '\n';
    if (result.terminal_status) {
        nlohmann::ordered_json status;
        status["status"] = "incomplete";
        status["reason"] = *result.terminal_status;
        status["records"] = result.records.size();
        out << status.dump() << '\n';
    }
}

report_summary summarize(const campaign_result& result)
{
    report_summary s;
    s.records = result.records.size();
    s.wall_seconds = result.wall_seconds;
    for (const auto& r : result.records) {
        s.meeting_threshold += r.meets_threshold ? 1 : 0;
        s.anomalous_records += r.anomalies.empty() ? 0 : 1;
        s.anomaly_count += r.anomalies.size();
    }
    return s;
}

report_summary write_report(const campaign_result& result, report_format format, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw error("cannot open report file '" + path + "' for writing");
    write_report(out, result, format);
    out.flush();
    if (!out)
        throw error("write to report file '" + path + "' failed");
    return summarize(result);
}

} // namespace spectree
