#pragma once

#include "spectree/graph.hpp"
#include "spectree/spectral.hpp"
#include "spectree/trees.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spectree {

enum class campaign_mode { theorem1, theorem2, theorem3, conjecture_b };

std::string_view to_string(campaign_mode mode);
/// Accepts "theorem1".."theorem3" and "conjecture-b" / "conjecture_b".
campaign_mode parse_campaign_mode(std::string_view text);

enum class source_kind { exhaustive, random, perturbation, file };

std::string_view to_string(source_kind kind);
/// Accepts "exhaustive", "random", "perturb"/"perturbation", "file".
source_kind parse_source_kind(std::string_view text);

struct graph_source {
    source_kind kind = source_kind::random;
    std::size_t count = 0;
    std::uint64_t seed = 0;
    /// Random source: each pair (i, j), i < j, taken in lexicographic order,
    /// is an edge iff (rng() >> 11) * 2^-53 < p, with rng = std::mt19937_64(seed).
    double edge_probability = 0.5;
    /// Perturbation source: start from split(n,k) (plus_base = false) or
    /// split_plus(n,k) and toggle `edits` distinct random pairs, keeping one
    /// graph per isomorphism class.
    bool plus_base = false;
    std::size_t edits = 1;
    std::string path;
    /// Exhaustive source cap on n.
    std::size_t cap_n = 8;
};

struct source_batch {
    std::vector<graph> graphs;
    /// Set when the source produced fewer graphs than requested.
    std::optional<std::string> shortfall;
};

/// Materialises the graphs of a source for order n (k selects the
/// perturbation base). Throws resource_error above the exhaustive cap and
/// parse_error / precondition_error for bad files.
source_batch materialize_source(const graph_source& source, std::size_t n, std::size_t k);

struct threshold_value {
    double value = 0.0;
    /// "closed-form", or the spectral method used.
    std::string method;
};

/// theorem1..theorem3 modes: closed form for μ(split(n,k)); conjecture_b: numerical μ of
/// split_plus(n,k) at tolerance 1e-10.
threshold_value threshold_mu(campaign_mode mode, std::size_t n, std::size_t k);

/// The tree family probed by a mode at parameter k.
std::vector<star_pattern> campaign_family(campaign_mode mode, std::size_t k);

/// Smallest k for which the corresponding statement is claimed.
std::size_t advisory_min_k(campaign_mode mode);

enum class tree_status { found, missing };

struct tree_verdict {
    star_pattern tree;
    tree_status status = tree_status::missing;
    /// Present for found trees.
    std::optional<std::string> witness;
};

struct anomaly {
    star_pattern tree;
    bool brute_force_confirmed = false;
    /// Smallest vertex u (host label) with B_u >= 0 for A^2 - (k-1)A - k(n-k)I
    /// on the component that attains μ, and its column sum.
    std::optional<vertex> certificate_vertex;
    std::optional<std::int64_t> certificate_value;
};

struct verification_record {
    std::size_t graph_id = 0;
    std::string graph6;
    std::size_t n = 0;
    std::size_t k = 0;
    double mu = 0.0;
    double threshold = 0.0;
    bool meets_threshold = false;
    bool boundary_hit = false;
    bool is_excluded_extremal = false;
    /// Order of the component whose spectral radius is μ(G).
    std::size_t component_order = 0;
    /// Filled only when the threshold is met.
    std::vector<tree_verdict> per_tree;
    std::vector<anomaly> anomalies;
};

struct campaign_config {
    campaign_mode mode = campaign_mode::theorem1;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t workers = 1;
};

struct campaign_result {
    threshold_value threshold;
    std::vector<verification_record> records;
    std::vector<std::string> warnings;
    /// Reason the stream ended early, if it did.
    std::optional<std::string> terminal_status;
    /// Elapsed time of the run; reported in summaries, never in record files.
    double wall_seconds = 0.0;
};

/// Evaluates one graph. Throws defect_error when a witness fails validation
/// or the brute-force oracle contradicts a missing verdict.
verification_record evaluate_graph(const campaign_config& config, const std::vector<star_pattern>& family,
                                   const threshold_value& threshold, std::size_t graph_id, const graph& g);

/// Requires k >= 2 and 2k+3 <= n. Records come back in graph_id order
/// regardless of the worker count.
campaign_result run_campaign(const campaign_config& config, const std::vector<graph>& graphs);
campaign_result run_campaign(const campaign_config& config, const graph_source& source);

/// Worker count from SPECTREE_WORKERS (default 1).
std::size_t workers_from_environment();
/// Exhaustive cap from SPECTREE_CAP_N (default 8).
std::size_t cap_from_environment();

enum class report_format { jsonl, csv };

report_format parse_report_format(std::string_view text);

struct report_summary {
    std::size_t records = 0;
    std::size_t meeting_threshold = 0;
    std::size_t anomalous_records = 0;
    std::size_t anomaly_count = 0;
    double wall_seconds = 0.0;
};

/// One line per record (csv adds a header). A jsonl file ends with a
/// status object only when the run stopped early.
void write_report(std::ostream& out, const campaign_result& result, report_format format);
/// Throws spectree::error naming the path on I/O failure.
report_summary write_report(const campaign_result& result, report_format format, const std::string& path);
report_summary summarize(const campaign_result& result);

std::string record_to_jsonl(const verification_record& record);
std::string record_to_csv(const verification_record& record);
std::string csv_header();

} // namespace spectree
