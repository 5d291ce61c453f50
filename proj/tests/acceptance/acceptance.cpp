// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
// SPECTREE_ACCEPTANCE_TIER=reduced limits the containment sweep to n <= 7.

#include "oracles.hpp"
#include "spectree/campaign.hpp"
#include "spectree/canonical.hpp"
#include "spectree/embedding.hpp"
#include "spectree/enumerate.hpp"
#include "spectree/errors.hpp"
#include "spectree/spectral.hpp"
#include "spectree/trees.hpp"
#include "spectree/turan.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <sys/wait.h>

using namespace spectree;

namespace {

struct outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void run(int id, const std::string& title, double budget_seconds, const std::function<outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > budget_seconds) {
        o.pass = false;
        o.detail += "; over time budget of " + std::to_string(static_cast<int>(budget_seconds)) + " s";
    }
    if (!o.pass)
        ++failures;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f s", secs);
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title << "  [" << o.detail << "; " << buf
              << "]" << std::endl;
}

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::vector<graph> connected_graphs_up_to(std::size_t n_max)
{
    std::vector<graph> out;
    for (std::size_t n = 1; n <= n_max; ++n)
        for (const auto& g : enumerate_graphs(n))
            if (is_connected(g))
                out.push_back(g);
    return out;
}

graph random_graph(std::size_t n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    graph g(n);
    for (vertex i = 0; i < n; ++i)
        for (vertex j = i + 1; j < n; ++j)
            if (coin(rng))
                g.add_edge(i, j);
    return g;
}

std::set<std::string> pattern_codes(const std::vector<star_pattern>& patterns)
{
    std::set<std::string> out;
    for (const auto& p : patterns)
        out.insert(oracle::tree_code(pattern_to_graph(p)));
    return out;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

outcome criterion1()
{
    double worst = 0.0;
    std::size_t cases = 0;
    for (std::size_t n = 3; n <= 40; ++n)
        for (std::size_t k = 2; k < n; ++k) {
            const double km1 = static_cast<double>(k) - 1.0;
            const double closed = (km1 + std::sqrt(km1 * km1 + 4.0 * static_cast<double>(k * (n - k)))) / 2.0;
            worst = std::max(worst, std::abs(spectral_radius(split_graph(n, k)).value - closed));
            ++cases;
        }
    return {worst <= 1e-9, std::to_string(cases) + " (n,k) pairs, max |error| " + num(worst) + " <= 1e-9"};
}

outcome criterion2()
{
    std::size_t cases = 0, zero = 0;
    for (std::size_t n = 3; n <= 20; ++n)
        for (std::size_t k = 2; k < n; ++k) {
            ++cases;
            const auto ki = static_cast<std::int64_t>(k);
            if (lemma1_certificate(split_graph(n, k), ki - 1, ki * static_cast<std::int64_t>(n - k)).all_zero)
                ++zero;
        }
    return {zero == cases, std::to_string(zero) + "/" + std::to_string(cases) + " certificates all-zero"};
}

outcome criterion3()
{
    const double slack = 2e-9;
    std::size_t graphs = 0, bounded = 0, equal = 0, violations = 0;
    for (const auto& g : connected_graphs_up_to(7)) {
        ++graphs;
        const double mu = spectral_radius(g).value;
        for (std::int64_t a = 1; a <= 4; ++a)
            for (std::int64_t b = 1; b <= 20; ++b) {
                auto c = lemma1_certificate(g, a, b);
                if (c.all_nonpositive) {
                    ++bounded;
                    if (mu > c.mu_prime + slack)
                        ++violations;
                }
                if (c.all_zero) {
                    ++equal;
                    if (std::abs(mu - c.mu_prime) > slack)
                        ++violations;
                }
            }
    }
    return {violations == 0, std::to_string(graphs) + " connected graphs, " + std::to_string(bounded) + " upper-bound and " +
                                 std::to_string(equal) + " equality verdicts, " + std::to_string(violations) + " violations"};
}

outcome criterion4()
{
    std::mt19937_64 rng(20240401);
    std::size_t mismatches = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t n = 2 + rng() % 29;
        const double p = static_cast<double>(rng() % 1000) / 1000.0;
        auto g = random_graph(n, p, rng);
        const vertex u = rng() % n;
        const std::size_t k = 1 + rng() % (n - 1);
        auto r = check_eq1_identity(g, u, k);
        if (r.matrix_bu != r.formula_bu)
            ++mismatches;
    }
    return {mismatches == 0, "10000 random triples, " + std::to_string(mismatches) + " mismatches"};
}

outcome criterion5()
{
    outcome o;
    // The level-sequence oracle is first tied to the Prüfer oracle where both are feasible.
    for (std::size_t t = 1; t <= 9; ++t)
        if (oracle::level_sequence_tree_codes(t, 4) != oracle::prufer_tree_codes(t, 4)) {
            o.pass = false;
            o.detail += "oracles disagree at t=" + std::to_string(t) + "; ";
        }
    for (std::size_t k = 2; k <= 6; ++k) {
        const std::size_t t = 2 * k + 3;
        auto patterns = enumerate_diam4_trees(t);
        auto expected = t <= 9 ? oracle::prufer_tree_codes(t, 4) : oracle::level_sequence_tree_codes(t, 4);
        const bool same = patterns.size() == expected.size() && pattern_codes(patterns) == expected;

        std::size_t top = 0, next = 0;
        bool top_ok = true, next_ok = true;
        std::set<named_tree> names;
        for (const auto& p : patterns) {
            auto c = classify(p);
            if (c.p_prime == k + 1) {
                ++top;
                top_ok = top_ok && isomorphic(pattern_to_graph(p), pattern_to_graph(make_named_tree(named_tree::s22, k)));
            }
            if (c.p_prime == k) {
                ++next;
                if (!c.name) {
                    next_ok = false;
                    continue;
                }
                names.insert(*c.name);
                std::size_t ep = 0, epp = 0, ee = 0;
                switch (*c.name) {
                case named_tree::t2:
                    ep = k + 2, epp = k, ee = k;
                    break;
                case named_tree::t3:
                    ep = k + 1, epp = k, ee = k + 1;
                    break;
                case named_tree::t4:
                case named_tree::t5:
                    ep = k, epp = k, ee = k + 2;
                    break;
                case named_tree::s22:
                    next_ok = false;
                    break;
                }
                next_ok = next_ok && c.p == ep && c.p_prime == epp && c.forest_edges == ee;
            }
        }
        next_ok = next_ok && names.size() == 4;
        const bool ok = same && top == 1 && top_ok && next == 4 && next_ok;
        o.pass = o.pass && ok;
        o.detail += "k=" + std::to_string(k) + ": " + std::to_string(patterns.size()) + " trees" + (ok ? "" : " MISMATCH") +
                    (k < 6 ? ", " : "");
    }
    return o;
}

outcome criterion6(bool reduced)
{
    std::vector<star_pattern> patterns;
    for (std::size_t t = 1; t <= 7; ++t)
        for (auto& p : enumerate_diam4_trees(t))
            patterns.push_back(p);
    const std::size_t n_max = reduced ? 7 : 8;
    std::size_t graphs = 0, checks = 0, disagreements = 0, invalid = 0;
    for (std::size_t n = 1; n <= n_max; ++n)
        for (const auto& g : enumerate_graphs(n)) {
            ++graphs;
            for (const auto& p : patterns) {
                if (p.order() > n)
                    continue;
                ++checks;
                auto e = contains_diam4_tree(g, p);
                const bool brute = brute_force_contains(g, pattern_to_graph(p), brute_force_options{false});
                if (e.has_value() != brute)
                    ++disagreements;
                if (e && !is_valid_embedding(g, p, *e))
                    ++invalid;
            }
        }
    return {disagreements == 0 && invalid == 0,
            std::string(reduced ? "reduced tier n<=7: " : "full tier n<=8: ") + std::to_string(graphs) + " graphs x " +
                std::to_string(patterns.size()) + " patterns, " + std::to_string(checks) + " checks, " +
                std::to_string(disagreements) + " disagreements, " + std::to_string(invalid) + " invalid witnesses"};
}

outcome criterion7()
{
    std::size_t verdicts = 0, wrong = 0;
    std::string bad;
    auto expect = [&](const graph& g, const star_pattern& p, bool want, const std::string& label) {
        ++verdicts;
        auto e = contains_diam4_tree(g, p);
        const bool fast = e.has_value();
        const bool brute = brute_force_contains(g, pattern_to_graph(p));
        const bool valid = !e || is_valid_embedding(g, p, *e);
        if (fast != want || brute != want || !valid) {
            ++wrong;
            bad += " " + label + "{" + p.to_string() + "}";
        }
    };
    const std::size_t n = 20;
    for (std::size_t k = 2; k <= 5; ++k) {
        const auto s = split_graph(n, k);
        const auto sp = split_plus_graph(n, k);
        const std::string tag = "k=" + std::to_string(k) + ":";
        for (const auto& t : family_set(k, family_kind::t_star))
            expect(s, t, true, tag + "S/T*");
        expect(s, make_named_tree(named_tree::t4, k), true, tag + "S/T4");
        expect(s, make_named_tree(named_tree::t5, k), true, tag + "S/T5");
        expect(s, make_named_tree(named_tree::t2, k), false, tag + "S/T2");
        expect(s, make_named_tree(named_tree::t3, k), false, tag + "S/T3");
        expect(s, make_named_tree(named_tree::s22, k), false, tag + "S/S22");
        expect(sp, make_named_tree(named_tree::t2, k), true, tag + "S+/T2");
        expect(sp, make_named_tree(named_tree::t3, k), true, tag + "S+/T3");
        expect(sp, make_named_tree(named_tree::s22, k), false, tag + "S+/S22");
    }
    return {wrong == 0, std::to_string(verdicts) + " verdicts confirmed by both checkers, " + std::to_string(wrong) + " wrong" + bad};
}

outcome criterion8()
{
    outcome o;
    std::size_t formula_checks = 0, formula_bad = 0;
    for (std::size_t k = 3; k <= 5; ++k)
        for (std::int64_t big_n : {50, 100}) {
            const auto ki = static_cast<std::int64_t>(k);
            // (k-1)N - k^2/2 + k/2, kept integral
            const std::int64_t expected = (ki - 1) * big_n - (ki * ki - ki) / 2;
            std::vector<std::size_t> t3_forest{2};
            t3_forest.insert(t3_forest.end(), k - 1, 1);
            std::vector<std::size_t> t2_forest(k, 1);
            for (const auto& sizes : {t3_forest, t2_forest}) {
                ++formula_checks;
                if (star_forest_turan(static_cast<std::size_t>(big_n), star_forest_spec(sizes)).value != expected)
                    ++formula_bad;
            }
        }

    std::mt19937_64 rng(88);
    std::size_t construction_bad = 0;
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::size_t> sizes(1 + rng() % 4);
        for (auto& s : sizes)
            s = 1 + rng() % 5;
        star_forest_spec f(sizes);
        const std::size_t m = f.order() + rng() % 12;
        auto r = star_forest_turan(m, f);
        auto g = extremal_construction(m, f);
        const bool free = !star_forest_embed_constrained(g, f.sizes(), vertex_set::full(m)).has_value();
        if (!free || static_cast<std::int64_t>(g.edge_count()) != r.value || g.order() != m)
            ++construction_bad;
    }

    // Every star forest of order <= 7 against every host order up to 7.
    std::vector<std::vector<std::size_t>> forests;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t budget, std::size_t cap) {
        if (!cur.empty())
            forests.push_back(cur);
        for (std::size_t s = std::min(cap, budget - 1); s >= 1 && budget >= 2; --s) {
            cur.push_back(s);
            walk(budget - s - 1, s);
            cur.pop_back();
        }
    };
    walk(7, 6);
    std::size_t oracle_cases = 0, below = 0, gaps = 0;
    for (const auto& sizes : forests) {
        star_forest_spec f(sizes);
        for (std::size_t m = f.order(); m <= 7; ++m) {
            ++oracle_cases;
            const auto construction = static_cast<std::int64_t>(extremal_construction(m, f).edge_count());
            const auto exact = brute_force_turan(m, f).value;
            if (exact < construction)
                ++below;
            if (exact != star_forest_turan(m, f).value) {
                ++gaps;
                std::cout << "    small-m deviation: m=" << m << " F={" << f.to_string() << "} formula "
                          << star_forest_turan(m, f).value << " exhaustive " << exact << '\n';
            }
        }
    }
    o.pass = formula_bad == 0 && construction_bad == 0 && below == 0;
    o.detail = std::to_string(formula_checks - formula_bad) + "/" + std::to_string(formula_checks) + " quoted values, " +
               std::to_string(30 - construction_bad) + "/30 constructions certified, " + std::to_string(oracle_cases) +
               " exhaustive cases with " + std::to_string(below) + " below construction (" + std::to_string(gaps) +
               " small-m formula gaps logged)";
    return o;
}

outcome criterion9()
{
    std::mt19937_64 rng(99);
    std::size_t probes = 0, violations = 0, draws = 0;
    while (probes < 1000) {
        ++draws;
        const std::size_t n = 2 + rng() % 11;
        const std::size_t t = 2 + rng() % 5;
        const double p = 0.2 + 0.8 * static_cast<double>(rng() % 1000) / 1000.0;
        auto g = random_graph(n, p, rng);
        auto r = erdos_sos_diam4_check(g, t);
        if (!r.applicable)
            continue;
        ++probes;
        violations += r.missing.empty() ? 0 : 1;
    }
    return {violations == 0, std::to_string(probes) + " graphs above the edge bound (" + std::to_string(draws) + " drawn), " +
                                 std::to_string(violations) + " violations"};
}

outcome criterion10()
{
    std::mt19937_64 rng(1010);
    std::size_t ok = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t pp = 2 + rng() % 5;
        std::vector<std::size_t> sizes(pp);
        for (auto& s : sizes)
            s = 1 + rng() % 4;
        std::sort(sizes.begin(), sizes.end(), std::greater<>());
        const std::size_t total = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
        const std::size_t nx = total + rng() % 5, ny = pp + rng() % 4;
        graph g(nx + ny);
        vertex_set x(nx + ny), y(nx + ny);
        for (vertex v = 0; v < nx; ++v)
            x.insert(v);
        for (vertex v = nx; v < nx + ny; ++v)
            y.insert(v);
        std::vector<vertex> ys(ny);
        std::iota(ys.begin(), ys.end(), nx);
        std::shuffle(ys.begin(), ys.end(), rng);
        std::vector<vertex> special(ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(pp));
        std::vector<vertex> xs(nx);
        std::iota(xs.begin(), xs.end(), vertex{0});
        for (vertex yv : ys) {
            std::shuffle(xs.begin(), xs.end(), rng);
            const auto pos = std::find(special.begin(), special.end(), yv);
            std::size_t need = 0;
            if (pos == special.begin())
                need = total;
            else if (pos != special.end())
                need = total - 1;
            const std::size_t deg = need + rng() % (nx - need + 1);
            for (std::size_t j = 0; j < deg; ++j)
                g.add_edge(yv, xs[j]);
        }
        // noise inside X does not matter to the bipartite view
        for (int extra = 0; extra < 3 && nx >= 2; ++extra) {
            vertex a = rng() % nx, b = rng() % nx;
            if (a != b)
                g.add_edge(a, b);
        }
        try {
            auto e = lemma4_greedy_embed(bipartite_view{&g, x, y}, sizes, special);
            bool good = is_valid_star_forest(g, sizes, e, &y);
            for (const auto& s : e.stars)
                for (vertex l : s.leaves)
                    good = good && x.contains(l);
            ok += good ? 1 : 0;
        } catch (const error&) {
        }
    }
    return {ok == 10000, std::to_string(ok) + "/10000 instances embedded and validated"};
}

outcome criterion11()
{
    const std::string cli = SPECTREE_CLI_PATH;
    const std::string base = "acceptance_determinism";
    auto run_cli = [&](int workers, const std::string& out) {
        const std::string cmd = "SPECTREE_WORKERS=" + std::to_string(workers) + " '" + cli +
                                "' verify --mode theorem1 --n 12 --k 2 --source random --count 500 --seed 7 --report '" + out +
                                "' 2>/dev/null";
        return std::system(cmd.c_str());
    };
    const std::string a = base + "_w1a.jsonl", b = base + "_w1b.jsonl", c = base + "_w8.jsonl";
    const int ra = run_cli(1, a), rb = run_cli(1, b), rc = run_cli(8, c);
    const auto sa = slurp(a), sb = slurp(b), sc = slurp(c);
    const std::size_t lines = static_cast<std::size_t>(std::count(sa.begin(), sa.end(), '\n'));
    for (const auto& f : {a, b, c})
        std::remove(f.c_str());
    // exit status 0 or 1 (anomalies recorded) are both normal completions
    auto normal = [](int r) { return r != -1 && WIFEXITED(r) && WEXITSTATUS(r) <= 1; };
    const bool pass = normal(ra) && normal(rb) && normal(rc) && lines == 500 && sa == sb && sa == sc;
    return {pass, std::to_string(lines) + " records; runs " + (sa == sb ? "identical" : "DIFFER") + ", workers 1 vs 8 " +
                      (sa == sc ? "identical" : "DIFFER") + " (" + std::to_string(sa.size()) + " bytes)"};
}

outcome criterion12()
{
    graph_source source;
    source.kind = source_kind::exhaustive;
    source.cap_n = 8;
    campaign_config config{campaign_mode::conjecture_b, 8, 2, 1};
    // A checker disagreement raises defect_error, which fails this criterion.
    auto result = run_campaign(config, source);
    std::size_t anomalous = 0, anomalies = 0, uncertified = 0;
    for (const auto& r : result.records) {
        if (r.anomalies.empty())
            continue;
        ++anomalous;
        for (const auto& a : r.anomalies) {
            ++anomalies;
            if (!a.brute_force_confirmed || !a.certificate_vertex || !a.certificate_value || *a.certificate_value < 0)
                ++uncertified;
        }
    }
    const auto s = summarize(result);
    return {result.records.size() == 12346 && uncertified == 0 && !result.terminal_status,
            std::to_string(result.records.size()) + " graphs, " + std::to_string(s.meeting_threshold) + " at or above threshold, " +
                std::to_string(anomalous) + " anomalous records with " + std::to_string(anomalies) + " anomalies, " +
                std::to_string(uncertified) + " lacking a confirmed certificate, 0 checker disagreements"};
}

} // namespace

int main()
{
    const char* tier = std::getenv("SPECTREE_ACCEPTANCE_TIER");
    const bool reduced = tier && std::string(tier) == "reduced";

    run(1, "closed-form spectral radius of S_{n,k}, 2<=k<n<=40", 5, criterion1);
    run(2, "column-sum equality certificate on S_{n,k}, n<=20", 2, criterion2);
    run(3, "column-sum bound direction, connected graphs n<=7", 300, criterion3);
    run(4, "B_u via matrix and via layer degrees", 30, criterion4);
    run(5, "diameter-4 tree taxonomy, k=2..6", 60, criterion5);
    run(6, "containment checker vs brute force", reduced ? 120 : 1800, [&] { return criterion6(reduced); });
    run(7, "extremal graph spot checks at n=20", 60, criterion7);
    run(8, "star-forest Turan numbers and constructions", 300, criterion8);
    run(9, "trees of order t above the (t-2)n/2 edge bound", 120, criterion9);
    run(10, "greedy bipartite star-forest embedding", 60, criterion10);
    run(11, "campaign output determinism", 120, criterion11);
    run(12, "exhaustive n=8, k=2 conjecture-b campaign", 1800, criterion12);

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
