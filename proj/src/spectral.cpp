#include "spectree/spectral.hpp"

#include "spectree/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace spectree {

std::string_view to_string(spectral_method method)
{
    return method == spectral_method::power ? "power" : "dense";
}

spectral_estimate power_iteration(const graph& g, const spectral_options& options)
{
    if (options.tolerance <= 0)
        throw invalid_parameter("tolerance must be positive");
    const std::size_t n = g.order();
    if (n == 0)
        throw invalid_parameter("spectral radius of the null graph");

    std::vector<std::vector<vertex>> adj(n);
    for (vertex v = 0; v < n; ++v)
        adj[v] = g.neighbors(v);

    std::vector<double> x(n, 1.0), ax(n);
    double estimate = 0.0;
    double residual = 0.0;
    for (std::size_t it = 1; it <= options.max_iterations; ++it) {
        double xx = 0.0, xax = 0.0, xmax = 0.0;
        for (vertex v = 0; v < n; ++v) {
            double sum = 0.0;
            for (vertex w : adj[v])
                sum += x[w];
            ax[v] = sum;
            xx += x[v] * x[v];
            xax += x[v] * sum;
            xmax = std::max(xmax, std::abs(x[v]));
        }
        estimate = xax / xx;
        residual = 0.0;
        for (vertex v = 0; v < n; ++v)
            residual = std::max(residual, std::abs(ax[v] - estimate * x[v]));
        residual /= xmax;
        if (residual <= options.tolerance)
            return {estimate, residual, it, spectral_method::power};

        // Shifted step with A + I keeps bipartite spectra from oscillating.
        double ymax = 0.0;
        for (vertex v = 0; v < n; ++v) {
            x[v] = ax[v] + x[v];
            ymax = std::max(ymax, std::abs(x[v]));
        }
        for (auto& xv : x)
            xv /= ymax;
    }
    throw numerical_failure("power iteration did not reach residual " + std::to_string(options.tolerance) + " within " +
                                std::to_string(options.max_iterations) + " iterations (residual " + std::to_string(residual) + ")",
                            estimate);
}

std::vector<std::int64_t> characteristic_polynomial(const graph& g)
{
    const std::size_t n = g.order();
    std::vector<std::int64_t> coeff(n + 1, 0);
    coeff[n] = 1;
    std::vector<std::int64_t> m(n * n, 0), am(n * n, 0);
    std::vector<std::vector<vertex>> adj(n);
    for (vertex v = 0; v < n; ++v)
        adj[v] = g.neighbors(v);

    auto overflow = [] { throw numerical_failure("characteristic polynomial overflowed 64-bit arithmetic", 0.0); };
    for (std::size_t k = 1; k <= n; ++k) {
        // m <- A·m + c_{n-k+1} I, then am <- A·m.
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::int64_t sum = 0;
                for (vertex w : adj[i])
                    if (__builtin_add_overflow(sum, m[w * n + j], &sum))
                        overflow();
                am[i * n + j] = sum;
            }
        m = am;
        for (std::size_t i = 0; i < n; ++i)
            if (__builtin_add_overflow(m[i * n + i], coeff[n - k + 1], &m[i * n + i]))
                overflow();
        std::int64_t trace = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t diag = 0;
            for (vertex w : adj[i])
                if (__builtin_add_overflow(diag, m[w * n + i], &diag))
                    overflow();
            if (__builtin_add_overflow(trace, diag, &trace))
                overflow();
        }
        coeff[n - k] = -trace / static_cast<std::int64_t>(k);
    }
    return coeff;
}

namespace {

// Newton from above the spectrum converges monotonically to the largest
// root of a real-rooted polynomial.
spectral_estimate dense_largest_root(const graph& g)
{
    auto coeff = characteristic_polynomial(g);
    long double x = static_cast<long double>(g.max_degree()) + 1.0L;
    long double step = 0.0L;
    std::size_t it = 0;
    for (; it < 500; ++it) {
        long double p = 0.0L, dp = 0.0L;
        for (std::size_t i = coeff.size(); i-- > 0;) {
            dp = dp * x + p;
            p = p * x + static_cast<long double>(coeff[i]);
        }
        if (dp == 0.0L)
            break;
        step = p / dp;
        if (step <= 0.0L)
            break;
        x -= step;
        if (step <= 1e-17L * std::max(1.0L, std::abs(x)))
            break;
    }
    return {static_cast<double>(x), static_cast<double>(std::abs(step)), it + 1, spectral_method::dense};
}

} // namespace

spectral_estimate spectral_radius(const graph& g, const spectral_options& options)
{
    if (g.order() == 0)
        throw invalid_parameter("spectral radius of the null graph");
    if (options.tolerance <= 0)
        throw invalid_parameter("tolerance must be positive");

    spectral_estimate best{0.0, 0.0, 0, g.order() <= options.dense_cutoff ? spectral_method::dense : spectral_method::power};
    for (const auto& comp : connected_components(g)) {
        if (comp.size() < 2)
            continue;
        graph h = comp.size() == g.order() ? g : g.induced(comp);
        auto est = comp.size() <= options.dense_cutoff ? dense_largest_root(h) : power_iteration(h, options);
        if (est.value > best.value)
            best = est;
    }
    return best;
}

spectral_estimate spectral_radius(const graph& g, double tolerance)
{
    spectral_options options;
    options.tolerance = tolerance;
    return spectral_radius(g, options);
}

double quadratic_largest_root(double a, double b)
{
    return (a + std::sqrt(a * a + 4.0 * b)) / 2.0;
}

double split_mu_closed_form(std::size_t n, std::size_t k)
{
    if (k < 1 || k >= n)
        throw invalid_parameter("closed form needs 1 <= k < n (got n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
    const double km1 = static_cast<double>(k) - 1.0;
    return (km1 + std::sqrt(km1 * km1 + 4.0 * static_cast<double>(k) * static_cast<double>(n - k))) / 2.0;
}

namespace {

void require_connected(const graph& g)
{
    auto comps = connected_components(g);
    if (comps.size() <= 1)
        return;
    std::string msg = "certificate needs a connected graph; components:";
    for (const auto& c : comps) {
        msg += " {";
        for (std::size_t i = 0; i < c.size(); ++i)
            msg += (i ? "," : "") + std::to_string(c[i]);
        msg += "}";
    }
    throw precondition_error(msg);
}

} // namespace

bound_certificate lemma1_certificate(const graph& g, std::int64_t a, std::int64_t b)
{
    if (a < 0 || b < 0)
        throw invalid_parameter("certificate coefficients must be nonnegative");
    if (g.order() == 0)
        throw invalid_parameter("certificate of the null graph");
    require_connected(g);

    bound_certificate cert;
    cert.a = a;
    cert.b = b;
    cert.mu_prime = quadratic_largest_root(static_cast<double>(a), static_cast<double>(b));
    cert.column_sums.resize(g.order());
    cert.all_nonpositive = true;
    cert.all_zero = true;
    for (vertex j = 0; j < g.order(); ++j) {
        // Column j of A^2 sums to the degree sum over N(j).
        std::int64_t walks = 0;
        for (vertex w : g.neighbors(j))
            walks += static_cast<std::int64_t>(g.degree(w));
        const std::int64_t bj = walks - a * static_cast<std::int64_t>(g.degree(j)) - b;
        cert.column_sums[j] = bj;
        if (bj > 0) {
            cert.all_nonpositive = false;
            cert.violators.emplace_back(j, bj);
        }
        if (bj != 0)
            cert.all_zero = false;
    }
    return cert;
}

std::optional<vertex> certificate_vertex(const graph& g, std::int64_t a, std::int64_t b)
{
    auto cert = lemma1_certificate(g, a, b);
    for (vertex j = 0; j < g.order(); ++j)
        if (cert.column_sums[j] >= 0)
            return j;
    return std::nullopt;
}

eq1_routes check_eq1_identity(const graph& g, vertex u, std::size_t k)
{
    const std::size_t n = g.order();
    if (u >= n)
        throw invalid_parameter("vertex " + std::to_string(u) + " outside graph of order " + std::to_string(n));
    if (k < 1 || k >= n)
        throw invalid_parameter("identity needs 1 <= k < n");
    const auto ki = static_cast<std::int64_t>(k);
    const auto ni = static_cast<std::int64_t>(n);

    std::vector<std::int64_t> a(n * n, 0);
    for (auto [x, y] : g.edges())
        a[x * n + y] = a[y * n + x] = 1;
    std::int64_t a2_col = 0, a_col = 0;
    for (std::size_t i = 0; i < n; ++i) {
        a_col += a[i * n + u];
        for (std::size_t w = 0; w < n; ++w)
            a2_col += a[i * n + w] * a[w * n + u];
    }
    eq1_routes out;
    out.matrix_bu = a2_col - (ki - 1) * a_col - ki * (ni - ki);

    auto lu = build_proof_subgraph(g, u);
    std::int64_t degree_sum = 0;
    for (std::size_t i = 0; i < lu.first_layer_size; ++i)
        degree_sum += static_cast<std::int64_t>(lu.g.degree(i));
    out.formula_bu = degree_sum - (ki - 2) * static_cast<std::int64_t>(g.degree(u)) - ki * (ni - ki);
    return out;
}

} // namespace spectree
