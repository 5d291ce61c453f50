#pragma once

#include "spectree/graph.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace spectree {

enum class spectral_method { power, dense };

std::string_view to_string(spectral_method method);

struct spectral_estimate {
    double value = 0.0;
    /// ||Ax - value·x||_inf with ||x||_inf = 1 for the power method; the size
    /// of the last Newton correction for the dense method.
    double residual = 0.0;
    std::size_t iterations = 0;
    spectral_method method = spectral_method::dense;
};

struct spectral_options {
    double tolerance = 1e-10;
    std::size_t max_iterations = 1'000'000;
    /// Components with at most this many vertices use the characteristic polynomial.
    std::size_t dense_cutoff = 12;
};

/// Largest adjacency eigenvalue. Each component is handled separately (the
/// result is the maximum over components): small ones through the exact
/// characteristic polynomial, larger ones by power iteration on A + I
/// from the all-ones vector.
/// Throws numerical_failure (carrying the best estimate) if the iteration cap is hit.
spectral_estimate spectral_radius(const graph& g, const spectral_options& options);
spectral_estimate spectral_radius(const graph& g, double tolerance = 1e-10);

/// Power iteration only, on the whole graph.
spectral_estimate power_iteration(const graph& g, const spectral_options& options);

/// Coefficients c_0..c_n of det(xI - A), lowest degree first (exact,
/// Faddeev–LeVerrier). Throws numerical_failure on 64-bit overflow.
std::vector<std::int64_t> characteristic_polynomial(const graph& g);

/// Largest root of x^2 - a x - b.
double quadratic_largest_root(double a, double b);

/// μ(S_{n,k}) = (k - 1 + sqrt((k-1)^2 + 4k(n-k))) / 2.
double split_mu_closed_form(std::size_t n, std::size_t k);

/// Column sums of B = A^2 - aA - bI together with the verdicts they certify.
struct bound_certificate {
    std::int64_t a = 0;
    std::int64_t b = 0;
    /// Largest root of x^2 - a x - b.
    double mu_prime = 0.0;
    std::vector<std::int64_t> column_sums;
    /// All B_j <= 0: μ(G) <= mu_prime.
    bool all_nonpositive = false;
    /// All B_j == 0: μ(G) == mu_prime.
    bool all_zero = false;
    /// Vertices with B_j > 0 and their sums.
    std::vector<std::pair<vertex, std::int64_t>> violators;
};

/// Requires a connected graph (irreducible adjacency matrix) and a, b >= 0;
/// throws precondition_error naming the components otherwise.
bound_certificate lemma1_certificate(const graph& g, std::int64_t a, std::int64_t b);

/// Smallest vertex u with B_u >= 0, if any.
std::optional<vertex> certificate_vertex(const graph& g, std::int64_t a, std::int64_t b);

/// Both routes to B_u for f(x) = x^2 - (k-1)x - k(n-k): the column sum of the
/// explicit matrix A^2 - (k-1)A - k(n-k)I, and the identity through degrees in
/// the auxiliary graph L_u: Σ_{x∈N^1(u)} d_{L_u}(x) - (k-2) d(u) - k(n-k).
struct eq1_routes {
    std::int64_t matrix_bu = 0;
    std::int64_t formula_bu = 0;
};

eq1_routes check_eq1_identity(const graph& g, vertex u, std::size_t k);

} // namespace spectree
