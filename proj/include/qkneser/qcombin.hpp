#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace qkneser {

/// Exact arbitrary-precision integer / rational.  No floating point is used
/// anywhere in these computations; rationals are kept in lowest terms with
/// positive denominator.
using ExactInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

/// [n] = (q^n - 1)/(q - 1) for q >= 2; by convention [n] = n when q = 1.
[[nodiscard]] ExactInt bracket(std::uint32_t n, std::uint32_t q);

/// [n]! = [n][n-1]...[1], with [0]! = 1.
[[nodiscard]] ExactInt q_factorial(std::uint32_t n, std::uint32_t q);

/// Gaussian binomial [v choose k]_q = [v]!/([k]![v-k]!); ordinary binomial
/// at q = 1.  Returns 0 when k > v.  The division is checked to be exact.
[[nodiscard]] ExactInt gauss_binomial(std::uint32_t v, std::uint32_t k, std::uint32_t q);

/// Number of l-dimensional subspaces of F_q^v intersecting a fixed
/// k-dimensional subspace exactly in a fixed j-dimensional subspace of it:
/// q^{(l-j)(k-j)} * [v-k choose l-j]_q.
[[nodiscard]] ExactInt count_meeting(std::uint32_t v, std::uint32_t k, std::uint32_t l,
                                     std::uint32_t j, std::uint32_t q);

/// Upper bound [v-1 choose k-1]_q on independent sets of qK_{v:k} (v >= 2k).
[[nodiscard]] ExactInt independence_bound(std::uint32_t v, std::uint32_t k, std::uint32_t q);

/// Erdos-Ko-Rado bound C(v-t, k-t) on t-intersecting families of k-subsets;
/// requires v >= (k-t+1)(t+1) and throws std::invalid_argument otherwise.
[[nodiscard]] ExactInt ekr_bound(std::uint32_t v, std::uint32_t k, std::uint32_t t);

/// Frankl-Wilson bound max{[v-t choose k-t]_q, [2k-t choose k]_q} on
/// families of k-spaces pairwise intersecting in dimension >= t.
[[nodiscard]] ExactInt frankl_wilson_bound(std::uint32_t v, std::uint32_t k, std::uint32_t t,
                                           std::uint32_t q);

/// Fractional chromatic number [v]/[k] of qK_{v:k} as an exact reduced
/// rational (v/k at q = 1).
[[nodiscard]] ExactRational fractional_chromatic(std::uint32_t v, std::uint32_t k,
                                                 std::uint32_t q);

}  // namespace qkneser
