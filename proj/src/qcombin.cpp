#include "qkneser/qcombin.hpp"

#include <stdexcept>
#include <string>

namespace qkneser {

ExactInt bracket(std::uint32_t n, std::uint32_t q) {
  if (q < 1) throw std::invalid_argument("q must be >= 1");
  if (q == 1) return ExactInt(n);
  ExactInt qq(q);
  return (boost::multiprecision::pow(qq, n) - 1) / (qq - 1);
}

ExactInt q_factorial(std::uint32_t n, std::uint32_t q) {
  ExactInt r(1);
  for (std::uint32_t i = 1; i <= n; ++i) r *= bracket(i, q);
  return r;
}

ExactInt gauss_binomial(std::uint32_t v, std::uint32_t k, std::uint32_t q) {
  if (q < 1) throw std::invalid_argument("q must be >= 1");
  if (k > v) return 0;
  ExactInt num = q_factorial(v, q);
  ExactInt den = q_factorial(k, q) * q_factorial(v - k, q);
  ExactInt quot, rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  if (rem != 0) throw std::logic_error("q-factorial division is not exact");
  return quot;
}

ExactInt count_meeting(std::uint32_t v, std::uint32_t k, std::uint32_t l, std::uint32_t j,
                       std::uint32_t q) {
  if (j > k || j > l) throw std::invalid_argument("j must satisfy 0 <= j <= min(k, l)");
  if (k > v || l > v) throw std::invalid_argument("k and l must be at most v");
  if (l - j > v - k)
    throw std::invalid_argument("l - j exceeds v - k; no such subspaces exist");
  ExactInt power = boost::multiprecision::pow(ExactInt(q),
                                              static_cast<unsigned>(l - j) * (k - j));
  return power * gauss_binomial(v - k, l - j, q);
}

ExactInt independence_bound(std::uint32_t v, std::uint32_t k, std::uint32_t q) {
  if (k == 0 || v == 0) throw std::invalid_argument("v and k must be positive");
  return gauss_binomial(v - 1, k - 1, q);
}

ExactInt ekr_bound(std::uint32_t v, std::uint32_t k, std::uint32_t t) {
  if (t == 0 || t > k) throw std::invalid_argument("t must satisfy 1 <= t <= k");
  std::uint64_t threshold = static_cast<std::uint64_t>(k - t + 1) * (t + 1);
  if (v < threshold)
    throw std::invalid_argument("EKR bound requires v >= (k-t+1)(t+1) = " +
                                std::to_string(threshold));
  return gauss_binomial(v - t, k - t, 1);
}

ExactInt frankl_wilson_bound(std::uint32_t v, std::uint32_t k, std::uint32_t t,
                             std::uint32_t q) {
  if (t == 0 || t > k) throw std::invalid_argument("t must satisfy 1 <= t <= k");
  if (v < k) throw std::invalid_argument("v must be at least k");
  ExactInt a = gauss_binomial(v - t, k - t, q);
  ExactInt b = (2 * k >= t) ? gauss_binomial(2 * k - t, k, q) : ExactInt(0);
  return a > b ? a : b;
}

ExactRational fractional_chromatic(std::uint32_t v, std::uint32_t k, std::uint32_t q) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  return ExactRational(bracket(v, q), bracket(k, q));
}

}  // namespace qkneser
