#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

std::vector<std::int64_t> divisors(std::int64_t n);
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
bool is_prime(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);
int moebius(std::int64_t n);

// sigma_k(n) = sum of d^k over positive divisors d of n.
BigInt divisor_sigma(unsigned k, std::int64_t n);

// Ramanujan sum c_c(m) = sum over d | gcd(c, m) of mu(c/d) d; c_c(0) = phi(c).
std::int64_t ramanujan_sum(std::int64_t c, std::int64_t m);

// B_n with B_1 = -1/2; computed once and memoised behind a lock.
Rational bernoulli(unsigned n);

// Index of Gamma_0(N) in PSL_2(Z): N * prod_{p | N} (1 + 1/p).
std::int64_t gamma0_index(std::int64_t level);

}  // namespace hecke
