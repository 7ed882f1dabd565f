#ifndef HURWITZ_BIGINT_HPP
#define HURWITZ_BIGINT_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hurwitz {

using BigInt = boost::multiprecision::cpp_int;

/// Exact C(n, k). Throws DomainError when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Row n of Pascal's triangle, C(n, 0) .. C(n, n).
std::vector<BigInt> binomial_row(std::uint64_t n);

/// Residue of k modulo m in [0, m). m must be positive.
std::uint64_t mod_reduce(const BigInt& k, std::uint64_t m);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// lcm with 0 absorbing (lcm(0, x) = 0, used for characteristics).
std::uint64_t lcm_char(std::uint64_t a, std::uint64_t b);

bool is_prime(std::uint64_t n);

}  // namespace hurwitz

#endif  // HURWITZ_BIGINT_HPP
