#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "sspec/matrix.hpp"

namespace sspec {

/// Polynomial over GF(p), coefficients from the constant term upward.
using ModPoly = std::vector<std::uint64_t>;

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
/// Inverse of a modulo prime p; a must be nonzero mod p.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);
std::uint64_t reduce_mod(std::int64_t v, std::uint64_t p);

/// The three largest primes below 2^31.
const std::vector<std::uint64_t>& default_primes();
/// Successive primes below `below`, for retries after disagreement.
std::vector<std::uint64_t> primes_below(std::uint64_t below, std::size_t count);
/// Parses a comma-separated prime list (e.g. an environment override). Every
/// entry must be a prime in (2^16, 2^32); throws InputError otherwise.
std::vector<std::uint64_t> parse_prime_list(std::string_view text);

// All of the following require p prime with 2 < p < 2^32 and throw InputError
// otherwise.

/// Rank over GF(p). By default the elimination runs along the shorter side;
/// `as_given` forces row elimination on m itself (used for cross-checks).
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p, bool as_given = false);
/// Nullity of (M - shift I) over GF(p). M must be square.
std::size_t nullity_mod_p(const IntMatrix& m, std::int64_t shift, std::uint64_t p);
/// det(xI - M) mod p, monic, degree = order. Requires p > order.
ModPoly charpoly_mod_p(const IntMatrix& m, std::uint64_t p);

std::uint64_t poly_eval(const ModPoly& f, std::int64_t x, std::uint64_t p);
/// Exact division of f by (x - root)^mult; returns false (leaving f in an
/// unspecified state) when the division leaves a remainder.
bool poly_divide_root(ModPoly& f, std::int64_t root, std::size_t mult, std::uint64_t p);
/// prod (x - root)^mult mod p.
ModPoly poly_from_roots(const std::vector<std::pair<std::int64_t, std::size_t>>& roots,
                        std::uint64_t p);
ModPoly poly_mul(const ModPoly& a, const ModPoly& b, std::uint64_t p);
ModPoly poly_pow(const ModPoly& a, std::size_t e, std::uint64_t p);
/// Converts integer coefficients (constant term first) to GF(p).
ModPoly poly_from_integers(const std::vector<std::int64_t>& coeffs, std::uint64_t p);

}  // namespace sspec
