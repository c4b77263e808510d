#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace gk {

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);

// Deterministic for all 64-bit inputs (fixed Miller-Rabin witness set).
bool is_prime(u64 n);

struct Factorization {
    // ascending primes, exponents >= 1
    std::vector<std::pair<u64, int>> factors;

    u64 value() const;
    int exponent_of(u64 p) const;
    std::vector<u64> primes() const;
    int distinct_prime_count() const { return static_cast<int>(factors.size()); }
};

// pre: n >= 1.  factorize(1) has no factors.
Factorization factorize(u64 n);

// Sorted list of all divisors of n (including 1 and n).
std::vector<u64> divisors(u64 n);

// True iff no prime divides n to the e-th power.  pre: n >= 1, e >= 1.
bool is_nth_power_free(u64 n, int e);

// First k primes (2, 3, 5, ...).
std::vector<u64> first_primes(int k);

// Number of primes strictly below n, capped at `cap` (the scan stops once cap
// many primes were seen; callers never need more than a graph's vertex count).
int count_primes_below(u64 n, int cap);

inline constexpr u64 kDirichletSearchBound = 1'000'000'000;

// Smallest prime p > lower with p = residue (mod modulus) and p not in avoid.
// pre: modulus >= 1; gcd(residue, modulus) == 1 unless modulus == 1.
// Throws BoundExhaustedError past kDirichletSearchBound.
u64 dirichlet_prime(u64 modulus, u64 residue, const std::vector<u64>& avoid, u64 lower);

// A multiplicative unit of order exactly p modulo q.
// pre: p, q prime, p divides q - 1.
u64 unit_of_order(u64 p, u64 q);

struct PslProfile {
    u64 q = 0;
    int m = 0;  // distinct primes of (q-1)/2
    int n = 0;  // distinct primes of (q+1)/2
};

// Present iff q is a prime >= 5 with q = 3 or 5 (mod 8) and both q-1 and q+1
// cube-free.  The (m, n) side split fixes (q-1)/2 -> m as a convention;
// consumers match {m, n} as a multiset.
std::optional<PslProfile> psl2_cubefree_profile(u64 q);

// All profiles with q <= bound, ascending q.
std::vector<PslProfile> psl2_profiles_upto(u64 bound);

}  // namespace gk
