#include "gk/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "gk/errors.hpp"

namespace gk {

u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<__uint128_t>(a) * b) % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; i++) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;  // a proves n composite
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        s++;
    }
    // this witness set is deterministic below 3.3e24, covering all u64
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

u64 Factorization::value() const {
    u64 v = 1;
    for (auto& [p, e] : factors)
        for (int i = 0; i < e; i++) v *= p;
    return v;
}

int Factorization::exponent_of(u64 p) const {
    for (auto& [q, e] : factors)
        if (q == p) return e;
    return 0;
}

std::vector<u64> Factorization::primes() const {
    std::vector<u64> out;
    out.reserve(factors.size());
    for (auto& [p, e] : factors) out.push_back(p);
    return out;
}

namespace {

// Brent's cycle variant of Pollard rho.  pre: n composite, odd, no factor <= 1e6.
u64 pollard_rho(u64 n) {
    for (u64 c = 1;; c++) {
        auto f = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
        u64 x = 2, y = 2, d = 1;
        u64 q = 1;
        int lam = 1;
        while (d == 1) {
            x = y;
            for (int i = 0; i < lam; i++) y = f(y);
            int k = 0;
            while (k < lam && d == 1) {
                u64 ys = y;
                int lim = std::min(128, lam - k);
                for (int i = 0; i < lim; i++) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
                k += lim;
                if (d == n) {
                    // backtrack one step at a time
                    d = 1;
                    y = ys;
                    do {
                        y = f(y);
                        d = std::gcd(x > y ? x - y : y - x, n);
                    } while (d == 1);
                    break;
                }
            }
            lam *= 2;
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

Factorization factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
    Factorization f;
    for (u64 p = 2; p <= 1'000'000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            e++;
        }
        f.factors.emplace_back(p, e);
    }
    if (n > 1) {
        std::vector<u64> rest;
        factor_rec(n, rest);
        std::sort(rest.begin(), rest.end());
        for (size_t i = 0; i < rest.size();) {
            size_t j = i;
            while (j < rest.size() && rest[j] == rest[i]) j++;
            f.factors.emplace_back(rest[i], static_cast<int>(j - i));
            i = j;
        }
    }
    return f;
}

std::vector<u64> divisors(u64 n) {
    Factorization f = factorize(n);
    std::vector<u64> out{1};
    for (auto& [p, e] : f.factors) {
        size_t sz = out.size();
        u64 pe = 1;
        for (int i = 0; i < e; i++) {
            pe *= p;
            for (size_t j = 0; j < sz; j++) out.push_back(out[j] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_nth_power_free(u64 n, int e) {
    if (n == 0 || e < 1) throw std::invalid_argument("is_nth_power_free: need n >= 1, e >= 1");
    if (e == 1) return n == 1;
    for (auto& [p, k] : factorize(n).factors)
        if (k >= e) return false;
    return true;
}

std::vector<u64> first_primes(int k) {
    std::vector<u64> out;
    for (u64 c = 2; static_cast<int>(out.size()) < k; c++)
        if (is_prime(c)) out.push_back(c);
    return out;
}

int count_primes_below(u64 n, int cap) {
    int count = 0;
    for (u64 c = 2; c < n && count < cap; c++)
        if (is_prime(c)) count++;
    return count;
}

u64 dirichlet_prime(u64 modulus, u64 residue, const std::vector<u64>& avoid, u64 lower) {
    if (modulus == 0) throw std::invalid_argument("dirichlet_prime: modulus must be >= 1");
    residue %= modulus;
    if (modulus > 1 && std::gcd(residue, modulus) != 1)
        throw std::invalid_argument("dirichlet_prime: residue not coprime to modulus");
    u64 cand = residue;
    if (cand <= lower) cand += ((lower - cand) / modulus + 1) * modulus;
    for (; cand <= kDirichletSearchBound; cand += modulus) {
        if (!is_prime(cand)) continue;
        if (std::find(avoid.begin(), avoid.end(), cand) != avoid.end()) continue;
        return cand;
    }
    throw BoundExhaustedError("dirichlet_prime: no prime = " + std::to_string(residue) + " (mod " +
                              std::to_string(modulus) + ") below " +
                              std::to_string(kDirichletSearchBound));
}

u64 unit_of_order(u64 p, u64 q) {
    if (!is_prime(p) || !is_prime(q) || (q - 1) % p != 0)
        throw std::invalid_argument("unit_of_order: need primes with p | q-1");
    for (u64 g = 2; g < q; g++) {
        u64 a = pow_mod(g, (q - 1) / p, q);
        if (a != 1) return a;  // order divides prime p and is not 1
    }
    throw std::logic_error("unit_of_order: no unit found");
}

std::optional<PslProfile> psl2_cubefree_profile(u64 q) {
    if (q < 5 || !is_prime(q)) return std::nullopt;
    u64 r = q % 8;
    if (r != 3 && r != 5) return std::nullopt;
    if (!is_nth_power_free(q - 1, 3) || !is_nth_power_free(q + 1, 3)) return std::nullopt;
    PslProfile prof;
    prof.q = q;
    prof.m = factorize((q - 1) / 2).distinct_prime_count();
    prof.n = factorize((q + 1) / 2).distinct_prime_count();
    return prof;
}

std::vector<PslProfile> psl2_profiles_upto(u64 bound) {
    std::vector<PslProfile> out;
    for (u64 q = 5; q <= bound; q += 2) {
        if (auto p = psl2_cubefree_profile(q)) out.push_back(*p);
    }
    return out;
}

}  // namespace gk
