#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "unitfrac/errors.hpp"
#include "unitfrac/rational.hpp"

namespace unitfrac {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Strong probable-prime test to base a; n odd, n > 2, a reduced mod n.
inline bool sprp_u64(std::uint64_t n, std::uint64_t a) {
    if (a == 0) return true;
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Deterministic for all n < 2^64 with the first twelve prime bases.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull})
        if (!sprp_u64(n, a % n)) return false;
    return true;
}

inline bool sprp_mpz(const Int& n, const Int& a) {
    if (a <= 1 || a >= n - 1) return true;
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
        if (x == 1) return false;
    }
    return false;
}

inline const std::vector<std::uint32_t>& trial_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        const std::uint32_t limit = 1'000'000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j <= limit; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

}  // namespace detail

// Exact below 2^64 (fixed witness set); above, `rounds` strong tests with
// bases derived deterministically from n, error probability <= 4^-rounds.
// Composite verdicts are always exact.
inline bool is_prime(const Int& n, unsigned rounds = 64) {
    if (rounds < 1) throw InvariantViolation("is_prime rounds must be >= 1");
    if (n < 2) return false;
    if (mpz_fits_ulong_p(n.get_mpz_t())) return detail::is_prime_u64(n.get_ui());

    // n > 2^64: trial division first. Worth extending for huge candidates,
    // where one modular exponentiation costs minutes.
    const auto& tp = detail::trial_primes();
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    const std::uint32_t trial_limit = bits > 2048 ? 1'000'000 : 10'000;
    for (std::uint32_t p : tp) {
        if (p > trial_limit) break;
        if (mpz_fdiv_ui(n.get_mpz_t(), p) == 0) return false;
    }

    // Base 2 first, then deterministically seeded pseudo-random bases so the
    // whole pipeline is reproducible for a fixed round count.
    if (!detail::sprp_mpz(n, 2)) return false;
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(Int(0x9e3779b97f4a7c15ULL) ^ (n % Int("18446744073709551557")));
    for (unsigned i = 1; i < rounds; ++i) {
        Int a = 2 + rng.get_z_range(n - 3);
        if (!detail::sprp_mpz(n, a)) return false;
    }
    return true;
}

// Increasing primes 2, 3, 5, ... via a segmented sieve grown on demand.
// A stream is a plain value: copying it and re-emitting yields identical
// output, and distinct streams never share mutable state.
class PrimeStream {
public:
    // j is 1-based: nth(1) = 2.
    std::uint64_t nth(std::uint64_t j) {
        ensure_count(j);
        return primes_[j - 1];
    }

    std::uint64_t next() { return nth(++cursor_); }

    void reset() { cursor_ = 0; }

    std::uint64_t cursor() const { return cursor_; }

    // Smallest prime strictly greater than x.
    std::uint64_t next_after(std::uint64_t x) {
        std::uint64_t j = 1;
        while (nth(j) <= x) ++j;  // grows the sieve as needed
        return nth(j);
    }

    std::size_t count_below(std::uint64_t bound) {
        extend_to(bound);
        return std::upper_bound(primes_.begin(), primes_.end(), bound ? bound - 1 : 0) -
               primes_.begin();
    }

    void extend_to(std::uint64_t bound) {
        if (bound <= sieved_to_) return;
        if (sieved_to_ < 1024) sieve_base();
        while (sieved_to_ < bound) {
            // cap at sieved_to_^2 so the collected primes always cover sqrt(hi)
            std::uint64_t hi = std::min(bound, sieved_to_ + segment_size);
            if (sieved_to_ < (1u << 21)) hi = std::min(hi, sieved_to_ * sieved_to_);
            sieve_segment(sieved_to_ + 1, hi);
            sieved_to_ = hi;
        }
    }

    void ensure_count(std::uint64_t j) {
        while (primes_.size() < j) {
            // p_j < j (ln j + ln ln j) for j >= 6
            double dj = static_cast<double>(std::max<std::uint64_t>(j, 6));
            auto est = static_cast<std::uint64_t>(dj * (std::log(dj) + std::log(std::log(dj)))) + 16;
            extend_to(std::max({est, sieved_to_ * 2, std::uint64_t(1024)}));
        }
    }

    const std::vector<std::uint64_t>& known() const { return primes_; }

private:
    static constexpr std::uint64_t segment_size = 1u << 21;

    void sieve_base() {
        std::vector<bool> composite(1025, false);
        for (std::uint64_t i = 2; i <= 1024; ++i) {
            if (composite[i]) continue;
            primes_.push_back(i);
            for (std::uint64_t j = i * i; j <= 1024; j += i) composite[j] = true;
        }
        sieved_to_ = 1024;
    }

    void sieve_segment(std::uint64_t lo, std::uint64_t hi) {
        // base primes up to sqrt(hi) are already present: hi <= sieved_to_^2
        std::vector<bool> composite(hi - lo + 1, false);
        for (std::uint64_t p : primes_) {
            if (p * p > hi) break;
            std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
            for (std::uint64_t j = start; j <= hi; j += p) composite[j - lo] = true;
        }
        for (std::uint64_t x = lo; x <= hi; ++x)
            if (!composite[x - lo]) primes_.push_back(x);
    }

    std::vector<std::uint64_t> primes_;
    std::uint64_t sieved_to_ = 0;
    std::uint64_t cursor_ = 0;
};

inline std::uint64_t nth_prime(std::uint64_t j) {
    if (j < 1) throw InvariantViolation("nth_prime index is 1-based");
    static thread_local PrimeStream stream;
    return stream.nth(j);
}

struct ApPrime {
    Int prime;
    Int steps;  // the a with prime = s0 + a*modulus
};

// Smallest prime s0 + a*modulus exceeding lower_bound (Dirichlet guarantees
// one exists when gcd(s0, modulus) = 1; max_steps bounds the work anyway).
inline ApPrime find_prime_in_ap(const Int& s0, const Int& modulus, const Int& lower_bound,
                                std::uint64_t max_steps, unsigned rounds = 64) {
    if (s0 <= 0 || s0 >= modulus)
        throw InvariantViolation("progression start must satisfy 0 < s0 < modulus");
    Int g;
    mpz_gcd(g.get_mpz_t(), s0.get_mpz_t(), modulus.get_mpz_t());
    if (g != 1)
        throw CoprimalityError("gcd(s0, modulus) = " + g.get_str() + ", progression has no primes");
    Int candidate = s0;
    for (std::uint64_t a = 0; a <= max_steps; ++a) {
        if (candidate > lower_bound && is_prime(candidate, rounds))
            return {candidate, Int(static_cast<unsigned long>(a))};
        candidate += modulus;
    }
    throw SearchExhausted(max_steps);
}

}  // namespace unitfrac
