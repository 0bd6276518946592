#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace unitfrac {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// gcd(a, b) != 1 where a unit is required (Bezout solve, progression search).
struct CoprimalityError : Error {
    using Error::Error;
};

// The progression search hit its step cap. Signals the cap, not mathematical
// failure: Dirichlet guarantees a prime exists further out.
struct SearchExhausted : Error {
    std::uint64_t max_steps;
    explicit SearchExhausted(std::uint64_t steps)
        : Error("prime search exhausted after " + std::to_string(steps) + " steps"),
          max_steps(steps) {}
};

// An enumeration request exceeds the configured cap; carries the offending size.
struct TooLarge : Error {
    mpz_class size;
    TooLarge(std::string what, mpz_class n)
        : Error(std::move(what) + " (size " + n.get_str() + ")"), size(std::move(n)) {}
};

struct PeriodTooLarge : Error {
    mpz_class period;
    explicit PeriodTooLarge(mpz_class p)
        : Error("covering period " + p.get_str() + " exceeds limit"), period(std::move(p)) {}
};

// A postcondition that should hold for every valid input failed; indicates a
// bug (or a caller ignoring a documented precondition), never a valid state.
struct InvariantViolation : Error {
    using Error::Error;
};

struct InvalidPartition : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct CertificateCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// First violated certificate condition, with the ledger of checks done so far.
struct CertificateFailure : Error {
    std::string condition;
    std::size_t block_index;  // 1-based; 0 = global condition
    std::vector<CertificateCheck> checks;
    CertificateFailure(const std::string& cond, std::size_t block,
                       std::vector<CertificateCheck> done)
        : Error("certificate condition " + cond + " violated" +
                (block ? " at block " + std::to_string(block) : "")),
          condition(cond), block_index(block), checks(std::move(done)) {}
};

}  // namespace unitfrac
