#pragma once

// Integer factoring pipeline behind square classes: trial division up to 10^6,
// then Pollard-Brent rho on composite cofactors, with perfect-square detection.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "isogate/rational.hpp"

namespace isogate {

inline constexpr std::uint32_t kTrialDivisionBound = 1'000'000;

/// Coset of (Q^x)^2 in Q^x, represented by its squarefree integer.
class SquareClass {
public:
    explicit SquareClass(mpz_class representative);

    const mpz_class& representative() const noexcept { return rep_; }
    bool is_trivial() const { return rep_ == 1; }
    std::string to_string() const { return rep_.get_str(); }

    friend bool operator==(const SquareClass& a, const SquareClass& b) { return a.rep_ == b.rep_; }
    friend bool operator==(const SquareClass& a, long b) { return a.rep_ == b; }

private:
    mpz_class rep_;
};

struct FactorOptions {
    std::uint32_t trial_bound = kTrialDivisionBound;
    /// Rho is expected to find factors up to about this size; larger stubborn
    /// cofactors that are not perfect squares raise FactorizationIncomplete.
    double rho_factor_cap = 1e12;
};

/// Prime factorization of |n| as (prime, exponent) pairs, ascending.
std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n,
                                                      const FactorOptions& opts = {});

/// The squarefree d with q/d a rational square.
SquareClass squarefree_part(const ExactRational& q, const FactorOptions& opts = {});

/// Primes up to bound (simple sieve, cached for the default bound).
const std::vector<std::uint32_t>& small_primes(std::uint32_t bound = kTrialDivisionBound);

bool is_perfect_square(const mpz_class& n);

}  // namespace isogate
