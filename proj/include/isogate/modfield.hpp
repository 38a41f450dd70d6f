#pragma once

// Arithmetic in the prime field F_r for small odd primes r.

#include <compare>
#include <cstdint>
#include <vector>

namespace isogate {

inline constexpr int kMaxModulus = 97;

bool is_prime(std::int64_t n);

/// An odd prime 3 <= r <= 97. Construction validates; the value is immutable.
class PrimeModulus {
public:
    explicit PrimeModulus(int r);

    int value() const noexcept { return r_; }
    operator int() const noexcept { return r_; }

    friend bool operator==(PrimeModulus, PrimeModulus) = default;

private:
    int r_;
};

PrimeModulus make_modulus(int r);

/// Residue in [0, r) tagged with its modulus.
class FieldElement {
public:
    FieldElement(long long value, PrimeModulus r);

    int value() const noexcept { return v_; }
    PrimeModulus modulus() const noexcept { return r_; }

    FieldElement operator+(FieldElement o) const;
    FieldElement operator-(FieldElement o) const;
    FieldElement operator*(FieldElement o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(long long e) const;

    friend bool operator==(FieldElement a, FieldElement b) = default;

private:
    int v_;
    PrimeModulus r_;
};

bool is_square(FieldElement a);
bool is_cube(FieldElement a);

/// -1 when r = 3 mod 4, otherwise the least non-residue >= 2.
FieldElement epsilon(PrimeModulus r);

/// A generator of the cyclic group F_r^x (the least one).
FieldElement primitive_root(PrimeModulus r);

// Raw helpers on ints already reduced mod r, shared by the matrix code.
inline int mod_reduce(long long x, int r) {
    long long m = x % r;
    return static_cast<int>(m < 0 ? m + r : m);
}
int mod_inverse(int a, int r);
int mod_pow(long long a, long long e, int r);

/// Lookup table t[a] = 1 iff a is a nonzero square mod r.
std::vector<std::uint8_t> square_table(int r);

}  // namespace isogate
