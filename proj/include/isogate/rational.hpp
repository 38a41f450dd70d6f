#pragma once

// Arbitrary-precision rationals and the tiny factored-expression syntax used
// for j-invariants on the command line and in data files:
//   "-17*373^3/2^17", "3^3*5*7^5/2^7", "12/5", "-1728"
// Unary minus (ASCII '-' or U+2212) may open the expression or a parenthesized group:
//   "2^18*3^3/(5^13*61^13)"

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace isogate {

class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long long n) : q_(static_cast<long>(n)) {}  // NOLINT(implicit)
    explicit ExactRational(const mpz_class& n) : q_(n) {}
    ExactRational(const mpz_class& num, const mpz_class& den);
    explicit ExactRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    static ExactRational parse(std::string_view text);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& value() const noexcept { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    ExactRational operator+(const ExactRational& o) const { return ExactRational(mpq_class(q_ + o.q_)); }
    ExactRational operator-(const ExactRational& o) const { return ExactRational(mpq_class(q_ - o.q_)); }
    ExactRational operator*(const ExactRational& o) const { return ExactRational(mpq_class(q_ * o.q_)); }
    ExactRational operator/(const ExactRational& o) const;
    ExactRational operator-() const { return ExactRational(mpq_class(-q_)); }
    ExactRational& operator+=(const ExactRational& o) { return *this = *this + o; }
    ExactRational& operator-=(const ExactRational& o) { return *this = *this - o; }
    ExactRational& operator*=(const ExactRational& o) { return *this = *this * o; }

    ExactRational pow(long e) const;

    /// Residue mod the prime q; throws BadReduction when q divides the denominator.
    long long mod(long long q) const;

    std::string to_string() const { return q_.get_str(); }

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_{0};
};

mpz_class ipow(const mpz_class& base, unsigned long e);

}  // namespace isogate
