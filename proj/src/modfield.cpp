#include "isogate/modfield.hpp"

#include <string>

#include "isogate/error.hpp"

namespace isogate {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::CompositeModulus: return "CompositeModulus";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::KindModulusMismatch: return "KindModulusMismatch";
    case ErrorKind::CongruenceViolation: return "CongruenceViolation";
    case ErrorKind::RangeExceeded: return "RangeExceeded";
    case ErrorKind::FactorizationIncomplete: return "FactorizationIncomplete";
    case ErrorKind::SingularCurve: return "SingularCurve";
    case ErrorKind::Undecided: return "Undecided";
    case ErrorKind::ZeroParameter: return "ZeroParameter";
    case ErrorKind::PoleAtParameter: return "PoleAtParameter";
    case ErrorKind::BadReduction: return "BadReduction";
    case ErrorKind::InsufficientSamples: return "InsufficientSamples";
    case ErrorKind::NoValidPrimes: return "NoValidPrimes";
    case ErrorKind::NotCmCurve: return "NotCmCurve";
    case ErrorKind::UnknownClaim: return "UnknownClaim";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DataIntegrity: return "DataIntegrity";
    }
    return "Unknown";
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeModulus::PrimeModulus(int r) : r_(r) {
    if (r < 3 || r > kMaxModulus || r % 2 == 0 || !is_prime(r))
        throw Error(ErrorKind::CompositeModulus,
                    std::to_string(r) + " is not an odd prime in [3, 97]");
}

PrimeModulus make_modulus(int r) { return PrimeModulus(r); }

int mod_pow(long long a, long long e, int r) {
    long long base = mod_reduce(a, r), acc = 1;
    if (e < 0) {
        base = mod_inverse(static_cast<int>(base), r);
        e = -e;
    }
    while (e > 0) {
        if (e & 1) acc = acc * base % r;
        base = base * base % r;
        e >>= 1;
    }
    return static_cast<int>(acc);
}

int mod_inverse(int a, int r) {
    a = mod_reduce(a, r);
    if (a == 0) throw Error(ErrorKind::ZeroInput, "0 has no inverse");
    return mod_pow(a, r - 2, r);
}

FieldElement::FieldElement(long long value, PrimeModulus r)
    : v_(mod_reduce(value, r.value())), r_(r) {}

static void check_same(FieldElement a, FieldElement b) {
    if (a.modulus() != b.modulus())
        throw Error(ErrorKind::ModulusMismatch, "field elements over different primes");
}

FieldElement FieldElement::operator+(FieldElement o) const {
    check_same(*this, o);
    return {static_cast<long long>(v_) + o.v_, r_};
}
FieldElement FieldElement::operator-(FieldElement o) const {
    check_same(*this, o);
    return {static_cast<long long>(v_) - o.v_, r_};
}
FieldElement FieldElement::operator*(FieldElement o) const {
    check_same(*this, o);
    return {static_cast<long long>(v_) * o.v_, r_};
}
FieldElement FieldElement::operator-() const { return {-static_cast<long long>(v_), r_}; }
FieldElement FieldElement::inverse() const { return {mod_inverse(v_, r_.value()), r_}; }
FieldElement FieldElement::pow(long long e) const { return {mod_pow(v_, e, r_.value()), r_}; }

std::vector<std::uint8_t> square_table(int r) {
    std::vector<std::uint8_t> t(static_cast<std::size_t>(r), 0);
    for (long long x = 1; x < r; ++x) t[static_cast<std::size_t>(x * x % r)] = 1;
    return t;
}

// Exhaustive enumeration; r <= 97 keeps this trivial.
bool is_square(FieldElement a) {
    const int r = a.modulus().value();
    for (long long x = 0; x < r; ++x)
        if (x * x % r == a.value()) return true;
    return false;
}

bool is_cube(FieldElement a) {
    if (a.value() == 0) throw Error(ErrorKind::ZeroInput, "is_cube is defined on F_r^x only");
    const int r = a.modulus().value();
    for (long long x = 1; x < r; ++x)
        if (x * x % r * x % r == a.value()) return true;
    return false;
}

FieldElement epsilon(PrimeModulus r) {
    if (r.value() % 4 == 3) return {-1, r};
    for (int e = 2; e < r.value(); ++e) {
        FieldElement fe(e, r);
        if (!is_square(fe)) return fe;
    }
    throw Error(ErrorKind::InvalidArgument, "no non-residue found");
}

FieldElement primitive_root(PrimeModulus r) {
    const int p = r.value();
    for (int g = 2; g < p; ++g) {
        int x = 1, order = 0;
        do {
            x = x * g % p;
            ++order;
        } while (x != 1);
        if (order == p - 1) return {g, r};
    }
    throw Error(ErrorKind::InvalidArgument, "no primitive root");
}

}  // namespace isogate
