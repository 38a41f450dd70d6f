#pragma once

// Exact arithmetic on elliptic curves over Q: models from j, discriminants and
// their square classes, the 2-division cubic, the two j-invariant families, and
// a sampling-based certificate that the mod-r image is all of GL_2(F_r).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isogate/factor.hpp"
#include "isogate/modfield.hpp"
#include "isogate/rational.hpp"

namespace isogate {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with nonzero discriminant.
class CurveModel {
public:
    CurveModel(ExactRational a1, ExactRational a2, ExactRational a3, ExactRational a4,
               ExactRational a6);
    static CurveModel short_form(const ExactRational& a, const ExactRational& b) {
        return {0, 0, 0, a, b};
    }

    const ExactRational& a1() const noexcept { return a1_; }
    const ExactRational& a2() const noexcept { return a2_; }
    const ExactRational& a3() const noexcept { return a3_; }
    const ExactRational& a4() const noexcept { return a4_; }
    const ExactRational& a6() const noexcept { return a6_; }

    ExactRational b2() const;
    ExactRational b4() const;
    ExactRational b6() const;
    ExactRational b8() const;
    ExactRational c4() const;
    ExactRational c6() const;
    ExactRational j_invariant() const;

    bool is_integral() const;
    bool is_short() const { return a1_.is_zero() && a2_.is_zero() && a3_.is_zero(); }

    /// u-scaling (a_i -> u^i a_i), an isomorphism over Q.
    CurveModel scaled(const ExactRational& u) const;
    /// Quadratic twist of a short model by d: (A, B) -> (d^2 A, d^3 B).
    CurveModel quadratic_twist(const ExactRational& d) const;

    std::string to_string() const;

private:
    ExactRational a1_, a2_, a3_, a4_, a6_;
};

ExactRational discriminant(const CurveModel& e);

/// y^2 = x^3 + Ax + B with A = 3j(1728-j), B = 2j(1728-j)^2; j = 0 and 1728 special-cased.
CurveModel curve_from_j(const ExactRational& j);

/// curve_from_j(j) rescaled to integer coefficients.
CurveModel integral_curve_from_j(const ExactRational& j);

/// Square class of Delta(curve_from_j(j)), which is that of j - 1728.
SquareClass disc_square_class_of_j(const ExactRational& j);

// ---------------------------------------------------------------------------
// Monic cubics over Q

enum class CubicShape { three_rational_roots, one_rational_root, irreducible };

std::string_view to_string(CubicShape s);

struct CubicFactorType {
    CubicShape shape = CubicShape::irreducible;
    SquareClass disc_class{1};
    std::vector<ExactRational> roots;          // the distinct rational roots, ascending
    std::optional<std::uint32_t> witness_prime;  // a prime where the cubic has no root (irreducible only)
};

/// Distinct rational roots of x^3 + b x^2 + c x + d, found exactly.
std::vector<ExactRational> rational_cubic_roots(const ExactRational& b, const ExactRational& c,
                                                const ExactRational& d);

/// Smallest prime q <= bound with x^3 + bx^2 + cx + d root-free mod q (coefficients q-integral).
std::optional<std::uint32_t> root_free_prime(const ExactRational& b, const ExactRational& c,
                                             const ExactRational& d, std::uint32_t bound = 100'000);

/// Factorization shape of the monic cubic plus its discriminant's square class.
/// Throws Undecided if no rational root exists and no root-free prime is found.
CubicFactorType analyze_cubic(const ExactRational& b, const ExactRational& c, const ExactRational& d);

/// Shape of x^3 + Ax + B for curve_from_j(j).
CubicFactorType two_division_cubic(const ExactRational& j);

bool has_rational_two_torsion(const ExactRational& j);

/// (t + 16)^3 / t.
ExactRational two_torsion_family_j(const ExactRational& t);

/// Every rational t with (t + 16)^3 / t = j.
std::vector<ExactRational> family_membership(const ExactRational& j);

/// The rational function of the r = 5 exceptional family, evaluated exactly.
ExactRational g3_family_j(const ExactRational& t);

// ---------------------------------------------------------------------------
// Surjectivity certificate

inline constexpr std::uint32_t kDefaultSampleBound = 10'000;

struct SurjectivityVerdict {
    bool certified = false;
    std::size_t good_primes = 0;
    /// First sampled prime realising each criterion:
    /// [0] tr != 0 and tr^2 - 4 det a nonzero non-square,
    /// [1] tr != 0 and tr^2 - 4 det a nonzero square,
    /// [2] u = tr^2/det with u not in {0, 1, 2, 4} and u^2 - 3u + 1 != 0.
    std::optional<std::uint32_t> witness[3];
    bool determinants_generate = false;  // sampled q mod r generate F_r^x
};

/// Criteria on a set of (trace, det) pairs; see SurjectivityVerdict.
struct TraceDetCriteria {
    bool nonsplit_regular = false;
    bool split_regular = false;
    bool non_exceptional = false;
    bool determinants_generate = false;
    bool all() const { return nonsplit_regular && split_regular && non_exceptional && determinants_generate; }
};

class TraceDetAccumulator {
public:
    explicit TraceDetAccumulator(int r);
    /// Returns the indices (0..2) of criteria newly met by this pair.
    unsigned add(int trace, int det);
    const TraceDetCriteria& criteria() const noexcept { return c_; }

private:
    int r_;
    std::vector<std::uint8_t> squares_;
    std::vector<char> det_seen_;
    TraceDetCriteria c_;
};

/// Sample Frobenius traces a_q for good primes q <= sample_bound (q != r) and
/// certify the mod-r image is GL_2(F_r), or report inconclusive. E must be integral.
SurjectivityVerdict surjectivity_certificate(const CurveModel& e, PrimeModulus r,
                                             std::uint32_t sample_bound = kDefaultSampleBound);

}  // namespace isogate
