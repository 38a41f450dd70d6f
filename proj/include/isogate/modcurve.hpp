#pragma once

// Point counting over F_q, the bundled X0(N) models, reduction-based torsion
// upper bounds over cyclotomic fields, and small-height rational point search.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isogate/kernels.hpp"
#include "isogate/modfield.hpp"
#include "isogate/ratcurves.hpp"

namespace isogate {

/// #E(F_q) including infinity. q odd prime <= 10^6, E q-integral with good reduction.
/// Throws BadReduction otherwise.
long long count_points(const CurveModel& e, std::uint32_t q,
                       kernels::Isa isa = kernels::best_isa());

/// Same count through a value histogram of the 2-division cubic and a square-root
/// multiplicity table (no quadratic-character lookup); used as a cross-check.
long long count_points_yscan(const CurveModel& e, std::uint32_t q);

struct AffinePoint {
    ExactRational x, y;
    friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

/// Nullopt stands for the point at infinity.
using CurvePoint = std::optional<AffinePoint>;

CurvePoint add_points(const CurveModel& e, const CurvePoint& p, const CurvePoint& q);

/// Order of p if it is at most max_order, else nullopt.
std::optional<int> point_order(const CurveModel& e, const CurvePoint& p, int max_order = 16);

bool on_curve(const CurveModel& e, const AffinePoint& p);

/// Affine points x = a/b^2, y = c/b^3 with gcd(a, b) = 1 and |a|, |b|, |c| <= height_bound.
/// Integral models only; sorted by (x, y).
std::vector<AffinePoint> rational_point_search(const CurveModel& e, std::int64_t height_bound);

struct NamedCurve {
    std::string label;
    CurveModel model;
    int expected_rational_torsion = 1;
};

/// The bundled curves, validated on first use (nonsingular, a point of the
/// expected order found by search, Hasse-consistent counts). Throws DataIntegrity.
const std::vector<NamedCurve>& named_curves();
const NamedCurve& named_curve(std::string_view label);

/// Shape of the 2-division cubic after completing the square.
CubicFactorType two_division_shape(const NamedCurve& c);
CubicFactorType two_division_shape(const CurveModel& e);

inline constexpr std::string_view kUpperBoundFlag = "upper bound only — rank not verified";
inline constexpr std::int64_t kDefaultHeightBound = 1000;
inline constexpr std::size_t kDefaultPrimeCount = 8;

struct TorsionBoundReport {
    std::string label;
    int r = 0;
    std::vector<std::uint32_t> primes;
    std::vector<long long> counts;
    long long gcd_bound = 0;
    int rational_points_found = 0;  // with infinity
    std::string flag{kUpperBoundFlag};
};

/// First `count` primes q > r with q = 1 mod r and good reduction.
std::vector<std::uint32_t> default_split_primes(const CurveModel& e, PrimeModulus r,
                                                std::size_t count = kDefaultPrimeCount);

/// gcd of #C(F_q) over the given primes (each q = 1 mod r, good reduction).
/// Throws NoValidPrimes when qs is empty, InvalidArgument on a prime violating the precondition.
TorsionBoundReport torsion_bound_cyclotomic(const NamedCurve& c, PrimeModulus r,
                                            const std::vector<std::uint32_t>& qs,
                                            std::int64_t height_bound = kDefaultHeightBound);

/// As above with default_split_primes.
TorsionBoundReport torsion_bound_cyclotomic(const NamedCurve& c, PrimeModulus r,
                                            std::int64_t height_bound = kDefaultHeightBound);

}  // namespace isogate
