#pragma once

// Quadratic subfield of Q(zeta_p), square classes inside it, the full 2-torsion
// decision over Q(zeta_r), and the rational CM j-invariant table.

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "isogate/modfield.hpp"
#include "isogate/ratcurves.hpp"

namespace isogate {

struct CyclotomicContext {
    explicit CyclotomicContext(PrimeModulus p);
    PrimeModulus p;
    long pstar;  // (-1)^((p-1)/2) p
};

/// p* = (-1)^((p-1)/2) p; Q(sqrt(p*)) is the quadratic subfield of Q(zeta_p).
long quadratic_subfield(PrimeModulus p);

/// q is a square in Q(zeta_p) iff its square class is 1 or p*.
bool is_square_in_cyclotomic(const ExactRational& q, PrimeModulus p);

enum class TwoTorsionVerdict { yes, no, undetermined_cyclic_cubic };

std::string_view to_string(TwoTorsionVerdict v);

struct FullTwoTorsionResult {
    TwoTorsionVerdict verdict = TwoTorsionVerdict::no;
    CubicFactorType cubic;
    /// Only for undetermined_cyclic_cubic: (q, number of roots of the cubic mod q)
    /// for the first few primes q = 1 mod r.
    std::vector<std::pair<std::uint32_t, int>> split_samples;
};

FullTwoTorsionResult full_two_torsion_over_cyclotomic(const ExactRational& j, PrimeModulus r);

struct CmRecord {
    ExactRational j;
    long field_discriminant;  // -D
};

/// The 13 rational CM j-invariants, parsed from the bundled table and checked
/// against its recorded checksum. Throws DataIntegrity.
const std::vector<CmRecord>& cm_records();

std::optional<long> cm_field_discriminant(const ExactRational& j);

/// True iff r divides D. Throws NotCmCurve when j is not in the table.
bool cm_isogeny_over_cyclotomic(const ExactRational& j, PrimeModulus r);

}  // namespace isogate
