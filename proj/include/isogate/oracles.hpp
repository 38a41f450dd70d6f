#pragma once

// Brute-force cross-checks built on the exhaustive subgroup enumerator:
// gate groups found without the structured search, and proper subgroups whose
// (trace, det) pairs would fool the surjectivity certificate.

#include <cstddef>
#include <vector>

#include "isogate/matgroup.hpp"

namespace isogate {

struct EnumerationStats {
    std::size_t classes = 0;   // conjugacy classes of proper subgroups seen
    std::size_t closures = 0;  // closure computations
};

/// Gate groups among all subgroups generated by at most max_generators elements,
/// one representative per conjugacy class, sorted by ascending index.
std::vector<MatrixGroup> gate_groups_by_enumeration(PrimeModulus r, int max_generators,
                                                    EnumerationStats* stats = nullptr);

/// True when two lists hold the same conjugacy classes (each exactly once).
bool same_conjugacy_classes(const std::vector<MatrixGroup>& a, const std::vector<MatrixGroup>& b);

/// Proper subgroups (from <= max_generators closures) meeting every certificate criterion.
/// Empty means the certificate is sound at this r.
std::vector<MatrixGroup> certificate_counterexamples(PrimeModulus r, int max_generators = 2,
                                                     EnumerationStats* stats = nullptr);

/// Whether the (trace, det) pairs of g's elements meet every certificate criterion.
bool pairs_meet_certificate(const MatrixGroup& g);

}  // namespace isogate
