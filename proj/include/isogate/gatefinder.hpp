#pragma once

// Search for proper applicable subgroups G of GL_2(F_r) that act irreducibly on
// F_r^2 while S(G) = G n SL_2(F_r) fixes a line.
//
// Every such G has S(G) conjugate to a subgroup H of the upper-triangular
// determinant-one group, and G/S(G) is cyclic (it is isomorphic to F_r^x via det).
// So G = <H, g> for a single g whose determinant is a fixed generator of F_r^x,
// where g normalizes H and g^(r-1) lies in H.

#include <optional>
#include <utility>
#include <vector>

#include "isogate/matgroup.hpp"

namespace isogate {

inline constexpr int kMaxGateModulus = 13;

struct GateGroupResult {
    PrimeModulus r;
    std::vector<MatrixGroup> groups;  // conjugacy-class representatives, ascending index
    std::vector<std::size_t> indices;  // index in GL_2(F_r)
    /// (i, j) with groups[i] = <-I, groups[j]>.
    std::vector<std::pair<std::size_t, std::size_t>> plus_minus_pairs;
};

/// Subgroups of SL_2(F_r) fixing a line, up to GL_2(F_r)-conjugacy. With a
/// reference conjugator m the enumeration runs inside m B m^-1 instead of B.
std::vector<MatrixGroup> reducible_sl2_candidates(
    PrimeModulus r, const std::optional<ModularMatrix>& reference = std::nullopt);

/// Proper, applicable, irreducible, with reducible determinant-one part.
bool is_gate_group(const MatrixGroup& g);

GateGroupResult find_gate_groups(PrimeModulus r,
                                 const std::optional<ModularMatrix>& reference = std::nullopt);

/// G equals the closure of H together with -I.
bool plus_minus_related(const MatrixGroup& g, const MatrixGroup& h);

}  // namespace isogate
