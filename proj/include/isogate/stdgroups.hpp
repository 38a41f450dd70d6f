#pragma once

// Named subgroups of GL_2(F_r): Borel, Cartan subgroups and their normalizers,
// the cube subgroups, and the two fixed exceptional groups at r = 13 and r = 5.

#include <optional>
#include <string_view>
#include <vector>

#include "isogate/matgroup.hpp"

namespace isogate {

enum class StandardGroupKind {
    borel,                       // "borel"
    split_cartan,                // "cs"
    split_cartan_normalizer,     // "cs+"
    nonsplit_cartan,             // "cns"
    nonsplit_cartan_normalizer,  // "cns+"
    g3,                          // "g3": cubes of C_ns and their twist by diag(1,-1)
    g7_13,                       // "g7": r = 13 only
    g95_5,                       // "g95": r = 5 only
    cube_split,                  // "cube": diag/antidiag(a, b) with a/b a cube, r = 1 mod 3
};

std::string_view tag(StandardGroupKind kind);
std::optional<StandardGroupKind> kind_from_tag(std::string_view tag);
const std::vector<StandardGroupKind>& all_kinds();

/// The exact element set of the named group.
MatrixGroup standard_group(StandardGroupKind kind, PrimeModulus r);

/// Natural generators; their closure should reproduce standard_group.
std::vector<ModularMatrix> natural_generators(StandardGroupKind kind, PrimeModulus r);

/// True iff closing natural_generators gives exactly the closed-form element set.
/// Not available for g7_13 and g95_5, which are defined by generators only.
bool verify_membership_formula(StandardGroupKind kind, PrimeModulus r);

/// {diag(a, 1/a)} u {antidiag(a, -1/a)}: the displayed shape of S(C_s^+(r)).
MatrixGroup split_normalizer_sl2_model(PrimeModulus r);

/// An element of C_ns(r) of order r^2 - 1.
ModularMatrix nonsplit_generator(PrimeModulus r);

}  // namespace isogate
