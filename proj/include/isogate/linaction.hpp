#pragma once

// The natural action of a matrix group on F_r^2 \ {0} and on the projective line.

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "isogate/matgroup.hpp"

namespace isogate {

using Vector2 = std::pair<int, int>;

struct OrbitDecomposition {
    std::vector<std::vector<Vector2>> orbits;  // each orbit sorted, orbits ordered by first vector
    std::vector<std::size_t> sizes;            // ascending multiset of orbit lengths

    /// length -> number of orbits of that length
    std::vector<std::pair<std::size_t, std::size_t>> size_histogram() const;
};

/// A 1-dimensional subspace, normalised so that the first nonzero coordinate is 1.
struct ProjectivePoint {
    int x = 0;
    int y = 0;
    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
    friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;
};

ProjectivePoint normalize_line(int x, int y, int r);

enum class ProjectiveClass { cyclic, dihedral, A4, S4, A5, PSL2, PGL2, other };

std::string_view to_string(ProjectiveClass c);

struct ProjectiveImageType {
    std::size_t order = 0;
    ProjectiveClass cls = ProjectiveClass::other;
    bool abelian = false;
    std::size_t center_size = 0;
    std::size_t involutions = 0;
};

OrbitDecomposition orbits(const MatrixGroup& g);

/// No non-identity element fixes a nonzero vector.
bool acts_freely(const MatrixGroup& g);

/// Lines L with gL = L for all g; empty iff the action is irreducible over F_r.
std::vector<ProjectivePoint> fixed_lines(const MatrixGroup& g);

/// Image of g in PGL_2(F_r), as a permutation group on the r + 1 points.
std::vector<std::vector<std::uint8_t>> projective_permutations(const MatrixGroup& g);

ProjectiveImageType projective_image(const MatrixGroup& g);

}  // namespace isogate
