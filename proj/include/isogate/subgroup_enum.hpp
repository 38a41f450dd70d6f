#pragma once

// Exhaustive enumeration of subgroups of GL_2(F_r) up to conjugacy, layer by
// layer in the number of generators. Independent of the structured gate search
// and used to cross-check it.

#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "isogate/matgroup.hpp"

namespace isogate {

/// Representatives of GL_2(F_r)-conjugacy classes of subgroups.
class ConjugacyClassSet {
public:
    /// Adds g unless a conjugate is already present. Returns true when g is new.
    bool insert(const MatrixGroup& g);
    /// Index of the stored class conjugate to g, or -1.
    long find(const MatrixGroup& g) const;

    const std::vector<MatrixGroup>& representatives() const noexcept { return reps_; }
    std::size_t size() const noexcept { return reps_.size(); }

private:
    std::vector<MatrixGroup> reps_;
    std::map<std::pair<std::size_t, std::uint64_t>, std::vector<std::size_t>> buckets_;
};

struct SubgroupLayers {
    /// layers[k] holds the classes first reached with k + 1 generators.
    std::vector<std::vector<MatrixGroup>> layers;
    std::size_t closures = 0;  // number of closure computations performed
};

/// Classes of subgroups of order <= max_order generated by at most max_generators
/// elements. A generator g is added to a class representative K only once per
/// orbit of g under x -> n k x n^-1 (n in N(K), k in K); other choices give
/// conjugate or equal groups.
SubgroupLayers enumerate_subgroup_classes(PrimeModulus r, int max_generators,
                                          std::size_t max_order);

/// Normalizer of g in GL_2(F_r).
MatrixGroup normalizer(const MatrixGroup& g);

}  // namespace isogate
