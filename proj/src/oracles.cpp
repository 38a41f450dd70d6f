#include "isogate/oracles.hpp"

#include <algorithm>

#include "isogate/gatefinder.hpp"
#include "isogate/ratcurves.hpp"
#include "isogate/subgroup_enum.hpp"

namespace isogate {

namespace {

// Every proper subgroup has order at most |GL_2| / 2.
SubgroupLayers proper_subgroups(PrimeModulus r, int max_generators, EnumerationStats* stats) {
    SubgroupLayers layers = enumerate_subgroup_classes(r, max_generators, general_linear_order(r) / 2);
    if (stats) {
        stats->closures = layers.closures;
        stats->classes = 0;
        for (const auto& layer : layers.layers) stats->classes += layer.size();
    }
    return layers;
}

}  // namespace

std::vector<MatrixGroup> gate_groups_by_enumeration(PrimeModulus r, int max_generators,
                                                    EnumerationStats* stats) {
    std::vector<MatrixGroup> out;
    for (const auto& layer : proper_subgroups(r, max_generators, stats).layers)
        for (const auto& g : layer)
            if (is_gate_group(g)) out.push_back(g);
    std::stable_sort(out.begin(), out.end(),
                     [](const MatrixGroup& a, const MatrixGroup& b) { return a.order() > b.order(); });
    return out;
}

bool same_conjugacy_classes(const std::vector<MatrixGroup>& a, const std::vector<MatrixGroup>& b) {
    if (a.size() != b.size()) return false;
    ConjugacyClassSet sa;
    for (const auto& g : a)
        if (!sa.insert(g)) return false;
    std::vector<char> hit(a.size(), 0);
    for (const auto& g : b) {
        const long idx = sa.find(g);
        if (idx < 0 || hit[static_cast<std::size_t>(idx)]) return false;
        hit[static_cast<std::size_t>(idx)] = 1;
    }
    return true;
}

bool pairs_meet_certificate(const MatrixGroup& g) {
    TraceDetAccumulator acc(g.r());
    for (const auto& m : g.elements()) {
        acc.add(m.trace(), m.det());
        if (acc.criteria().all()) return true;
    }
    return false;
}

std::vector<MatrixGroup> certificate_counterexamples(PrimeModulus r, int max_generators,
                                                     EnumerationStats* stats) {
    std::vector<MatrixGroup> out;
    for (const auto& layer : proper_subgroups(r, max_generators, stats).layers)
        for (const auto& g : layer)
            if (pairs_meet_certificate(g)) out.push_back(g);
    return out;
}

}  // namespace isogate
