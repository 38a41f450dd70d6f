#include "isogate/subgroup_enum.hpp"

#include <algorithm>
#include <unordered_set>

namespace isogate {

namespace {

struct CodesHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
        std::size_t h = v.size();
        for (auto c : v) h = h * 0x100000001b3ULL ^ c;
        return h;
    }
};

std::vector<ModularMatrix> all_elements(int r) {
    return general_linear(PrimeModulus(r)).elements();
}

}  // namespace

long ConjugacyClassSet::find(const MatrixGroup& g) const {
    const auto it = buckets_.find({g.order(), g.fingerprint()});
    if (it == buckets_.end()) return -1;
    for (auto idx : it->second)
        if (reps_[idx] == g || are_conjugate(g, reps_[idx])) return static_cast<long>(idx);
    return -1;
}

bool ConjugacyClassSet::insert(const MatrixGroup& g) {
    if (find(g) >= 0) return false;
    buckets_[{g.order(), g.fingerprint()}].push_back(reps_.size());
    reps_.push_back(g);
    return true;
}

MatrixGroup normalizer(const MatrixGroup& g) {
    const int r = g.r();
    std::vector<std::uint32_t> codes;
    for (const auto& m : all_elements(r)) {
        const ModularMatrix mi = m.inverse();
        bool ok = true;
        for (const auto& x : g.generators())
            if (!g.contains(m * x * mi)) {
                ok = false;
                break;
            }
        if (ok) codes.push_back(m.code());
    }
    return MatrixGroup::from_closed_set(r, std::move(codes));
}

SubgroupLayers enumerate_subgroup_classes(PrimeModulus r, int max_generators,
                                          std::size_t max_order) {
    const int p = r.value();
    const auto elements = all_elements(p);
    SubgroupLayers out;
    ConjugacyClassSet all;

    // One generator: cyclic subgroups, exact duplicates removed before the conjugacy test.
    {
        std::unordered_set<std::vector<std::uint32_t>, CodesHash> seen;
        std::vector<MatrixGroup> layer;
        for (const auto& m : elements) {
            const ModularMatrix gen[] = {m};
            auto c = close_capped(gen, max_order);
            ++out.closures;
            if (!c) continue;
            std::vector<std::uint32_t> key(c->codes().begin(), c->codes().end());
            if (!seen.insert(std::move(key)).second) continue;
            if (all.insert(*c)) layer.push_back(*c);
        }
        out.layers.push_back(std::move(layer));
    }

    const std::size_t space = static_cast<std::size_t>(p) * p * p * p;
    for (int k = 2; k <= max_generators; ++k) {
        std::vector<MatrixGroup> layer;
        for (const auto& base : out.layers.back()) {
            const MatrixGroup norm = normalizer(base);
            std::vector<char> visited(space, 0);
            for (auto c : base.codes()) visited[c] = 1;
            std::unordered_set<std::vector<std::uint32_t>, CodesHash> seen;
            for (const auto& g : elements) {
                if (visited[g.code()]) continue;
                // Mark the whole orbit of g under conjugation by N(K) and left multiplication by K.
                std::vector<ModularMatrix> orbit{g};
                visited[g.code()] = 1;
                for (std::size_t i = 0; i < orbit.size(); ++i) {
                    for (const auto& n : norm.generators()) {
                        const ModularMatrix y = n * orbit[i] * n.inverse();
                        if (!visited[y.code()]) {
                            visited[y.code()] = 1;
                            orbit.push_back(y);
                        }
                    }
                    for (const auto& h : base.generators()) {
                        const ModularMatrix y = h * orbit[i];
                        if (!visited[y.code()]) {
                            visited[y.code()] = 1;
                            orbit.push_back(y);
                        }
                    }
                }
                const ModularMatrix extra[] = {g};
                auto c = extend(base, extra, max_order);
                ++out.closures;
                if (!c) continue;
                std::vector<std::uint32_t> key(c->codes().begin(), c->codes().end());
                if (!seen.insert(std::move(key)).second) continue;
                if (all.insert(*c)) layer.push_back(*c);
            }
        }
        out.layers.push_back(std::move(layer));
    }
    return out;
}

}  // namespace isogate
