#include "isogate/gatefinder.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "isogate/error.hpp"
#include "isogate/linaction.hpp"
#include "isogate/subgroup_enum.hpp"

namespace isogate {

namespace {

void check_range(PrimeModulus r) {
    if (r.value() > kMaxGateModulus)
        throw Error(ErrorKind::RangeExceeded,
                    "gate search is limited to r <= 13, got " + std::to_string(r.value()));
}

// Determinant-one upper-triangular matrices, optionally conjugated.
std::vector<ModularMatrix> unipotent_borel(PrimeModulus r, const std::optional<ModularMatrix>& m) {
    const int p = r.value();
    std::vector<ModularMatrix> out;
    for (int a = 1; a < p; ++a)
        for (int b = 0; b < p; ++b) {
            ModularMatrix x(a, b, 0, mod_inverse(a, p), r);
            out.push_back(m ? x.conjugated_by(*m) : x);
        }
    return out;
}

std::vector<ModularMatrix> with_determinant(PrimeModulus r, int det) {
    const int p = r.value();
    std::vector<ModularMatrix> out;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d)
                    if (mod_reduce(a * d - b * c, p) == det) out.emplace_back(a, b, c, d, r);
    return out;
}

}  // namespace

std::vector<MatrixGroup> reducible_sl2_candidates(PrimeModulus r,
                                                  const std::optional<ModularMatrix>& reference) {
    check_range(r);
    const auto borel = unipotent_borel(r, reference);
    std::set<std::vector<std::uint32_t>> seen;
    ConjugacyClassSet classes;
    // Subgroups of Z/r x| Z/(r-1) need at most two generators.
    for (std::size_t i = 0; i < borel.size(); ++i)
        for (std::size_t j = i; j < borel.size(); ++j) {
            const MatrixGroup h = close({borel[i], borel[j]});
            if (!seen.insert({h.codes().begin(), h.codes().end()}).second) continue;
            classes.insert(h);
        }
    auto reps = classes.representatives();
    std::stable_sort(reps.begin(), reps.end(),
                     [](const MatrixGroup& a, const MatrixGroup& b) { return a.order() < b.order(); });
    return reps;
}

bool is_gate_group(const MatrixGroup& g) {
    if (g.order() >= general_linear_order(g.r())) return false;
    if (!is_applicable(g)) return false;
    if (!fixed_lines(g).empty()) return false;
    return !fixed_lines(sl2_part(g)).empty();
}

GateGroupResult find_gate_groups(PrimeModulus r, const std::optional<ModularMatrix>& reference) {
    check_range(r);
    const int p = r.value();
    const int gamma = primitive_root(r).value();
    const auto coset = with_determinant(r, gamma);

    ConjugacyClassSet found;
    for (const MatrixGroup& h : reducible_sl2_candidates(r, reference)) {
        std::set<std::vector<std::uint32_t>> seen;
        for (const auto& g : coset) {
            const ModularMatrix gi = g.inverse();
            const bool normalizes = std::all_of(
                h.generators().begin(), h.generators().end(),
                [&](const ModularMatrix& x) { return h.contains(g * x * gi); });
            if (!normalizes || !h.contains(g.pow(p - 1))) continue;
            const ModularMatrix extra[] = {g};
            const MatrixGroup candidate = *extend(h, extra);
            if (!seen.insert({candidate.codes().begin(), candidate.codes().end()}).second) continue;
            if (candidate.order() != h.order() * static_cast<std::size_t>(p - 1))
                throw Error(ErrorKind::DataIntegrity, "coset extension has the wrong order");
            if (is_gate_group(candidate)) found.insert(candidate);
        }
    }

    std::vector<MatrixGroup> groups = found.representatives();
    // Choose representatives so that each +-pair holds on the nose, not just up to conjugacy.
    const auto minus_one = ModularMatrix::scalar(-1, r);
    for (std::size_t j = 0; j < groups.size(); ++j) {
        if (groups[j].contains(minus_one)) continue;
        const ModularMatrix extra[] = {minus_one};
        const MatrixGroup plus = *extend(groups[j], extra);
        for (std::size_t i = 0; i < groups.size(); ++i)
            if (i != j && groups[i].order() == plus.order() && are_conjugate(plus, groups[i]))
                groups[i] = plus;
    }
    std::stable_sort(groups.begin(), groups.end(), [](const MatrixGroup& a, const MatrixGroup& b) {
        if (a.order() != b.order()) return a.order() > b.order();
        return std::lexicographical_compare(a.codes().begin(), a.codes().end(), b.codes().begin(),
                                            b.codes().end());
    });

    GateGroupResult result{r, groups, {}, {}};
    const std::size_t total = general_linear_order(p);
    for (const auto& g : groups) result.indices.push_back(total / g.order());
    for (std::size_t i = 0; i < groups.size(); ++i)
        for (std::size_t j = 0; j < groups.size(); ++j)
            if (i != j && plus_minus_related(groups[i], groups[j]))
                result.plus_minus_pairs.emplace_back(i, j);
    return result;
}

bool plus_minus_related(const MatrixGroup& g, const MatrixGroup& h) {
    if (g.r() != h.r()) throw Error(ErrorKind::ModulusMismatch, "groups over different primes");
    const ModularMatrix extra[] = {ModularMatrix::scalar(-1, h.modulus())};
    return *extend(h, extra) == g;
}

}  // namespace isogate
