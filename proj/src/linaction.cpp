#include "isogate/linaction.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace isogate {

namespace {

using Perm = std::vector<std::uint8_t>;

int point_index(const ProjectivePoint& p, int r) { return p.x == 0 ? r : p.y; }

ProjectivePoint point_at(int i, int r) { return i == r ? ProjectivePoint{0, 1} : ProjectivePoint{1, i}; }

Perm permutation_of(const ModularMatrix& m, int r) {
    Perm perm(static_cast<std::size_t>(r + 1));
    for (int i = 0; i <= r; ++i) {
        const auto p = point_at(i, r);
        const auto [x, y] = m.apply(p.x, p.y);
        perm[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(point_index(normalize_line(x, y, r), r));
    }
    return perm;
}

Perm compose(const Perm& a, const Perm& b) {  // a after b
    Perm out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
    return out;
}

bool is_identity(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i) return false;
    return true;
}

std::size_t perm_order(const Perm& p) {
    Perm x = p;
    std::size_t k = 1;
    while (!is_identity(x)) {
        x = compose(p, x);
        ++k;
    }
    return k;
}

}  // namespace

ProjectivePoint normalize_line(int x, int y, int r) {
    x = mod_reduce(x, r);
    y = mod_reduce(y, r);
    if (x != 0) return {1, static_cast<int>(static_cast<long long>(y) * mod_inverse(x, r) % r)};
    return {0, 1};
}

std::string_view to_string(ProjectiveClass c) {
    switch (c) {
    case ProjectiveClass::cyclic: return "cyclic";
    case ProjectiveClass::dihedral: return "dihedral";
    case ProjectiveClass::A4: return "A4";
    case ProjectiveClass::S4: return "S4";
    case ProjectiveClass::A5: return "A5";
    case ProjectiveClass::PSL2: return "PSL2";
    case ProjectiveClass::PGL2: return "PGL2";
    case ProjectiveClass::other: return "other";
    }
    return "other";
}

std::vector<std::pair<std::size_t, std::size_t>> OrbitDecomposition::size_histogram() const {
    std::map<std::size_t, std::size_t> h;
    for (auto s : sizes) ++h[s];
    return {h.begin(), h.end()};
}

OrbitDecomposition orbits(const MatrixGroup& g) {
    const int r = g.r();
    const auto n = static_cast<std::size_t>(r) * r;
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    OrbitDecomposition out;
    const auto& gens = g.generators();
    for (std::size_t start = 1; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<Vector2> orbit{{static_cast<int>(start) / r, static_cast<int>(start) % r}};
        seen[start] = 1;
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            for (const auto& m : gens) {
                const auto [x, y] = m.apply(orbit[i].first, orbit[i].second);
                const auto idx = static_cast<std::size_t>(x) * r + y;
                if (!seen[idx]) {
                    seen[idx] = 1;
                    orbit.emplace_back(x, y);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.sizes.push_back(orbit.size());
        out.orbits.push_back(std::move(orbit));
    }
    std::sort(out.sizes.begin(), out.sizes.end());
    return out;
}

bool acts_freely(const MatrixGroup& g) {
    for (std::size_t i = 0; i < g.order(); ++i) {
        const auto m = g.element(i);
        if (m.a11() == 1 && m.a12() == 0 && m.a21() == 0 && m.a22() == 1) continue;
        // m fixes a nonzero vector iff 1 is an eigenvalue: det(m - I) = 0.
        const int det_shift = mod_reduce(static_cast<long long>(m.a11() - 1) * (m.a22() - 1) -
                                             static_cast<long long>(m.a12()) * m.a21(),
                                         g.r());
        if (det_shift == 0) return false;
    }
    return true;
}

std::vector<ProjectivePoint> fixed_lines(const MatrixGroup& g) {
    const int r = g.r();
    std::vector<ProjectivePoint> out;
    for (int i = 0; i <= r; ++i) {
        const auto p = point_at(i, r);
        bool fixed = true;
        for (const auto& m : g.generators()) {
            const auto [x, y] = m.apply(p.x, p.y);
            if (!(normalize_line(x, y, r) == p)) {
                fixed = false;
                break;
            }
        }
        if (fixed) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::uint8_t>> projective_permutations(const MatrixGroup& g) {
    std::set<Perm> perms;
    for (std::size_t i = 0; i < g.order(); ++i) perms.insert(permutation_of(g.element(i), g.r()));
    return {perms.begin(), perms.end()};
}

ProjectiveImageType projective_image(const MatrixGroup& g) {
    const int r = g.r();
    const auto perms = projective_permutations(g);
    std::vector<Perm> gens;
    for (const auto& m : g.generators()) gens.push_back(permutation_of(m, r));

    ProjectiveImageType t;
    t.order = perms.size();
    t.abelian = true;
    for (std::size_t i = 0; i < gens.size() && t.abelian; ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) {
                t.abelian = false;
                break;
            }

    std::vector<std::size_t> orders;
    orders.reserve(perms.size());
    for (const auto& p : perms) {
        orders.push_back(perm_order(p));
        if (orders.back() == 2) ++t.involutions;
        const bool central = std::all_of(gens.begin(), gens.end(), [&](const Perm& s) {
            return compose(p, s) == compose(s, p);
        });
        if (central) ++t.center_size;
    }
    const auto has_order = [&](std::size_t k) {
        return std::find(orders.begin(), orders.end(), k) != orders.end();
    };

    const auto pgl = static_cast<std::size_t>(r) * (static_cast<std::size_t>(r) * r - 1);
    const std::size_t n = t.order;
    if (n == pgl) {
        t.cls = ProjectiveClass::PGL2;
    } else if (n == pgl / 2) {
        t.cls = ProjectiveClass::PSL2;  // the unique index-2 subgroup of PGL_2
    } else if (t.abelian) {
        if (has_order(n)) t.cls = ProjectiveClass::cyclic;
        else if (n == 4) t.cls = ProjectiveClass::dihedral;  // Klein four-group
    } else if (n == 12 && !has_order(6) && t.center_size == 1) {
        t.cls = ProjectiveClass::A4;
    } else if (n == 24 && t.center_size == 1) {
        t.cls = ProjectiveClass::S4;
    } else if (n == 60 && t.center_size == 1) {
        t.cls = ProjectiveClass::A5;
    } else if (n % 2 == 0 && n >= 6) {
        // Dihedral: a cyclic subgroup of index 2 whose complement is all involutions.
        for (std::size_t i = 0; i < perms.size(); ++i) {
            if (orders[i] != n / 2) continue;
            std::set<Perm> rot;
            Perm x = perms[i];
            for (std::size_t k = 0; k < n / 2; ++k) {
                rot.insert(x);
                x = compose(perms[i], x);
            }
            bool ok = true;
            for (std::size_t j = 0; j < perms.size() && ok; ++j)
                if (!rot.count(perms[j]) && orders[j] != 2) ok = false;
            if (ok) {
                t.cls = ProjectiveClass::dihedral;
                break;
            }
        }
    }
    return t;
}

}  // namespace isogate
