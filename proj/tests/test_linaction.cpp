#include <map>
#include <numeric>
#include <random>

#include "doctest.h"
#include "isogate/linaction.hpp"
#include "isogate/stdgroups.hpp"
#include "util.hpp"

using namespace isogate;
using K = StandardGroupKind;

namespace {

ModularMatrix random_matrix(std::mt19937& rng, PrimeModulus r) {
    std::uniform_int_distribution<int> d(0, r.value() - 1);
    for (;;) {
        const int a = d(rng), b = d(rng), c = d(rng), e = d(rng);
        if (oracle::md(1LL * a * e - 1LL * b * c, r.value()) != 0) return {a, b, c, e, r};
    }
}

std::vector<MatrixGroup> sample_groups(PrimeModulus r) {
    std::vector<MatrixGroup> out{close({ModularMatrix::identity(r)}), general_linear(r)};
    for (auto k : all_kinds()) {
        try {
            const auto g = standard_group(k, r);
            out.push_back(g);
            out.push_back(sl2_part(g));
        } catch (const Error&) {
        }
    }
    return out;
}

// Order of a permutation of {0..n-1}.
std::size_t perm_order(const std::vector<std::uint8_t>& p) {
    std::size_t ord = 1;
    std::vector<char> seen(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

}  // namespace

TEST_CASE("orbits examples") {
    const auto r7 = make_modulus(7);
    const auto s = orbits(sl2_part(standard_group(K::nonsplit_cartan_normalizer, r7)));
    CHECK(s.size_histogram() == std::vector<std::pair<std::size_t, std::size_t>>{{16, 3}});
    const auto g7 = orbits(sl2_part(standard_group(K::g7_13, make_modulus(13))));
    CHECK(g7.size_histogram() == std::vector<std::pair<std::size_t, std::size_t>>{{24, 7}});
    const auto t = orbits(close({ModularMatrix::identity(r7)}));
    CHECK(t.orbits.size() == 48);
    CHECK(t.size_histogram() == std::vector<std::pair<std::size_t, std::size_t>>{{1, 48}});
}

TEST_CASE("acts_freely examples") {
    CHECK(acts_freely(sl2_part(standard_group(K::split_cartan_normalizer, make_modulus(11)))));
    CHECK_FALSE(acts_freely(standard_group(K::borel, make_modulus(7))));
    CHECK(acts_freely(sl2_part(standard_group(K::g3, make_modulus(11)))));
}

TEST_CASE("fixed_lines examples") {
    for (int p : testutil::odd_primes(3, 37))
        CHECK(fixed_lines(sl2_part(standard_group(K::split_cartan_normalizer, make_modulus(p)))).empty());
    for (int p : {5, 7, 11})
        CHECK(fixed_lines(standard_group(K::borel, make_modulus(p))) == std::vector<ProjectivePoint>{{1, 0}});
    CHECK(fixed_lines(standard_group(K::split_cartan, make_modulus(7))) ==
          std::vector<ProjectivePoint>{{0, 1}, {1, 0}});
}

TEST_CASE("projective_image examples") {
    const auto g95 = projective_image(standard_group(K::g95_5, make_modulus(5)));
    CHECK(g95.order == 24);
    CHECK(g95.cls == ProjectiveClass::S4);
    CHECK(g95.involutions == 9);
    const auto cns = projective_image(standard_group(K::nonsplit_cartan_normalizer, make_modulus(7)));
    CHECK(cns.order == 16);
    CHECK(cns.cls == ProjectiveClass::dihedral);
    const auto gl = projective_image(general_linear(make_modulus(5)));
    CHECK(gl.order == 120);
    CHECK(gl.cls == ProjectiveClass::PGL2);
    CHECK(projective_image(special_linear(make_modulus(7))).cls == ProjectiveClass::PSL2);
}

TEST_CASE("property: orbit partition and orbit-stabilizer") {
    for (int p : {3, 5, 7, 11, 13}) {
        const auto r = make_modulus(p);
        for (const auto& g : sample_groups(r)) {
            const auto d = orbits(g);
            std::size_t total = 0;
            std::set<Vector2> seen;
            for (const auto& o : d.orbits) {
                total += o.size();
                CHECK(g.order() % o.size() == 0);
                for (const auto& v : o) CHECK(seen.insert(v).second);
            }
            CHECK(total == static_cast<std::size_t>(p * p - 1));
            bool all_full = true;
            for (auto s : d.sizes) all_full = all_full && s == g.order();
            CHECK(acts_freely(g) == all_full);
            // A fixed line gives an orbit of length at most r - 1.
            if (!fixed_lines(g).empty()) CHECK(d.sizes.front() <= static_cast<std::size_t>(p - 1));
        }
    }
}

TEST_CASE("property: fixed lines move with conjugation") {
    std::mt19937 rng(17);
    for (int p : {5, 7, 11, 13}) {
        const auto r = make_modulus(p);
        for (auto k : {K::borel, K::split_cartan, K::nonsplit_cartan}) {
            const auto g = standard_group(k, r);
            for (int i = 0; i < 4; ++i) {
                const auto m = random_matrix(rng, r);
                std::vector<ProjectivePoint> moved;
                for (const auto& l : fixed_lines(g)) {
                    const auto [x, y] = m.apply(l.x, l.y);
                    moved.push_back(normalize_line(x, y, p));
                }
                std::sort(moved.begin(), moved.end());
                CHECK(fixed_lines(conjugate(g, m)) == moved);
            }
        }
    }
}

TEST_CASE("property: S4 classification agrees with the element-order profile") {
    // S4 has element orders {1:1, 2:9, 3:8, 4:6}; A4 and the dihedral group of order 24 do not.
    const std::map<std::size_t, std::size_t> s4{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
    std::vector<MatrixGroup> groups{standard_group(K::g95_5, make_modulus(5)), standard_group(K::g7_13, make_modulus(13))};
    for (int p : {5, 7, 11, 13})
        for (const auto& g : sample_groups(make_modulus(p))) groups.push_back(g);
    int s4_seen = 0;
    for (const auto& g : groups) {
        const auto perms = projective_permutations(g);
        const auto t = projective_image(g);
        CHECK(perms.size() == t.order);
        std::map<std::size_t, std::size_t> profile;
        for (const auto& q : perms) ++profile[perm_order(q)];
        const bool is_s4 = t.order == 24 && profile == s4;
        CHECK((t.cls == ProjectiveClass::S4) == is_s4);
        if (t.cls == ProjectiveClass::S4) {
            CHECK(t.center_size == 1);
            ++s4_seen;
        }
    }
    CHECK(s4_seen >= 2);
}
