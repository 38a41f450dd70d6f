#include <numeric>
#include <random>

#include "doctest.h"
#include "isogate/modcurve.hpp"
#include "util.hpp"

using namespace isogate;
using testutil::kind_of;

namespace {

std::array<long long, 5> small_coeffs(const CurveModel& e) {
    return {e.a1().numerator().get_si(), e.a2().numerator().get_si(), e.a3().numerator().get_si(),
            e.a4().numerator().get_si(), e.a6().numerator().get_si()};
}

bool good_at(const CurveModel& e, std::uint32_t q) { return discriminant(e).mod(q) != 0; }

}  // namespace

TEST_CASE("count_points examples") {
    CHECK(count_points(CurveModel::short_form(1, 0), 5) == 4);
    CHECK(count_points(CurveModel::short_form(0, 1), 5) == 6);
    CHECK(count_points_yscan(CurveModel::short_form(1, 0), 5) == 4);
    CHECK(kind_of([] { count_points(CurveModel::short_form(1, 0), 2); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { count_points(CurveModel::short_form(1, 0), 9); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { count_points(CurveModel::short_form(-1, 0), 2'000'003); }) == ErrorKind::InvalidArgument);
    // y^2 = x^3 - x has bad reduction at 2 only; x^3 + 1 is singular mod 3.
    CHECK(kind_of([] { count_points(CurveModel::short_form(0, 1), 3); }) == ErrorKind::BadReduction);
    CHECK(kind_of([] { count_points(CurveModel::short_form(ExactRational::parse("1/3"), 1), 3); }) ==
          ErrorKind::BadReduction);
}

TEST_CASE("rational_point_search examples") {
    CHECK(rational_point_search(named_curve("X0(14)").model, 1000).size() == 5);
    CHECK(rational_point_search(named_curve("X0(11)").model, 1000).size() == 4);
    CHECK(rational_point_search(named_curve("X0(20)").model, 1000).size() == 5);
    const auto pts = rational_point_search(CurveModel::short_form(-1, 0), 10);
    CHECK(pts == std::vector<AffinePoint>{{-1, 0}, {0, 0}, {1, 0}});
    CHECK(kind_of([] { rational_point_search(CurveModel::short_form(-1, 0), 0); }) == ErrorKind::RangeExceeded);
    CHECK(kind_of([] { rational_point_search(CurveModel::short_form(ExactRational::parse("1/2"), 0), 5); }) ==
          ErrorKind::RangeExceeded);
}

TEST_CASE("group law on the named curves") {
    for (const auto& c : named_curves()) {
        const auto pts = rational_point_search(c.model, 100);
        int best = 1;
        for (const auto& p : pts) {
            CHECK(on_curve(c.model, p));
            const auto ord = point_order(c.model, p);
            REQUIRE(ord.has_value());
            CHECK(c.expected_rational_torsion % *ord == 0);
            best = std::max(best, *ord);
        }
        CHECK(best == c.expected_rational_torsion);
        CHECK(static_cast<int>(pts.size()) + 1 == c.expected_rational_torsion);
    }
    CHECK(kind_of([] { named_curve("X0(37)"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("two_division_shape examples") {
    const auto x14 = two_division_shape(named_curve("X0(14)"));
    CHECK(x14.shape == CubicShape::one_rational_root);
    CHECK(x14.disc_class == -7);
    CHECK(two_division_shape(CurveModel::short_form(-1, 0)).shape == CubicShape::three_rational_roots);
    CHECK(two_division_shape(named_curve("X0(11)")).shape == CubicShape::irreducible);
}

TEST_CASE("torsion_bound_cyclotomic on the stated prime lists") {
    struct Case {
        const char* label;
        int r;
        std::vector<std::uint32_t> qs;
    };
    const std::vector<Case> cases{{"X0(14)", 7, {29, 43, 71, 113, 127}},
                                  {"X0(20)", 5, {11, 31, 41, 61, 71}},
                                  {"X0(11)", 11, {23, 67, 89, 199}}};
    for (const auto& c : cases) {
        const auto& nc = named_curve(c.label);
        const auto rep = torsion_bound_cyclotomic(nc, make_modulus(c.r), c.qs);
        long long g = 0;
        for (std::size_t i = 0; i < c.qs.size(); ++i) {
            const long long n = oracle::count_points(small_coeffs(nc.model), c.qs[i]);
            CHECK(rep.counts[i] == n);
            g = std::gcd(g, n);
        }
        CHECK(rep.gcd_bound == g);
        CHECK(rep.gcd_bound % rep.rational_points_found == 0);
        CHECK(rep.flag == kUpperBoundFlag);
    }
    // These are the values the counts actually give (see the README note on torsion bounds).
    CHECK(torsion_bound_cyclotomic(named_curve("X0(14)"), make_modulus(7), {29, 43, 71, 113, 127}).gcd_bound == 36);
    CHECK(torsion_bound_cyclotomic(named_curve("X0(20)"), make_modulus(5), {11, 31, 41, 61, 71}).gcd_bound == 12);
    CHECK(torsion_bound_cyclotomic(named_curve("X0(11)"), make_modulus(11), {23, 67, 89, 199}).gcd_bound == 25);

    using Primes = std::vector<std::uint32_t>;
    const auto& x14 = named_curve("X0(14)");
    CHECK(kind_of([&] { torsion_bound_cyclotomic(x14, make_modulus(7), Primes{}); }) == ErrorKind::NoValidPrimes);
    CHECK(kind_of([&] { torsion_bound_cyclotomic(x14, make_modulus(7), Primes{31}); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { torsion_bound_cyclotomic(x14, make_modulus(7), Primes{7}); }) == ErrorKind::InvalidArgument);
    // 15 = 1 mod 7 but is not prime.
    CHECK(kind_of([&] { torsion_bound_cyclotomic(x14, make_modulus(7), Primes{15}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("default split primes") {
    const auto& c = named_curve("X0(11)");
    const auto qs = default_split_primes(c.model, make_modulus(5));
    CHECK(qs.size() == kDefaultPrimeCount);
    for (auto q : qs) {
        CHECK(q % 5 == 1);
        CHECK(oracle::is_prime(q));
        CHECK(good_at(c.model, q));
    }
    CHECK(std::is_sorted(qs.begin(), qs.end()));
    const auto rep = torsion_bound_cyclotomic(c, make_modulus(5));
    CHECK(rep.primes == qs);
}

TEST_CASE("property: counts agree with the double-loop oracle and with Hasse") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> d(-20, 20);
    int checked = 0;
    for (int i = 0; i < 60; ++i) {
        const long long a1 = d(rng), a2 = d(rng), a3 = d(rng), a4 = d(rng), a6 = d(rng);
        std::optional<CurveModel> e;
        try {
            e.emplace(a1, a2, a3, a4, a6);
        } catch (const Error&) {
            continue;
        }
        for (int q : testutil::odd_primes(3, 140)) {
            if (!good_at(*e, q)) {
                CHECK(kind_of([&] { count_points(*e, q); }) == ErrorKind::BadReduction);
                continue;
            }
            const long long n = count_points(*e, q);
            CHECK(n == oracle::count_points({a1, a2, a3, a4, a6}, q));
            CHECK(n == count_points(*e, q, kernels::Isa::scalar));
            CHECK(n == count_points_yscan(*e, q));
            CHECK((n - q - 1) * (n - q - 1) <= 4LL * q);
            ++checked;
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("property: x-scan and y-scan agree at large split primes") {
    for (const auto& c : named_curves())
        for (int r : {5, 7, 11, 13})
            for (auto q : default_split_primes(c.model, make_modulus(r), 3)) {
                const long long n = count_points(c.model, q);
                CHECK(n == count_points_yscan(c.model, q));
                CHECK(static_cast<double>((n - q - 1) * (n - q - 1)) <= 4.0 * q);
            }
    const auto e = CurveModel::short_form(-1, 1);
    for (std::uint32_t q : {100003u, 999983u}) CHECK(count_points(e, q) == count_points_yscan(e, q));
}

TEST_CASE("property: gcd bound is monotone and sandwiches the rational points") {
    for (const auto& c : named_curves()) {
        for (int r : {5, 7, 11}) {
            const auto qs = default_split_primes(c.model, make_modulus(r), 10);
            long long prev = 0;
            for (std::size_t k = 1; k <= qs.size(); ++k) {
                const std::vector<std::uint32_t> prefix(qs.begin(), qs.begin() + k);
                const auto rep = torsion_bound_cyclotomic(c, make_modulus(r), prefix, 100);
                if (prev) CHECK(prev % rep.gcd_bound == 0);
                CHECK(rep.gcd_bound % rep.rational_points_found == 0);
                prev = rep.gcd_bound;
            }
        }
    }
}
