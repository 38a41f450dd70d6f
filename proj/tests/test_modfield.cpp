#include <random>

#include "doctest.h"
#include "isogate/error.hpp"
#include "isogate/modfield.hpp"
#include "util.hpp"

using namespace isogate;

using testutil::kind_of;

static std::vector<int> odd_primes() { return testutil::odd_primes(3, kMaxModulus); }

TEST_CASE("make_modulus examples") {
    CHECK(make_modulus(7).value() == 7);
    CHECK(kind_of([] { make_modulus(9); }) == ErrorKind::CompositeModulus);
    CHECK(kind_of([] { make_modulus(2); }) == ErrorKind::CompositeModulus);
    CHECK(kind_of([] { make_modulus(101); }) == ErrorKind::CompositeModulus);
    CHECK(kind_of([] { make_modulus(-7); }) == ErrorKind::CompositeModulus);
    CHECK(make_modulus(97).value() == 97);
}

TEST_CASE("is_square examples") {
    CHECK(is_square(FieldElement(1, make_modulus(5))));
    CHECK_FALSE(is_square(FieldElement(2, make_modulus(5))));
    CHECK(is_square(FieldElement(2, make_modulus(17))));
    CHECK(is_square(FieldElement(0, make_modulus(11))));
}

TEST_CASE("epsilon examples") {
    CHECK(epsilon(make_modulus(7)).value() == 6);
    CHECK(epsilon(make_modulus(5)).value() == 2);
    CHECK(epsilon(make_modulus(13)).value() == 2);
    CHECK(epsilon(make_modulus(17)).value() == 3);
}

TEST_CASE("is_cube examples") {
    const auto r13 = make_modulus(13);
    CHECK(is_cube(FieldElement(8, r13)));
    CHECK_FALSE(is_cube(FieldElement(2, r13)));
    CHECK(is_cube(FieldElement(3, make_modulus(5))));
    CHECK(kind_of([&] { is_cube(FieldElement(0, r13)); }) == ErrorKind::ZeroInput);
}

TEST_CASE("field arithmetic") {
    const auto r = make_modulus(11);
    const FieldElement a(7, r), b(-3, r);
    CHECK(b.value() == 8);
    CHECK((a + b).value() == 4);
    CHECK((a - b).value() == 10);
    CHECK((a * b).value() == 1);
    CHECK((-a).value() == 4);
    CHECK((a * a.inverse()).value() == 1);
    CHECK(a.pow(10).value() == 1);
    CHECK(kind_of([&] { FieldElement(0, r).inverse(); }) == ErrorKind::ZeroInput);
    CHECK(kind_of([&] { (void)(a + FieldElement(1, make_modulus(13))); }) == ErrorKind::ModulusMismatch);
}

TEST_CASE("property: (r-1)/2 nonzero squares for every r") {
    for (int p : odd_primes()) {
        const auto r = make_modulus(p);
        int squares = 0;
        for (int a = 1; a < p; ++a) squares += is_square(FieldElement(a, r));
        CHECK(squares == (p - 1) / 2);
    }
}

TEST_CASE("property: epsilon is a non-residue, -1 when r = 3 mod 4") {
    for (int p : odd_primes()) {
        const auto r = make_modulus(p);
        const FieldElement e = epsilon(r);
        CHECK_FALSE(is_square(e));
        if (p % 4 == 3) CHECK(e.value() == p - 1);
        else {
            for (int k = 2; k < e.value(); ++k) CHECK(is_square(FieldElement(k, r)));
        }
    }
}

TEST_CASE("property: cube counts") {
    for (int p : odd_primes()) {
        const auto r = make_modulus(p);
        int cubes = 0;
        for (int a = 1; a < p; ++a) cubes += is_cube(FieldElement(a, r));
        CHECK(cubes == (p % 3 == 1 ? (p - 1) / 3 : p - 1));
    }
}

TEST_CASE("property: primitive root has full order and random arithmetic matches integers") {
    std::mt19937 rng(7);
    for (int p : odd_primes()) {
        const auto r = make_modulus(p);
        const FieldElement g = primitive_root(r);
        for (int k = 1; k < p - 1; ++k) CHECK(g.pow(k).value() != 1);
        CHECK(g.pow(p - 1).value() == 1);
        for (int i = 0; i < 20; ++i) {
            const long long x = static_cast<long long>(rng()) - (1LL << 31), y = rng();
            CHECK((FieldElement(x, r) * FieldElement(y, r)).value() == oracle::md((x % p) * (y % p), p));
        }
    }
}
