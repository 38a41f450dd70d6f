#include "doctest.h"
#include "isogate/stdgroups.hpp"
#include "util.hpp"

using namespace isogate;
using testutil::kind_of;
using K = StandardGroupKind;

TEST_CASE("standard_group examples") {
    CHECK(standard_group(K::nonsplit_cartan_normalizer, make_modulus(7)).order() == 96);
    CHECK(standard_group(K::g3, make_modulus(5)).order() == 16);
    CHECK(standard_group(K::g7_13, make_modulus(13)).order() == 288);
    CHECK(standard_group(K::borel, make_modulus(5)).order() == 80);
    CHECK(standard_group(K::g95_5, make_modulus(5)).order() == 96);
}

TEST_CASE("standard_group errors") {
    CHECK(kind_of([] { standard_group(K::g7_13, make_modulus(11)); }) == ErrorKind::KindModulusMismatch);
    CHECK(kind_of([] { standard_group(K::g95_5, make_modulus(7)); }) == ErrorKind::KindModulusMismatch);
    CHECK(kind_of([] { standard_group(K::cube_split, make_modulus(11)); }) == ErrorKind::CongruenceViolation);
    CHECK(kind_of([] { verify_membership_formula(K::g7_13, make_modulus(13)); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("verify_membership_formula examples") {
    CHECK(verify_membership_formula(K::nonsplit_cartan_normalizer, make_modulus(11)));
    CHECK(verify_membership_formula(K::split_cartan_normalizer, make_modulus(7)));
    CHECK(verify_membership_formula(K::g3, make_modulus(11)));
}

TEST_CASE("tags round trip") {
    for (auto k : all_kinds()) CHECK(kind_from_tag(tag(k)) == k);
    CHECK(kind_from_tag("cns+") == K::nonsplit_cartan_normalizer);
    CHECK(kind_from_tag("g95") == K::g95_5);
    CHECK_FALSE(kind_from_tag("nope"));
}

TEST_CASE("property: orders, membership formulas and applicability for r <= 37") {
    for (int p : testutil::odd_primes(5, 37)) {
        CAPTURE(p);
        const auto r = make_modulus(p);
        const std::size_t q = p;
        CHECK(standard_group(K::split_cartan, r).order() == (q - 1) * (q - 1));
        CHECK(standard_group(K::split_cartan_normalizer, r).order() == 2 * (q - 1) * (q - 1));
        CHECK(standard_group(K::nonsplit_cartan, r).order() == q * q - 1);
        CHECK(standard_group(K::nonsplit_cartan_normalizer, r).order() == 2 * (q * q - 1));
        CHECK(standard_group(K::borel, r).order() == q * (q - 1) * (q - 1));
        CHECK(standard_group(K::g3, r).order() == 2 * (q * q - 1) / 3);
        if (p % 3 == 1) CHECK(standard_group(K::cube_split, r).order() == 2 * (q - 1) * (q - 1) / 3);

        for (auto k : all_kinds()) {
            if (k == K::g7_13 || k == K::g95_5) continue;
            if (k == K::cube_split && p % 3 != 1) continue;
            CHECK(verify_membership_formula(k, r));
        }
        for (auto k : {K::nonsplit_cartan_normalizer, K::split_cartan_normalizer, K::borel})
            CHECK(is_applicable(standard_group(k, r)));

        CHECK(sl2_part(standard_group(K::split_cartan_normalizer, r)).order() == 2 * (q - 1));
        CHECK(sl2_part(standard_group(K::nonsplit_cartan_normalizer, r)).order() == 2 * (q + 1));
        if (p % 3 == 2) CHECK(sl2_part(standard_group(K::g3, r)).order() == 2 * (q + 1) / 3);

        const auto w = are_conjugate(sl2_part(standard_group(K::split_cartan_normalizer, r)),
                                     split_normalizer_sl2_model(r));
        CHECK(w.has_value());
        CHECK(element_order(nonsplit_generator(r)) == p * p - 1);
    }
}

TEST_CASE("property: nonsplit variants use epsilon(r)") {
    for (int p : testutil::odd_primes(3, 37)) {
        const auto r = make_modulus(p);
        const int eps = epsilon(r).value();
        const auto cns = standard_group(K::nonsplit_cartan, r);
        // (a, eps b; b, a) belongs to C_ns.
        CHECK(cns.contains(ModularMatrix(1, eps, 1, 1, r)));
        CHECK(cns.contains(nonsplit_generator(r)));
    }
}
