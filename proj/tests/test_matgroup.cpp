#include <random>

#include "doctest.h"
#include "isogate/matgroup.hpp"
#include "isogate/stdgroups.hpp"
#include "util.hpp"

using namespace isogate;
using testutil::kind_of;

namespace {

ModularMatrix random_matrix(std::mt19937& rng, PrimeModulus r) {
    std::uniform_int_distribution<int> d(0, r.value() - 1);
    for (;;) {
        const int a = d(rng), b = d(rng), c = d(rng), e = d(rng);
        if (oracle::md(1LL * a * e - 1LL * b * c, r.value()) != 0) return {a, b, c, e, r};
    }
}

std::set<oracle::Mat> as_set(const MatrixGroup& g) {
    std::set<oracle::Mat> s;
    for (const auto& m : g.elements()) s.insert({m.a11(), m.a12(), m.a21(), m.a22()});
    return s;
}

bool brute_conjugate(const MatrixGroup& g, const MatrixGroup& h) {
    if (g.order() != h.order()) return false;
    const auto target = as_set(h);
    const int r = g.r();
    for (const auto& m : general_linear(PrimeModulus(r)).elements()) {
        const auto mi = m.inverse();
        bool ok = true;
        for (const auto& x : g.elements()) {
            const auto y = m * x * mi;
            if (!target.count({y.a11(), y.a12(), y.a21(), y.a22()})) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("matrix_algebra examples") {
    const auto r7 = make_modulus(7);
    const ModularMatrix m(3, 5, 1, 2, r7);
    const ModularMatrix id = ModularMatrix::identity(r7);
    const ModularMatrix pair[] = {id, m};
    CHECK(std::get<ModularMatrix>(matrix_algebra(MatrixOp::mul, pair)) == m);
    const ModularMatrix rot[] = {ModularMatrix(0, 1, -1, 0, r7)};
    CHECK(std::get<FieldElement>(matrix_algebra(MatrixOp::trace, rot)).value() == 0);
    const ModularMatrix d[] = {ModularMatrix::diag(2, 3, make_modulus(13))};
    CHECK(std::get<FieldElement>(matrix_algebra(MatrixOp::det, d)).value() == 6);
    const ModularMatrix inv[] = {m};
    CHECK(std::get<ModularMatrix>(matrix_algebra(MatrixOp::inv, inv)) * m == id);
    const ModularMatrix mixed[] = {m, ModularMatrix::identity(make_modulus(5))};
    CHECK(kind_of([&] { matrix_algebra(MatrixOp::mul, mixed); }) == ErrorKind::ModulusMismatch);
}

TEST_CASE("matrices: singular input, text round trip, powers") {
    const auto r = make_modulus(11);
    CHECK(kind_of([&] { ModularMatrix(1, 2, 2, 4, r); }) == ErrorKind::SingularMatrix);
    const ModularMatrix m(-1, 4, 13, 7, r);
    CHECK(m.to_string() == "[[10,4],[2,7]] mod 11");
    CHECK(ModularMatrix::parse(m.to_string()) == m);
    CHECK(kind_of([] { ModularMatrix::parse("[[1,2],[3]] mod 7"); }) == ErrorKind::ParseError);
    CHECK(m.pow(element_order(m)) == ModularMatrix::identity(r));
    CHECK(m.conjugated_by(m) == m);
}

TEST_CASE("close examples") {
    const auto r7 = make_modulus(7), r5 = make_modulus(5);
    CHECK(close({ModularMatrix::identity(r7)}).order() == 1);
    CHECK(close({ModularMatrix(0, 1, -1, 0, r5)}).order() == 4);
    const int g = primitive_root(r5).value();
    // Both generators are upper triangular: the closure is {[[a,b],[0,1]]}, order r(r-1).
    const auto affine = close({ModularMatrix(1, 1, 0, 1, r5), ModularMatrix::diag(g, 1, r5)});
    CHECK(affine.order() == 20);
    CHECK(oracle::closure({{1, 1, 0, 1}, {g, 0, 0, 1}}, 5).size() == 20);
    const auto full = close({ModularMatrix(1, 1, 0, 1, r5), ModularMatrix::diag(g, 1, r5), ModularMatrix(0, 1, 1, 0, r5)});
    CHECK(full.order() == 480);
    CHECK(full == general_linear(r5));
    CHECK(kind_of([&] { close({ModularMatrix::identity(r5), ModularMatrix::identity(r7)}); }) == ErrorKind::ModulusMismatch);
}

TEST_CASE("sl2_part examples") {
    CHECK(sl2_part(general_linear(make_modulus(5))).order() == 120);
    CHECK(sl2_part(standard_group(StandardGroupKind::split_cartan_normalizer, make_modulus(7))).order() == 12);
    CHECK(sl2_part(standard_group(StandardGroupKind::nonsplit_cartan_normalizer, make_modulus(7))).order() == 16);
}

TEST_CASE("are_conjugate examples") {
    const auto r5 = make_modulus(5), r7 = make_modulus(7);
    const auto cs5 = standard_group(StandardGroupKind::split_cartan, r5);
    std::vector<std::uint32_t> t;
    for (const auto& m : cs5.elements()) t.push_back(m.transpose().code());
    std::sort(t.begin(), t.end());
    const auto cs5t = MatrixGroup::from_closed_set(5, t);
    const auto w = are_conjugate(cs5, cs5t);
    REQUIRE(w.has_value());
    CHECK(conjugate(cs5, *w) == cs5t);
    CHECK_FALSE(are_conjugate(standard_group(StandardGroupKind::split_cartan, r7),
                              standard_group(StandardGroupKind::nonsplit_cartan, r7)));
    std::mt19937 rng(11);
    const auto cns = standard_group(StandardGroupKind::nonsplit_cartan_normalizer, r7);
    for (int i = 0; i < 10; ++i) {
        const auto m = random_matrix(rng, r7);
        const auto h = conjugate(cns, m);
        const auto wit = are_conjugate(cns, h);
        REQUIRE(wit.has_value());
        CHECK(conjugate(cns, *wit) == h);
    }
}

TEST_CASE("is_applicable examples") {
    const auto r7 = make_modulus(7);
    CHECK(is_applicable(general_linear(r7)));
    CHECK_FALSE(is_applicable(special_linear(r7)));
    CHECK(is_applicable(standard_group(StandardGroupKind::nonsplit_cartan_normalizer, r7)));
}

TEST_CASE("from_closed_set rejects a non-group") {
    CHECK(kind_of([] {
              MatrixGroup::from_closed_set(5, {ModularMatrix::identity(make_modulus(5)).code(),
                                               ModularMatrix::diag(2, 1, make_modulus(5)).code()});
          }) == ErrorKind::DataIntegrity);
}

TEST_CASE("property: closure agrees with a naive oracle and satisfies Lagrange") {
    std::mt19937 rng(2024);
    for (int p : {3, 5, 7, 11, 13}) {
        const auto r = make_modulus(p);
        const std::size_t gl = general_linear_order(p);
        for (int trial = 0; trial < 12; ++trial) {
            const int k = 1 + trial % 3;
            std::vector<ModularMatrix> gens;
            std::vector<oracle::Mat> ogens;
            for (int i = 0; i < k; ++i) {
                gens.push_back(random_matrix(rng, r));
                ogens.push_back({gens.back().a11(), gens.back().a12(), gens.back().a21(), gens.back().a22()});
            }
            const auto g = close(gens);
            CHECK(gl % g.order() == 0);
            if (p <= 7) CHECK(as_set(g) == oracle::closure(ogens, p));
            for (const auto& x : gens) CHECK(g.contains(x));
        }
    }
}

TEST_CASE("property: sl2_part is idempotent and monotone") {
    std::mt19937 rng(5);
    const auto r = make_modulus(7);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_matrix(rng, r), b = random_matrix(rng, r);
        const auto h = close({a});
        const auto g = close({a, b});
        const auto sh = sl2_part(h), sg = sl2_part(g);
        CHECK(sl2_part(sh) == sh);
        CHECK(is_subgroup(sh, sg));
        CHECK(g.order() / sg.order() == determinant_image(g).size());
    }
}

TEST_CASE("property: conjugacy prefilter agrees with brute force on 1000 random pairs") {
    std::mt19937 rng(99);
    const auto r = make_modulus(5);
    int conj = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto g = close({random_matrix(rng, r)});
        // Half of the pairs are conjugate by construction.
        const auto h = trial % 2 ? conjugate(g, random_matrix(rng, r)) : close({random_matrix(rng, r)});
        const bool fast = are_conjugate(g, h).has_value();
        CHECK(fast == brute_conjugate(g, h));
        conj += fast;
        CHECK(are_conjugate(g, g).has_value());
        if (fast) {
            const auto w = *are_conjugate(g, h);
            CHECK(conjugate(h, w.inverse()) == g);
            CHECK(g.fingerprint() == h.fingerprint());
            CHECK(determinant_image(g) == determinant_image(h));
        }
    }
    CHECK(conj >= 500);
}

TEST_CASE("property: is_applicable is conjugation invariant") {
    std::mt19937 rng(3);
    for (int p : {5, 7, 11}) {
        const auto r = make_modulus(p);
        for (auto kind : {StandardGroupKind::borel, StandardGroupKind::split_cartan_normalizer,
                          StandardGroupKind::nonsplit_cartan_normalizer, StandardGroupKind::split_cartan}) {
            const auto g = standard_group(kind, r);
            for (int i = 0; i < 3; ++i) CHECK(is_applicable(conjugate(g, random_matrix(rng, r))) == is_applicable(g));
        }
    }
}
