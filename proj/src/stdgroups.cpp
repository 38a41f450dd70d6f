#include "isogate/stdgroups.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "isogate/error.hpp"

namespace isogate {

namespace {

struct KindInfo {
    StandardGroupKind kind;
    std::string_view tag;
};

constexpr std::array<KindInfo, 9> kKinds{{
    {StandardGroupKind::borel, "borel"},
    {StandardGroupKind::split_cartan, "cs"},
    {StandardGroupKind::split_cartan_normalizer, "cs+"},
    {StandardGroupKind::nonsplit_cartan, "cns"},
    {StandardGroupKind::nonsplit_cartan_normalizer, "cns+"},
    {StandardGroupKind::g3, "g3"},
    {StandardGroupKind::g7_13, "g7"},
    {StandardGroupKind::g95_5, "g95"},
    {StandardGroupKind::cube_split, "cube"},
}};

void check_modulus(StandardGroupKind kind, int r) {
    if (kind == StandardGroupKind::g7_13 && r != 13)
        throw Error(ErrorKind::KindModulusMismatch, "g7 is defined over F_13 only");
    if (kind == StandardGroupKind::g95_5 && r != 5)
        throw Error(ErrorKind::KindModulusMismatch, "g95 is defined over F_5 only");
    if (kind == StandardGroupKind::cube_split && r % 3 != 1)
        throw Error(ErrorKind::CongruenceViolation,
                    "cube_split needs r = 1 mod 3, got r = " + std::to_string(r));
}

using Set = std::vector<std::uint32_t>;

void push(Set& s, long long a, long long b, long long c, long long d, PrimeModulus r) {
    s.push_back(ModularMatrix(a, b, c, d, r).code());
}

// Closed-form element sets, built entry by entry.
Set closed_form(StandardGroupKind kind, PrimeModulus r) {
    const int p = r.value();
    const int eps = epsilon(r).value();
    Set s;
    switch (kind) {
    case StandardGroupKind::borel:
        for (int a = 1; a < p; ++a)
            for (int b = 0; b < p; ++b)
                for (int d = 1; d < p; ++d) push(s, a, b, 0, d, r);
        break;
    case StandardGroupKind::split_cartan:
    case StandardGroupKind::split_cartan_normalizer:
        for (int a = 1; a < p; ++a)
            for (int d = 1; d < p; ++d) {
                push(s, a, 0, 0, d, r);
                if (kind == StandardGroupKind::split_cartan_normalizer) push(s, 0, a, d, 0, r);
            }
        break;
    case StandardGroupKind::nonsplit_cartan:
    case StandardGroupKind::nonsplit_cartan_normalizer:
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) {
                if (a == 0 && b == 0) continue;
                push(s, a, eps * b, b, a, r);
                if (kind == StandardGroupKind::nonsplit_cartan_normalizer)
                    push(s, a, eps * b, -b, -a, r);
            }
        break;
    case StandardGroupKind::g3: {
        const auto twist = ModularMatrix::diag(1, -1, r);
        Set cubes;
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) {
                if (a == 0 && b == 0) continue;
                cubes.push_back(ModularMatrix(a, eps * b, b, a, r).pow(3).code());
            }
        std::sort(cubes.begin(), cubes.end());
        cubes.erase(std::unique(cubes.begin(), cubes.end()), cubes.end());
        for (auto c : cubes) {
            s.push_back(c);
            s.push_back((twist * ModularMatrix::from_code(c, p)).code());
        }
        break;
    }
    case StandardGroupKind::cube_split:
        for (int a = 1; a < p; ++a)
            for (int b = 1; b < p; ++b) {
                const FieldElement ratio = FieldElement(a, r) * FieldElement(b, r).inverse();
                if (!is_cube(ratio)) continue;
                push(s, a, 0, 0, b, r);
                push(s, 0, a, b, 0, r);
            }
        break;
    case StandardGroupKind::g7_13:
    case StandardGroupKind::g95_5:
        throw Error(ErrorKind::InvalidArgument, "no closed form for generator-defined groups");
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

}  // namespace

std::string_view tag(StandardGroupKind kind) {
    for (const auto& k : kKinds)
        if (k.kind == kind) return k.tag;
    return "?";
}

std::optional<StandardGroupKind> kind_from_tag(std::string_view t) {
    for (const auto& k : kKinds)
        if (k.tag == t) return k.kind;
    return std::nullopt;
}

const std::vector<StandardGroupKind>& all_kinds() {
    static const std::vector<StandardGroupKind> kinds = [] {
        std::vector<StandardGroupKind> v;
        for (const auto& k : kKinds) v.push_back(k.kind);
        return v;
    }();
    return kinds;
}

ModularMatrix nonsplit_generator(PrimeModulus r) {
    const int p = r.value();
    const int eps = epsilon(r).value();
    const int target = p * p - 1;
    for (int b = 1; b < p; ++b)
        for (int a = 0; a < p; ++a) {
            const ModularMatrix m(a, eps * b, b, a, r);
            if (element_order(m) == target) return m;
        }
    throw Error(ErrorKind::DataIntegrity, "C_ns has no element of order r^2 - 1");
}

std::vector<ModularMatrix> natural_generators(StandardGroupKind kind, PrimeModulus r) {
    check_modulus(kind, r.value());
    const int g = primitive_root(r).value();
    switch (kind) {
    case StandardGroupKind::borel:
        return {ModularMatrix::diag(g, 1, r), ModularMatrix::diag(1, g, r), {1, 1, 0, 1, r}};
    case StandardGroupKind::split_cartan:
        return {ModularMatrix::diag(g, 1, r), ModularMatrix::diag(1, g, r)};
    case StandardGroupKind::split_cartan_normalizer:
        return {ModularMatrix::diag(g, 1, r), ModularMatrix::diag(1, g, r), {0, 1, 1, 0, r}};
    case StandardGroupKind::nonsplit_cartan:
        return {nonsplit_generator(r)};
    case StandardGroupKind::nonsplit_cartan_normalizer:
        return {nonsplit_generator(r), ModularMatrix::diag(1, -1, r)};
    case StandardGroupKind::g3:
        return {nonsplit_generator(r).pow(3), ModularMatrix::diag(1, -1, r)};
    case StandardGroupKind::g7_13:
        return {ModularMatrix::diag(2, 2, r), ModularMatrix::diag(2, 3, r), {0, -1, 1, 0, r},
                {1, 1, -1, 1, r}};
    case StandardGroupKind::g95_5:
        return {ModularMatrix::diag(2, 1, r), ModularMatrix::diag(1, 2, r), {0, -1, 1, 0, r},
                {1, 1, 1, -1, r}};
    case StandardGroupKind::cube_split:
        return {ModularMatrix::diag(g, g, r), ModularMatrix::diag(mod_pow(g, 3, r.value()), 1, r),
                {0, 1, 1, 0, r}};
    }
    throw Error(ErrorKind::InvalidArgument, "unknown group kind");
}

MatrixGroup standard_group(StandardGroupKind kind, PrimeModulus r) {
    check_modulus(kind, r.value());
    if (kind == StandardGroupKind::g7_13 || kind == StandardGroupKind::g95_5)
        return close(natural_generators(kind, r));
    MatrixGroup closed = close(natural_generators(kind, r));
    const Set formula = closed_form(kind, r);
    if (!std::equal(closed.codes().begin(), closed.codes().end(), formula.begin(), formula.end()))
        throw Error(ErrorKind::DataIntegrity,
                    "closed form of " + std::string(tag(kind)) + " disagrees with its generators");
    return closed;
}

bool verify_membership_formula(StandardGroupKind kind, PrimeModulus r) {
    check_modulus(kind, r.value());
    const MatrixGroup closed = close(natural_generators(kind, r));
    const Set formula = closed_form(kind, r);
    return std::equal(closed.codes().begin(), closed.codes().end(), formula.begin(), formula.end());
}

MatrixGroup split_normalizer_sl2_model(PrimeModulus r) {
    const int p = r.value();
    Set s;
    for (int a = 1; a < p; ++a) {
        const int ai = mod_inverse(a, p);
        push(s, a, 0, 0, ai, r);
        push(s, 0, a, -ai, 0, r);
    }
    std::sort(s.begin(), s.end());
    return MatrixGroup::from_closed_set(p, std::move(s));
}

}  // namespace isogate
