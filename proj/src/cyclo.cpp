#include "isogate/cyclo.hpp"

#include <algorithm>
#include <sstream>

#include "isogate/embedded_data.hpp"
#include "isogate/error.hpp"

namespace isogate {

namespace {

// FNV-1a of data/cm_j_invariants.txt as shipped.
constexpr std::uint64_t kCmTableChecksum = 0x8095ead5c878b3ffULL;

constexpr std::size_t kSplitSamples = 6;

int roots_mod(const ExactRational& b, const ExactRational& c, const ExactRational& d, std::uint32_t q) {
    const long long bq = b.mod(q), cq = c.mod(q), dq = d.mod(q);
    int n = 0;
    for (long long x = 0; x < q; ++x)
        if ((((x + bq) % q * x + cq) % q * x + dq) % q == 0) ++n;
    return n;
}

}  // namespace

CyclotomicContext::CyclotomicContext(PrimeModulus prime) : p(prime), pstar(quadratic_subfield(prime)) {}

long quadratic_subfield(PrimeModulus p) {
    const long v = p.value();
    return v % 4 == 1 ? v : -v;
}

bool is_square_in_cyclotomic(const ExactRational& q, PrimeModulus p) {
    if (q.is_zero()) throw Error(ErrorKind::ZeroInput, "zero has no square class");
    const SquareClass c = squarefree_part(q);
    return c == 1 || c == quadratic_subfield(p);
}

std::string_view to_string(TwoTorsionVerdict v) {
    switch (v) {
        case TwoTorsionVerdict::yes: return "yes";
        case TwoTorsionVerdict::no: return "no";
        case TwoTorsionVerdict::undetermined_cyclic_cubic: return "undetermined_cyclic_cubic";
    }
    return "?";
}

FullTwoTorsionResult full_two_torsion_over_cyclotomic(const ExactRational& j, PrimeModulus r) {
    FullTwoTorsionResult out;
    out.cubic = two_division_cubic(j);
    switch (out.cubic.shape) {
        case CubicShape::three_rational_roots:
            out.verdict = TwoTorsionVerdict::yes;
            break;
        case CubicShape::one_rational_root:
            out.verdict = is_square_in_cyclotomic(ExactRational(out.cubic.disc_class.representative()), r)
                              ? TwoTorsionVerdict::yes
                              : TwoTorsionVerdict::no;
            break;
        case CubicShape::irreducible:
            // S3 splitting field is not abelian; a C3 field needs 3 | r - 1 to fit.
            if (!out.cubic.disc_class.is_trivial() || (r.value() - 1) % 3 != 0) {
                out.verdict = TwoTorsionVerdict::no;
                break;
            }
            out.verdict = TwoTorsionVerdict::undetermined_cyclic_cubic;
            {
                const CurveModel e = curve_from_j(j);
                const auto rv = static_cast<std::uint32_t>(r.value());
                for (std::uint32_t q = 2 * rv + 1; out.split_samples.size() < kSplitSamples; q += 2 * rv) {
                    if (!is_prime(q)) continue;
                    try {
                        out.split_samples.emplace_back(q, roots_mod(0, e.a4(), e.a6(), q));
                    } catch (const Error&) {
                    }
                }
            }
            break;
    }
    return out;
}

namespace {

std::vector<CmRecord> load_cm_records() {
    const std::string_view text = data::cm_table();
    if (data::fnv1a(text) != kCmTableChecksum)
        throw Error(ErrorKind::DataIntegrity, "CM table checksum mismatch");
    std::vector<CmRecord> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string jtext;
        long disc = 0;
        if (!(fields >> jtext >> disc) || disc >= 0)
            throw Error(ErrorKind::DataIntegrity, "malformed CM record: " + line);
        out.push_back({ExactRational::parse(jtext), disc});
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t k = i + 1; k < out.size(); ++k)
            if (out[i].j == out[k].j) throw Error(ErrorKind::DataIntegrity, "duplicate CM j-invariant");
    if (out.size() != 13) throw Error(ErrorKind::DataIntegrity, "CM table must hold 13 records");
    return out;
}

}  // namespace

const std::vector<CmRecord>& cm_records() {
    static const std::vector<CmRecord> records = load_cm_records();
    return records;
}

std::optional<long> cm_field_discriminant(const ExactRational& j) {
    for (const CmRecord& rec : cm_records())
        if (rec.j == j) return rec.field_discriminant;
    return std::nullopt;
}

bool cm_isogeny_over_cyclotomic(const ExactRational& j, PrimeModulus r) {
    const auto disc = cm_field_discriminant(j);
    if (!disc) throw Error(ErrorKind::NotCmCurve, j.to_string() + " is not a rational CM j-invariant");
    return (-*disc) % r.value() == 0;
}

}  // namespace isogate
