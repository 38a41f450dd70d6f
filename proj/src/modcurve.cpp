#include "isogate/modcurve.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>

#include "isogate/embedded_data.hpp"
#include "isogate/error.hpp"

namespace isogate {

namespace {

struct ReducedCurve {
    std::uint32_t b2, b4, b6;  // mod q
};

ReducedCurve reduce(const CurveModel& e, std::uint32_t q) {
    if (q < 3 || q % 2 == 0 || q > kernels::kMaxKernelPrime || !is_prime(q))
        throw Error(ErrorKind::InvalidArgument, "point counting needs an odd prime q <= 10^6");
    // ExactRational::mod throws BadReduction for q-adic denominators.
    for (const ExactRational* a : {&e.a1(), &e.a2(), &e.a3(), &e.a4(), &e.a6()}) (void)a->mod(q);
    if (discriminant(e).mod(q) == 0)
        throw Error(ErrorKind::BadReduction, "discriminant vanishes mod " + std::to_string(q));
    return {static_cast<std::uint32_t>(e.b2().mod(q)), static_cast<std::uint32_t>(e.b4().mod(q)),
            static_cast<std::uint32_t>(e.b6().mod(q))};
}

// (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6.
kernels::CubicModQ completed_square(const ReducedCurve& c, std::uint32_t q) {
    return {q, 4 % q, c.b2, static_cast<std::uint32_t>(2ULL * c.b4 % q), c.b6};
}

}  // namespace

long long count_points(const CurveModel& e, std::uint32_t q, kernels::Isa isa) {
    const auto f = completed_square(reduce(e, q), q);
    const auto chi = kernels::quadratic_character_table(q);
    return static_cast<long long>(q) + 1 + kernels::character_sum(f, chi, isa);
}

long long count_points_yscan(const CurveModel& e, std::uint32_t q) {
    const auto f = completed_square(reduce(e, q), q);
    std::vector<std::uint32_t> hist(q, 0), roots(q, 0);
    for (std::uint64_t x = 0; x < q; ++x) {
        const std::uint64_t v = (((f.c3 * x + f.c2) % q * x + f.c1) % q * x + f.c0) % q;
        ++hist[v];
    }
    for (std::uint64_t w = 0; w < q; ++w) ++roots[w * w % q];
    long long total = 1;
    for (std::uint32_t v = 0; v < q; ++v) total += static_cast<long long>(hist[v]) * roots[v];
    return total;
}

// ---------------------------------------------------------------------------
// Group law

bool on_curve(const CurveModel& e, const AffinePoint& p) {
    const auto& [x, y] = p;
    return y * y + e.a1() * x * y + e.a3() * y ==
           x * x * x + e.a2() * x * x + e.a4() * x + e.a6();
}

CurvePoint add_points(const CurveModel& e, const CurvePoint& p, const CurvePoint& q) {
    if (!p) return q;
    if (!q) return p;
    const auto& [x1, y1] = *p;
    const auto& [x2, y2] = *q;
    if (x1 == x2 && y1 + y2 + e.a1() * x2 + e.a3() == ExactRational(0)) return std::nullopt;
    ExactRational lambda, nu;
    if (x1 != x2) {
        lambda = (y2 - y1) / (x2 - x1);
        nu = (y1 * x2 - y2 * x1) / (x2 - x1);
    } else {
        const ExactRational den = ExactRational(2) * y1 + e.a1() * x1 + e.a3();
        lambda = (ExactRational(3) * x1 * x1 + ExactRational(2) * e.a2() * x1 + e.a4() - e.a1() * y1) / den;
        nu = (-(x1 * x1 * x1) + e.a4() * x1 + ExactRational(2) * e.a6() - e.a3() * y1) / den;
    }
    const ExactRational x3 = lambda * lambda + e.a1() * lambda - e.a2() - x1 - x2;
    const ExactRational y3 = -(lambda + e.a1()) * x3 - nu - e.a3();
    return AffinePoint{x3, y3};
}

std::optional<int> point_order(const CurveModel& e, const CurvePoint& p, int max_order) {
    CurvePoint acc = p;
    for (int n = 1; n <= max_order; ++n) {
        if (!acc) return n;
        acc = add_points(e, acc, p);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Point search

namespace {

using i128 = __int128;

i128 isqrt128(i128 n) {
    i128 s = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
    while (s > 0 && s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

std::int64_t small_coefficient(const ExactRational& a) {
    constexpr long kLimit = 1'000'000;
    if (!a.is_integer() || abs(a.numerator()) > kLimit)
        throw Error(ErrorKind::RangeExceeded, "point search needs integer coefficients up to 10^6");
    return a.numerator().get_si();
}

}  // namespace

std::vector<AffinePoint> rational_point_search(const CurveModel& e, std::int64_t height_bound) {
    if (height_bound < 1 || height_bound > 10'000)
        throw Error(ErrorKind::RangeExceeded, "height bound must lie in [1, 10^4]");
    const i128 a1 = small_coefficient(e.a1()), a2 = small_coefficient(e.a2()),
               a3 = small_coefficient(e.a3()), a4 = small_coefficient(e.a4()),
               a6 = small_coefficient(e.a6());
    const i128 h = height_bound;
    std::vector<AffinePoint> out;
    for (i128 b = 1; b <= h; ++b) {
        const i128 b2 = b * b, b3 = b2 * b, b4 = b2 * b2, b6 = b3 * b3;
        for (i128 a = -h; a <= h; ++a) {
            if (std::gcd(static_cast<std::int64_t>(a < 0 ? -a : a), static_cast<std::int64_t>(b)) != 1)
                continue;
            // c^2 + P c - R = 0 after clearing denominators by b^6.
            const i128 rhs = a * a * a + a2 * a * a * b2 + a4 * a * b4 + a6 * b6;
            const i128 lin = a1 * a * b + a3 * b3;
            const i128 disc = lin * lin + 4 * rhs;
            if (disc < 0) continue;
            const i128 s = isqrt128(disc);
            if (s * s != disc || ((s + lin) & 1) != 0) continue;
            for (const i128 c : {(-lin + s) / 2, (-lin - s) / 2}) {
                if (c > h || c < -h) continue;
                AffinePoint p{ExactRational(static_cast<long long>(a)) / ExactRational(static_cast<long long>(b2)),
                              ExactRational(static_cast<long long>(c)) / ExactRational(static_cast<long long>(b3))};
                if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
                if (s == 0) break;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const AffinePoint& l, const AffinePoint& r) {
        return l.x != r.x ? l.x < r.x : l.y < r.y;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Named curves

namespace {

std::vector<NamedCurve> load_named_curves() {
    std::vector<NamedCurve> curves;
    std::istringstream in{std::string(data::x0_curves())};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string label;
        long long a[5];
        int torsion = 0;
        if (!(fields >> label >> a[0] >> a[1] >> a[2] >> a[3] >> a[4] >> torsion))
            throw Error(ErrorKind::DataIntegrity, "malformed curve record: " + line);
        NamedCurve c{label, CurveModel(a[0], a[1], a[2], a[3], a[4]), torsion};

        bool found = false;
        for (const AffinePoint& p : rational_point_search(c.model, 100)) {
            if (point_order(c.model, p) == torsion) {
                found = true;
                break;
            }
        }
        if (!found)
            throw Error(ErrorKind::DataIntegrity, label + ": no rational point of the expected order");

        int checked = 0;
        for (std::uint32_t q : small_primes(1000)) {
            if (checked == 5) break;
            if (q == 2) continue;
            try {
                const long long n = count_points(c.model, q);
                const double dev = std::fabs(static_cast<double>(n) - (q + 1.0));
                if (dev > 2.0 * std::sqrt(static_cast<double>(q)))
                    throw Error(ErrorKind::DataIntegrity, label + ": count violates the Hasse bound");
                ++checked;
            } catch (const Error& err) {
                if (err.kind() != ErrorKind::BadReduction) throw;
            }
        }
        curves.push_back(std::move(c));
    }
    return curves;
}

}  // namespace

const std::vector<NamedCurve>& named_curves() {
    static const std::vector<NamedCurve> curves = load_named_curves();
    return curves;
}

const NamedCurve& named_curve(std::string_view label) {
    for (const NamedCurve& c : named_curves())
        if (c.label == label) return c;
    throw Error(ErrorKind::InvalidArgument, "unknown curve label " + std::string(label));
}

CubicFactorType two_division_shape(const CurveModel& e) {
    // 4x^3 + b2 x^2 + 2 b4 x + b6, made monic.
    return analyze_cubic(e.b2() / ExactRational(4), e.b4() / ExactRational(2), e.b6() / ExactRational(4));
}

CubicFactorType two_division_shape(const NamedCurve& c) { return two_division_shape(c.model); }

// ---------------------------------------------------------------------------
// Torsion bounds

std::vector<std::uint32_t> default_split_primes(const CurveModel& e, PrimeModulus r, std::size_t count) {
    const std::uint32_t rv = static_cast<std::uint32_t>(r.value());
    const ExactRational disc = discriminant(e);
    std::vector<std::uint32_t> out;
    for (std::uint32_t q = 2 * rv + 1; q <= kernels::kMaxKernelPrime && out.size() < count; q += 2 * rv) {
        if (!is_prime(q)) continue;
        try {
            for (const ExactRational* a : {&e.a1(), &e.a2(), &e.a3(), &e.a4(), &e.a6()}) (void)a->mod(q);
            if (disc.mod(q) == 0) continue;
        } catch (const Error&) {
            continue;
        }
        out.push_back(q);
    }
    if (out.empty()) throw Error(ErrorKind::NoValidPrimes, "no good split prime below 10^6");
    return out;
}

TorsionBoundReport torsion_bound_cyclotomic(const NamedCurve& c, PrimeModulus r,
                                            const std::vector<std::uint32_t>& qs,
                                            std::int64_t height_bound) {
    if (qs.empty()) throw Error(ErrorKind::NoValidPrimes, "empty prime list");
    TorsionBoundReport rep;
    rep.label = c.label;
    rep.r = r;
    for (std::uint32_t q : qs) {
        if (!is_prime(q) || q % static_cast<std::uint32_t>(r.value()) != 1)
            throw Error(ErrorKind::InvalidArgument,
                        std::to_string(q) + " is not a prime congruent to 1 mod " + std::to_string(r.value()));
        const long long n = count_points(c.model, q);
        rep.primes.push_back(q);
        rep.counts.push_back(n);
        rep.gcd_bound = std::gcd(rep.gcd_bound, n);
    }
    rep.rational_points_found = static_cast<int>(rational_point_search(c.model, height_bound).size()) + 1;
    return rep;
}

TorsionBoundReport torsion_bound_cyclotomic(const NamedCurve& c, PrimeModulus r, std::int64_t height_bound) {
    return torsion_bound_cyclotomic(c, r, default_split_primes(c.model, r), height_bound);
}

}  // namespace isogate
