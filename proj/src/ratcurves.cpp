#include "isogate/ratcurves.hpp"

#include <algorithm>
#include <numeric>

#include "isogate/error.hpp"
#include "isogate/modcurve.hpp"
#include "isogate/modfield.hpp"

namespace isogate {

// ---------------------------------------------------------------------------
// CurveModel

CurveModel::CurveModel(ExactRational a1, ExactRational a2, ExactRational a3, ExactRational a4,
                       ExactRational a6)
    : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)),
      a6_(std::move(a6)) {
    if (discriminant(*this).is_zero())
        throw Error(ErrorKind::SingularCurve, "curve " + to_string() + " is singular");
}

ExactRational CurveModel::b2() const { return a1_ * a1_ + ExactRational(4) * a2_; }
ExactRational CurveModel::b4() const { return ExactRational(2) * a4_ + a1_ * a3_; }
ExactRational CurveModel::b6() const { return a3_ * a3_ + ExactRational(4) * a6_; }
ExactRational CurveModel::b8() const {
    return a1_ * a1_ * a6_ + ExactRational(4) * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ -
           a4_ * a4_;
}
ExactRational CurveModel::c4() const { return b2() * b2() - ExactRational(24) * b4(); }
ExactRational CurveModel::c6() const {
    const ExactRational b2v = b2();
    return -(b2v * b2v * b2v) + ExactRational(36) * b2v * b4() - ExactRational(216) * b6();
}

ExactRational CurveModel::j_invariant() const { return c4().pow(3) / discriminant(*this); }

bool CurveModel::is_integral() const {
    return a1_.is_integer() && a2_.is_integer() && a3_.is_integer() && a4_.is_integer() &&
           a6_.is_integer();
}

CurveModel CurveModel::scaled(const ExactRational& u) const {
    if (u.is_zero()) throw Error(ErrorKind::InvalidArgument, "scaling factor must be nonzero");
    return {a1_ * u, a2_ * u.pow(2), a3_ * u.pow(3), a4_ * u.pow(4), a6_ * u.pow(6)};
}

CurveModel CurveModel::quadratic_twist(const ExactRational& d) const {
    if (!is_short()) throw Error(ErrorKind::InvalidArgument, "twist needs a short Weierstrass model");
    if (d.is_zero()) throw Error(ErrorKind::ZeroParameter, "twist parameter must be nonzero");
    return short_form(a4_ * d.pow(2), a6_ * d.pow(3));
}

std::string CurveModel::to_string() const {
    return "[" + a1_.to_string() + "," + a2_.to_string() + "," + a3_.to_string() + "," +
           a4_.to_string() + "," + a6_.to_string() + "]";
}

ExactRational discriminant(const CurveModel& e) {
    const ExactRational b2 = e.b2(), b4 = e.b4(), b6 = e.b6(), b8 = e.b8();
    return -(b2 * b2 * b8) - ExactRational(8) * b4.pow(3) - ExactRational(27) * b6 * b6 +
           ExactRational(9) * b2 * b4 * b6;
}

CurveModel curve_from_j(const ExactRational& j) {
    if (j.is_zero()) return CurveModel::short_form(0, 1);
    if (j == ExactRational(1728)) return CurveModel::short_form(1, 0);
    const ExactRational k = ExactRational(1728) - j;
    return CurveModel::short_form(ExactRational(3) * j * k, ExactRational(2) * j * k * k);
}

CurveModel integral_curve_from_j(const ExactRational& j) {
    const CurveModel e = curve_from_j(j);
    // A has denominator dividing den(j)^2 and B dividing den(j)^3.
    return e.scaled(ExactRational(j.denominator()));
}

SquareClass disc_square_class_of_j(const ExactRational& j) {
    if (j == ExactRational(1728))
        throw Error(ErrorKind::InvalidArgument, "j = 1728 has no closed-form square class");
    return squarefree_part(j - ExactRational(1728));
}

// ---------------------------------------------------------------------------
// Cubics

std::string_view to_string(CubicShape s) {
    switch (s) {
        case CubicShape::three_rational_roots: return "three_rational_roots";
        case CubicShape::one_rational_root: return "one_rational_root";
        case CubicShape::irreducible: return "irreducible";
    }
    return "?";
}

namespace {

struct IntCubic {
    mpz_class b, c, d;  // X^3 + bX^2 + cX + d
    mpz_class operator()(const mpz_class& x) const { return ((x + b) * x + c) * x + d; }
};

mpz_class floor_div(const mpz_class& a, long m) {
    mpz_class q;
    mpz_fdiv_q_ui(q.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(m));
    return q;
}

mpz_class ceil_div(const mpz_class& a, long m) {
    mpz_class q;
    mpz_cdiv_q_ui(q.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(m));
    return q;
}

// Smallest x in [lo, hi] with sign * p(x) >= 0, given sign * p is nondecreasing there.
std::optional<mpz_class> root_in_monotone_range(const IntCubic& p, mpz_class lo, mpz_class hi,
                                                int sign) {
    if (lo > hi) return std::nullopt;
    auto val = [&](const mpz_class& x) { return sign > 0 ? p(x) : mpz_class(-p(x)); };
    if (val(lo) > 0 || val(hi) < 0) return std::nullopt;
    while (lo < hi) {
        mpz_class mid = floor_div(lo + hi, 2);
        if (val(mid) >= 0) hi = mid;
        else lo = mid + 1;
    }
    if (p(lo) == 0) return lo;
    return std::nullopt;
}

std::vector<mpz_class> integer_cubic_roots(const IntCubic& p) {
    mpz_class bound = 1;
    for (const mpz_class* v : {&p.b, &p.c, &p.d}) bound = std::max<mpz_class>(bound, abs(*v) + 1);
    const mpz_class lo = -bound, hi = bound;

    std::vector<mpz_class> roots;
    auto add = [&](const std::optional<mpz_class>& x) {
        if (x && std::find(roots.begin(), roots.end(), *x) == roots.end()) roots.push_back(*x);
    };

    // p'(X) = 3X^2 + 2bX + c has roots (-b -+ sqrt(D)) / 3 with D = b^2 - 3c.
    const mpz_class disc = p.b * p.b - 3 * p.c;
    if (disc <= 0) {
        add(root_in_monotone_range(p, lo, hi, +1));
    } else {
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
        const mpz_class s_up = (s * s == disc) ? s : mpz_class(s + 1);
        const mpz_class p1_floor = floor_div(-p.b - s_up, 3), p1_ceil = ceil_div(-p.b - s, 3);
        const mpz_class p2_floor = floor_div(-p.b + s, 3), p2_ceil = ceil_div(-p.b + s_up, 3);
        add(root_in_monotone_range(p, lo, std::min(hi, p1_floor), +1));
        add(root_in_monotone_range(p, std::max(lo, p1_ceil), std::min(hi, p2_floor), -1));
        add(root_in_monotone_range(p, std::max(lo, p2_ceil), hi, +1));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

mpz_class lcm_den(std::initializer_list<const ExactRational*> xs) {
    mpz_class m = 1;
    for (const ExactRational* x : xs) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), x->denominator().get_mpz_t());
    return m;
}

ExactRational cubic_discriminant(const ExactRational& b, const ExactRational& c, const ExactRational& d) {
    return b * b * c * c - ExactRational(4) * c.pow(3) - ExactRational(4) * b.pow(3) * d -
           ExactRational(27) * d * d + ExactRational(18) * b * c * d;
}

}  // namespace

std::vector<ExactRational> rational_cubic_roots(const ExactRational& b, const ExactRational& c,
                                                const ExactRational& d) {
    // x = X / m turns the cubic into a monic one with integer coefficients.
    const mpz_class m = lcm_den({&b, &c, &d});
    const ExactRational mq(m);
    const IntCubic p{(b * mq).numerator(), (c * mq * mq).numerator(), (d * mq.pow(3)).numerator()};
    std::vector<ExactRational> out;
    for (const mpz_class& x : integer_cubic_roots(p)) {
        ExactRational root(x, m);
        if (((root + b) * root + c) * root + d != ExactRational(0))
            throw Error(ErrorKind::DataIntegrity, "rational root failed exact verification");
        out.push_back(root);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::uint32_t> root_free_prime(const ExactRational& b, const ExactRational& c,
                                             const ExactRational& d, std::uint32_t bound) {
    for (std::uint32_t q : small_primes(std::max<std::uint32_t>(bound, 2))) {
        if (q > bound) break;
        long long bq, cq, dq;
        try {
            bq = b.mod(q);
            cq = c.mod(q);
            dq = d.mod(q);
        } catch (const Error&) {
            continue;
        }
        bool has_root = false;
        for (long long x = 0; x < q && !has_root; ++x)
            has_root = (((x + bq) % q * x + cq) % q * x + dq) % q == 0;
        if (!has_root) return q;
    }
    return std::nullopt;
}

CubicFactorType analyze_cubic(const ExactRational& b, const ExactRational& c, const ExactRational& d) {
    const ExactRational disc = cubic_discriminant(b, c, d);
    if (disc.is_zero()) throw Error(ErrorKind::SingularCurve, "cubic has a repeated root");
    CubicFactorType out;
    out.disc_class = squarefree_part(disc);
    out.roots = rational_cubic_roots(b, c, d);
    if (out.roots.size() == 3) {
        out.shape = CubicShape::three_rational_roots;
    } else if (out.roots.size() == 1) {
        out.shape = CubicShape::one_rational_root;
    } else {
        out.witness_prime = root_free_prime(b, c, d);
        if (!out.witness_prime)
            throw Error(ErrorKind::Undecided, "no rational root and no root-free prime found");
        out.shape = CubicShape::irreducible;
    }
    return out;
}

CubicFactorType two_division_cubic(const ExactRational& j) {
    const CurveModel e = curve_from_j(j);
    return analyze_cubic(0, e.a4(), e.a6());
}

bool has_rational_two_torsion(const ExactRational& j) {
    return two_division_cubic(j).shape != CubicShape::irreducible;
}

ExactRational two_torsion_family_j(const ExactRational& t) {
    if (t.is_zero()) throw Error(ErrorKind::ZeroParameter, "family parameter t must be nonzero");
    return (t + ExactRational(16)).pow(3) / t;
}

std::vector<ExactRational> family_membership(const ExactRational& j) {
    // (t + 16)^3 = j t  <=>  t^3 + 48 t^2 + (768 - j) t + 4096 = 0.
    return rational_cubic_roots(48, ExactRational(768) - j, 4096);
}

ExactRational g3_family_j(const ExactRational& t) {
    auto poly = [&](std::initializer_list<long long> coeffs) {
        ExactRational v(0);
        for (long long c : coeffs) v = v * t + ExactRational(c);
        return v;
    };
    const ExactRational d1 = poly({1, 5, 5});
    const ExactRational d2 = poly({1, 5, 15, 25, 25});
    if (d1.is_zero() || d2.is_zero())
        throw Error(ErrorKind::PoleAtParameter, "t = " + t.to_string() + " is a pole");
    const ExactRational num = ExactRational(625) * t.pow(3) * poly({1, 5, 10}).pow(3) *
                              poly({2, 5, 5}).pow(3) * poly({4, 30, 95, 150, 100}).pow(3);
    return num / (d1.pow(5) * d2.pow(5));
}

// ---------------------------------------------------------------------------
// Surjectivity certificate

TraceDetAccumulator::TraceDetAccumulator(int r)
    : r_(r), squares_(square_table(r)), det_seen_(static_cast<std::size_t>(r), 0) {}

unsigned TraceDetAccumulator::add(int trace, int det) {
    trace = static_cast<int>(mod_reduce(trace, r_));
    det = static_cast<int>(mod_reduce(det, r_));
    if (det == 0) throw Error(ErrorKind::InvalidArgument, "determinant must be a unit");
    unsigned fresh = 0;
    const int disc = static_cast<int>(mod_reduce(static_cast<long long>(trace) * trace - 4LL * det, r_));
    if (trace != 0 && disc != 0) {
        bool& slot = squares_[disc] ? c_.split_regular : c_.nonsplit_regular;
        if (!slot) fresh |= squares_[disc] ? 2u : 1u;
        slot = true;
    }
    const long long u = mod_reduce(static_cast<long long>(trace) * trace * mod_inverse(det, r_), r_);
    if (u != 0 && u != 1 && u != 2 && u != 4 % r_ && mod_reduce(u * u - 3 * u + 1, r_) != 0) {
        if (!c_.non_exceptional) fresh |= 4u;
        c_.non_exceptional = true;
    }
    if (!det_seen_[det]) {
        det_seen_[det] = 1;
        if (!c_.determinants_generate) {
            // Subgroup generated by the seen determinants, by closure.
            std::vector<char> in(static_cast<std::size_t>(r_), 0);
            std::vector<int> frontier{1};
            in[1] = 1;
            std::size_t count = 1;
            while (!frontier.empty()) {
                const int x = frontier.back();
                frontier.pop_back();
                for (int g = 1; g < r_; ++g) {
                    if (!det_seen_[g]) continue;
                    const int y = static_cast<int>(static_cast<long long>(x) * g % r_);
                    if (!in[y]) {
                        in[y] = 1;
                        ++count;
                        frontier.push_back(y);
                    }
                }
            }
            c_.determinants_generate = count == static_cast<std::size_t>(r_ - 1);
        }
    }
    return fresh;
}

SurjectivityVerdict surjectivity_certificate(const CurveModel& e, PrimeModulus r,
                                             std::uint32_t sample_bound) {
    if (!e.is_integral()) throw Error(ErrorKind::InvalidArgument, "certificate needs an integral model");
    const int rv = r;
    if (rv < 5) throw Error(ErrorKind::InvalidArgument, "certificate needs r >= 5");
    if (sample_bound > kernels::kMaxKernelPrime)
        throw Error(ErrorKind::RangeExceeded, "sample bound above 10^6");

    SurjectivityVerdict v;
    TraceDetAccumulator acc(rv);
    for (std::uint32_t q : small_primes(std::max<std::uint32_t>(sample_bound, 3))) {
        if (q > sample_bound) break;
        if (q == 2 || q == static_cast<std::uint32_t>(rv)) continue;
        long long count;
        try {
            count = count_points(e, q);
        } catch (const Error& err) {
            if (err.kind() == ErrorKind::BadReduction) continue;
            throw;
        }
        ++v.good_primes;
        const long long aq = static_cast<long long>(q) + 1 - count;
        const unsigned fresh = acc.add(static_cast<int>(mod_reduce(aq, rv)),
                                       static_cast<int>(q % static_cast<std::uint32_t>(rv)));
        for (int i = 0; i < 3; ++i)
            if (fresh & (1u << i)) v.witness[i] = q;
        if (acc.criteria().all()) break;
    }
    if (v.good_primes == 0)
        throw Error(ErrorKind::InsufficientSamples, "no good prime up to the sample bound");
    v.determinants_generate = acc.criteria().determinants_generate;
    v.certified = acc.criteria().all();
    return v;
}

}  // namespace isogate
