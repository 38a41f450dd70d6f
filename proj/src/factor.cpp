#include "isogate/factor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "isogate/error.hpp"

namespace isogate {

namespace {

bool probable_prime(const mpz_class& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant of Pollard rho; returns a nontrivial factor or 0.
mpz_class pollard_brent(const mpz_class& n, std::uint64_t budget) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    std::uint64_t spent = 0;
    for (unsigned long c = 1; spent < budget; ++c) {
        mpz_class y = 2, x, ys, q = 1, g = 1;
        const auto f = [&](const mpz_class& v) {
            mpz_class t = v * v + c;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return t;
        };
        std::uint64_t len = 1;
        constexpr std::uint64_t kBatch = 128;
        while (g == 1 && spent < budget) {
            x = y;
            for (std::uint64_t i = 0; i < len; ++i) y = f(y);
            std::uint64_t k = 0;
            while (k < len && g == 1) {
                ys = y;
                const std::uint64_t steps = std::min(kBatch, len - k);
                for (std::uint64_t i = 0; i < steps; ++i) {
                    y = f(y);
                    mpz_class diff = x - y;
                    q = q * abs(diff);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += steps;
                spent += steps;
            }
            len *= 2;
        }
        if (g == n) {
            // Batch overshot; walk back one step at a time.
            do {
                ys = f(ys);
                mpz_class diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != 1 && g != n) return g;
    }
    return 0;
}

std::uint64_t rho_budget(const FactorOptions& opts) {
    // Expected work to find a prime p is about sqrt(p); allow a healthy multiple.
    return static_cast<std::uint64_t>(8.0 * std::sqrt(opts.rho_factor_cap)) + 1000;
}

void split_cofactor(const mpz_class& m, unsigned mult, const FactorOptions& opts,
                    std::map<mpz_class, unsigned>& out) {
    if (m == 1) return;
    if (probable_prime(m)) {
        out[m] += mult;
        return;
    }
    for (unsigned long k = 2; k <= mpz_sizeinbase(m.get_mpz_t(), 2) / 20 + 1; ++k) {
        mpz_class root;
        if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k) != 0) {
            split_cofactor(root, mult * static_cast<unsigned>(k), opts, out);
            return;
        }
    }
    const mpz_class d = pollard_brent(m, rho_budget(opts));
    if (d == 0)
        throw Error(ErrorKind::FactorizationIncomplete,
                    "cofactor " + m.get_str() + " resisted Pollard rho");
    split_cofactor(d, mult, opts, out);
    split_cofactor(m / d, mult, opts, out);
}

// Trial division; returns the cofactor whose prime factors all exceed the bound.
mpz_class trial_divide(mpz_class n, const FactorOptions& opts, std::map<mpz_class, unsigned>& out) {
    for (std::uint32_t p : small_primes(std::max<std::uint32_t>(opts.trial_bound, 2))) {
        if (p > opts.trial_bound) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                ++e;
            }
            out[mpz_class(p)] += e;
        }
        if (n == 1) break;
    }
    return n;
}

mpz_class squarefree_of_cofactor(const mpz_class& m, const FactorOptions& opts) {
    if (m == 1 || is_perfect_square(m)) return 1;
    if (probable_prime(m)) return m;
    const mpz_class d = pollard_brent(m, rho_budget(opts));
    if (d == 0)
        throw Error(ErrorKind::FactorizationIncomplete,
                    "cofactor " + m.get_str() + " is neither a square nor splittable");
    const mpz_class a = squarefree_of_cofactor(d, opts);
    const mpz_class b = squarefree_of_cofactor(m / d, opts);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return a * b / (g * g);
}

}  // namespace

SquareClass::SquareClass(mpz_class representative) : rep_(std::move(representative)) {
    if (rep_ == 0) throw Error(ErrorKind::ZeroInput, "square class of 0");
}

bool is_perfect_square(const mpz_class& n) {
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

const std::vector<std::uint32_t>& small_primes(std::uint32_t bound) {
    static std::mutex mu;
    static std::map<std::uint32_t, std::vector<std::uint32_t>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(bound);
    if (it != cache.end()) return it->second;
    std::vector<char> composite(bound + 1, 0);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = 1;
    }
    return cache.emplace(bound, std::move(primes)).first->second;
}

std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n, const FactorOptions& opts) {
    if (n == 0) throw Error(ErrorKind::ZeroInput, "cannot factor 0");
    std::map<mpz_class, unsigned> out;
    const mpz_class rest = trial_divide(abs(n), opts, out);
    split_cofactor(rest, 1, opts, out);
    return {out.begin(), out.end()};
}

SquareClass squarefree_part(const ExactRational& q, const FactorOptions& opts) {
    if (q.is_zero()) throw Error(ErrorKind::ZeroInput, "square class of 0");
    // q and num * den differ by the square den^2.
    const mpz_class n = abs(q.numerator() * q.denominator());
    std::map<mpz_class, unsigned> small;
    const mpz_class rest = trial_divide(n, opts, small);
    mpz_class d = squarefree_of_cofactor(rest, opts);
    for (const auto& [p, e] : small)
        if (e % 2 == 1) d *= p;
    return SquareClass(q.sign() < 0 ? mpz_class(-d) : d);
}

}  // namespace isogate
