#include "isogate/rational.hpp"

#include <cctype>

#include "isogate/error.hpp"

namespace isogate {

ExactRational::ExactRational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

ExactRational ExactRational::operator/(const ExactRational& o) const {
    if (o.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
    return ExactRational(mpq_class(q_ / o.q_));
}

mpz_class ipow(const mpz_class& base, unsigned long e) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

ExactRational ExactRational::pow(long e) const {
    if (e < 0) return ExactRational(1) / pow(-e);
    const auto ue = static_cast<unsigned long>(e);
    return {ipow(q_.get_num(), ue), ipow(q_.get_den(), ue)};
}

long long ExactRational::mod(long long q) const {
    const mpz_class qq(static_cast<long>(q));
    mpz_class den = q_.get_den() % qq;
    if (den == 0) throw Error(ErrorKind::BadReduction, to_string() + " is not integral at " + std::to_string(q));
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), qq.get_mpz_t());
    mpz_class v = q_.get_num() * inv;
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), qq.get_mpz_t());
    return v.get_si();
}

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view s) : s_(s) {}

    ExactRational parse() {
        ExactRational v = expr();
        skip_space();
        if (!at_end()) fail("unexpected character");
        return v;
    }

private:
    // expr := ['-'] factor (('*' | '/') factor)*
    ExactRational expr() {
        skip_space();
        bool negative = false;
        if (eat("-") || eat("\u2212")) negative = true;
        ExactRational acc = factor();
        for (;;) {
            skip_space();
            if (eat("*")) acc *= factor();
            else if (eat("/")) {
                const ExactRational f = factor();
                if (f.is_zero()) fail("division by zero");
                acc = acc / f;
            } else break;
        }
        return negative ? -acc : acc;
    }

    // factor := (integer | '(' expr ')') ['^' integer]
    ExactRational factor() {
        skip_space();
        ExactRational base;
        if (eat("(")) {
            if (++depth_ > 64) fail("nesting too deep");
            base = expr();
            skip_space();
            if (!eat(")")) fail("expected ')'");
            --depth_;
        } else {
            base = ExactRational(integer());
        }
        skip_space();
        if (eat("^")) {
            const mpz_class e = integer();
            if (!e.fits_ulong_p() || e > 4096) fail("exponent out of range");
            return base.pow(static_cast<long>(e.get_ui()));
        }
        return base;
    }

    mpz_class integer() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return mpz_class(std::string(s_.substr(start, pos_ - start)), 10);
    }

    bool eat(std::string_view tok) {
        if (s_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }
    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorKind::ParseError,
                    why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    int depth_ = 0;
};

}  // namespace

ExactRational ExactRational::parse(std::string_view text) { return ExprParser(text).parse(); }

}  // namespace isogate
