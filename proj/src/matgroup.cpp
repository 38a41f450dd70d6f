#include "isogate/matgroup.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_set>

#include "isogate/error.hpp"

namespace isogate {

namespace {

constexpr int kDenseLimit = 31;  // r^4 bits stay below 1 Mbit

std::size_t code_space(int r) {
    const auto rr = static_cast<std::size_t>(r);
    return rr * rr * rr * rr;
}

// Membership structure used while closing: a bitset for small r, a hash set otherwise.
class CodeSet {
public:
    explicit CodeSet(int r) : dense_(r <= kDenseLimit) {
        if (dense_) bits_.assign((code_space(r) + 63) / 64, 0);
    }
    bool insert(std::uint32_t c) {
        if (dense_) {
            std::uint64_t& w = bits_[c >> 6];
            const std::uint64_t bit = std::uint64_t{1} << (c & 63);
            if (w & bit) return false;
            w |= bit;
            return true;
        }
        return hashed_.insert(c).second;
    }
    bool contains(std::uint32_t c) const {
        if (dense_) return (bits_[c >> 6] >> (c & 63)) & 1;
        return hashed_.count(c) != 0;
    }

private:
    bool dense_;
    std::vector<std::uint64_t> bits_;
    std::unordered_set<std::uint32_t> hashed_;
};

void require_same_modulus(std::span<const ModularMatrix> ms) {
    for (const auto& m : ms)
        if (m.r() != ms.front().r())
            throw Error(ErrorKind::ModulusMismatch, "matrices over different primes");
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::optional<MatrixGroup> closure_from(int r, std::vector<ModularMatrix> elements,
                                        std::vector<ModularMatrix> gens, std::size_t max_order) {
    CodeSet seen(r);
    std::vector<std::uint32_t> codes;
    codes.reserve(elements.size() * 2 + 8);
    for (const auto& e : elements) {
        seen.insert(e.code());
        codes.push_back(e.code());
    }
    if (elements.empty()) {
        const auto id = ModularMatrix::identity(PrimeModulus(r));
        seen.insert(id.code());
        codes.push_back(id.code());
        elements.push_back(id);
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (const auto& s : gens) {
            const ModularMatrix p = elements[i] * s;
            if (seen.insert(p.code())) {
                elements.push_back(p);
                codes.push_back(p.code());
                if (codes.size() > max_order) return std::nullopt;
            }
        }
    }
    std::sort(codes.begin(), codes.end());
    return MatrixGroup::from_closed_set(r, std::move(codes), std::move(gens));
}

}  // namespace

// ---------------------------------------------------------------------------
// ModularMatrix

ModularMatrix::ModularMatrix(long long a11, long long a12, long long a21, long long a22,
                             PrimeModulus r) {
    const int p = r.value();
    *this = raw(mod_reduce(a11, p), mod_reduce(a12, p), mod_reduce(a21, p), mod_reduce(a22, p), p);
    if (det() == 0) throw Error(ErrorKind::SingularMatrix, "matrix " + to_string() + " is singular");
}

ModularMatrix ModularMatrix::from_code(std::uint32_t code, int r) {
    const auto ur = static_cast<std::uint32_t>(r);
    const int d = static_cast<int>(code % ur);
    code /= ur;
    const int c = static_cast<int>(code % ur);
    code /= ur;
    const int b = static_cast<int>(code % ur);
    const int a = static_cast<int>(code / ur);
    return raw(a, b, c, d, r);
}

int ModularMatrix::det() const noexcept {
    return mod_reduce(e_[0] * e_[3] - e_[1] * e_[2], r_);
}

ModularMatrix ModularMatrix::operator*(const ModularMatrix& o) const {
    if (r_ != o.r_) throw Error(ErrorKind::ModulusMismatch, "matrices over different primes");
    const int p = r_;
    return raw((e_[0] * o.e_[0] + e_[1] * o.e_[2]) % p, (e_[0] * o.e_[1] + e_[1] * o.e_[3]) % p,
               (e_[2] * o.e_[0] + e_[3] * o.e_[2]) % p, (e_[2] * o.e_[1] + e_[3] * o.e_[3]) % p, p);
}

ModularMatrix ModularMatrix::inverse() const {
    const int p = r_;
    const int di = mod_inverse(det(), p);
    return raw(e_[3] * di % p, (p - e_[1]) * di % p, (p - e_[2]) * di % p, e_[0] * di % p, p);
}

ModularMatrix ModularMatrix::pow(long long e) const {
    ModularMatrix base = e < 0 ? inverse() : *this;
    if (e < 0) e = -e;
    ModularMatrix acc = raw(1, 0, 0, 1, r_);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

ModularMatrix ModularMatrix::conjugated_by(const ModularMatrix& m) const {
    return m * *this * m.inverse();
}

std::string ModularMatrix::to_string() const {
    return "[[" + std::to_string(e_[0]) + "," + std::to_string(e_[1]) + "],[" +
           std::to_string(e_[2]) + "," + std::to_string(e_[3]) + "]] mod " + std::to_string(r_);
}

// Accepts "[[a,b],[c,d]] mod r" with arbitrary (possibly negative) integers and free spacing.
ModularMatrix ModularMatrix::parse(std::string_view text) {
    std::vector<long long> nums;
    bool saw_mod = false;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == '-' || (ch >= '0' && ch <= '9')) {
            long long v = 0;
            const char* first = text.data() + i;
            auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), v);
            if (ec != std::errc()) throw Error(ErrorKind::ParseError, std::string(text));
            nums.push_back(v);
            i += static_cast<std::size_t>(ptr - first);
        } else if (text.substr(i, 3) == "mod") {
            if (nums.size() != 4) throw Error(ErrorKind::ParseError, "expected 4 entries before 'mod'");
            saw_mod = true;
            i += 3;
        } else if (ch == '[' || ch == ']' || ch == ',' || ch == ' ' || ch == '\t') {
            ++i;
        } else {
            throw Error(ErrorKind::ParseError, "unexpected character in matrix: " + std::string(text));
        }
    }
    if (!saw_mod || nums.size() != 5)
        throw Error(ErrorKind::ParseError, "matrix syntax is [[a,b],[c,d]] mod r");
    return {nums[0], nums[1], nums[2], nums[3], make_modulus(static_cast<int>(nums[4]))};
}

AlgebraResult matrix_algebra(MatrixOp op, std::span<const ModularMatrix> args) {
    if (args.empty()) throw Error(ErrorKind::InvalidArgument, "matrix_algebra needs arguments");
    require_same_modulus(args);
    switch (op) {
    case MatrixOp::mul: {
        ModularMatrix acc = args[0];
        for (std::size_t i = 1; i < args.size(); ++i) acc = acc * args[i];
        return acc;
    }
    case MatrixOp::inv: return args[0].inverse();
    case MatrixOp::det: return FieldElement(args[0].det(), args[0].modulus());
    case MatrixOp::trace: return FieldElement(args[0].trace(), args[0].modulus());
    }
    throw Error(ErrorKind::InvalidArgument, "unknown matrix op");
}

int element_order(const ModularMatrix& m) {
    const auto id = ModularMatrix::identity(m.modulus());
    ModularMatrix x = m;
    int k = 1;
    while (!(x == id)) {
        x = x * m;
        ++k;
    }
    return k;
}

// ---------------------------------------------------------------------------
// MatrixGroup

MatrixGroup::MatrixGroup(int r, std::vector<std::uint32_t> sorted_codes,
                         std::vector<ModularMatrix> gens)
    : r_(r), codes_(std::move(sorted_codes)), gens_(std::move(gens)) {
    const auto one = ModularMatrix::identity(PrimeModulus(r_));
    std::erase(gens_, one);
    if (r_ <= kDenseLimit) {
        bits_.assign((code_space(r_) + 63) / 64, 0);
        for (auto c : codes_) bits_[c >> 6] |= std::uint64_t{1} << (c & 63);
    }
    auto hist = trace_det_histogram();
    std::uint64_t h = mix(0, codes_.size());
    for (std::size_t i = 0; i < hist.size(); ++i)
        if (hist[i]) h = mix(mix(h, i), hist[i]);
    fingerprint_ = h;
}

MatrixGroup MatrixGroup::from_closed_set(int r, std::vector<std::uint32_t> codes,
                                         std::vector<ModularMatrix> gens) {
    if (!std::is_sorted(codes.begin(), codes.end())) std::sort(codes.begin(), codes.end());
    if (gens.empty()) {
        // Greedy: take elements in descending order, skipping those already generated.
        MatrixGroup tmp(r, codes, {});
        std::vector<std::uint32_t> current{ModularMatrix::identity(PrimeModulus(r)).code()};
        CodeSet in_current(r);
        in_current.insert(current.front());
        for (auto it = codes.rbegin(); it != codes.rend(); ++it) {
            if (in_current.contains(*it)) continue;
            gens.push_back(ModularMatrix::from_code(*it, r));
            auto sub = closure_from(r, {}, gens, SIZE_MAX);
            for (auto c : sub->codes()) {
                if (!tmp.contains_code(c))
                    throw Error(ErrorKind::DataIntegrity, "element set is not closed");
                in_current.insert(c);
            }
            if (sub->order() == codes.size()) break;
        }
    }
    return MatrixGroup(r, std::move(codes), std::move(gens));
}

bool MatrixGroup::contains_code(std::uint32_t code) const {
    if (!bits_.empty()) {
        if (code >= code_space(r_)) return false;
        return (bits_[code >> 6] >> (code & 63)) & 1;
    }
    return std::binary_search(codes_.begin(), codes_.end(), code);
}

std::vector<ModularMatrix> MatrixGroup::elements() const {
    std::vector<ModularMatrix> out;
    out.reserve(codes_.size());
    for (auto c : codes_) out.push_back(ModularMatrix::from_code(c, r_));
    return out;
}

std::vector<std::uint32_t> MatrixGroup::trace_det_histogram() const {
    std::vector<std::uint32_t> hist(static_cast<std::size_t>(r_) * r_, 0);
    for (auto c : codes_) {
        const auto m = ModularMatrix::from_code(c, r_);
        ++hist[static_cast<std::size_t>(m.trace()) * r_ + m.det()];
    }
    return hist;
}

// ---------------------------------------------------------------------------
// Group operations

MatrixGroup close(std::span<const ModularMatrix> generators) {
    if (generators.empty()) throw Error(ErrorKind::InvalidArgument, "close() needs a generator");
    require_same_modulus(generators);
    return *closure_from(generators.front().r(), {},
                         {generators.begin(), generators.end()}, SIZE_MAX);
}

MatrixGroup close(std::initializer_list<ModularMatrix> generators) {
    return close(std::span<const ModularMatrix>(generators.begin(), generators.size()));
}

std::optional<MatrixGroup> close_capped(std::span<const ModularMatrix> generators,
                                        std::size_t max_order) {
    if (generators.empty()) throw Error(ErrorKind::InvalidArgument, "close() needs a generator");
    require_same_modulus(generators);
    return closure_from(generators.front().r(), {}, {generators.begin(), generators.end()},
                        max_order);
}

std::optional<MatrixGroup> extend(const MatrixGroup& g, std::span<const ModularMatrix> extra,
                                  std::size_t max_order) {
    std::vector<ModularMatrix> gens = g.generators();
    std::vector<ModularMatrix> fresh;
    for (const auto& m : extra) {
        if (m.r() != g.r()) throw Error(ErrorKind::ModulusMismatch, "extend across primes");
        if (!g.contains(m)) fresh.push_back(m);
    }
    if (fresh.empty()) return g;
    gens.insert(gens.end(), fresh.begin(), fresh.end());
    // Every element of g times a generator of g stays in g, so only the new
    // generators need to be applied to the seed elements on the first pass.
    return closure_from(g.r(), g.elements(), std::move(gens), max_order);
}

std::size_t general_linear_order(int r) {
    const auto rr = static_cast<std::size_t>(r);
    return (rr * rr - 1) * (rr * rr - rr);
}

MatrixGroup general_linear(PrimeModulus r) {
    const int p = r.value();
    std::vector<std::uint32_t> codes;
    codes.reserve(general_linear_order(p));
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d)
                    if ((a * d - b * c) % p != 0)
                        codes.push_back(static_cast<std::uint32_t>(((a * p + b) * p + c) * p + d));
    const int g = primitive_root(r).value();
    return MatrixGroup::from_closed_set(
        p, std::move(codes), {{1, 1, 0, 1, r}, {0, 1, 1, 0, r}, ModularMatrix::diag(g, 1, r)});
}

MatrixGroup special_linear(PrimeModulus r) { return sl2_part(general_linear(r)); }

MatrixGroup filter(const MatrixGroup& g, const std::function<bool(const ModularMatrix&)>& pred) {
    std::vector<std::uint32_t> codes;
    for (auto c : g.codes())
        if (pred(ModularMatrix::from_code(c, g.r()))) codes.push_back(c);
    return MatrixGroup::from_closed_set(g.r(), std::move(codes));
}

MatrixGroup sl2_part(const MatrixGroup& g) {
    return filter(g, [](const ModularMatrix& m) { return m.det() == 1; });
}

MatrixGroup conjugate(const MatrixGroup& g, const ModularMatrix& m) {
    const ModularMatrix mi = m.inverse();
    std::vector<std::uint32_t> codes;
    codes.reserve(g.order());
    for (auto c : g.codes()) codes.push_back((m * ModularMatrix::from_code(c, g.r()) * mi).code());
    std::vector<ModularMatrix> gens;
    for (const auto& x : g.generators()) gens.push_back(m * x * mi);
    return MatrixGroup::from_closed_set(g.r(), std::move(codes), std::move(gens));
}

bool is_subgroup(const MatrixGroup& h, const MatrixGroup& g) {
    if (h.r() != g.r() || g.order() % h.order() != 0) return false;
    return std::all_of(h.generators().begin(), h.generators().end(),
                       [&](const ModularMatrix& x) { return g.contains(x); });
}

void for_each_projective_rep(int r, const std::function<bool(const ModularMatrix&)>& f) {
    const PrimeModulus p(r);
    // First nonzero entry of (a, b, c, d) normalised to 1.
    for (int a = 0; a <= 1; ++a) {
        const int b_lo = a == 1 ? 0 : 1;
        const int b_hi = a == 1 ? r - 1 : 1;
        for (int b = b_lo; b <= b_hi; ++b)
            for (int c = 0; c < r; ++c)
                for (int d = 0; d < r; ++d) {
                    if ((a * d - b * c) % r == 0) continue;
                    if (!f(ModularMatrix(a, b, c, d, p))) return;
                }
    }
}

std::optional<ModularMatrix> are_conjugate(const MatrixGroup& g, const MatrixGroup& h) {
    if (g.r() != h.r()) throw Error(ErrorKind::ModulusMismatch, "groups over different primes");
    if (g.order() != h.order() || g.fingerprint() != h.fingerprint()) return std::nullopt;
    if (g.trace_det_histogram() != h.trace_det_histogram()) return std::nullopt;
    std::optional<ModularMatrix> witness;
    const auto& gens = g.generators();
    for_each_projective_rep(g.r(), [&](const ModularMatrix& m) {
        const ModularMatrix mi = m.inverse();
        for (const auto& x : gens)
            if (!h.contains(m * x * mi)) return true;
        witness = m;
        return false;
    });
    return witness;
}

std::vector<int> determinant_image(const MatrixGroup& g) {
    std::vector<char> hit(static_cast<std::size_t>(g.r()), 0);
    for (auto c : g.codes()) hit[static_cast<std::size_t>(ModularMatrix::from_code(c, g.r()).det())] = 1;
    std::vector<int> out;
    for (int v = 0; v < g.r(); ++v)
        if (hit[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

bool is_applicable(const MatrixGroup& g) {
    if (determinant_image(g).size() != static_cast<std::size_t>(g.r() - 1)) return false;
    for (auto c : g.codes()) {
        const auto m = ModularMatrix::from_code(c, g.r());
        if (m.trace() == 0 && m.det() == g.r() - 1) return true;
    }
    return false;
}

}  // namespace isogate
