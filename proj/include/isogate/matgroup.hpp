#pragma once

// 2x2 matrices over F_r and finite subgroups of GL_2(F_r).

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "isogate/modfield.hpp"

namespace isogate {

/// An invertible 2x2 matrix over F_r, stored by value as four residues.
class ModularMatrix {
public:
    /// Entries are reduced mod r. Throws SingularMatrix when det = 0.
    ModularMatrix(long long a11, long long a12, long long a21, long long a22, PrimeModulus r);

    static ModularMatrix identity(PrimeModulus r) { return {1, 0, 0, 1, r}; }
    static ModularMatrix scalar(long long s, PrimeModulus r) { return {s, 0, 0, s, r}; }
    static ModularMatrix diag(long long x, long long y, PrimeModulus r) { return {x, 0, 0, y, r}; }

    /// Inverse of code(); the caller guarantees the code names an invertible matrix.
    static ModularMatrix from_code(std::uint32_t code, int r);

    int a11() const noexcept { return e_[0]; }
    int a12() const noexcept { return e_[1]; }
    int a21() const noexcept { return e_[2]; }
    int a22() const noexcept { return e_[3]; }
    int r() const noexcept { return r_; }
    PrimeModulus modulus() const { return PrimeModulus(r_); }

    int det() const noexcept;
    int trace() const noexcept { return (e_[0] + e_[3]) % r_; }

    /// ((a11*r + a12)*r + a21)*r + a22; orders matrices lexicographically.
    std::uint32_t code() const noexcept {
        return ((static_cast<std::uint32_t>(e_[0]) * r_ + e_[1]) * r_ + e_[2]) * r_ + e_[3];
    }

    ModularMatrix operator*(const ModularMatrix& o) const;
    ModularMatrix inverse() const;
    ModularMatrix pow(long long e) const;
    ModularMatrix conjugated_by(const ModularMatrix& m) const;  // m * this * m^-1
    ModularMatrix transpose() const { return raw(e_[0], e_[2], e_[1], e_[3], r_); }

    /// Image of the column vector (x, y).
    std::pair<int, int> apply(int x, int y) const {
        return {(e_[0] * x + e_[1] * y) % r_, (e_[2] * x + e_[3] * y) % r_};
    }

    std::string to_string() const;
    static ModularMatrix parse(std::string_view text);

    friend bool operator==(const ModularMatrix& a, const ModularMatrix& b) {
        return a.r_ == b.r_ && a.e_ == b.e_;
    }
    friend auto operator<=>(const ModularMatrix& a, const ModularMatrix& b) {
        return a.code() <=> b.code();
    }

private:
    ModularMatrix() = default;
    static ModularMatrix raw(int a, int b, int c, int d, int r) {
        ModularMatrix m;
        m.e_ = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)};
        m.r_ = static_cast<std::uint8_t>(r);
        return m;
    }

    std::array<std::uint8_t, 4> e_{};
    std::uint8_t r_ = 0;
};

enum class MatrixOp { mul, inv, det, trace };

/// Result of matrix_algebra: a matrix for mul/inv, a field element for det/trace.
using AlgebraResult = std::variant<ModularMatrix, FieldElement>;

AlgebraResult matrix_algebra(MatrixOp op, std::span<const ModularMatrix> args);

/// A finite subgroup of GL_2(F_r). Immutable; the element list is sorted by code.
class MatrixGroup {
public:
    PrimeModulus modulus() const { return PrimeModulus(r_); }
    int r() const noexcept { return r_; }
    std::size_t order() const noexcept { return codes_.size(); }

    std::span<const std::uint32_t> codes() const noexcept { return codes_; }
    ModularMatrix element(std::size_t i) const { return ModularMatrix::from_code(codes_[i], r_); }
    std::vector<ModularMatrix> elements() const;
    const std::vector<ModularMatrix>& generators() const noexcept { return gens_; }

    bool contains(const ModularMatrix& m) const { return m.r() == r_ && contains_code(m.code()); }
    bool contains_code(std::uint32_t code) const;

    /// Hash of (order, trace-det multiset); a conjugacy invariant.
    std::uint64_t fingerprint() const noexcept { return fingerprint_; }
    /// Counts indexed by trace * r + det.
    std::vector<std::uint32_t> trace_det_histogram() const;

    friend bool operator==(const MatrixGroup& a, const MatrixGroup& b) {
        return a.r_ == b.r_ && a.codes_ == b.codes_;
    }

    /// Wraps an element set known to be a group. Generators are derived greedily when absent.
    static MatrixGroup from_closed_set(int r, std::vector<std::uint32_t> codes,
                                       std::vector<ModularMatrix> gens = {});

private:
    MatrixGroup(int r, std::vector<std::uint32_t> sorted_codes, std::vector<ModularMatrix> gens);

    int r_ = 0;
    std::vector<std::uint32_t> codes_;
    std::vector<ModularMatrix> gens_;
    std::vector<std::uint64_t> bits_;  // dense membership, only for small r
    std::uint64_t fingerprint_ = 0;
};

/// Smallest subgroup containing the generators.
MatrixGroup close(std::span<const ModularMatrix> generators);
MatrixGroup close(std::initializer_list<ModularMatrix> generators);

/// Like close(), but gives up (returns nullopt) once the closure exceeds max_order elements.
std::optional<MatrixGroup> close_capped(std::span<const ModularMatrix> generators,
                                        std::size_t max_order);

/// Closure of an existing group together with extra elements.
std::optional<MatrixGroup> extend(const MatrixGroup& g, std::span<const ModularMatrix> extra,
                                  std::size_t max_order = SIZE_MAX);

MatrixGroup general_linear(PrimeModulus r);
MatrixGroup special_linear(PrimeModulus r);
std::size_t general_linear_order(int r);

/// S(G) = G intersected with SL_2(F_r).
MatrixGroup sl2_part(const MatrixGroup& g);

/// Subgroup of elements satisfying pred.
MatrixGroup filter(const MatrixGroup& g, const std::function<bool(const ModularMatrix&)>& pred);

MatrixGroup conjugate(const MatrixGroup& g, const ModularMatrix& m);  // m G m^-1

bool is_subgroup(const MatrixGroup& h, const MatrixGroup& g);

/// Some m with m G m^-1 = H, or nullopt.
std::optional<ModularMatrix> are_conjugate(const MatrixGroup& g, const MatrixGroup& h);

/// Full determinant and an element of trace 0 and determinant -1.
bool is_applicable(const MatrixGroup& g);

/// The distinct values of det on g, as a sorted list.
std::vector<int> determinant_image(const MatrixGroup& g);

/// Calls f on one representative per scalar class of GL_2(F_r) (first nonzero entry = 1).
void for_each_projective_rep(int r, const std::function<bool(const ModularMatrix&)>& f);

/// Orders of element m (smallest k > 0 with m^k = I).
int element_order(const ModularMatrix& m);

}  // namespace isogate
