#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weilrep/fp.hpp"

namespace weilrep {

/// Hard cap on the number of base-field indeterminates. Monomials are kept in
/// fixed-size arrays so that the graded-lex order is a plain tuple comparison.
inline constexpr uint32_t kMaxVars = 4;

/// Monomial exponent vector with cached total degree. Comparison is graded
/// lexicographic: total degree first, then lex on the exponents.
struct Mono {
    uint32_t deg = 0;
    std::array<uint16_t, kMaxVars> e{};

    auto operator<=>(const Mono&) const = default;
};

/// Multivariate polynomial over F_p in canonical form: terms sorted in
/// decreasing graded-lex order, coefficients reduced to [1, p).
///
/// The zero polynomial has no terms. Structural equality is canonical
/// equality. All binary operations require matching (p, nvars).
class Poly {
public:
    Poly() = default; // zero over an unspecified context; usable as placeholder only
    Poly(uint32_t p, uint32_t nvars);

    static Poly constant(uint32_t p, uint32_t nvars, uint64_t c);
    static Poly variable(uint32_t p, uint32_t nvars, uint32_t var, uint32_t exp = 1);

    uint32_t p() const { return p_; }
    uint32_t nvars() const { return nvars_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    /// Coefficient of the constant term (0 if absent).
    uint32_t constant_coeff() const;

    uint32_t total_degree() const { return terms_.empty() ? 0 : terms_.front().first.deg; }
    uint32_t degree_in(uint32_t var) const;
    /// Scalar coefficient of the graded-lex leading term.
    uint32_t leading_coeff() const;
    const Mono& leading_mono() const;
    size_t term_count() const { return terms_.size(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(uint32_t c) const;

    bool operator==(const Poly& o) const = default;

    /// Exact division; throws Error("NotDivisible") if the division leaves a remainder.
    Poly divexact(const Poly& d) const;
    /// True iff d divides *this exactly.
    bool divisible_by(const Poly& d) const;

    Poly pow(uint64_t n) const;
    /// this^(p^nu); cheap, exponents scale and F_p coefficients are fixed by Frobenius.
    Poly frobenius(uint32_t nu) const;
    /// p-th root if one exists (all exponents divisible by p), else nullopt.
    std::optional<Poly> pth_root() const;

    /// Monic normalization: scale so the leading scalar coefficient is 1.
    Poly monic() const;

    static Poly gcd(const Poly& a, const Poly& b);

    std::string to_string(const std::vector<std::string>& var_names) const;

    /// Terms in decreasing graded-lex order.
    const std::vector<std::pair<Mono, uint32_t>>& terms() const { return terms_; }
    /// Build from unsorted term list (exponents may repeat); canonicalizes.
    static Poly from_terms(uint32_t p, uint32_t nvars,
                           std::vector<std::pair<Mono, uint32_t>> raw);

private:
    friend class PolyBuilder;
    uint32_t p_ = 0;
    uint32_t nvars_ = 0;
    std::vector<std::pair<Mono, uint32_t>> terms_;

    void check_compatible(const Poly& o) const;
};

/// Monomials of total degree <= bound, in increasing graded-lex order.
std::vector<Mono> monomials_up_to(uint32_t nvars, uint32_t bound);

} // namespace weilrep
