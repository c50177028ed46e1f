#pragma once

// Chow ring of a product of projective spaces P^{n_1} x ... x P^{n_k},
//
//     A*(P^{n_1} x ... x P^{n_k}) = Q[H_1, ..., H_k] / (H_i^{n_i + 1}),
//
// with H_i the pullback of the hyperplane class of the i-th factor. Elements
// are sparse maps from exponent vectors to nonzero rationals and are kept
// fully reduced at all times, so structural equality is ring equality.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chernslope/rational.hpp"

namespace chernslope {

class ProductSpace {
public:
    /// Throws ArgumentError if `dims` is empty or has an entry < 1.
    explicit ProductSpace(std::vector<int> dims);

    const std::vector<int>& dims() const noexcept { return dims_; }
    std::size_t factors() const noexcept { return dims_.size(); }
    int dimension() const noexcept { return dimension_; }

    /// Human readable, e.g. "P^1 x P^3".
    std::string to_string() const;

    friend bool operator==(const ProductSpace&, const ProductSpace&) = default;

private:
    std::vector<int> dims_;
    int dimension_ = 0;
};

using Exponents = std::vector<int>;

class ChowElement {
public:
    using Terms = std::map<Exponents, Rational>;

    /// The zero element of A*(space).
    explicit ChowElement(ProductSpace space);

    /// Builds an element from arbitrary terms: exponent vectors outside the
    /// truncation box are dropped, zero coefficients removed. Negative
    /// exponents or wrong-length vectors are an ArgumentError.
    ChowElement(ProductSpace space, const Terms& terms);

    static ChowElement constant(ProductSpace space, const Rational& c);
    static ChowElement one(ProductSpace space) { return constant(std::move(space), 1); }

    const ProductSpace& space() const noexcept { return space_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient of a monomial (0 when absent or outside the box).
    Rational coefficient(const Exponents& e) const;

    /// Degree-0 coefficient.
    Rational constant_term() const;

    /// True if all terms share total degree `d`. The zero element is
    /// homogeneous of every degree.
    bool is_homogeneous(int d) const;

    ChowElement operator-() const;

    friend ChowElement operator+(const ChowElement& x, const ChowElement& y);
    friend ChowElement operator-(const ChowElement& x, const ChowElement& y);
    friend ChowElement operator*(const ChowElement& x, const ChowElement& y);
    friend ChowElement operator*(const Rational& c, const ChowElement& x);

    friend bool operator==(const ChowElement&, const ChowElement&) = default;

private:
    ProductSpace space_;
    Terms terms_;
};

/// Total degree of an exponent vector.
int total_degree(const Exponents& e);

/// The generator H_i, 1-based as in the usual notation. Throws
/// ArgumentError when i is outside [1, k].
ChowElement hyperplane(const ProductSpace& space, std::size_t i);

/// Sum c_j * elems_j. Empty input is rejected since it carries no space.
ChowElement linear_combine(std::span<const Rational> coeffs, std::span<const ChowElement> elems);

ChowElement mul(const ChowElement& x, const ChowElement& y);

/// x^n for n >= 0.
ChowElement pow(const ChowElement& x, unsigned n);

ChowElement graded_part(const ChowElement& x, int d);

/// Degree map: coefficient of the top monomial H_1^{n_1} ... H_k^{n_k}.
Rational integrate(const ChowElement& x);

/// Inverse of a unit 1 + (nilpotent), as the truncated geometric series
/// sum_{j=0}^{dim} (1 - x)^j. Throws NonUnitError unless the constant term
/// is exactly 1.
ChowElement invert_unit_series(const ChowElement& x);

/// `<rational>*H1^<e1>*...*Hk^<ek>` terms in lexicographic exponent order,
/// joined by " + "; exponent-0 factors omitted; zero renders as "0".
std::string serialize(const ChowElement& x);

/// Same layout as `serialize` but coefficients rendered by `to_decimal`.
std::string serialize_decimal(const ChowElement& x, int significant = 6);

/// Inverse of `serialize`. Also accepts terms in any order and repeated
/// monomials (which are summed). Throws ParseError.
ChowElement parse_chow_element(const ProductSpace& space, std::string_view text);

}  // namespace chernslope
