#pragma once

// Virtual Chern numbers of the locus Z where a map f: A -> B between bundles
// of ranks a and a + 1 on a fourfold M drops rank. With c_i := c_i(B - A):
//
//   c_1(Z)^2 = (c_1(M) - c_1)^2 c_2 - 2 (c_1(M) - c_1) c_3 + c_4
//   c_2(Z)   = (c_2(M) - c_1(M) c_1 + c_2(A) - c_2(B) + c_1(B)^2 - c_1(A) c_1(B)) c_2
//              + (-c_1(M) + 2 c_1) c_3 + c_4
//
// This is the corrected form. Older statements of the same formula carry
// c_1 c_2 and c_1^2 c_2 where c_3 and c_4 belong, and write the c_3
// coefficient as (c_1(M) + 2 c_1). Only the corrected version is exposed.
//
// The formulas are evaluated unconditionally; nothing checks that Z is
// actually a local complete intersection surface.

#include "chernslope/bundle.hpp"

namespace chernslope {

struct TangentClasses {
    ChowElement c1;
    ChowElement c2;
};

/// c_1 and c_2 of the tangent bundle of a product of projective spaces,
/// from the Euler sequences: c(T) = prod_i (1 + H_i)^{n_i + 1}.
TangentClasses ambient_tangent_of_product(const ProductSpace& space);

class DegeneracyInput {
public:
    /// Validates: total dimension 4, rank B = rank A + 1, tangent classes
    /// homogeneous of degrees 1 and 2, everything on `space`.
    DegeneracyInput(ProductSpace space, ChowElement tangent_c1, ChowElement tangent_c2, BundleClass a, BundleClass b);

    /// Tangent data taken from `ambient_tangent_of_product`.
    static DegeneracyInput on_product(const ProductSpace& space, BundleClass a, BundleClass b);

    const ProductSpace& space() const noexcept { return space_; }
    const ChowElement& tangent_c1() const noexcept { return tangent_c1_; }
    const ChowElement& tangent_c2() const noexcept { return tangent_c2_; }
    const BundleClass& a() const noexcept { return a_; }
    const BundleClass& b() const noexcept { return b_; }

    /// B - A.
    BundleClass difference() const { return virtual_difference(b_, a_); }

private:
    ProductSpace space_;
    ChowElement tangent_c1_;
    ChowElement tangent_c2_;
    BundleClass a_;
    BundleClass b_;
};

struct VirtualChernNumbers {
    ChowElement c1_sq_class;
    ChowElement c2_class;
    Rational c1_sq;
    Rational c2;
};

VirtualChernNumbers virtual_chern_numbers(const DegeneracyInput& input);

/// Independent route to c_2(Z):
///
///   c_1(Z)^2 + int[ -((c_1(M) - c_1) c_1(M) c_2 - c_1(M) c_3) + c_2(M) c_2 - c_2^2 ].
///
/// Agreement with virtual_chern_numbers(input).c2 is not a theorem for
/// arbitrary virtual input; callers compare on instances they care about.
Rational double_point_check(const DegeneracyInput& input);

/// Expected class [Z] = c_2(B - A).
ChowElement degeneracy_class(const DegeneracyInput& input);

}  // namespace chernslope
