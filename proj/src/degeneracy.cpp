#include "chernslope/degeneracy.hpp"

#include <string>
#include <utility>

#include "chernslope/errors.hpp"

namespace chernslope {

namespace {

constexpr int kAmbientDimension = 4;

// Every summand of the Chern number formulas must land in degree 4.
const ChowElement& expect_top(const ChowElement& term, const char* what) {
    if (!term.is_homogeneous(kAmbientDimension))
        throw InternalError(std::string("degeneracy: summand '") + what + "' is not homogeneous of degree 4");
    return term;
}

struct DifferenceClasses {
    ChowElement c1, c2, c3, c4;
};

DifferenceClasses difference_classes(const DegeneracyInput& input) {
    const BundleClass diff = input.difference();
    return {chern(diff, 1), chern(diff, 2), chern(diff, 3), chern(diff, 4)};
}

}  // namespace

TangentClasses ambient_tangent_of_product(const ProductSpace& space) {
    ChowElement total = ChowElement::one(space);
    for (std::size_t i = 0; i < space.factors(); ++i) {
        const ChowElement factor = ChowElement::one(space) + hyperplane(space, i + 1);
        total = total * pow(factor, static_cast<unsigned>(space.dims()[i] + 1));
    }
    return {graded_part(total, 1), graded_part(total, 2)};
}

DegeneracyInput::DegeneracyInput(ProductSpace space, ChowElement tangent_c1, ChowElement tangent_c2, BundleClass a,
                                 BundleClass b)
    : space_(std::move(space)),
      tangent_c1_(std::move(tangent_c1)),
      tangent_c2_(std::move(tangent_c2)),
      a_(std::move(a)),
      b_(std::move(b)) {
    if (space_.dimension() != kAmbientDimension)
        throw ArgumentError("degeneracy: ambient space " + space_.to_string() + " has dimension " +
                            std::to_string(space_.dimension()) + ", expected 4");
    if (!(tangent_c1_.space() == space_) || !(tangent_c2_.space() == space_) || !(a_.space() == space_) ||
        !(b_.space() == space_))
        throw ArgumentError("degeneracy: inputs live on different spaces");
    if (b_.rank() != a_.rank() + 1)
        throw ArgumentError("degeneracy: rank B must equal rank A + 1 (got rank A = " + std::to_string(a_.rank()) +
                            ", rank B = " + std::to_string(b_.rank()) + ")");
    if (!tangent_c1_.is_homogeneous(1)) throw ArgumentError("degeneracy: tangent c1 is not homogeneous of degree 1");
    if (!tangent_c2_.is_homogeneous(2)) throw ArgumentError("degeneracy: tangent c2 is not homogeneous of degree 2");
}

DegeneracyInput DegeneracyInput::on_product(const ProductSpace& space, BundleClass a, BundleClass b) {
    auto [c1, c2] = ambient_tangent_of_product(space);
    return DegeneracyInput(space, std::move(c1), std::move(c2), std::move(a), std::move(b));
}

VirtualChernNumbers virtual_chern_numbers(const DegeneracyInput& input) {
    const auto [c1, c2, c3, c4] = difference_classes(input);
    const ChowElement& c1m = input.tangent_c1();
    const ChowElement& c2m = input.tangent_c2();
    const ChowElement c1a = chern(input.a(), 1);
    const ChowElement c2a = chern(input.a(), 2);
    const ChowElement c1b = chern(input.b(), 1);
    const ChowElement c2b = chern(input.b(), 2);

    const ChowElement twisted = c1m - c1;
    const ChowElement c1_sq_class = expect_top(twisted * twisted * c2, "(c1(M)-c1)^2 c2") +
                                    expect_top(Rational(-2) * (twisted * c3), "-2(c1(M)-c1) c3") +
                                    expect_top(c4, "c4");

    const ChowElement c2_coeff = c2m - c1m * c1 + c2a - c2b + c1b * c1b - c1a * c1b;
    const ChowElement c3_coeff = -c1m + Rational(2) * c1;
    const ChowElement c2_class = expect_top(c2_coeff * c2, "(...) c2") + expect_top(c3_coeff * c3, "(-c1(M)+2c1) c3") +
                                 expect_top(c4, "c4");

    Rational c1_sq = integrate(c1_sq_class);
    Rational c2_num = integrate(c2_class);
    return {c1_sq_class, c2_class, std::move(c1_sq), std::move(c2_num)};
}

Rational double_point_check(const DegeneracyInput& input) {
    const auto [c1, c2, c3, c4] = difference_classes(input);
    const ChowElement& c1m = input.tangent_c1();
    const ChowElement& c2m = input.tangent_c2();

    const ChowElement correction = -((c1m - c1) * c1m * c2 - c1m * c3) + c2m * c2 - c2 * c2;
    return virtual_chern_numbers(input).c1_sq + integrate(expect_top(correction, "double point correction"));
}

ChowElement degeneracy_class(const DegeneracyInput& input) {
    return chern(input.difference(), 2);
}

}  // namespace chernslope
