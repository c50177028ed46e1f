#include "chernslope/family.hpp"

#include "chernslope/errors.hpp"

namespace chernslope {

const Rational& FamilyInvariants::slope_value() const {
    if (!slope) throw SlopeUndefinedError("slope undefined: lambda = 0");
    return *slope;
}

FamilyInvariants invariants_from_chern_numbers(const Rational& c1_sq, const Rational& c2, long g, long q,
                                               const FamilyOptions& options) {
    if (g < 0) throw ArgumentError("family: fiber genus must be non-negative");
    if (g < 2 && !options.allow_low_genus)
        throw ArgumentError("family: fiber genus " + std::to_string(g) + " < 2 requires allow_low_genus");
    if (q < 0) throw ArgumentError("family: base genus must be non-negative");

    FamilyInvariants out;
    out.fiber_genus = g;
    out.base_genus = q;
    out.kappa = c1_sq - Rational(2 * (2 * g - 2) * (2 * q - 2));
    out.delta = c2 - Rational((2 - 2 * g) * (2 - 2 * q));
    const Rational sum = out.kappa + out.delta;
    out.lambda_ = sum / 12;

    if (options.require_integral && out.lambda_.get_den() != 1)
        out.warnings.push_back("kappa + delta = " + to_string(sum) + " is not divisible by 12");
    if (out.lambda_ != 0) out.slope = Rational(out.delta / out.lambda_);

    if (Rational(12 * out.lambda_) != out.kappa + out.delta)
        throw InternalError("family: 12 lambda != kappa + delta");
    return out;
}

}  // namespace chernslope
