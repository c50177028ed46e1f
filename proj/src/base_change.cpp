#include "chernslope/base_change.hpp"

#include <utility>

#include "chernslope/errors.hpp"

namespace chernslope {

namespace {

struct Multisection {
    long m;
    long genus;
    long self_intersection;
};

Multisection multisection(const BaseChangeParams& p, int l) {
    if (l == 1) return {p.m1, p.g_A1, p.A1_sq};
    if (l == 2) return {p.m2, p.g_A2, p.A2_sq};
    throw ArgumentError("base_change: multisection index must be 1 or 2, got " + std::to_string(l));
}

}  // namespace

void BaseChangeParams::validate() const {
    if (m1 < 1 || m2 < 1) throw ArgumentError("base_change: multisection degrees must be >= 1");
    if (A12 < 0) throw ArgumentError("base_change: A1.A2 must be >= 0");
}

BaseChangeParams BaseChangeParams::swapped() const {
    BaseChangeParams s = *this;
    std::swap(s.m1, s.m2);
    std::swap(s.g_A1, s.g_A2);
    std::swap(s.A1_sq, s.A2_sq);
    return s;
}

Rational relative_omega_degree(const BaseChangeParams& params, int l) {
    const auto [m, genus, self] = multisection(params, l);
    return Rational((2 * genus - 2) - self - m * (2 * params.base_genus - 2));
}

Rational sigma_tilde_self_intersection(const BaseChangeParams& params, int l) {
    params.validate();
    const long other = multisection(params, 3 - l).m;
    return Rational(other) * -relative_omega_degree(params, l) - params.A12;
}

Rational beta_delta0_correction(const BaseChangeParams& params) {
    params.validate();
    Rational sum = 0;
    for (int l = 1; l <= 2; ++l) {
        const auto [m, genus, self] = multisection(params, l);
        const long other = multisection(params, 3 - l).m;
        sum += Rational(other * (m * (2 * params.base_genus - 2) - (2 * genus - 2) + self) - params.A12);
    }
    return sum;
}

Rational beta_delta_j(const BaseChangeParams& params, const Rational& f_delta_j) {
    params.validate();
    return Rational(params.m1 * params.m2) * f_delta_j;
}

PullbackSlope pullback_slope(const BaseChangeParams& params) {
    params.validate();
    if (params.base_lambda == 0) throw SlopeUndefinedError("pullback_slope: base lambda is 0");

    const Rational degree(params.m1 * params.m2);
    PullbackSlope out;
    out.correction = beta_delta0_correction(params);
    out.lambda_B = degree * params.base_lambda;
    out.delta0_B = degree * params.base_delta0 + out.correction;
    out.delta1_B = params.A12;

    Rational delta = out.delta0_B + out.delta1_B;
    for (const auto& term : params.base_delta_rest) {
        out.delta_rest_B.push_back({term.label, beta_delta_j(params, term.value)});
        delta += out.delta_rest_B.back().value;
    }
    out.slope = delta / out.lambda_B;
    return out;
}

}  // namespace chernslope
