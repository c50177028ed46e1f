#pragma once

// Slope of a family after base change along a fiber product of two
// multisections.
//
// Start from a family Y -> C (base genus h) with two smooth multisections
// A_1, A_2 of degrees m_1, m_2 that meet transversally, never at points where
// either is tangent to a fiber. Base changing along B = A_1 x_C A_2 gives two
// sections; blowing up their A_1.A_2 intersection points separates them into
// sections sigma~_1, sigma~_2 of a new family over B. On B:
//
//   lambda  = m_1 m_2 F.lambda
//   delta_1 = A_1.A_2                       (exceptional curves)
//   delta_j = m_1 m_2 F.delta_j             (j != 0, 1, i)
//   delta_0 = m_1 m_2 F.delta_0
//             + sum_l ( m_{3-l} (m_l (2h - 2) - (2g(A_l) - 2) + A_l^2) - A_1.A_2 )
//
// and each summand of the delta_0 correction equals sigma~_l^2.

#include <string>
#include <vector>

#include "chernslope/rational.hpp"

namespace chernslope {

/// Pulled-back boundary degree F.delta_j for some j outside {0, 1, i}. The
/// label is carried through untouched.
struct BoundaryTerm {
    std::string label;
    Rational value;
};

struct BaseChangeParams {
    long m1 = 1;
    long m2 = 1;
    long g_A1 = 0;
    long g_A2 = 0;
    long A1_sq = 0;
    long A2_sq = 0;
    long A12 = 0;
    long base_genus = 0;
    Rational base_lambda;
    Rational base_delta0;
    std::vector<BoundaryTerm> base_delta_rest;

    /// ArgumentError unless m_l >= 1 and A12 >= 0.
    void validate() const;

    /// The same data with the roles of A_1 and A_2 exchanged.
    BaseChangeParams swapped() const;
};

/// A_l . omega_{Y/C} = (2g(A_l) - 2) - A_l^2 - m_l (2h - 2). `l` is 1 or 2.
Rational relative_omega_degree(const BaseChangeParams& params, int l);

/// sigma~_l^2 = m_{3-l} (-A_l . omega_{Y/C}) - A_1.A_2.
Rational sigma_tilde_self_intersection(const BaseChangeParams& params, int l);

/// The correction sum in the pulled-back delta_0 (without m_1 m_2 F.delta_0).
Rational beta_delta0_correction(const BaseChangeParams& params);

/// m_1 m_2 F.delta_j for j outside {0, 1, i}.
Rational beta_delta_j(const BaseChangeParams& params, const Rational& f_delta_j);

struct PullbackSlope {
    Rational lambda_B;
    Rational delta0_B;
    Rational delta1_B;
    std::vector<BoundaryTerm> delta_rest_B;
    Rational correction;
    Rational slope;
};

/// Throws SlopeUndefinedError when base_lambda = 0.
PullbackSlope pullback_slope(const BaseChangeParams& params);

}  // namespace chernslope
