#pragma once

// Invariants of a fibered surface S -> C (fiber genus g, base genus q)
// viewed as a one-parameter family of curves:
//
//   kappa  = c_1(S)^2 - 2 (2g - 2)(2q - 2)     (omega_{S/C}^2)
//   delta  = c_2(S) - (2 - 2g)(2 - 2q)         (singular fibers, counted)
//   lambda = (kappa + delta) / 12              (Noether/Mumford)
//   slope  = delta / lambda
//
// The q-dependence follows the usual relative-invariant definitions; the
// bundled scenarios only exercise q = 0.

#include <optional>
#include <string>
#include <vector>

#include "chernslope/rational.hpp"

namespace chernslope {

struct FamilyOptions {
    /// Accept fiber genus 0 or 1.
    bool allow_low_genus = false;
    /// Attach a warning when kappa + delta is not divisible by 12.
    bool require_integral = true;
};

struct FamilyInvariants {
    Rational kappa;
    Rational delta;
    Rational lambda_;
    /// Empty when lambda_ = 0.
    std::optional<Rational> slope;
    long fiber_genus = 0;
    long base_genus = 0;
    std::vector<std::string> warnings;

    /// The slope, or SlopeUndefinedError when lambda_ = 0.
    const Rational& slope_value() const;
};

FamilyInvariants invariants_from_chern_numbers(const Rational& c1_sq, const Rational& c2, long g, long q,
                                               const FamilyOptions& options = {});

}  // namespace chernslope
