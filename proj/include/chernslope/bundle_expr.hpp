#pragma once

// Text grammar for bundle expressions:
//
//   expr := O(a1,...,ak)[^m]          line bundle, optional multiplicity
//         | sum(expr, expr)           direct sum
//         | dual(expr)
//         | twist(expr, expr)         second argument must have rank 1
//         | ker(expr -> expr)         kernel of middle -> quotient
//         | name                      reference resolved by the caller
//
// Whitespace between tokens is ignored.

#include <functional>
#include <string>
#include <string_view>

#include "chernslope/bundle.hpp"

namespace chernslope {

using BundleResolver = std::function<BundleClass(const std::string& name)>;

/// Parses and evaluates `text`. Names are looked up through `resolve`; with
/// no resolver any name is a ParseError. Syntax problems throw ParseError;
/// errors from the bundle operations propagate unchanged.
BundleClass evaluate_bundle_expression(const ProductSpace& space, std::string_view text,
                                       const BundleResolver& resolve = {});

}  // namespace chernslope
