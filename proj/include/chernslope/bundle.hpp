#pragma once

// Vector bundles and virtual bundle classes, tracked only through their rank
// and total Chern class c(E) = 1 + c_1(E) + c_2(E) + ... in the Chow ring.

#include <vector>

#include "chernslope/chow_ring.hpp"

namespace chernslope {

class BundleClass {
public:
    /// Throws ArgumentError if total_chern lives on another space or does
    /// not have constant term 1.
    BundleClass(ProductSpace space, long rank, ChowElement total_chern);

    const ProductSpace& space() const noexcept { return space_; }
    long rank() const noexcept { return rank_; }
    const ChowElement& total_chern() const noexcept { return total_chern_; }

    friend bool operator==(const BundleClass&, const BundleClass&) = default;

private:
    ProductSpace space_;
    long rank_;
    ChowElement total_chern_;
};

/// O(a_1, ..., a_k)^multiplicity, with c = (1 + sum a_i H_i)^multiplicity.
BundleClass line_bundle(const ProductSpace& space, const std::vector<int>& degrees, int multiplicity = 1);

/// Trivial bundle of the given rank.
BundleClass trivial_bundle(const ProductSpace& space, int rank);

/// Whitney sum.
BundleClass direct_sum(const BundleClass& e, const BundleClass& f);

/// c_i(E^v) = (-1)^i c_i(E).
BundleClass dual(const BundleClass& e);

/// E (x) L for a line bundle L:
///
///     c_k(E (x) L) = sum_{i=0}^{k} C(r - i, k - i) c_i(E) c_1(L)^{k - i},
///
/// with C the generalized binomial coefficient, so classes with c_i != 0
/// for i > r (e.g. formal kernels) twist consistently with their defining
/// sequences. Virtual classes of negative rank are refused.
BundleClass twist(const BundleClass& e, const BundleClass& line);

/// E in 0 -> E -> middle -> quotient -> 0.
BundleClass kernel_from_sequence(const BundleClass& middle, const BundleClass& quotient);

/// The K-theory class B - A, c(B - A) = c(B) / c(A). Rank may be negative.
BundleClass virtual_difference(const BundleClass& b, const BundleClass& a);

/// c_i(E); zero for i < 0.
ChowElement chern(const BundleClass& e, int i);

}  // namespace chernslope
