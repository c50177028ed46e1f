#pragma once

#include "chernslope/bundle.hpp"
#include "chernslope/degeneracy.hpp"

namespace fixtures {

inline const chernslope::ProductSpace& p1p3() {
    static const chernslope::ProductSpace space({1, 3});
    return space;
}

inline chernslope::ChowElement h(std::size_t i) {
    return chernslope::hyperplane(p1p3(), i);
}

/// E in 0 -> E -> O(1,0)^8 + O(0,-1) -> O(1,1)^4 -> 0 on P^1 x P^3.
inline chernslope::BundleClass kernel_bundle() {
    using namespace chernslope;
    const BundleClass middle = direct_sum(line_bundle(p1p3(), {1, 0}, 8), line_bundle(p1p3(), {0, -1}));
    return kernel_from_sequence(middle, line_bundle(p1p3(), {1, 1}, 4));
}

/// A = O^4, B = E(2).
inline chernslope::DegeneracyInput m15_input() {
    using namespace chernslope;
    return DegeneracyInput::on_product(p1p3(), trivial_bundle(p1p3(), 4),
                                       twist(kernel_bundle(), line_bundle(p1p3(), {0, 2})));
}

/// A = O, B = O(1,0) + O(0,1).
inline chernslope::DegeneracyInput small_input() {
    using namespace chernslope;
    return DegeneracyInput::on_product(p1p3(), trivial_bundle(p1p3(), 1),
                                       direct_sum(line_bundle(p1p3(), {1, 0}), line_bundle(p1p3(), {0, 1})));
}

}  // namespace fixtures
