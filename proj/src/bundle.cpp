#include "chernslope/bundle.hpp"

#include <string>
#include <utility>

#include "chernslope/errors.hpp"

namespace chernslope {

namespace {

void check_same_space(const BundleClass& e, const BundleClass& f, const char* op) {
    if (!(e.space() == f.space()))
        throw ArgumentError(std::string(op) + ": bundles live on different spaces (" + e.space().to_string() + " vs " +
                            f.space().to_string() + ")");
}

}  // namespace

BundleClass::BundleClass(ProductSpace space, long rank, ChowElement total_chern)
    : space_(std::move(space)), rank_(rank), total_chern_(std::move(total_chern)) {
    if (!(total_chern_.space() == space_))
        throw ArgumentError("BundleClass: total Chern class lives on " + total_chern_.space().to_string() + ", not " +
                            space_.to_string());
    if (total_chern_.constant_term() != 1)
        throw ArgumentError("BundleClass: total Chern class must have constant term 1");
}

BundleClass line_bundle(const ProductSpace& space, const std::vector<int>& degrees, int multiplicity) {
    if (degrees.size() != space.factors())
        throw ArgumentError("line_bundle: expected " + std::to_string(space.factors()) + " degrees, got " +
                            std::to_string(degrees.size()));
    if (multiplicity <= 0) throw ArgumentError("line_bundle: multiplicity must be positive");
    ChowElement c1(space);
    for (std::size_t i = 0; i < degrees.size(); ++i) c1 = c1 + Rational(degrees[i]) * hyperplane(space, i + 1);
    const ChowElement factor = ChowElement::one(space) + c1;
    return BundleClass(space, multiplicity, pow(factor, static_cast<unsigned>(multiplicity)));
}

BundleClass trivial_bundle(const ProductSpace& space, int rank) {
    if (rank < 0) throw ArgumentError("trivial_bundle: rank must be non-negative");
    return BundleClass(space, rank, ChowElement::one(space));
}

BundleClass direct_sum(const BundleClass& e, const BundleClass& f) {
    check_same_space(e, f, "direct_sum");
    return BundleClass(e.space(), e.rank() + f.rank(), e.total_chern() * f.total_chern());
}

BundleClass dual(const BundleClass& e) {
    ChowElement::Terms t;
    for (const auto& [ex, c] : e.total_chern().terms()) t.emplace(ex, total_degree(ex) % 2 ? Rational(-c) : c);
    return BundleClass(e.space(), e.rank(), ChowElement(e.space(), t));
}

BundleClass twist(const BundleClass& e, const BundleClass& line) {
    check_same_space(e, line, "twist");
    if (line.rank() != 1) throw ArgumentError("twist: twisting bundle must have rank 1, got " + std::to_string(line.rank()));
    if (e.rank() < 0) throw UnsupportedError("twist: refusing to twist a virtual class of negative rank");

    const ProductSpace& space = e.space();
    const int dim = space.dimension();
    const ChowElement l = chern(line, 1);

    std::vector<ChowElement> l_powers{ChowElement::one(space)};
    for (int j = 1; j <= dim; ++j) l_powers.push_back(l_powers.back() * l);

    ChowElement total(space);
    for (int k = 0; k <= dim; ++k) {
        for (int i = 0; i <= k; ++i) {
            const Integer coeff = binomial(e.rank() - i, k - i);
            if (coeff == 0) continue;
            total = total + Rational(coeff) * (chern(e, i) * l_powers[static_cast<std::size_t>(k - i)]);
        }
    }
    return BundleClass(space, e.rank(), std::move(total));
}

BundleClass kernel_from_sequence(const BundleClass& middle, const BundleClass& quotient) {
    check_same_space(middle, quotient, "kernel_from_sequence");
    if (middle.rank() < quotient.rank())
        throw ArgumentError("kernel_from_sequence: middle rank " + std::to_string(middle.rank()) +
                            " is smaller than quotient rank " + std::to_string(quotient.rank()));
    return BundleClass(middle.space(), middle.rank() - quotient.rank(),
                       middle.total_chern() * invert_unit_series(quotient.total_chern()));
}

BundleClass virtual_difference(const BundleClass& b, const BundleClass& a) {
    check_same_space(b, a, "virtual_difference");
    return BundleClass(b.space(), b.rank() - a.rank(), b.total_chern() * invert_unit_series(a.total_chern()));
}

ChowElement chern(const BundleClass& e, int i) {
    return graded_part(e.total_chern(), i);
}

}  // namespace chernslope
