#include "chernslope/chow_ring.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <utility>

#include "chernslope/errors.hpp"

namespace chernslope {

namespace {

bool in_box(const ProductSpace& space, const Exponents& e) {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > space.dims()[i]) return false;
    return true;
}

void check_same_space(const ChowElement& x, const ChowElement& y, const char* op) {
    if (!(x.space() == y.space()))
        throw ArgumentError(std::string(op) + ": operands live on different spaces (" + x.space().to_string() +
                            " vs " + y.space().to_string() + ")");
}

// Adds c to terms[e], erasing the entry if it cancels.
void accumulate(ChowElement::Terms& terms, const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, std::string_view context) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw ParseError("bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
    return value;
}

template <typename Render>
std::string render(const ChowElement& x, Render&& coefficient) {
    if (x.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : x.terms()) {
        if (!first) out << " + ";
        first = false;
        out << coefficient(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) out << "*H" << (i + 1) << '^' << e[i];
    }
    return out.str();
}

}  // namespace

ProductSpace::ProductSpace(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw ArgumentError("ProductSpace: need at least one factor");
    for (int n : dims_)
        if (n < 1) throw ArgumentError("ProductSpace: factor dimensions must be >= 1");
    dimension_ = std::accumulate(dims_.begin(), dims_.end(), 0);
}

std::string ProductSpace::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (i) s += " x ";
        s += "P^" + std::to_string(dims_[i]);
    }
    return s;
}

int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

ChowElement::ChowElement(ProductSpace space) : space_(std::move(space)) {}

ChowElement::ChowElement(ProductSpace space, const Terms& terms) : space_(std::move(space)) {
    for (const auto& [e, c] : terms) {
        if (e.size() != space_.factors())
            throw ArgumentError("ChowElement: exponent vector length does not match the number of factors");
        for (int ei : e)
            if (ei < 0) throw ArgumentError("ChowElement: negative exponent");
        if (in_box(space_, e)) accumulate(terms_, e, c);
    }
}

ChowElement ChowElement::constant(ProductSpace space, const Rational& c) {
    Exponents zero(space.factors(), 0);
    return ChowElement(std::move(space), Terms{{std::move(zero), c}});
}

Rational ChowElement::coefficient(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational ChowElement::constant_term() const {
    return coefficient(Exponents(space_.factors(), 0));
}

bool ChowElement::is_homogeneous(int d) const {
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return false;
    return true;
}

ChowElement ChowElement::operator-() const {
    ChowElement r(space_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

ChowElement operator+(const ChowElement& x, const ChowElement& y) {
    check_same_space(x, y, "add");
    ChowElement r = x;
    for (const auto& [e, c] : y.terms_) accumulate(r.terms_, e, c);
    return r;
}

ChowElement operator-(const ChowElement& x, const ChowElement& y) {
    return x + (-y);
}

ChowElement operator*(const ChowElement& x, const ChowElement& y) {
    check_same_space(x, y, "mul");
    const auto& dims = x.space_.dims();
    ChowElement r(x.space_);
    Exponents e(dims.size());
    for (const auto& [ex, cx] : x.terms_) {
        for (const auto& [ey, cy] : y.terms_) {
            bool vanishes = false;
            for (std::size_t i = 0; i < dims.size(); ++i) {
                e[i] = ex[i] + ey[i];
                if (e[i] > dims[i]) {
                    vanishes = true;
                    break;
                }
            }
            if (!vanishes) accumulate(r.terms_, e, cx * cy);
        }
    }
    return r;
}

ChowElement operator*(const Rational& c, const ChowElement& x) {
    ChowElement r(x.space_);
    if (c == 0) return r;
    for (const auto& [e, cx] : x.terms_) r.terms_.emplace(e, c * cx);
    return r;
}

ChowElement hyperplane(const ProductSpace& space, std::size_t i) {
    if (i < 1 || i > space.factors())
        throw ArgumentError("hyperplane: factor index " + std::to_string(i) + " out of range [1, " +
                            std::to_string(space.factors()) + "]");
    Exponents e(space.factors(), 0);
    e[i - 1] = 1;
    return ChowElement(space, ChowElement::Terms{{e, Rational(1)}});
}

ChowElement linear_combine(std::span<const Rational> coeffs, std::span<const ChowElement> elems) {
    if (coeffs.size() != elems.size())
        throw ArgumentError("linear_combine: coefficient and element lists differ in length");
    if (elems.empty()) throw ArgumentError("linear_combine: empty combination has no space");
    ChowElement r(elems.front().space());
    for (std::size_t j = 0; j < elems.size(); ++j) r = r + coeffs[j] * elems[j];
    return r;
}

ChowElement mul(const ChowElement& x, const ChowElement& y) {
    return x * y;
}

ChowElement pow(const ChowElement& x, unsigned n) {
    ChowElement result = ChowElement::one(x.space());
    ChowElement base = x;
    while (n) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n) base = base * base;
    }
    return result;
}

ChowElement graded_part(const ChowElement& x, int d) {
    ChowElement::Terms t;
    for (const auto& [e, c] : x.terms())
        if (total_degree(e) == d) t.emplace(e, c);
    return ChowElement(x.space(), t);
}

Rational integrate(const ChowElement& x) {
    return x.coefficient(x.space().dims());
}

ChowElement invert_unit_series(const ChowElement& x) {
    if (x.constant_term() != 1)
        throw NonUnitError("invert_unit_series: constant term is " + to_string(x.constant_term()) + ", expected 1");
    const ChowElement one = ChowElement::one(x.space());
    const ChowElement nilpotent = one - x;
    ChowElement sum = one;
    ChowElement power = one;
    // nilpotent^(dim + 1) = 0 since every term has degree >= 1.
    for (int j = 1; j <= x.space().dimension(); ++j) {
        power = power * nilpotent;
        if (power.is_zero()) break;
        sum = sum + power;
    }
    return sum;
}

std::string serialize(const ChowElement& x) {
    return render(x, [](const Rational& c) { return to_string(c); });
}

std::string serialize_decimal(const ChowElement& x, int significant) {
    return render(x, [significant](const Rational& c) { return to_decimal(c, significant); });
}

ChowElement parse_chow_element(const ProductSpace& space, std::string_view text) {
    const std::string_view body = trim(text);
    if (body.empty()) throw ParseError("empty Chow element");
    if (body == "0") return ChowElement(space);

    ChowElement::Terms terms;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        const auto plus = body.find('+', pos);
        const std::string_view term = trim(body.substr(pos, plus == std::string_view::npos ? plus : plus - pos));
        if (term.empty()) throw ParseError("empty term in '" + std::string(text) + "'");

        const auto star = term.find('*');
        const Rational c = parse_rational(term.substr(0, star));
        Exponents e(space.factors(), 0);
        std::size_t fpos = star;
        while (fpos != std::string_view::npos) {
            const auto next = term.find('*', fpos + 1);
            const std::string_view factor = term.substr(fpos + 1, next == std::string_view::npos ? next : next - fpos - 1);
            if (factor.size() < 2 || factor.front() != 'H')
                throw ParseError("bad factor '" + std::string(factor) + "' in '" + std::string(text) + "'");
            const auto caret = factor.find('^');
            const int index = parse_int(factor.substr(1, caret == std::string_view::npos ? caret : caret - 1), text);
            const int power = caret == std::string_view::npos ? 1 : parse_int(factor.substr(caret + 1), text);
            if (index < 1 || static_cast<std::size_t>(index) > space.factors() || power < 0)
                throw ParseError("factor '" + std::string(factor) + "' does not fit " + space.to_string());
            e[static_cast<std::size_t>(index - 1)] += power;
            fpos = next;
        }
        if (in_box(space, e)) accumulate(terms, e, c);

        if (plus == std::string_view::npos) break;
        pos = plus + 1;
    }
    return ChowElement(space, terms);
}

}  // namespace chernslope
