#include "chernslope/rational.hpp"

#include <cctype>
#include <string>

#include "chernslope/errors.hpp"

namespace chernslope {

namespace {

Integer pow10(long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return r;
}

// |q| * 10^shift as an exact rational.
Rational scale10(const Rational& q, long shift) {
    if (shift >= 0) return q * Rational(pow10(shift));
    return q / Rational(pow10(-shift));
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

std::string to_string(const Rational& q) {
    return q.get_str();
}

std::string to_decimal(const Rational& q, int significant) {
    if (significant < 1) throw ArgumentError("to_decimal: need at least one significant digit");
    if (q == 0) return "0";

    const Rational mag = abs(q);

    // Decimal exponent e with 10^e <= |q| < 10^(e+1).
    long e = static_cast<long>(mpz_sizeinbase(mag.get_num_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(mag.get_den_mpz_t(), 10));
    while (scale10(mag, -e) < 1) --e;
    while (scale10(mag, -e) >= 10) ++e;

    long shift = significant - 1 - e;
    Rational scaled = scale10(mag, shift) + Rational(1, 2);
    Integer digits;
    mpz_fdiv_q(digits.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    if (digits == pow10(significant)) {
        // Rounding carried into a new leading digit (9.999995 -> 10.0000).
        digits /= 10;
        --shift;
    }

    std::string body = digits.get_str();
    if (shift <= 0) {
        body.append(static_cast<std::size_t>(-shift), '0');
    } else {
        const auto frac = static_cast<std::size_t>(shift);
        if (body.size() <= frac) body.insert(0, frac - body.size() + 1, '0');
        body.insert(body.size() - frac, ".");
        while (body.back() == '0') body.pop_back();
        if (body.back() == '.') body.pop_back();
    }
    return q < 0 ? "-" + body : body;
}

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    const Integer n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

Integer binomial(long n, long k) {
    if (k < 0) return 0;
    Integer num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

}  // namespace chernslope
