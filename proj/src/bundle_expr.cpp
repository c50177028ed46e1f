#include "chernslope/bundle_expr.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "chernslope/errors.hpp"

namespace chernslope {

namespace {

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Parser {
public:
    Parser(const ProductSpace& space, std::string_view text, const BundleResolver& resolve)
        : space_(space), text_(text), resolve_(resolve) {}

    BundleClass parse() {
        BundleClass result = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return result;
    }

private:
    BundleClass expression() {
        skip_space();
        if (pos_ >= text_.size()) fail("expected a bundle expression");
        if (!is_ident_start(text_[pos_])) fail("expected a bundle expression");

        const std::string word = identifier();
        skip_space();
        const bool call = pos_ < text_.size() && text_[pos_] == '(';

        if (call && word == "O") return line();
        if (call && word == "sum") {
            expect('(');
            BundleClass e = expression();
            expect(',');
            BundleClass f = expression();
            expect(')');
            return direct_sum(e, f);
        }
        if (call && word == "dual") {
            expect('(');
            BundleClass e = expression();
            expect(')');
            return dual(e);
        }
        if (call && word == "twist") {
            expect('(');
            BundleClass e = expression();
            expect(',');
            BundleClass l = expression();
            expect(')');
            return twist(e, l);
        }
        if (call && word == "ker") {
            expect('(');
            BundleClass middle = expression();
            expect("->");
            BundleClass quotient = expression();
            expect(')');
            return kernel_from_sequence(middle, quotient);
        }
        if (call) fail("unknown bundle operation '" + word + "'");
        if (!resolve_) fail("unresolved bundle name '" + word + "'");
        return resolve_(word);
    }

    BundleClass line() {
        expect('(');
        std::vector<int> degrees{integer()};
        while (peek(',')) {
            expect(',');
            degrees.push_back(integer());
        }
        expect(')');
        int multiplicity = 1;
        if (peek('^')) {
            expect('^');
            multiplicity = integer();
        }
        if (degrees.size() != space_.factors())
            fail("O(...) has " + std::to_string(degrees.size()) + " degrees but the space has " +
                 std::to_string(space_.factors()) + " factors");
        if (multiplicity <= 0) fail("multiplicity must be positive");
        return line_bundle(space_, degrees, multiplicity);
    }

    std::string identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    int integer() {
        skip_space();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const char* first = text_.data() + start;
        if (*first == '+') ++first;
        int value = 0;
        const auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
        if (ec != std::errc() || ptr != text_.data() + pos_) {
            pos_ = start;
            fail("expected an integer");
        }
        return value;
    }

    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void expect(std::string_view token) {
        skip_space();
        if (text_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'");
        pos_ += token.size();
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    const ProductSpace& space_;
    std::string_view text_;
    const BundleResolver& resolve_;
    std::size_t pos_ = 0;
};

}  // namespace

BundleClass evaluate_bundle_expression(const ProductSpace& space, std::string_view text, const BundleResolver& resolve) {
    return Parser(space, text, resolve).parse();
}

}  // namespace chernslope
