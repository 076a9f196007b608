#include "pim/rational.hpp"

#include <cctype>

namespace pim {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

// cpp_int's string constructor rejects a leading '+'.
BigInt to_bigint(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return BigInt(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_literal(text))
            throw ParseError("bad rational literal: '" + std::string(text) + "'");
        return Rational(to_bigint(text));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
        throw ParseError("bad rational literal: '" + std::string(text) + "'");
    const BigInt q = to_bigint(den);
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(to_bigint(num), q);
}

std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

}  // namespace pim
