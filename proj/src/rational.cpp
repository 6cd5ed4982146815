#include "torex/rational.hpp"

#include <charconv>
#include <cstdlib>

namespace torex {

namespace {

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_literal(text)) {
            throw ParseError("not a rational literal: '" + text + "'");
        }
        return Rat(boost::multiprecision::mpz_int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) {
        throw ParseError("not a rational literal: '" + text + "'");
    }
    const boost::multiprecision::mpz_int p(num), q(den);
    if (q == 0) {
        throw ParseError("zero denominator in rational literal: '" + text + "'");
    }
    return Rat(p, q);  // mpq canonicalizes: lowest terms, positive denominator
}

std::string format_rational(const Rat& value) {
    return value.str();  // GMP canonical "p" or "p/q"
}

std::string scalar_traits<double>::str(double a) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), a);
    return std::string(buf, res.ptr);
}

}  // namespace torex
