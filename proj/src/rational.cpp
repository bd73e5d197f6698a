#include "simplexramsey/rational.hpp"

#include <cctype>

namespace sr {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty rational literal");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw ParseError("sign without digits in rational literal");

    auto slash = s.find('/');
    auto dot = s.find('.');
    Rational result;
    if (slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed fraction: '" + std::string(text) + "'");
        Integer q{std::string(den)};
        if (q == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
        result = Rational(Integer{std::string(num)}, q);
    } else if (dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty())
            throw ParseError("malformed decimal: '" + std::string(text) + "'");
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
            throw ParseError("malformed decimal: '" + std::string(text) + "'");
        Integer scaled{whole.empty() ? "0" : std::string(whole)};
        Integer ten{10};
        for (char c : frac) {
            scaled = scaled * ten + (c - '0');
        }
        Integer denom{1};
        for (size_t i = 0; i < frac.size(); ++i) denom *= ten;
        result = Rational(scaled, denom);
    } else {
        if (!all_digits(s))
            throw ParseError("not a rational literal: '" + std::string(text) + "'");
        result = Rational(Integer{std::string(s)});
    }
    return negative ? -result : result;
}

std::string to_string(const Rational& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace sr
