#include "rational.hpp"

namespace pickseq {

Rational parse_rational(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    auto parse_int = [](const std::string& part) -> BigInt {
        if (part.empty()) throw std::invalid_argument("empty integer in rational literal");
        std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size()) throw std::invalid_argument("sign without digits in rational literal");
        for (std::size_t i = start; i < part.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw std::invalid_argument("invalid rational literal: " + part);
        }
        return BigInt(part);
    };

    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s));
    BigInt num = parse_int(s.substr(0, slash));
    BigInt den = parse_int(s.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("rational denominator must be positive: " + s);
    return Rational(num, den);
}

std::string rational_str(const Rational& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

Ratio make_ratio(const Rational& num, const Rational& den) {
    if (den == 0) {
        if (num == 0) return Ratio::of(Rational(1));
        return Ratio::infinity();
    }
    return Ratio::of(num / den);
}

}  // namespace pickseq
