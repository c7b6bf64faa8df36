#include "kingdon/scalar.hpp"

#include "kingdon/errors.hpp"

namespace kingdon {

namespace {

Int parse_int(std::string_view text) {
    if (text.empty())
        throw ParseError("empty integer");
    size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size())
        throw ParseError("dangling sign in rational");
    for (size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw ParseError("bad character in rational: '" + std::string(text) + "'");
    return Int(std::string(text));
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Scalar(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw ParseError("zero denominator: '" + std::string(text) + "'");
    return Scalar(num, den);
}

std::string format_scalar(const Scalar& s) {
    if (denominator(s) == 1)
        return numerator(s).str();
    return numerator(s).str() + "/" + denominator(s).str();
}

int sign_of(const Scalar& s) {
    if (s > 0) return 1;
    if (s < 0) return -1;
    return 0;
}

std::optional<Scalar> rational_sqrt(const Scalar& s) {
    if (s < 0)
        return std::nullopt;
    Int n = numerator(s), d = denominator(s);
    Int rn = sqrt(n), rd = sqrt(d);
    if (rn * rn != n || rd * rd != d)
        return std::nullopt;
    return Scalar(rn, rd);
}

}  // namespace kingdon
