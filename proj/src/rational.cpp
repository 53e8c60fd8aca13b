#include <mzvkit/rational.hpp>

#include <cctype>

#include <mzvkit/errors.hpp>

namespace mzvkit
{

std::string to_string(const Rational &q)
{
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace
{

Integer parse_integer(std::string_view text, std::string_view whole)
{
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        ++pos;
    }
    if (pos == text.size()) {
        throw ParseError("rational", "malformed rational '" + std::string(whole) + "'");
    }
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw ParseError("rational", "malformed rational '" + std::string(whole) + "'");
        }
    }
    std::string digits(text);
    if (!digits.empty() && digits[0] == '+') {
        digits.erase(0, 1);
    }
    return Integer(digits, 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    const Integer num = parse_integer(text.substr(0, slash), text);
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
        throw ParseError("rational", "malformed rational '" + std::string(text) + "'");
    }
    const Integer den = parse_integer(den_text, text);
    if (den == 0) {
        throw ParseError("rational", "zero denominator in '" + std::string(text) + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

} // namespace mzvkit
