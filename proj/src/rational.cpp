#include "orbitcert/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace orbitcert {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

std::vector<std::string_view> split_commas(std::string_view text) {
    std::vector<std::string_view> out;
    text = trim(text);
    if (text.empty())
        return out;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(',', start);
        out.push_back(trim(text.substr(start, pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

} // namespace

Rational make_rational(long num, long den) {
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
    if (num.front() == '+')
        num.remove_prefix(1);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) {
    return value.get_str(10);
}

bool is_integer(const Rational& value) {
    return value.get_den() == 1;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    for (auto piece : split_commas(text))
        out.push_back(parse_rational(piece));
    return out;
}

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    for (auto piece : split_commas(text)) {
        if (!is_integer_literal(piece))
            throw std::invalid_argument("not an integer: '" + std::string(piece) + "'");
        out.push_back(std::stoi(std::string(piece)));
    }
    return out;
}

} // namespace orbitcert
