#include "ghurwitz/rational.hpp"

#include <cctype>

namespace ghurwitz {

Rational Rational::parse(const std::string& s) {
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };

    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_int(s)) throw parse_error("malformed rational: '" + s + "'");
        return Rational(mpz_class(s, 10), mpz_class(1));
    }
    const std::string nums = s.substr(0, slash);
    const std::string dens = s.substr(slash + 1);
    if (!is_int(nums) || !is_int(dens)) throw parse_error("malformed rational: '" + s + "'");
    mpz_class den(dens, 10);
    if (den == 0) throw parse_error("zero denominator in '" + s + "'");
    return Rational(mpz_class(nums, 10), den);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::pow(std::int64_t e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw domain_error("zero to a negative power");
        return Rational(0);
    }
    Rational base = e > 0 ? *this : inv();
    std::uint64_t n = e > 0 ? static_cast<std::uint64_t>(e) : static_cast<std::uint64_t>(-e);
    Rational acc(1);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

}  // namespace ghurwitz
