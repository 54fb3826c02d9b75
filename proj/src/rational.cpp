#include "pmzv/rational.hpp"

#include <string>

#include "pmzv/errors.hpp"

namespace pmzv {

std::string to_string(const Rational& q)
{
    return q.get_str();
}

std::string to_string(const Integer& z)
{
    return z.get_str();
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    while (!s.empty() && (s.front() == ' ' || s.front() == '+')) {
        s.erase(s.begin());
    }
    while (!s.empty() && s.back() == ' ') {
        s.pop_back();
    }
    if (s.empty()) {
        throw parse_error("empty rational");
    }
    const auto slash = s.find('/');
    auto check_int = [&](const std::string& part) {
        std::size_t i = (!part.empty() && part[0] == '-') ? 1 : 0;
        if (i == part.size()) {
            throw parse_error("malformed rational '" + std::string(text) + "'");
        }
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') {
                throw parse_error("malformed rational '" + std::string(text) + "'");
            }
        }
    };
    Rational q;
    if (slash == std::string::npos) {
        check_int(s);
        q = Rational(Integer(s), 1);
    } else {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        check_int(num);
        check_int(den);
        Integer d(den);
        if (d == 0) {
            throw parse_error("zero denominator in '" + std::string(text) + "'");
        }
        q = Rational(Integer(num), d);
    }
    q.canonicalize();
    return q;
}

Rational rational_pow(const Rational& base, long exponent)
{
    if (exponent < 0) {
        if (base == 0) {
            throw domain_error("rational_pow: zero to a negative power");
        }
        return 1 / rational_pow(base, -exponent);
    }
    Integer num;
    Integer den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace pmzv
