#include "pmzv/rings.hpp"

#include <cstdio>
#include <cstdlib>

namespace pmzv {

namespace {

std::string shortest_double(double x)
{
    char buf[32];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) {
            break;
        }
    }
    return buf;
}

} // namespace

// "a+bi" with round-trip precision; the imaginary part is omitted when 0.
std::string format_complex(const Complex& x)
{
    std::string s = shortest_double(x.real());
    if (x.imag() != 0.0) {
        const std::string im = shortest_double(x.imag());
        s += (im.front() == '-' ? "" : "+") + im + "i";
    }
    return s;
}

Complex parse_complex(const std::string& text)
{
    std::string s;
    for (char c : text) {
        if (c != ' ') {
            s.push_back(c);
        }
    }
    if (s.empty()) {
        throw parse_error("complex: empty input");
    }
    const char* begin = s.c_str();
    char* end = nullptr;
    if (s.back() == 'i' || s.back() == 'j') {
        s.pop_back();
        begin = s.c_str();
        // Split at the last sign that is not an exponent sign.
        std::size_t split = std::string::npos;
        for (std::size_t i = s.size(); i-- > 1;) {
            if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
                split = i;
                break;
            }
        }
        double re = 0.0;
        std::string im_part = s;
        if (split != std::string::npos) {
            const std::string re_part = s.substr(0, split);
            re = std::strtod(re_part.c_str(), &end);
            if (end != re_part.c_str() + re_part.size()) {
                throw parse_error("complex: malformed '" + text + "'");
            }
            im_part = s.substr(split);
        }
        double im = 0.0;
        if (im_part == "+" || im_part.empty()) {
            im = 1.0;
        } else if (im_part == "-") {
            im = -1.0;
        } else {
            im = std::strtod(im_part.c_str(), &end);
            if (end != im_part.c_str() + im_part.size()) {
                throw parse_error("complex: malformed '" + text + "'");
            }
        }
        return {re, im};
    }
    const double re = std::strtod(begin, &end);
    if (end != begin + s.size()) {
        throw parse_error("complex: malformed '" + text + "'");
    }
    return {re, 0.0};
}

} // namespace pmzv
