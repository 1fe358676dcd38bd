#ifndef HDEG_NUMERIC_HPP
#define HDEG_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace hdeg {

using ZZ = boost::multiprecision::cpp_int;
using QQ = boost::multiprecision::cpp_rational;

struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// C(a,b), with C(a,b) = 0 whenever b < 0 or a < b.
inline ZZ binomial(long a, long b) {
    if (b < 0 || a < b) return 0;
    b = std::min(b, a - b);
    ZZ r = 1;
    for (long i = 0; i < b; ++i) {
        r *= a - i;
        r /= i + 1;
    }
    return r;
}

inline long binomial_l(long a, long b) { return static_cast<long>(binomial(a, b)); }

} // namespace hdeg

#endif
