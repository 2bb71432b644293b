#ifndef GERBECALC_RATIONAL_HPP
#define GERBECALC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace gerbecalc {

// All arithmetic in this project is exact: arbitrary-precision integers and
// rationals, never floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// Largest integer n with n <= r.
inline Int rat_floor(const Rat& r)
{
    Int q = rat_num(r) / rat_den(r);
    if (rat_num(r) < 0 && q * rat_den(r) != rat_num(r))
        --q;
    return q;
}

// Canonical representative of r + Z in [0,1).
inline Rat mod_one(const Rat& r) { return r - Rat(rat_floor(r)); }

// Canonical representative of n + mZ in [0,m).
inline Int mod_int(const Int& n, const Int& m)
{
    Int r = n % m;
    if (r < 0)
        r += m;
    return r;
}

// "p/q" or "p"; rejects q = 0 and malformed text.
std::optional<Rat> parse_rational(const std::string& text);

// Lowest terms, "p/q" with the "/q" omitted for integers.
std::string rational_to_string(const Rat& r);

} // namespace gerbecalc

#endif
