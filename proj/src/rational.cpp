#include "gerbecalc/rational.hpp"

#include <cctype>

namespace gerbecalc {

std::optional<Rat> parse_rational(const std::string& text)
{
    auto parse_int = [](const std::string& s) -> std::optional<Int> {
        if (s.empty())
            return std::nullopt;
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            return std::nullopt;
        for (size_t j = i; j < s.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(s[j])))
                return std::nullopt;
        return Int(s);
    };

    auto slash = text.find('/');
    if (slash == std::string::npos) {
        auto n = parse_int(text);
        if (!n)
            return std::nullopt;
        return Rat(*n);
    }
    auto num = parse_int(text.substr(0, slash));
    auto den = parse_int(text.substr(slash + 1));
    if (!num || !den || *den == 0)
        return std::nullopt;
    return Rat(*num) / Rat(*den);
}

std::string rational_to_string(const Rat& r)
{
    std::string s = rat_num(r).str();
    if (!is_integer(r))
        s += "/" + rat_den(r).str();
    return s;
}

} // namespace gerbecalc
