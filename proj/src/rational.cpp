#include <icf/rational.hpp>
#include <icf/errors.hpp>

#include <cctype>

namespace icf
{
    auto binomial(std::uint64_t n, std::uint64_t r) -> BigInt
    {
        if (r > n)
            return 0;
        r = std::min(r, n - r);
        BigInt result = 1;
        for (std::uint64_t i = 1 ; i <= r ; ++i) {
            result *= n - r + i;
            result /= i;
        }
        return result;
    }

    auto ceil_div(const BigInt & num, const BigInt & den) -> BigInt
    {
        if (den <= 0)
            throw InvalidArgument("ceil_div requires a positive denominator");
        BigInt q = num / den;
        if (q * den < num)
            ++q;
        return q;
    }

    auto to_fraction_string(const Rational & r) -> std::string
    {
        return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
    }

    auto parse_fraction(const std::string & text) -> Rational
    {
        auto slash = text.find('/');
        auto digits = [] (const std::string & s, bool allow_sign) {
            if (s.empty())
                return false;
            std::size_t start = (allow_sign && s[0] == '-') ? 1 : 0;
            if (start == s.size())
                return false;
            for (std::size_t i = start ; i < s.size() ; ++i)
                if (! std::isdigit(static_cast<unsigned char>(s[i])))
                    return false;
            return true;
        };
        if (slash == std::string::npos)
            throw InvalidArgument("fraction '" + text + "' lacks '/'");
        auto num = text.substr(0, slash), den = text.substr(slash + 1);
        if (! digits(num, true) || ! digits(den, false))
            throw InvalidArgument("malformed fraction '" + text + "'");
        BigInt d(den);
        if (d == 0)
            throw InvalidArgument("fraction '" + text + "' has zero denominator");
        return Rational(BigInt(num), d);
    }

    auto to_double(const Rational & r) -> double
    {
        return r.convert_to<double>();
    }

    auto to_long_double(const BigInt & i) -> long double
    {
        return i.convert_to<long double>();
    }
}
