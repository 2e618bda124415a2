#include <uturan/errors.hh>
#include <uturan/rational.hh>

#include <numeric>
#include <ostream>
#include <stdexcept>
#include <vector>

using namespace uturan;

using std::int64_t;
using std::string;
using std::string_view;
using std::vector;

namespace
{
    using Wide = __int128;

    auto narrow(Wide v) -> int64_t
    {
        if (v > Wide{INT64_MAX} || v < Wide{INT64_MIN})
            throw std::overflow_error("rational overflow");
        return static_cast<int64_t>(v);
    }

    auto gcd_wide(Wide a, Wide b) -> Wide
    {
        if (a < 0)
            a = -a;
        if (b < 0)
            b = -b;
        while (b != 0) {
            Wide t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    auto make_reduced(Wide num, Wide den) -> Rational
    {
        if (den == 0)
            throw std::domain_error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        Wide g = gcd_wide(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        return Rational{narrow(num), narrow(den)};
    }
}

Rational::Rational(int64_t num, int64_t den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    _num = num;
    _den = den;
}

auto Rational::operator+=(const Rational & o) -> Rational &
{
    return *this = make_reduced(Wide{_num} * o._den + Wide{o._num} * _den, Wide{_den} * o._den);
}

auto Rational::operator-=(const Rational & o) -> Rational &
{
    return *this = make_reduced(Wide{_num} * o._den - Wide{o._num} * _den, Wide{_den} * o._den);
}

auto Rational::operator*=(const Rational & o) -> Rational &
{
    return *this = make_reduced(Wide{_num} * o._num, Wide{_den} * o._den);
}

auto Rational::operator/=(const Rational & o) -> Rational &
{
    if (o._num == 0)
        throw std::domain_error("rational division by zero");
    return *this = make_reduced(Wide{_num} * o._den, Wide{_den} * o._num);
}

auto uturan::operator<=>(const Rational & a, const Rational & b) -> std::strong_ordering
{
    Wide lhs = Wide{a.num()} * b.den(), rhs = Wide{b.num()} * a.den();
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

auto Rational::to_double() const -> double
{
    return static_cast<double>(_num) / static_cast<double>(_den);
}

auto Rational::ceil() const -> int64_t
{
    int64_t q = _num / _den;
    if (_num % _den != 0 && _num > 0)
        ++q;
    return q;
}

auto Rational::to_decimal(int significant) const -> string
{
    if (significant < 1)
        throw InvalidArgument("significant digits must be positive");
    if (_num == 0)
        return "0";

    Wide num = _num < 0 ? -Wide{_num} : Wide{_num};
    Wide den = _den;
    Wide integer_part = num / den, rem = num % den;

    vector<int> digits;
    for (string s = std::to_string(static_cast<unsigned long long>(integer_part)); char ch : s)
        if (! (integer_part == 0 && ch == '0'))
            digits.push_back(ch - '0');
    const int point = static_cast<int>(digits.size());

    auto first_significant = [&]() -> int {
        for (int i = 0; i < int(digits.size()); ++i)
            if (digits[i] != 0)
                return i;
        return -1;
    };

    // one extra digit beyond the kept ones is the rounding digit
    while (true) {
        int f = first_significant();
        if (f >= 0 && int(digits.size()) >= f + significant + 1)
            break;
        rem *= 10;
        digits.push_back(static_cast<int>(rem / den));
        rem %= den;
    }

    int f = first_significant();
    int keep = f + significant;
    bool sticky = rem != 0;
    for (int i = keep + 1; i < int(digits.size()); ++i)
        sticky = sticky || digits[i] != 0;
    int round_digit = digits[keep];
    digits.resize(keep);

    int int_digits = point;
    bool round_up = round_digit > 5 || (round_digit == 5 && (sticky || (digits.back() % 2 == 1)));
    if (round_up) {
        int i = keep - 1;
        while (i >= 0 && digits[i] == 9) {
            digits[i] = 0;
            --i;
        }
        if (i >= 0)
            ++digits[i];
        else {
            digits.insert(digits.begin(), 1);
            ++int_digits;
        }
        // the carry produced one more significant digit; drop it if fractional
        if ((i < 0 || i < f) && int(digits.size()) > int_digits)
            digits.pop_back();
    }

    while (int(digits.size()) > int_digits && digits.back() == 0)
        digits.pop_back();

    string result = _num < 0 ? "-" : "";
    if (int_digits > int(digits.size()))
        digits.resize(int_digits, 0);
    if (int_digits == 0)
        result += "0";
    for (int i = 0; i < int_digits; ++i)
        result += char('0' + digits[i]);
    if (int(digits.size()) > int_digits) {
        result += '.';
        for (int i = int_digits; i < int(digits.size()); ++i)
            result += char('0' + digits[i]);
    }
    return result;
}

auto Rational::to_string() const -> string
{
    if (_den == 1)
        return std::to_string(_num);
    return std::to_string(_num) + "/" + std::to_string(_den);
}

auto Rational::parse(string_view text) -> Rational
{
    auto fail = [&]() -> Rational { throw InvalidArgument("not a rational number: '" + string(text) + "'"); };
    if (text.empty())
        return fail();

    auto parse_int = [&](string_view s) -> int64_t {
        if (s.empty())
            fail();
        size_t i = 0;
        bool neg = false;
        if (s[0] == '-' || s[0] == '+') {
            neg = s[0] == '-';
            i = 1;
        }
        if (i == s.size())
            fail();
        Wide v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                fail();
            v = v * 10 + (s[i] - '0');
            if (v > Wide{INT64_MAX})
                fail();
        }
        return static_cast<int64_t>(neg ? -v : v);
    };

    if (auto slash = text.find('/'); slash != string_view::npos) {
        int64_t d = parse_int(text.substr(slash + 1));
        if (d == 0)
            fail();
        return Rational{parse_int(text.substr(0, slash)), d};
    }

    if (auto dot = text.find('.'); dot != string_view::npos) {
        string_view whole = text.substr(0, dot), frac = text.substr(dot + 1);
        bool neg = ! whole.empty() && whole[0] == '-';
        if (! whole.empty() && (whole[0] == '-' || whole[0] == '+'))
            whole.remove_prefix(1);
        if (frac.empty() && whole.empty())
            fail();
        if (frac.size() > 17)
            fail();
        int64_t w = whole.empty() ? 0 : parse_int(whole);
        int64_t f = frac.empty() ? 0 : parse_int(frac);
        if (! frac.empty() && (frac[0] == '-' || frac[0] == '+'))
            fail();
        int64_t scale = 1;
        for (size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        Rational r = make_reduced(Wide{w} * scale + f, scale);
        return neg ? -r : r;
    }

    return Rational{parse_int(text)};
}

auto uturan::operator<<(std::ostream & s, const Rational & r) -> std::ostream &
{
    return s << r.to_string();
}
