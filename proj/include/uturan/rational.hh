#ifndef UTURAN_RATIONAL_HH
#define UTURAN_RATIONAL_HH

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace uturan
{
    /// Exact rational with 64-bit numerator and positive 64-bit denominator,
    /// always in lowest terms. Intermediate products use 128-bit arithmetic;
    /// a result that does not fit back into 64 bits throws std::overflow_error.
    class Rational
    {
    public:
        constexpr Rational() = default;
        Rational(std::int64_t num, std::int64_t den = 1);

        auto num() const -> std::int64_t { return _num; }
        auto den() const -> std::int64_t { return _den; }

        auto operator+=(const Rational &) -> Rational &;
        auto operator-=(const Rational &) -> Rational &;
        auto operator*=(const Rational &) -> Rational &;
        auto operator/=(const Rational &) -> Rational &;

        friend auto operator+(Rational a, const Rational & b) -> Rational { return a += b; }
        friend auto operator-(Rational a, const Rational & b) -> Rational { return a -= b; }
        friend auto operator*(Rational a, const Rational & b) -> Rational { return a *= b; }
        friend auto operator/(Rational a, const Rational & b) -> Rational { return a /= b; }
        friend auto operator-(const Rational & a) -> Rational { return Rational{-a._num, a._den}; }

        friend auto operator==(const Rational &, const Rational &) -> bool = default;
        friend auto operator<=>(const Rational & a, const Rational & b) -> std::strong_ordering;

        auto to_double() const -> double;

        /// Smallest integer >= this.
        auto ceil() const -> std::int64_t;

        /// Decimal rendering with `significant` significant digits, rounding half
        /// to even, with trailing fractional zeros dropped.
        auto to_decimal(int significant = 12) const -> std::string;

        /// "p/q", or "p" when the denominator is 1.
        auto to_string() const -> std::string;

        /// Parses "p/q", an integer, or a plain decimal such as "0.05" exactly.
        static auto parse(std::string_view) -> Rational;

    private:
        std::int64_t _num = 0;
        std::int64_t _den = 1;
    };

    auto operator<=>(const Rational &, const Rational &) -> std::strong_ordering;
    auto operator<<(std::ostream &, const Rational &) -> std::ostream &;
}

#endif
