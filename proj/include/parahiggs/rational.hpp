#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace parahiggs {

// Exact rational backed by GMP. Always canonical (lowest terms, positive denominator).
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpq_class& q);

    // Accepts "p/q", "p", with optional sign. Throws Error(Schema) on bad input.
    static Rational parse(std::string_view text);

    std::string to_string() const;
    std::string to_decimal(int places) const;
    double to_double() const { return value_.get_d(); }

    mpz_class num() const { return value_.get_num(); }
    mpz_class den() const { return value_.get_den(); }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    mpz_class floor() const;
    mpz_class ceil() const;
    // Fractional part in [0,1).
    Rational frac() const;
    Rational abs() const { return Rational(::abs(value_)); }

    const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

private:
    mpq_class value_{0};
};

// Integer value of an mpz that is known to fit; throws Error(TooLarge) otherwise.
std::int64_t to_int64(const mpz_class& z);

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace parahiggs
