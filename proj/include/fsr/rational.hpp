#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace fsr {

// Exact rational in lowest terms with positive denominator.
class RationalValue {
public:
    RationalValue() = default;
    RationalValue(std::int64_t num); // NOLINT: implicit from integers is intended
    RationalValue(std::int64_t num, std::int64_t den);
    RationalValue(const mpz_class& num, const mpz_class& den);
    explicit RationalValue(mpq_class value);

    // Parses "num/den" or "num".
    static RationalValue parse(const std::string& text);

    const mpq_class& value() const { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    // Always "num/den", including denominator 1.
    std::string to_string() const;
    // Exact truncated decimal rendering; display only.
    std::string to_decimal(unsigned digits) const;

    bool is_integer() const { return value_.get_den() == 1; }

    friend RationalValue operator+(const RationalValue& a, const RationalValue& b);
    friend RationalValue operator-(const RationalValue& a, const RationalValue& b);
    friend RationalValue operator*(const RationalValue& a, const RationalValue& b);
    friend RationalValue operator/(const RationalValue& a, const RationalValue& b);
    RationalValue operator-() const;

    friend bool operator==(const RationalValue& a, const RationalValue& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const RationalValue& a, const RationalValue& b);

    friend std::ostream& operator<<(std::ostream& os, const RationalValue& r) { return os << r.to_string(); }

private:
    mpq_class value_{0};
};

RationalValue max(const RationalValue& a, const RationalValue& b);

} // namespace fsr
