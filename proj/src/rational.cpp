#include "fsr/rational.hpp"

#include "fsr/errors.hpp"

namespace fsr {

RationalValue::RationalValue(std::int64_t num) : value_(static_cast<long>(num)) {}

RationalValue::RationalValue(std::int64_t num, std::int64_t den)
    : RationalValue(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

RationalValue::RationalValue(const mpz_class& num, const mpz_class& den) {
    if (den == 0)
        throw InputError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

RationalValue::RationalValue(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

RationalValue RationalValue::parse(const std::string& text) {
    auto digits_ok = [](const std::string& s, bool allow_sign) {
        if (s.empty())
            return false;
        std::size_t i = 0;
        if (allow_sign && s[0] == '-')
            i = 1;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw InputError("malformed rational '" + text + "'");
    return RationalValue(mpz_class(num), mpz_class(den));
}

std::string RationalValue::to_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string RationalValue::to_decimal(unsigned digits) const {
    mpz_class num = value_.get_num();
    const mpz_class den = value_.get_den();
    std::string out;
    if (num < 0) {
        out += '-';
        num = -num;
    }
    mpz_class whole = num / den;
    mpz_class rem = num % den;
    out += whole.get_str();
    if (digits == 0)
        return out;
    out += '.';
    for (unsigned i = 0; i < digits; ++i) {
        rem *= 10;
        mpz_class d = rem / den;
        rem %= den;
        out += d.get_str();
    }
    return out;
}

RationalValue operator+(const RationalValue& a, const RationalValue& b) { return RationalValue(mpq_class(a.value_ + b.value_)); }
RationalValue operator-(const RationalValue& a, const RationalValue& b) { return RationalValue(mpq_class(a.value_ - b.value_)); }
RationalValue operator*(const RationalValue& a, const RationalValue& b) { return RationalValue(mpq_class(a.value_ * b.value_)); }

RationalValue operator/(const RationalValue& a, const RationalValue& b) {
    if (b.value_ == 0)
        throw InputError("division by zero rational");
    return RationalValue(mpq_class(a.value_ / b.value_));
}

RationalValue RationalValue::operator-() const { return RationalValue(mpq_class(-value_)); }

std::strong_ordering operator<=>(const RationalValue& a, const RationalValue& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

RationalValue max(const RationalValue& a, const RationalValue& b) { return a < b ? b : a; }

} // namespace fsr
