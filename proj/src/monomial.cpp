#include "fsr/monomial.hpp"

#include <algorithm>
#include <limits>

#include "fsr/errors.hpp"

namespace fsr {

VarSet VarSet::of(std::initializer_list<std::size_t> indices) {
    VarSet s;
    for (auto i : indices) {
        if (i >= kMaxVariables)
            throw InputError("variable index out of range");
        s = s.with(i);
    }
    return s;
}

VarSet VarSet::all(std::size_t n) {
    if (n > kMaxVariables)
        throw InputError("at most 64 variables are supported");
    return VarSet(n == kMaxVariables ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

std::vector<std::size_t> VarSet::indices() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
        out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
}

std::strong_ordering operator<=>(VarSet a, VarSet b) {
    if (auto c = a.size() <=> b.size(); c != 0)
        return c;
    // Among equal sizes prefer the set whose lowest differing index is smaller.
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0)
        return std::strong_ordering::equal;
    const std::uint64_t low = diff & (~diff + 1);
    return (a.bits_ & low) ? std::strong_ordering::less : std::strong_ordering::greater;
}

ExponentVector ExponentVector::indicator(std::size_t n, VarSet set) {
    ExponentVector v(n);
    for (auto i : set.indices()) {
        if (i >= n)
            throw InputError("variable set exceeds ambient ring");
        v.entries_[i] = 1;
    }
    return v;
}

ExponentVector ExponentVector::unit(std::size_t n, std::size_t i) {
    ExponentVector v(n);
    v.entries_.at(i) = 1;
    return v;
}

VarSet ExponentVector::support() const {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] > 0)
            bits |= std::uint64_t{1} << i;
    return VarSet(bits);
}

bool ExponentVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](Exponent x) { return x == 0; });
}

bool ExponentVector::is_squarefree() const {
    return std::all_of(entries_.begin(), entries_.end(), [](Exponent x) { return x <= 1; });
}

Exponent ExponentVector::degree() const {
    Exponent d = 0;
    for (auto x : entries_)
        d = checked_add(d, x);
    return d;
}

Exponent ExponentVector::max_entry() const {
    return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

bool ExponentVector::divides(const ExponentVector& other) const {
    if (entries_.size() != other.entries_.size())
        throw InputError("exponent vectors of different lengths");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] > other.entries_[i])
            return false;
    return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
    ExponentVector r = *this;
    r += o;
    return r;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& o) {
    if (entries_.size() != o.entries_.size())
        throw InputError("exponent vectors of different lengths");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] = checked_add(entries_[i], o.entries_[i]);
    return *this;
}

ExponentVector ExponentVector::scaled(Exponent factor) const {
    ExponentVector r = *this;
    for (auto& x : r.entries_)
        x = checked_mul(x, factor);
    return r;
}

ExponentVector ExponentVector::saturating_minus(const ExponentVector& o) const {
    if (entries_.size() != o.entries_.size())
        throw InputError("exponent vectors of different lengths");
    ExponentVector r(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i)
        r.entries_[i] = entries_[i] > o.entries_[i] ? entries_[i] - o.entries_[i] : 0;
    return r;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size())
        throw InputError("exponent vectors of different lengths");
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r.entries_[i] = std::max(a.entries_[i], b.entries_[i]);
    return r;
}

bool is_prime(std::uint64_t p) {
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d <= p / d; ++d)
        if (p % d == 0)
            return false;
    return true;
}

FrobeniusLevel::FrobeniusLevel(std::uint64_t p, unsigned e) : p_(p), e_(e) {
    if (!is_prime(p))
        throw InputError("characteristic " + std::to_string(p) + " is not prime");
    mpz_ui_pow_ui(q_.get_mpz_t(), static_cast<unsigned long>(p), e);
}

Exponent FrobeniusLevel::q_exponent() const {
    if (!q_.fits_ulong_p())
        throw InputError("q = " + q_.get_str() + " exceeds machine exponent range");
    return static_cast<Exponent>(q_.get_ui());
}

Exponent checked_add(Exponent a, Exponent b) {
    if (a > std::numeric_limits<Exponent>::max() - b)
        throw InputError("exponent overflow");
    return a + b;
}

Exponent checked_mul(Exponent a, Exponent b) {
    if (a != 0 && b > std::numeric_limits<Exponent>::max() / a)
        throw InputError("exponent overflow");
    return a * b;
}

} // namespace fsr
