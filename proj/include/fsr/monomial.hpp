#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace fsr {

using Exponent = std::uint64_t;

// Variable sets are bitmasks; ambient rings are limited to 64 variables.
inline constexpr std::size_t kMaxVariables = 64;

class VarSet {
public:
    constexpr VarSet() = default;
    constexpr explicit VarSet(std::uint64_t bits) : bits_(bits) {}
    static VarSet of(std::initializer_list<std::size_t> indices);
    static VarSet all(std::size_t n);

    constexpr std::uint64_t bits() const { return bits_; }
    bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
    std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    bool empty() const { return bits_ == 0; }
    bool subset_of(VarSet other) const { return (bits_ & ~other.bits_) == 0; }
    bool intersects(VarSet other) const { return (bits_ & other.bits_) != 0; }
    std::vector<std::size_t> indices() const;

    VarSet operator|(VarSet o) const { return VarSet(bits_ | o.bits_); }
    VarSet operator&(VarSet o) const { return VarSet(bits_ & o.bits_); }
    VarSet minus(VarSet o) const { return VarSet(bits_ & ~o.bits_); }
    VarSet with(std::size_t i) const { return VarSet(bits_ | (std::uint64_t{1} << i)); }

    friend constexpr bool operator==(VarSet, VarSet) = default;
    // Orders by size first, then by bit pattern; used for canonical listings.
    friend std::strong_ordering operator<=>(VarSet a, VarSet b);

private:
    std::uint64_t bits_ = 0;
};

// Exponent tuple of length n. Lexicographic comparison is the canonical order.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t n) : entries_(n, 0) {}
    ExponentVector(std::initializer_list<Exponent> entries) : entries_(entries) {}
    explicit ExponentVector(std::vector<Exponent> entries) : entries_(std::move(entries)) {}

    // 0/1 indicator vector of a variable set.
    static ExponentVector indicator(std::size_t n, VarSet set);
    static ExponentVector unit(std::size_t n, std::size_t i);

    std::size_t size() const { return entries_.size(); }
    Exponent operator[](std::size_t i) const { return entries_[i]; }
    Exponent& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<Exponent>& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    VarSet support() const;
    bool is_zero() const;
    bool is_squarefree() const;
    Exponent degree() const;
    Exponent max_entry() const;

    // Componentwise order: true iff this <= other in every coordinate.
    bool divides(const ExponentVector& other) const;

    ExponentVector operator+(const ExponentVector& o) const;
    ExponentVector& operator+=(const ExponentVector& o);
    ExponentVector scaled(Exponent factor) const;
    // Componentwise max(this - o, 0).
    ExponentVector saturating_minus(const ExponentVector& o) const;

    friend ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) { return a.entries_ <=> b.entries_; }

private:
    std::vector<Exponent> entries_;
};

// The monomial x^v; the zero vector is the monomial 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(ExponentVector exponents) : exponents_(std::move(exponents)) {}
    Monomial(std::initializer_list<Exponent> entries) : exponents_(entries) {}

    const ExponentVector& exponents() const { return exponents_; }
    std::size_t ambient() const { return exponents_.size(); }
    bool is_one() const { return exponents_.is_zero(); }
    bool is_squarefree() const { return exponents_.is_squarefree(); }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    ExponentVector exponents_;
};

// q = p^e with p prime; q is kept exactly.
class FrobeniusLevel {
public:
    FrobeniusLevel(std::uint64_t p, unsigned e);

    std::uint64_t p() const { return p_; }
    unsigned e() const { return e_; }
    const mpz_class& q() const { return q_; }
    // q as a machine exponent; throws InputError if it does not fit.
    Exponent q_exponent() const;

    FrobeniusLevel next() const { return FrobeniusLevel(p_, e_ + 1); }

private:
    std::uint64_t p_;
    unsigned e_;
    mpz_class q_;
};

bool is_prime(std::uint64_t p);

// Checked exponent arithmetic.
Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);

} // namespace fsr
