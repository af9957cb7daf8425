#pragma once

// Values in M = log(Q): formal integer combinations of logs of primes,
// stored exactly as a map prime -> signed exponent.  Addition is
// exponent-wise; equality is decidable.  No floating point anywhere.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qca {

class FluxValue {
public:
    FluxValue() = default;

    // log(n) for a positive integer n
    static FluxValue log_of(std::uint64_t n);
    // log(p/q)
    static FluxValue log_ratio(std::uint64_t p, std::uint64_t q);

    void add_prime(std::uint64_t prime, std::int64_t exponent);

    FluxValue& operator+=(const FluxValue& o);
    FluxValue& operator-=(const FluxValue& o);
    friend FluxValue operator+(FluxValue a, const FluxValue& b) { return a += b; }
    friend FluxValue operator-(FluxValue a, const FluxValue& b) { return a -= b; }
    FluxValue operator-() const;
    FluxValue operator*(std::int64_t k) const;

    bool operator==(const FluxValue& o) const { return exp_ == o.exp_; }
    bool operator!=(const FluxValue& o) const { return exp_ != o.exp_; }

    bool is_zero() const { return exp_.empty(); }
    // exponent of a given prime (0 if absent)
    std::int64_t exponent(std::uint64_t prime) const;

    const std::map<std::uint64_t, std::int64_t>& exponents() const { return exp_; }

    // display form, e.g. "log(2) - 2*log(3)" or "0"
    std::string str() const;

private:
    std::map<std::uint64_t, std::int64_t> exp_; // prime -> nonzero exponent
};

// trial-division factorization; fine at desk scale
std::map<std::uint64_t, std::int64_t> factorize(std::uint64_t n);

// list of prime factors with multiplicity, ascending (e.g. 12 -> {2,2,3})
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// exact integer square root test: returns r with r*r == n, or 0 if none
std::uint64_t exact_isqrt(std::uint64_t n);

} // namespace qca
