#include "qca/fluxvalue.hpp"

#include <cmath>
#include <vector>

namespace qca {

FluxValue FluxValue::log_of(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("log_of: n must be positive");
    FluxValue f;
    for (auto& [p, e] : factorize(n)) f.add_prime(p, e);
    return f;
}

FluxValue FluxValue::log_ratio(std::uint64_t p, std::uint64_t q) {
    return log_of(p) - log_of(q);
}

void FluxValue::add_prime(std::uint64_t prime, std::int64_t exponent) {
    if (exponent == 0) return;
    auto it = exp_.find(prime);
    if (it == exp_.end()) {
        exp_.emplace(prime, exponent);
    } else {
        it->second += exponent;
        if (it->second == 0) exp_.erase(it);
    }
}

FluxValue& FluxValue::operator+=(const FluxValue& o) {
    for (auto& [p, e] : o.exp_) add_prime(p, e);
    return *this;
}

FluxValue& FluxValue::operator-=(const FluxValue& o) {
    for (auto& [p, e] : o.exp_) add_prime(p, -e);
    return *this;
}

FluxValue FluxValue::operator-() const {
    FluxValue f;
    for (auto& [p, e] : exp_) f.exp_.emplace(p, -e);
    return f;
}

FluxValue FluxValue::operator*(std::int64_t k) const {
    FluxValue f;
    if (k == 0) return f;
    for (auto& [p, e] : exp_) f.exp_.emplace(p, e * k);
    return f;
}

std::int64_t FluxValue::exponent(std::uint64_t prime) const {
    auto it = exp_.find(prime);
    return it == exp_.end() ? 0 : it->second;
}

std::string FluxValue::str() const {
    if (exp_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [p, e] : exp_) {
        std::int64_t a = e;
        if (first) {
            if (a < 0) { s += "-"; a = -a; }
        } else {
            s += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (a != 1) s += std::to_string(a) + "*";
        s += "log(" + std::to_string(p) + ")";
        first = false;
    }
    return s;
}

std::map<std::uint64_t, std::int64_t> factorize(std::uint64_t n) {
    std::map<std::uint64_t, std::int64_t> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) { out[p]++; n /= p; }
    }
    if (n > 1) out[n]++;
    return out;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (auto& [p, e] : factorize(n))
        for (std::int64_t i = 0; i < e; ++i) out.push_back(p);
    return out;
}

std::uint64_t exact_isqrt(std::uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n ? r : 0;
}

} // namespace qca
