// rational.hpp - exact rational arithmetic for thresholds and degree conditions
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace parpart {

// Exact rational over int64 with the denominator kept positive. Comparisons
// cross-multiply in __int128, so no condition check in this project ever
// touches floating point: several of them sit exactly on integer boundaries.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long num) : num_(num), den_(1) {}
    Rational(long long num, long long den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        normalize();
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::invalid_argument("rational division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
    }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    // Accepts "p/q" or a bare integer "p".
    static Rational parse(const std::string& text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(text));
            long long p = std::stoll(text.substr(0, slash));
            long long q = std::stoll(text.substr(slash + 1));
            return Rational(p, q);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("cannot parse rational: '" + text + "'");
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("rational out of range: '" + text + "'");
        }
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    long long num_;
    long long den_;
};

// An overlap threshold: a rational strictly between 0 and 1. The builders
// compare "|A cap B| > t*k" as |A cap B|*den > num*k in integers.
class Threshold {
public:
    explicit Threshold(Rational value) : value_(value) {
        if (!(value > Rational(0) && value < Rational(1)))
            throw std::invalid_argument("threshold must lie strictly in (0,1), got " + value.str());
    }
    static Threshold parse(const std::string& text) { return Threshold(Rational::parse(text)); }

    const Rational& value() const { return value_; }
    std::string str() const { return value_.str(); }

    // true iff intersection_size > value * k, exactly.
    bool exceeded_by(long long intersection_size, long long k) const {
        return intersection_size * value_.den() > value_.num() * k;
    }

private:
    Rational value_;
};

} // namespace parpart
