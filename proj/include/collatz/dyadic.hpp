#pragma once

#include <collatz/natural.hpp>

#include <string>
#include <vector>

namespace collatz {

// A point of the unit interval with finite binary expansion: num / 2^depth,
// constrained to [0, 1]. Canonical form has an odd numerator (or is 0/2^0),
// but non-canonical representations are legal values; all comparisons are by
// value, not by representation.
class Dyadic {
public:
    Dyadic() : num_(0), depth_(0) {}
    Dyadic(Natural num, unsigned depth);

    const Natural& numerator() const { return num_; }
    unsigned depth() const { return depth_; }

    Dyadic canonical() const;
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    // First `width` binary fraction digits, most significant first.
    // Throws if the value needs more than `width` digits, or for the value 1.
    std::vector<int> fraction_digits(unsigned width) const;

    // Exact base-10 expansion, e.g. "0.8125". No trailing zeros.
    std::string decimal_string() const;
    // "num/2^depth" of the canonical form, e.g. "13/2^4".
    std::string exact_string() const;
    // Binary expansion, e.g. "0.1101". "0" and "1" for the endpoints.
    std::string binary_string() const;
    // Nearest double, for plotting only; exact paths never use this.
    double approx() const;

    friend bool operator==(const Dyadic& a, const Dyadic& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) >= 0; }

private:
    static int cmp(const Dyadic& a, const Dyadic& b);

    Natural num_;     // 0 <= num_ <= 2^depth_
    unsigned depth_;
};

// Signed rational in lowest terms; denominator always positive.
class ExactRatio {
public:
    ExactRatio() : num_(0), den_(1) {}
    ExactRatio(Natural num, Natural den);

    const Natural& num() const { return num_; }
    const Natural& den() const { return den_; }

    ExactRatio abs() const;
    // "3", "3/4", "-3/2"
    std::string str() const;
    double approx() const;

    friend ExactRatio operator*(const ExactRatio& a, const ExactRatio& b) {
        return ExactRatio(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend bool operator==(const ExactRatio& a, const ExactRatio& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ExactRatio& a, const ExactRatio& b) { return !(a == b); }
    friend bool operator<(const ExactRatio& a, const ExactRatio& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator<=(const ExactRatio& a, const ExactRatio& b) {
        return a.num_ * b.den_ <= b.num_ * a.den_;
    }
    friend bool operator>(const ExactRatio& a, const ExactRatio& b) { return b < a; }
    friend bool operator>=(const ExactRatio& a, const ExactRatio& b) { return b <= a; }

private:
    Natural num_;  // signed
    Natural den_;  // > 0, gcd(|num_|, den_) == 1
};

// (y2 - y1) / (x2 - x1), exact. Throws std::domain_error when x1 == x2.
ExactRatio exact_quotient(const Dyadic& y1, const Dyadic& y2,
                          const Dyadic& x1, const Dyadic& x2);

// a - b for a >= b; throws std::domain_error otherwise.
Dyadic dyadic_sub(const Dyadic& a, const Dyadic& b);

// Accepts "k/2^n", binary "0.1101b", exact decimals ("0.8125", "0", "1").
// Throws std::invalid_argument for anything else, including decimals that are
// not dyadic and values outside [0, 1].
Dyadic parse_dyadic(const std::string& text);

// boost::hash support; hashes by value (canonical form).
std::size_t hash_value(const Dyadic& x);

} // namespace collatz
