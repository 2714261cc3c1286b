#include <collatz/dyadic.hpp>

#include <boost/container_hash/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace collatz {

namespace mp = boost::multiprecision;

Dyadic::Dyadic(Natural num, unsigned depth) : num_(std::move(num)), depth_(depth) {
    if (num_.sign() < 0)
        throw std::invalid_argument("Dyadic: negative numerator");
    if (num_ > (Natural(1) << depth_))
        throw std::invalid_argument("Dyadic: value exceeds 1");
}

Dyadic Dyadic::canonical() const {
    if (num_.is_zero()) return Dyadic();
    Natural n = num_;
    unsigned d = depth_;
    unsigned drop = static_cast<unsigned>(mp::lsb(n));
    if (drop > d) drop = d;  // cannot happen for values <= 1, kept as a guard
    if (drop) {
        n >>= drop;
        d -= drop;
    }
    Dyadic out;
    out.num_ = std::move(n);
    out.depth_ = d;
    return out;
}

bool Dyadic::is_one() const {
    return !num_.is_zero() && num_ == (Natural(1) << depth_);
}

int Dyadic::cmp(const Dyadic& a, const Dyadic& b) {
    if (a.depth_ == b.depth_) return a.num_.compare(b.num_);
    if (a.depth_ < b.depth_) {
        Natural lifted = a.num_ << (b.depth_ - a.depth_);
        return lifted.compare(b.num_);
    }
    Natural lifted = b.num_ << (a.depth_ - b.depth_);
    return -lifted.compare(a.num_);
}

std::vector<int> Dyadic::fraction_digits(unsigned width) const {
    Dyadic c = canonical();
    if (c.is_one())
        throw std::domain_error("fraction_digits: 1 has no finite fraction expansion");
    if (c.depth_ > width)
        throw std::invalid_argument("fraction_digits: width too small for this value");
    std::vector<int> out(width, 0);
    for (unsigned j = 0; j < c.depth_; ++j)
        out[j] = mp::bit_test(c.num_, c.depth_ - 1 - j) ? 1 : 0;
    return out;
}

std::string Dyadic::decimal_string() const {
    Dyadic c = canonical();
    if (c.depth_ == 0) return c.num_.str();
    // num / 2^d == num * 5^d / 10^d: print num * 5^d, zero padded to d digits.
    Natural scaled = c.num_ * mp::pow(Natural(5), c.depth_);
    std::string digits = scaled.str();
    if (digits.size() < c.depth_)
        digits.insert(0, c.depth_ - digits.size(), '0');
    return "0." + digits;
}

std::string Dyadic::exact_string() const {
    Dyadic c = canonical();
    return c.num_.str() + "/2^" + std::to_string(c.depth_);
}

std::string Dyadic::binary_string() const {
    Dyadic c = canonical();
    if (c.depth_ == 0) return c.num_.str();
    std::string out = "0.";
    for (unsigned j = 0; j < c.depth_; ++j)
        out += mp::bit_test(c.num_, c.depth_ - 1 - j) ? '1' : '0';
    return out;
}

double Dyadic::approx() const {
    Dyadic c = canonical();
    if (c.depth_ <= 960)
        return std::ldexp(c.num_.convert_to<double>(), -static_cast<int>(c.depth_));
    // Too deep for a double exponent: round to the top 64 bits.
    Natural top = c.num_ >> (c.depth_ - 64);
    return std::ldexp(top.convert_to<double>(), -64);
}

ExactRatio::ExactRatio(Natural num, Natural den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw std::invalid_argument("ExactRatio: zero denominator");
    if (den_.sign() < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    Natural g = mp::gcd(Natural(mp::abs(num_)), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

ExactRatio ExactRatio::abs() const {
    ExactRatio out = *this;
    if (out.num_.sign() < 0) out.num_ = -out.num_;
    return out;
}

std::string ExactRatio::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

double ExactRatio::approx() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

ExactRatio exact_quotient(const Dyadic& y1, const Dyadic& y2,
                          const Dyadic& x1, const Dyadic& x2) {
    unsigned dy = std::max(y1.depth(), y2.depth());
    Natural ny = y2.numerator() * (Natural(1) << (dy - y2.depth()))
               - y1.numerator() * (Natural(1) << (dy - y1.depth()));
    unsigned dx = std::max(x1.depth(), x2.depth());
    Natural nx = x2.numerator() * (Natural(1) << (dx - x2.depth()))
               - x1.numerator() * (Natural(1) << (dx - x1.depth()));
    if (nx.is_zero())
        throw std::domain_error("exact_quotient: coincident abscissae");
    // (ny / 2^dy) / (nx / 2^dx) == ny * 2^dx / (nx * 2^dy)
    return ExactRatio(ny * (Natural(1) << dx), nx * (Natural(1) << dy));
}

Dyadic dyadic_sub(const Dyadic& a, const Dyadic& b) {
    if (a < b)
        throw std::domain_error("dyadic_sub: would be negative");
    unsigned d = std::max(a.depth(), b.depth());
    Natural n = (a.numerator() << (d - a.depth())) - (b.numerator() << (d - b.depth()));
    return Dyadic(std::move(n), d).canonical();
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

Dyadic parse_binary_body(const std::string& body) {
    if (body == "0") return Dyadic(0, 0);
    if (body == "1") return Dyadic(1, 0);
    if (body.size() < 3 || body[0] != '0' || body[1] != '.')
        throw std::invalid_argument("parse_dyadic: malformed binary literal");
    Natural num(0);
    for (std::size_t i = 2; i < body.size(); ++i) {
        char ch = body[i];
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("parse_dyadic: malformed binary literal");
        num <<= 1;
        if (ch == '1') num += 1;
    }
    return Dyadic(std::move(num), static_cast<unsigned>(body.size() - 2));
}

} // namespace

std::size_t hash_value(const Dyadic& x) {
    Dyadic c = x.canonical();
    std::size_t seed = boost::hash<Natural>()(c.numerator());
    boost::hash_combine(seed, c.depth());
    return seed;
}

Dyadic parse_dyadic(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("parse_dyadic: empty input");

    if (auto pos = text.find("/2^"); pos != std::string::npos) {
        std::string num_part = text.substr(0, pos);
        std::string exp_part = text.substr(pos + 3);
        if (!all_digits(num_part) || !all_digits(exp_part))
            throw std::invalid_argument("parse_dyadic: malformed k/2^n literal");
        if (exp_part.size() > 7)
            throw std::invalid_argument("parse_dyadic: exponent out of range");
        unsigned depth = static_cast<unsigned>(std::stoul(exp_part));
        if (depth > 1000000)
            throw std::invalid_argument("parse_dyadic: exponent out of range");
        return Dyadic(Natural(num_part), depth);
    }

    if (text.back() == 'b')
        return parse_binary_body(text.substr(0, text.size() - 1));

    if (auto dot = text.find('.'); dot != std::string::npos) {
        std::string whole = text.substr(0, dot);
        std::string frac = text.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac))
            throw std::invalid_argument("parse_dyadic: malformed decimal literal");
        Natural frac_num(frac);
        unsigned k = static_cast<unsigned>(frac.size());
        if (whole == "1") {
            if (!frac_num.is_zero())
                throw std::invalid_argument("parse_dyadic: value exceeds 1");
            return Dyadic(1, 0);
        }
        if (whole != "0")
            throw std::invalid_argument("parse_dyadic: value outside [0, 1]");
        Natural p5 = mp::pow(Natural(5), k);
        if (frac_num % p5 != 0)
            throw std::invalid_argument("parse_dyadic: decimal is not a dyadic rational");
        return Dyadic(frac_num / p5, k).canonical();
    }

    if (text == "0") return Dyadic(0, 0);
    if (text == "1") return Dyadic(1, 0);
    throw std::invalid_argument("parse_dyadic: unrecognized literal");
}

} // namespace collatz
