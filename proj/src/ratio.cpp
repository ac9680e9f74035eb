#include "sumset/ratio.hpp"

namespace sumset {

Ratio::Ratio(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw domain_error("Ratio: zero denominator");
    if (sgn(den_) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g > 1) {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
    if (num_ == 0) den_ = 1;
}

Ratio Ratio::operator-() const {
    Ratio r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Ratio operator+(const Ratio& a, const Ratio& b) {
    return Ratio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Ratio operator-(const Ratio& a, const Ratio& b) {
    return Ratio(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Ratio operator*(const Ratio& a, const Ratio& b) {
    return Ratio(a.num_ * b.num_, a.den_ * b.den_);
}

Ratio operator/(const Ratio& a, const Ratio& b) {
    if (b.is_zero()) throw domain_error("Ratio: division by zero");
    return Ratio(a.num_ * b.den_, a.den_ * b.num_);
}

std::string Ratio::str() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

Ratio Ratio::parse(std::string_view text) {
    auto slash = text.find('/');
    auto to_int = [](std::string_view part) {
        Integer v;
        if (part.empty() ||
            mpz_set_str(v.get_mpz_t(), std::string(part).c_str(), 10) != 0)
            throw domain_error("Ratio: malformed number '" + std::string(part) + "'");
        return v;
    };
    if (slash == std::string_view::npos) return Ratio(to_int(text));
    return Ratio(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
}

Ratio abs(const Ratio& q) { return q.sign() < 0 ? -q : q; }

Ratio pow(const Ratio& base, unsigned long e) {
    Ratio acc(1);
    Ratio b = base;
    while (e != 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

bool is_square(const Ratio& q) {
    if (q.sign() < 0) return false;
    return is_perfect_square(q.num()) && is_perfect_square(q.den());
}

RatioSqrtResult ratio_sqrt(const Ratio& q) {
    if (q.sign() < 0) return {Ratio(0), false};
    auto n = isqrt(q.num());
    auto d = isqrt(q.den());
    if (!n.exact || !d.exact) return {Ratio(0), false};
    return {Ratio(n.root, d.root), true};
}

} // namespace sumset
