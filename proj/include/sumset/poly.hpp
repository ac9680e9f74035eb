#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sumset/ratio.hpp"

namespace sumset {

// Exponent vector over a ring's ordered indeterminates.
using Exponents = std::vector<unsigned>;

// Graded lexicographic order: compare total degree first, then exponents
// left to right in the ring's declared variable order.
struct GradLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class Poly;

// An ordered list of indeterminate names. Rings compare by content, so two
// independently built rings over the same names are interchangeable.
class PolyRing {
public:
    PolyRing() : names_(std::make_shared<const std::vector<std::string>>()) {}
    explicit PolyRing(std::vector<std::string> names);

    std::size_t arity() const { return names_->size(); }
    const std::vector<std::string>& names() const { return *names_; }
    bool same(const PolyRing& other) const;

    Poly var(std::size_t index) const;
    Poly var(std::string_view name) const;
    Poly constant(Integer c) const;
    Poly zero() const;

private:
    std::shared_ptr<const std::vector<std::string>> names_;
    friend class Poly;
};

// Sparse multivariate polynomial with exact integer coefficients.
// Invariant: no zero coefficient is ever stored; the zero polynomial has an
// empty term map.
class Poly {
public:
    using TermMap = std::map<Exponents, Integer, GradLexLess>;

    Poly() = default;

    const PolyRing& ring() const { return ring_; }
    std::size_t arity() const { return ring_.arity(); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    unsigned total_degree() const; // 0 for the zero polynomial

    // Largest term under grad-lex; polynomial must be nonzero.
    const std::pair<const Exponents, Integer>& leading() const;

    Integer coeff(const Exponents& e) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Integer& c, const Poly& p);
    friend Poly operator*(long c, const Poly& p);
    friend Poly operator+(const Poly& a, long c);
    friend Poly operator-(const Poly& a, long c);

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned e) const;

    // Exact evaluation; equals naive term-by-term summation.
    Ratio eval(std::span<const Ratio> point) const;

    // Ring homomorphism sending variable i to images[i].
    Poly compose(const PolyRing& target, std::span<const Poly> images) const;

    // Deterministic rendering, grad-lex descending, e.g. "4*p^2*q - r + 1".
    std::string str() const;

private:
    explicit Poly(PolyRing ring) : ring_(std::move(ring)) {}
    void insert_term(const Exponents& e, const Integer& c); // accumulates

    PolyRing ring_;
    TermMap terms_;

    friend class PolyRing;
    friend Poly poly_square_root(const Poly& p);
};

// Returns Q with Q*Q == p, leading coefficient positive, verifying the
// product before returning. Throws not_a_polynomial_square when the leading
// term has an odd exponent or non-square coefficient, or when the
// term-by-term descent leaves a nonzero remainder; zero input is a domain
// error.
Poly poly_square_root(const Poly& p);

} // namespace sumset
