#include "sumset/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sumset {

bool GradLexLess::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    // Same degree: a < b iff a is lexicographically smaller.
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

PolyRing::PolyRing(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

bool PolyRing::same(const PolyRing& other) const {
    return names_ == other.names_ || *names_ == *other.names_;
}

Poly PolyRing::var(std::size_t index) const {
    if (index >= arity()) throw domain_error("PolyRing: variable index out of range");
    Poly p(*this);
    Exponents e(arity(), 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Integer(1));
    return p;
}

Poly PolyRing::var(std::string_view name) const {
    for (std::size_t i = 0; i < arity(); ++i)
        if ((*names_)[i] == name) return var(i);
    throw domain_error("PolyRing: unknown variable '" + std::string(name) + "'");
}

Poly PolyRing::constant(Integer c) const {
    Poly p(*this);
    if (c != 0) p.terms_.emplace(Exponents(arity(), 0), std::move(c));
    return p;
}

Poly PolyRing::zero() const { return Poly(*this); }

namespace {

void require_same_ring(const Poly& a, const Poly& b) {
    if (a.arity() != b.arity() || !a.ring().same(b.ring()))
        throw domain_error("Poly: mismatched indeterminate lists");
}

} // namespace

unsigned Poly::total_degree() const {
    if (terms_.empty()) return 0;
    const Exponents& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0u);
}

const std::pair<const Exponents, Integer>& Poly::leading() const {
    if (terms_.empty()) throw domain_error("Poly: zero polynomial has no leading term");
    return *terms_.rbegin();
}

Integer Poly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

void Poly::insert_term(const Exponents& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_ring(a, b);
    Poly r = a;
    for (const auto& [e, c] : b.terms_) r.insert_term(e, c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same_ring(a, b);
    Poly r = a;
    for (const auto& [e, c] : b.terms_) r.insert_term(e, -c);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_ring(a, b);
    Poly r(a.ring_);
    Exponents e(a.arity());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.insert_term(e, ca * cb);
        }
    }
    return r;
}

Poly operator*(const Integer& c, const Poly& p) {
    Poly r(p.ring_);
    if (c == 0) return r;
    for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
    return r;
}

Poly operator*(long c, const Poly& p) { return Integer(c) * p; }

Poly operator+(const Poly& a, long c) { return a + a.ring_.constant(Integer(c)); }

Poly operator-(const Poly& a, long c) { return a - a.ring_.constant(Integer(c)); }

bool operator==(const Poly& a, const Poly& b) {
    require_same_ring(a, b);
    return a.terms_ == b.terms_;
}

Poly Poly::pow(unsigned e) const {
    Poly acc = ring_.constant(1);
    Poly base = *this;
    while (e != 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Ratio Poly::eval(std::span<const Ratio> point) const {
    if (point.size() != arity()) throw domain_error("Poly::eval: point arity mismatch");
    // Precompute per-variable powers up to the maximum exponent seen.
    std::vector<unsigned> max_exp(arity(), 0);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            max_exp[i] = std::max(max_exp[i], e[i]);
    std::vector<std::vector<Ratio>> powers(arity());
    for (std::size_t i = 0; i < arity(); ++i) {
        powers[i].resize(max_exp[i] + 1, Ratio(1));
        for (unsigned k = 1; k <= max_exp[i]; ++k)
            powers[i][k] = powers[i][k - 1] * point[i];
    }
    Ratio sum(0);
    for (const auto& [e, c] : terms_) {
        Ratio term{c};
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term *= powers[i][e[i]];
        sum += term;
    }
    return sum;
}

Poly Poly::compose(const PolyRing& target, std::span<const Poly> images) const {
    if (images.size() != arity())
        throw domain_error("Poly::compose: image count mismatch");
    for (const Poly& im : images)
        if (!im.ring().same(target))
            throw domain_error("Poly::compose: image not in target ring");
    std::vector<unsigned> max_exp(arity(), 0);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            max_exp[i] = std::max(max_exp[i], e[i]);
    std::vector<std::vector<Poly>> powers(arity());
    for (std::size_t i = 0; i < arity(); ++i) {
        powers[i].reserve(max_exp[i] + 1);
        powers[i].push_back(target.constant(1));
        for (unsigned k = 1; k <= max_exp[i]; ++k)
            powers[i].push_back(powers[i].back() * images[i]);
    }
    Poly result = target.zero();
    for (const auto& [e, c] : terms_) {
        Poly term = target.constant(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term *= powers[i][e[i]];
        result += term;
    }
    return result;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Integer mag = ::abs(c);
        if (first) {
            if (sgn(c) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        bool constant_term =
            std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
        bool need_coeff = constant_term || mag != 1;
        if (need_coeff) out << mag.get_str();
        bool need_star = need_coeff;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) out << "*";
            out << ring_.names()[i];
            if (e[i] > 1) out << "^" << e[i];
            need_star = true;
        }
    }
    return out.str();
}

Poly poly_square_root(const Poly& p) {
    if (p.is_zero()) throw domain_error("poly_square_root: zero polynomial");

    const auto& [lead_exp, lead_coeff] = p.leading();
    for (unsigned e : lead_exp)
        if (e % 2 != 0)
            throw not_a_polynomial_square("leading term has an odd exponent");
    if (sgn(lead_coeff) < 0 || !is_perfect_square(lead_coeff))
        throw not_a_polynomial_square("leading coefficient is not a perfect square");

    Exponents half_exp(lead_exp.size());
    for (std::size_t i = 0; i < lead_exp.size(); ++i) half_exp[i] = lead_exp[i] / 2;
    Integer lead_root = isqrt(lead_coeff).root;
    Integer twice_root = 2 * lead_root;

    Poly q(p.ring());
    q.terms_.emplace(half_exp, lead_root);
    Poly remainder = p - q * q;

    // Term-by-term descent: the leading term of the remainder strictly
    // decreases under grad-lex, so this terminates.
    while (!remainder.is_zero()) {
        const auto& [rexp, rcoeff] = remainder.leading();
        Exponents texp(rexp.size());
        for (std::size_t i = 0; i < rexp.size(); ++i) {
            if (rexp[i] < half_exp[i])
                throw not_a_polynomial_square("descent: leading monomial not divisible");
            texp[i] = rexp[i] - half_exp[i];
        }
        if (!mpz_divisible_p(rcoeff.get_mpz_t(), twice_root.get_mpz_t()))
            throw not_a_polynomial_square("descent: coefficient not divisible");
        Poly t(p.ring());
        t.terms_.emplace(std::move(texp), rcoeff / twice_root);
        remainder -= (2 * q + t) * t;
        q += t;
    }

    if (q * q != p) throw not_a_polynomial_square("verification Q*Q = P failed");
    if (sgn(q.leading().second) < 0) q = -q;
    return q;
}

} // namespace sumset
