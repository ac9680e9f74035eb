#include "sumset/arith.hpp"

#include <array>
#include <vector>

namespace sumset {

namespace {

constexpr unsigned long kFilterModulus = 45045; // 3^2 * 5 * 7 * 11 * 13

std::array<bool, 64> make_table64() {
    std::array<bool, 64> t{};
    for (unsigned long i = 0; i < 64; ++i) t[i * i % 64] = true;
    return t;
}

std::vector<bool> make_table45045() {
    std::vector<bool> t(kFilterModulus, false);
    for (unsigned long i = 0; i < kFilterModulus; ++i)
        t[i * i % kFilterModulus] = true;
    return t;
}

} // namespace

IsqrtResult isqrt(const Integer& n) {
    if (sgn(n) < 0) throw domain_error("isqrt: negative input");
    IsqrtResult res;
    Integer rem;
    mpz_sqrtrem(res.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    res.exact = (rem == 0);
    return res;
}

bool is_perfect_square(const Integer& n) {
    if (sgn(n) < 0) return false;
    static const std::array<bool, 64> table64 = make_table64();
    static const std::vector<bool> table45045 = make_table45045();
    if (!table64[mpz_fdiv_ui(n.get_mpz_t(), 64)]) return false;
    if (!table45045[mpz_fdiv_ui(n.get_mpz_t(), kFilterModulus)]) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer square_part(const Integer& n, unsigned long trial_bound) {
    if (sgn(n) <= 0) throw domain_error("square_part: input must be >= 1");
    Integer cofactor = n;
    Integer s = 1;

    auto extract = [&](unsigned long d) {
        unsigned long e = 0;
        while (mpz_divisible_ui_p(cofactor.get_mpz_t(), d)) {
            mpz_divexact_ui(cofactor.get_mpz_t(), cofactor.get_mpz_t(), d);
            ++e;
        }
        if (e >= 2) {
            Integer dp;
            mpz_ui_pow_ui(dp.get_mpz_t(), d, e / 2);
            s *= dp;
        }
    };

    auto cube_within = [&](unsigned long d) {
        Integer c(d);
        c = c * c * c;
        return c <= cofactor;
    };

    extract(2);
    if (cube_within(3)) extract(3);
    // 2/4 wheel over numbers coprime to 2 and 3
    unsigned long step = 2;
    for (unsigned long d = 5; d <= trial_bound && cube_within(d);
         d += step, step = 6 - step) {
        extract(d);
    }
    // cofactor now has at most two prime factors within the trial range
    if (cofactor > 1 && is_perfect_square(cofactor)) s *= isqrt(cofactor).root;
    return s;
}

} // namespace sumset
