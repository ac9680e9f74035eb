#include "sumset/matrix.hpp"

namespace sumset {

SquareMatrix3 RootedMatrix3::matrix() const {
    SquareMatrix3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.entries[i][j] = roots[i][j] * roots[i][j];
    return m;
}

SquareMatrix3 scale_matrix(const SquareMatrix3& m, const Ratio& f) {
    SquareMatrix3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.entries[i][j] = m.entries[i][j] * f;
    return r;
}

RootedMatrix3 euler_roots(const Ratio& p, const Ratio& q, const Ratio& r,
                          const Ratio& s) {
    Ratio p2 = p * p, q2 = q * q, r2 = r * r, s2 = s * s;
    RootedMatrix3 e;
    e.roots = {{
        {p2 + q2 - r2 - s2, 2 * (q * r + p * s), 2 * (q * s - p * r)},
        {2 * (q * r - p * s), p2 - q2 + r2 - s2, 2 * (p * q + r * s)},
        {2 * (q * s + p * r), 2 * (r * s - p * q), p2 - q2 - r2 + s2},
    }};
    return e;
}

SquareMatrix3 euler_matrix(const Integer& p, const Integer& q, const Integer& r,
                           const Integer& s) {
    return euler_roots(Ratio(p), Ratio(q), Ratio(r), Ratio(s)).matrix();
}

MatrixReport check_matrix(const SquareMatrix3& m) {
    MatrixReport report;
    Ratio row0 = m.at(0, 0) + m.at(0, 1) + m.at(0, 2);
    report.magic_sum = row0;
    report.semi_magic = true;
    for (int i = 1; i < 3 && report.semi_magic; ++i)
        report.semi_magic = (m.at(i, 0) + m.at(i, 1) + m.at(i, 2)) == row0;
    for (int j = 0; j < 3 && report.semi_magic; ++j)
        report.semi_magic = (m.at(0, j) + m.at(1, j) + m.at(2, j)) == row0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!is_square(m.at(i, j))) report.failing_cells.emplace_back(i + 1, j + 1);
    report.all_entries_square = report.failing_cells.empty();
    return report;
}

bool check_conditions(const SquareMatrix3& first, const SquareMatrix3& second,
                      PairCondition which) {
    switch (which) {
        case PairCondition::relef:
            return first.at(0, 0) == second.at(0, 0) &&
                   first.at(1, 1) == second.at(1, 1) &&
                   first.at(2, 2) == second.at(2, 2);
        case PairCondition::releg:
            return first.at(0, 1) == second.at(0, 1) &&
                   first.at(0, 2) == second.at(0, 2) &&
                   first.at(1, 0) == second.at(1, 0) &&
                   first.at(2, 0) == second.at(2, 0);
        case PairCondition::releh:
            return first.at(0, 0) == second.at(0, 0) &&
                   first.at(1, 1) == second.at(1, 1);
        case PairCondition::relgh:
            return first.at(0, 0) == second.at(0, 1) &&
                   first.at(1, 1) == second.at(2, 0);
    }
    throw domain_error("check_conditions: unknown condition");
}

RootedMatrix3 g_roots(const Ratio& m, const Ratio& p, const Ratio& q,
                      const Ratio& r, const Ratio& s) {
    if (m.is_zero()) throw domain_error("build_G: m must be nonzero");
    Ratio m2 = m * m;
    Ratio p2 = p * p, q2 = q * q, r2 = r * r, s2 = s * s;
    RootedMatrix3 g;
    g.roots = {{
        {(m2 * p2 + m2 * q2 - r2 - s2) / m, 2 * (q * r + p * s), 2 * (q * s - p * r)},
        {2 * (q * r - p * s), (m2 * p2 - m2 * q2 + r2 - s2) / m,
         2 * (m2 * p * q + r * s) / m},
        {2 * (q * s + p * r), 2 * (m2 * p * q - r * s) / m,
         (m2 * p2 - m2 * q2 - r2 + s2) / m},
    }};
    return g;
}

SquareMatrix3 build_G(const Ratio& m, const Ratio& p, const Ratio& q,
                      const Ratio& r, const Ratio& s) {
    return g_roots(m, p, q, r, s).matrix();
}

RootedMatrix3 h_roots(const Ratio& n, const Ratio& p, const Ratio& q,
                      const Ratio& r, const Ratio& s) {
    if (n.is_zero()) throw domain_error("build_H: n must be nonzero");
    Ratio n2 = n * n;
    Ratio p2 = p * p, q2 = q * q, r2 = r * r, s2 = s * s;
    Ratio sum_sq = p2 + q2 + r2 + s2;
    Ratio cross = 2 * (p * s + q * r);
    Ratio d1 = (p - q + r - s) * (p + q - r - s);
    Ratio d2 = (p + q + r + s) * (p - q - r + s);
    Ratio e1 = (q - r) * (p - s);
    Ratio e2 = (q + r) * (p + s);
    RootedMatrix3 h;
    h.roots = {{
        {p2 + q2 - r2 - s2, ((sum_sq - cross) * n2 - (sum_sq + cross)) / (2 * n),
         2 * (q * s - p * r)},
        {(d1 * n2 - d2) / (2 * n), p2 - q2 + r2 - s2, (e1 * n2 + e2) / n},
        {(e1 * n2 - e2) / n, 2 * (r * s - p * q), (d1 * n2 + d2) / (2 * n)},
    }};
    return h;
}

SquareMatrix3 build_H(const Ratio& n, const Ratio& p, const Ratio& q,
                      const Ratio& r, const Ratio& s) {
    return h_roots(n, p, q, r, s).matrix();
}

Thm35Parts build_thm35_parts(const Integer& f, const Integer& g, const Integer& m,
                             const Integer& u1, const Integer& u2,
                             const Integer& v1, const Integer& v2) {
    Thm35Parts parts;
    parts.e = g * m * v1 * v2;
    parts.h = f * m * u1 * u2;
    parts.p1 = parts.e * u1 + f * u2;
    parts.p2 = parts.e * u1 - f * u2;
    parts.q1 = parts.e * u2 + f * u1;
    parts.q2 = parts.e * u2 - f * u1;
    parts.r1 = g * v1 + parts.h * v2;
    parts.r2 = g * v1 - parts.h * v2;
    parts.s1 = g * v2 + parts.h * v1;
    parts.s2 = g * v2 - parts.h * v1;
    parts.e_roots = euler_roots(Ratio(parts.p1), Ratio(parts.q1), Ratio(parts.r1),
                                Ratio(parts.s1));
    parts.f_roots = euler_roots(Ratio(parts.p2), Ratio(parts.q2), Ratio(parts.r2),
                                Ratio(parts.s2));
    return parts;
}

std::pair<SquareMatrix3, SquareMatrix3> build_thm35_pair(
    const Integer& f, const Integer& g, const Integer& m, const Integer& u1,
    const Integer& u2, const Integer& v1, const Integer& v2) {
    auto parts = build_thm35_parts(f, g, m, u1, u2, v1, v2);
    return {parts.e_roots.matrix(), parts.f_roots.matrix()};
}

Quad44Parts build_quad44_parts(const Integer& m, const Integer& q,
                               const Integer& r, QuadVariant variant) {
    if (m == 0 || m == 1 || m == -1)
        throw domain_error("build_quad44_triple: m must not be 0, 1 or -1");

    Integer m2 = m * m, m4 = m2 * m2;
    Quad44Parts parts;
    parts.t = Ratio(2 * (m + 1), m2 + 1);
    if (variant == QuadVariant::B) {
        parts.n = Ratio(4 * m * (m2 - 1), (m2 + 1) * (m2 + 1));
        // closed form of p, s for this root
        parts.p = Ratio(-((m4 - 6 * m2 + 1) * q - (m4 - 2 * m2 + 5) * r),
                        2 * (m4 - 1));
        parts.s = Ratio(-((5 * m4 - 2 * m2 + 1) * q - (m4 - 6 * m2 + 1) * r),
                        2 * (m4 - 1));
    } else {
        parts.n = Ratio(-(m + 1), m - 1);
        // no closed form printed for this root; solve the two linear
        // equations in p and s directly
        Ratio t = parts.t, n = parts.n;
        Ratio t2 = t * t;
        Ratio mq_plus_r(m * q + r), mq_minus_r(m * q - r);
        Ratio denom = 2 * Ratio(m) * n * t;
        parts.p = -(Ratio(m) * (n - Ratio(1)) * mq_plus_r * t2 -
                    2 * Ratio(q * m) * n * t + n * (n + Ratio(1)) * mq_minus_r) /
                  denom;
        parts.s = -(Ratio(m) * (n + Ratio(1)) * mq_plus_r * t2 -
                    2 * Ratio(r * m) * n * t + n * (n - Ratio(1)) * mq_minus_r) /
                  denom;
    }

    Integer lambda;
    mpz_lcm(lambda.get_mpz_t(), parts.p.den().get_mpz_t(), parts.s.den().get_mpz_t());
    parts.scaled_p = parts.p.num() * (lambda / parts.p.den());
    parts.scaled_q = q * lambda;
    parts.scaled_r = r * lambda;
    parts.scaled_s = parts.s.num() * (lambda / parts.s.den());

    Ratio sp(parts.scaled_p), sq(parts.scaled_q), sr(parts.scaled_r), ss(parts.scaled_s);
    parts.e_roots = euler_roots(sp, sq, sr, ss);
    parts.g_roots = g_roots(Ratio(m), sp, sq, sr, ss);
    parts.h_roots = h_roots(parts.n, sp, sq, sr, ss);
    return parts;
}

QuadTriple build_quad44_triple(const Integer& m, const Integer& q,
                               const Integer& r, QuadVariant variant) {
    auto parts = build_quad44_parts(m, q, r, variant);
    return {parts.e_roots.matrix(), parts.g_roots.matrix(), parts.h_roots.matrix()};
}

} // namespace sumset
