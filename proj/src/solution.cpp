#include "sumset/solution.hpp"

#include <algorithm>
#include <string>

namespace sumset {

bool has_duplicates(const std::vector<Ratio>& values) {
    std::vector<Ratio> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

VerifyReport verify_pair(const SolutionPair& p) {
    VerifyReport report;
    for (std::size_t i = 0; i < p.a.size(); ++i) {
        for (std::size_t j = 0; j < p.b.size(); ++j) {
            Ratio sum = p.a[i] + p.b[j];
            if (!is_square(sum)) report.failures.push_back({i + 1, j + 1, sum});
        }
    }
    report.ok = report.failures.empty();
    report.duplicate_a = has_duplicates(p.a);
    report.duplicate_b = has_duplicates(p.b);
    return report;
}

SolutionPair shift_scale(const SolutionPair& p, const Ratio& k, const Integer& t) {
    if (k.is_zero()) throw domain_error("shift_scale: k must be nonzero");
    Ratio k2 = k * k;
    Ratio shift{t};
    SolutionPair out;
    out.a.reserve(p.a.size());
    out.b.reserve(p.b.size());
    for (const Ratio& a : p.a) out.a.push_back(k2 * a - shift);
    for (const Ratio& b : p.b) out.b.push_back(k2 * b + shift);
    return out;
}

namespace {

void require_square_semi_magic(const SquareMatrix3& m, const char* name) {
    MatrixReport report = check_matrix(m);
    if (!report.semi_magic)
        throw rejected_input(std::string(name) + " is not semi-magic");
    if (!report.all_entries_square)
        throw rejected_input(std::string(name) + " has a non-square entry");
}

void require_condition(const SquareMatrix3& x, const SquareMatrix3& y,
                       PairCondition which, const char* label) {
    if (!check_conditions(x, y, which))
        throw rejected_input(std::string("condition ") + label + " fails");
}

} // namespace

SolutionPair triples_from_E(const SquareMatrix3& e) {
    require_square_semi_magic(e, "E");
    SolutionPair p;
    p.a = {e.at(0, 2), e.at(2, 0), e.at(1, 1)};
    p.b = {Ratio(0), e.at(1, 0) - e.at(0, 2), e.at(0, 0) - e.at(1, 1)};
    return p;
}

SolutionPair quint_from_EF(const SquareMatrix3& e, const SquareMatrix3& f) {
    require_square_semi_magic(e, "E");
    require_square_semi_magic(f, "F");
    if (e.at(0, 0) != f.at(0, 0))
        throw rejected_input("condition relef fails at cell (1,1)");
    if (e.at(1, 1) != f.at(1, 1))
        throw rejected_input("condition relef fails at cell (2,2)");
    if (e.at(2, 2) != f.at(2, 2))
        throw rejected_input("condition relef fails at cell (3,3)");
    SolutionPair p = triples_from_E(e);
    p.a.push_back(f.at(0, 2));
    p.a.push_back(f.at(2, 0));
    return p;
}

SolutionPair quads_from_EGH(const SquareMatrix3& e, const SquareMatrix3& g,
                            const SquareMatrix3& h) {
    require_square_semi_magic(e, "E");
    require_square_semi_magic(g, "G");
    require_square_semi_magic(h, "H");
    require_condition(e, g, PairCondition::releg, "releg");
    require_condition(e, h, PairCondition::releh, "releh");
    require_condition(g, h, PairCondition::relgh, "relgh");
    SolutionPair p = triples_from_E(e);
    p.a.push_back(g.at(1, 1));
    p.b.push_back(g.at(0, 0) - g.at(1, 1));
    return p;
}

std::vector<SquareMatrix3> matrices_from_solution(const SolutionPair& p) {
    if (!verify_pair(p).ok)
        throw rejected_input("matrices_from_solution: pair does not verify");

    auto cell = [&](std::size_t i, std::size_t j) { return p.a[i] + p.b[j]; };
    auto from_cells = [&](std::array<std::array<std::pair<int, int>, 3>, 3> layout) {
        SquareMatrix3 m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                m.entries[i][j] = cell(layout[i][j].first, layout[i][j].second);
        return m;
    };

    // index pairs are 0-based (a index, b index)
    SquareMatrix3 e1 = from_cells({{
        {{{2, 2}, {1, 1}, {0, 0}}},
        {{{0, 1}, {2, 0}, {1, 2}}},
        {{{1, 0}, {0, 2}, {2, 1}}},
    }});

    if (p.m() == 3 && p.n() == 3) return {e1};

    if (p.m() == 5 && p.n() == 3) {
        SquareMatrix3 f1 = from_cells({{
            {{{2, 2}, {4, 1}, {3, 0}}},
            {{{3, 1}, {2, 0}, {4, 2}}},
            {{{4, 0}, {3, 2}, {2, 1}}},
        }});
        return {e1, f1};
    }

    if (p.m() == 4 && p.n() == 4) {
        SquareMatrix3 g1 = from_cells({{
            {{{3, 3}, {1, 1}, {0, 0}}},
            {{{0, 1}, {3, 0}, {1, 3}}},
            {{{1, 0}, {0, 3}, {3, 1}}},
        }});
        SquareMatrix3 h1 = from_cells({{
            {{{2, 2}, {3, 3}, {0, 0}}},
            {{{0, 3}, {2, 0}, {3, 2}}},
            {{{3, 0}, {0, 2}, {2, 3}}},
        }});
        return {e1, g1, h1};
    }

    throw rejected_input("matrices_from_solution: unsupported shape (" +
                         std::to_string(p.m()) + "," + std::to_string(p.n()) + ")");
}

SolutionPair canonicalize(const SolutionPair& p) {
    if (!verify_pair(p).ok)
        throw rejected_input("canonicalize: pair does not verify");

    // least k with k * entries integral; k^2 * entries is then integral too
    Integer k = 1;
    for (const Ratio& x : p.a) mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), x.den().get_mpz_t());
    for (const Ratio& x : p.b) mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), x.den().get_mpz_t());

    Ratio k2{k * k};
    Ratio min_b = p.b.empty() ? Ratio(0) : p.b[0];
    for (const Ratio& x : p.b) min_b = std::min(min_b, x);
    // shift so that min(b') = 0
    Ratio t_ratio = -(k2 * min_b);
    SolutionPair scaled = shift_scale(p, Ratio(k), t_ratio.num());

    // all entries are now nonnegative integers; strip the common square factor
    Integer g = 0;
    auto fold_gcd = [&](const Ratio& x) {
        if (!x.is_zero()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.num().get_mpz_t());
    };
    for (const Ratio& x : scaled.a) fold_gcd(x);
    for (const Ratio& x : scaled.b) fold_gcd(x);
    if (g > 1) {
        Integer s = square_part(g);
        if (s > 1) {
            Ratio inv(Integer(1), s * s);
            for (Ratio& x : scaled.a) x *= inv;
            for (Ratio& x : scaled.b) x *= inv;
        }
    }

    std::sort(scaled.a.begin(), scaled.a.end());
    std::sort(scaled.b.begin(), scaled.b.end());
    // b1 = 0 forces every a_i to be a square, hence nonnegative
    if (!scaled.a.empty() && scaled.a.front().sign() < 0)
        throw std::logic_error("canonicalize: negative element survived");
    return scaled;
}

bool is_canonical(const SolutionPair& p) {
    return verify_pair(p).ok && canonicalize(p) == p;
}

} // namespace sumset
