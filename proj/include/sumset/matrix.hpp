#pragma once

#include <array>
#include <utility>
#include <vector>

#include "sumset/ratio.hpp"

namespace sumset {

// 3x3 matrix of exact rationals. Semi-magic and squared-entry status are
// checked properties, not constructor guarantees.
struct SquareMatrix3 {
    std::array<std::array<Ratio, 3>, 3> entries{};

    Ratio& at(int row, int col) { return entries[row][col]; }
    const Ratio& at(int row, int col) const { return entries[row][col]; }

    friend bool operator==(const SquareMatrix3& a, const SquareMatrix3& b) {
        return a.entries == b.entries;
    }
};

struct MatrixReport {
    bool semi_magic = false;
    Ratio magic_sum;           // common sum; first row sum when not semi-magic
    bool all_entries_square = false;
    std::vector<std::pair<int, int>> failing_cells; // 1-indexed non-square cells
};

// A squared-entry matrix together with the signed roots its cells were built
// from; entry (i,j) equals roots[i][j]^2.
struct RootedMatrix3 {
    std::array<std::array<Ratio, 3>, 3> roots{};
    SquareMatrix3 matrix() const;
};

// Multiplies every entry by f.
SquareMatrix3 scale_matrix(const SquareMatrix3& m, const Ratio& f);

// Euler's semi-magic matrix of squares; magic sum (p^2+q^2+r^2+s^2)^2.
RootedMatrix3 euler_roots(const Ratio& p, const Ratio& q, const Ratio& r,
                          const Ratio& s);
SquareMatrix3 euler_matrix(const Integer& p, const Integer& q, const Integer& r,
                           const Integer& s);

MatrixReport check_matrix(const SquareMatrix3& m);

// Cell-equality condition sets linking two squared-entry matrices.
enum class PairCondition { relef, releg, releh, relgh };

// relef: (1,1),(2,2),(3,3) equal; releg: (1,2),(1,3),(2,1),(3,1) equal;
// releh: (1,1),(2,2) equal; relgh: first(1,1)=second(1,2), first(2,2)=second(3,1).
bool check_conditions(const SquareMatrix3& first, const SquareMatrix3& second,
                      PairCondition which);

// The matrix obtained from Euler's by replacing (p,q) with (mp,mq) and
// dividing every entry by m^2; satisfies releg against euler(p,q,r,s).
RootedMatrix3 g_roots(const Ratio& m, const Ratio& p, const Ratio& q,
                      const Ratio& r, const Ratio& s);
SquareMatrix3 build_G(const Ratio& m, const Ratio& p, const Ratio& q,
                      const Ratio& r, const Ratio& s);

// The matrix obtained from Euler's by the (n+1)/(n-1) parameter mixing and
// division by n^2; satisfies releh against euler(p,q,r,s).
RootedMatrix3 h_roots(const Ratio& n, const Ratio& p, const Ratio& q,
                      const Ratio& r, const Ratio& s);
SquareMatrix3 build_H(const Ratio& n, const Ratio& p, const Ratio& q,
                      const Ratio& r, const Ratio& s);

// Intermediate data of the five-and-three construction, kept around so tests
// can check the defining identities on the unsquared roots.
struct Thm35Parts {
    Integer e, h;
    Integer p1, q1, r1, s1;
    Integer p2, q2, r2, s2;
    RootedMatrix3 e_roots, f_roots;
};

Thm35Parts build_thm35_parts(const Integer& f, const Integer& g, const Integer& m,
                             const Integer& u1, const Integer& u2,
                             const Integer& v1, const Integer& v2);

// Matrices E and F satisfying relef, built from two Euler parameter tuples.
std::pair<SquareMatrix3, SquareMatrix3> build_thm35_pair(
    const Integer& f, const Integer& g, const Integer& m, const Integer& u1,
    const Integer& u2, const Integer& v1, const Integer& v2);

enum class QuadVariant { B, C };

// Intermediate data of the four-and-four construction. The rational
// parameters p, s are cleared to integers by a common factor before the
// matrices are built (all cells are homogeneous of degree 4 in p,q,r,s, so
// this scales every entry by the same square).
struct Quad44Parts {
    Ratio t, n; // auxiliary parameters of the variant
    Ratio p, s; // solved parameters, before clearing denominators
    Integer scaled_p, scaled_q, scaled_r, scaled_s;
    RootedMatrix3 e_roots, g_roots, h_roots;
};

Quad44Parts build_quad44_parts(const Integer& m, const Integer& q,
                               const Integer& r, QuadVariant variant);

struct QuadTriple {
    SquareMatrix3 e, g, h;
};

// Matrices E, G, H satisfying releg, releh and relgh (with the sign choices
// g11 = -h12, g22 = -h31). m in {0, 1, -1} is a domain error.
QuadTriple build_quad44_triple(const Integer& m, const Integer& q,
                               const Integer& r, QuadVariant variant);

} // namespace sumset
