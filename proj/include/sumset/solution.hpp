#pragma once

#include <cstddef>
#include <vector>

#include "sumset/matrix.hpp"
#include "sumset/ratio.hpp"

namespace sumset {

// Two finite lists of rationals whose pairwise sums are meant to be squares.
// Verification status is never stored; it is recomputed by verify_pair.
struct SolutionPair {
    std::vector<Ratio> a;
    std::vector<Ratio> b;

    std::size_t m() const { return a.size(); }
    std::size_t n() const { return b.size(); }

    friend bool operator==(const SolutionPair& x, const SolutionPair& y) {
        return x.a == y.a && x.b == y.b;
    }
};

struct VerifyFailure {
    std::size_t i, j; // 1-indexed
    Ratio sum;
};

struct VerifyReport {
    bool ok = false; // ok <=> failures empty
    std::vector<VerifyFailure> failures;
    bool duplicate_a = false;
    bool duplicate_b = false;
};

// Tests every a_i + b_j for being the square of a rational.
VerifyReport verify_pair(const SolutionPair& p);

// a'_i = k^2 a_i - t, b'_j = k^2 b_j + t. Preserves all square sums since
// a'_i + b'_j = k^2 (a_i + b_j). k = 0 is a domain error.
SolutionPair shift_scale(const SolutionPair& p, const Ratio& k, const Integer& t);

// a = (E13, E31, E22), b = (0, E21 - E13, E11 - E22) from a semi-magic
// squared-entry matrix; the nine sums land on the cells of E.
SolutionPair triples_from_E(const SquareMatrix3& e);

// Extends the triples of E by a4 = F13, a5 = F31; E and F must satisfy relef.
SolutionPair quint_from_EF(const SquareMatrix3& e, const SquareMatrix3& f);

// Extends the triples of E by a4 = G22, b4 = G11 - G22; E, G, H must satisfy
// releg, releh, relgh.
SolutionPair quads_from_EGH(const SquareMatrix3& e, const SquareMatrix3& g,
                            const SquareMatrix3& h);

// Inverse direction: (3,3) -> [E1]; (5,3) -> [E1, F1]; (4,4) -> [E1, G1, H1].
// Each returned matrix is semi-magic with square entries; the magic sums are
// the corresponding subset sums of the pair's elements.
std::vector<SquareMatrix3> matrices_from_solution(const SolutionPair& p);

// Standard form: integer entries, b1 = 0, everything nonnegative and
// ascending, no common square factor. Unique under these rules, and every
// a_i is a perfect square. Input must verify.
SolutionPair canonicalize(const SolutionPair& p);

bool is_canonical(const SolutionPair& p);

bool has_duplicates(const std::vector<Ratio>& values);

} // namespace sumset
