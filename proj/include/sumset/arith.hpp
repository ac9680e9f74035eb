#pragma once

#include <gmpxx.h>

#include "sumset/errors.hpp"

namespace sumset {

// Arbitrary-precision signed integer. Every value in this project is exact;
// there is no overflow or floating point anywhere.
using Integer = mpz_class;

struct IsqrtResult {
    Integer root; // floor(sqrt(n))
    bool exact;   // root * root == n
};

// Floor square root with exactness flag. Negative input is a domain error.
IsqrtResult isqrt(const Integer& n);

// True iff n = x^2 for some integer x >= 0. Non-squares are mostly rejected
// by quadratic-residue filters mod 64 and mod 45045 = 3^2*5*7*11*13 before
// the exact root is taken; the filters are necessary conditions only.
bool is_perfect_square(const Integer& n);

inline constexpr unsigned long kSquarePartTrialBound = 1000000;

// Largest s >= 1 with s^2 | n, for n >= 1. Trial division runs over
// candidates d with d^3 <= cofactor and d <= trial_bound, then a final
// perfect-square check on the cofactor. Square factors whose prime root
// exceeds the bound are left in place (partial extraction).
Integer square_part(const Integer& n,
                    unsigned long trial_bound = kSquarePartTrialBound);

} // namespace sumset
