#pragma once

#include <string>
#include <vector>

#include "sumset/poly.hpp"
#include "sumset/solution.hpp"

namespace sumset {

// Closed enumeration of the parametric generators.
enum class FamilyId {
    lagrange44,
    triple33_v1,
    triple33_v2,
    triple33_v3,
    triple33_shift,
    quint53,
    quad44_partial,
    quad44_a,
    quad44_b,
    quad44_c,
};

struct FamilyInfo {
    FamilyId id;
    std::string name;                    // CLI-facing name
    std::vector<std::string> params;     // declared variable order
    std::size_t m, n;                    // output shape
    bool partial;                        // has exempt (non-square) cells
};

const std::vector<FamilyInfo>& family_catalogue();
const FamilyInfo& family_info(FamilyId id);
FamilyId family_from_name(const std::string& name); // throws domain_error

struct FamilyOutput {
    SolutionPair pair;
    bool degenerate; // duplicate elements in a or b
    FamilyId id;
    std::vector<Integer> params;
};

// Evaluates the family's symbolic system at an integer parameter tuple.
// Arity mismatches and each family's excluded parameter values are domain
// errors; degenerate tuples (duplicates, zeros) are permitted and flagged.
FamilyOutput generate(FamilyId id, const std::vector<Integer>& params);

struct LabeledPoly {
    std::string label;
    Poly poly;
    bool exempt = false; // true for the two unproven cells of quad44_partial
};

// The family's defining polynomials and all m*n sum polynomials. Every
// polynomial is the element's value multiplied by `denominator` (the
// constant 1 except where a family is intrinsically rational); a sum
// polynomial being a polynomial square is then equivalent to the rational
// sum being a rational square.
struct SymbolicSystem {
    FamilyId id;
    PolyRing ring;
    Poly denominator;
    std::vector<LabeledPoly> elements; // a_1..a_m, b_1..b_n
    std::vector<LabeledPoly> sums;     // a_i+b_j, row-major
};

SymbolicSystem symbolic_system(FamilyId id);

// The quartic-in-u1 value of the sum a3+b4 of the partial family after the
// m = t^2 parameter substitution; phi(t,u1,u2,-v1,v2) is a4+b3.
Ratio phi(const Ratio& t, const Integer& u1, const Integer& u2,
          const Integer& v1, const Integer& v2);

// Confirms that t = 2(m+1)/(m^2+1) makes the discriminant of the n-quartic a
// rational square and that both known n-roots satisfy the defining quadratic
// exactly. m in {0, 1, -1} is a domain error.
bool discriminant_check(const Integer& m);

} // namespace sumset
