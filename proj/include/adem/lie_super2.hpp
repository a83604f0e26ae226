#pragma once

#include <string>
#include <vector>

#include "adem/steenrod.hpp"

namespace adem::lie2 {

/// Ground field for the structure-constant data: F2 or F4 = F2[w]/(w^2+w+1).
/// Elements are 0..1 resp. 0..3 (low bit + w * high bit); addition is xor.
enum class GroundField { F2, F4 };

struct GF {
    GroundField f;

    int order() const { return f == GroundField::F2 ? 2 : 4; }
    int add(int a, int b) const { return a ^ b; }
    int mul(int a, int b) const;
    int square(int a) const { return mul(a, a); }
};

using Vec = std::vector<int>;  // coordinates over the ground field

struct BasisVec {
    std::string name;
    int parity = 0;  // 0 even, 1 odd
    int degree = 0;
};

/// Finite-dimensional Lie superalgebra in characteristic 2: brackets for
/// pairs that are not both odd, the squaring on odd basis vectors, and the
/// polarised odd-odd bracket (x+y)^2 - x^2 - y^2 stored as the "bracket"
/// of odd pairs.
struct LieSuperData {
    GroundField field = GroundField::F2;
    std::vector<BasisVec> basis;
    std::vector<std::vector<Vec>> bracket;  // bracket[i][j], full square table
    std::vector<Vec> squaring;              // meaningful for odd i only

    size_t dim() const { return basis.size(); }
    GF gf() const { return GF{field}; }
};

Vec zero_vec(const LieSuperData& g);
Vec basis_vec(const LieSuperData& g, size_t i);
std::string show(const LieSuperData& g, const Vec& v);

/// Bilinear extension of the stored table (all parities).
Vec bracket_vec(const LieSuperData& g, const Vec& x, const Vec& y);

/// Polarised odd-odd bracket; rejects arguments with even support.
Vec bracket_odd(const LieSuperData& g, const Vec& x, const Vec& y);

/// Squaring extended from the basis table: quadratic in the coefficients,
/// cross terms through the polarised bracket.
Vec squaring(const LieSuperData& g, const Vec& x);

struct AxiomCheck {
    std::string axiom;
    bool pass = true;
    std::string witness;  // concrete counterexample when failing
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool pass = true;

    const AxiomCheck* first_failure() const;
};

/// Structural validation (parity, grading) followed by the axioms:
/// even-part Jacobi and the module axiom, scalar compatibility of the
/// squaring, bilinearity of the polarisation, [x, y^2] = (ad_y)^2(x) for
/// every x and odd y, and [x, x^2] = 0. Exhaustive over all odd vectors.
AxiomReport check_axioms(const LieSuperData& g);

/// p > 2 sanity route: x^2 = (1/2)[x, x] for an odd-degree homogeneous
/// Steenrod element; rejected at p = 2 where halving is undefined.
steenrod::Element squaring_from_p2_envelope(const steenrod::Element& x,
                                            const steenrod::Algebra& algebra);

}  // namespace adem::lie2
