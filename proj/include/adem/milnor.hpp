#pragma once

#include <string>
#include <vector>

#include "adem/fp.hpp"

namespace adem::milnor {

/// Monomial in the polynomial generators b_1..b_K of the affine algebra of
/// the automorphism group scheme of the additive formal group; b_0 = 1 is
/// implicit. exps[i] is the exponent of b_{i+1}.
struct DualMonomial {
    std::vector<long long> exps;

    void trim();
    bool is_unit() const;
    int max_index() const;  // largest k with b_k present, 0 for the unit
    bool operator==(const DualMonomial& o) const;
    bool operator<(const DualMonomial& o) const;  // canonical order
};

DualMonomial dual_unit();
DualMonomial dual_gen(int k, long long e = 1);
DualMonomial dual_mul(const DualMonomial& a, const DualMonomial& b);

struct TensorTerm {
    std::vector<DualMonomial> factors;  // arity 2 or 3
    int coeff;
};

/// F_p-linear combination in a tensor power of the polynomial algebra,
/// canonical term order, no zero coefficients.
class TensorElement {
public:
    TensorElement(int p, int arity) : p_(p), arity_(arity) {}

    int p() const { return p_; }
    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<TensorTerm>& terms() const { return terms_; }

    void add_term(std::vector<DualMonomial> factors, int coeff);
    bool operator==(const TensorElement& o) const;

    static TensorElement unit(int p, int arity);

private:
    int p_;
    int arity_;
    std::vector<TensorTerm> terms_;
};

TensorElement add(const TensorElement& a, const TensorElement& b);
TensorElement mul(const TensorElement& a, const TensorElement& b);
TensorElement power(const TensorElement& a, long long e);

/// Delta b_k = sum_{l = 0..k} b_l (x) b_{k-l}^{p^l}, with b_0 = 1.
TensorElement coproduct_gen(int k, int p, int K);

/// Multiplicative extension of the generator coproducts to a monomial.
TensorElement coproduct(const DualMonomial& m, int p, int K);

/// (Delta (x) id) and (id (x) Delta) on arity-2 elements.
TensorElement expand_left(const TensorElement& e, int p, int K);
TensorElement expand_right(const TensorElement& e, int p, int K);

struct CoassocReport {
    int p = 2;
    int K = 0;
    bool pass = false;
    std::string detail;  // first failure, empty when pass
};

/// Coassociativity and the counit laws for all k <= K.
CoassocReport check_coassociativity(int p, int K);

std::string render(const DualMonomial& m);
std::string render(const TensorElement& e);

}  // namespace adem::milnor
