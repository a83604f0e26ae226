#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adem/fp.hpp"

namespace adem::dpow {

constexpr int kInfiniteHeight = -1;

/// Variable layout of O(m;N) with n extra odd indeterminates: even
/// variables come first and carry per-variable heights N_i (p^{N_i} bounds
/// the exponent; kInfiniteHeight lifts the bound). Odd variables square to
/// zero; at p = 2 that is the height-1 binomial vanishing, at p > 2 they
/// anticommute.
struct Heights {
    int p = 2;
    int m = 0;
    int n = 0;
    std::vector<int> N;  // size m

    int vars() const { return m + n; }
    bool is_odd_var(int i) const { return i >= m; }
    /// Exponent bound for variable i (exclusive); nullopt = unbounded.
    std::optional<long long> bound(int i) const;
    bool operator==(const Heights& o) const = default;
};

struct DPMonomial {
    std::vector<long long> exps;

    bool operator==(const DPMonomial& o) const { return exps == o.exps; }
    long long total() const;
    int parity(const Heights& ctx) const;  // sum of odd-variable exponents mod 2
};

bool dp_less(const DPMonomial& a, const DPMonomial& b);  // total degree, then lex

struct DPTerm {
    DPMonomial mon;
    int coeff;
};

class DPElement {
public:
    explicit DPElement(Heights ctx) : ctx_(std::move(ctx)) {}

    static DPElement zero(Heights ctx) { return DPElement(std::move(ctx)); }
    static DPElement monomial(Heights ctx, DPMonomial m, int coeff = 1);
    static DPElement unit(Heights ctx);

    const Heights& ctx() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<DPTerm>& terms() const { return terms_; }
    int coeff(const DPMonomial& m) const;
    void add_term(const DPMonomial& m, int coeff);

    /// Parity when homogeneous in the odd variables; nullopt for mixed.
    std::optional<int> parity() const;

    bool operator==(const DPElement& o) const;

private:
    Heights ctx_;
    std::vector<DPTerm> terms_;
};

DPElement add(const DPElement& a, const DPElement& b);
DPElement sub(const DPElement& a, const DPElement& b);
DPElement scale(int c, const DPElement& a);

/// Divided-power product: term coefficients multiply by prod C(r_i+s_i, r_i);
/// exponent overflow past p^{N_i} vanishes through the binomial (asserted),
/// odd variables anticommute (p > 2) and square to zero.
DPElement dp_mul(const DPElement& a, const DPElement& b);

/// Distinguished derivative: lowers the i-th exponent by one, coefficient
/// unchanged; Koszul sign for odd variables at p > 2.
DPElement partial(int var, const DPElement& f);

/// Sum f_i * partial_i with homogeneous parity.
struct Derivation {
    std::vector<DPElement> coeffs;  // one per variable
    int parity = 0;
};

Derivation make_derivation(std::vector<DPElement> coeffs);
void validate(const Derivation& d);

DPElement apply(const Derivation& d, const DPElement& f);
Derivation bracket(const Derivation& a, const Derivation& b);

/// dim O(m;N) * 2^n; nullopt when any height is infinite.
std::optional<long long> dimension(const Heights& ctx);

/// Monomial text like "u1^(3) u2" (bare variable = exponent 1); elements
/// "2*u1^(2) u2 + u3"; derivations "u1^(1) d1 + 2*u2 d2".
DPElement parse_dp_element(std::string_view text, const Heights& ctx);
Derivation parse_derivation(std::string_view text, const Heights& ctx);

std::string render(const DPMonomial& m, const Heights& ctx);
std::string render(const DPElement& e);
std::string render(const Derivation& d);

}  // namespace adem::dpow
