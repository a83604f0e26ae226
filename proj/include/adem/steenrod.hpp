#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "adem/fp.hpp"

namespace adem::steenrod {

/// A word beta^{e0} P^{s1} beta^{e1} P^{s2} ... P^{sn} beta^{en} in the
/// generators of A(p). For p = 2 there is no Bockstein and `eps` stays
/// empty; for p > 2, eps.size() == exps.size() + 1. The empty word is the
/// unit. At p = 2 the generators print as Sq^i.
struct Monomial {
    std::vector<int> exps;           // s_1..s_n, all >= 1
    std::vector<unsigned char> eps;  // e_0..e_n (p > 2 only)

    bool operator==(const Monomial& o) const { return exps == o.exps && eps == o.eps; }
    bool is_unit() const;
    int length() const { return static_cast<int>(exps.size()); }
};

Monomial unit_monomial(int p);

/// deg P^i = i (p = 2) or 2i(p-1) (p > 2); deg beta = 1.
int degree(const Monomial& m, int p);

/// s_i >= p*s_{i+1} + e_i for every adjacent pair.
bool is_admissible(const Monomial& m, int p);

/// Canonical term order: degree, then exponent sequence lexicographically
/// descending, then Bockstein bits lexicographically ascending.
bool mono_less(const Monomial& a, const Monomial& b, int p);

/// Concatenation in the free algebra with beta^2 = 0 built into the merge;
/// nullopt when the seam produces beta*beta.
std::optional<Monomial> concat(const Monomial& a, const Monomial& b, int p);

/// Interleaved word <-> atom sequence (0 = beta, i > 0 = P^i). The atom
/// form may not contain two adjacent zeros; from_atoms reports such input
/// as nullopt (the product is zero).
std::vector<int> to_atoms(const Monomial& m, int p);
std::optional<Monomial> from_atoms(const std::vector<int>& atoms, int p);

struct MonomialHash {
    size_t operator()(const Monomial& m) const;
};

struct Term {
    Monomial mon;
    int coeff;  // in [1, p)
};

/// Finite F_p-linear combination of monomials, terms in canonical order,
/// no zero coefficients stored.
class Element {
public:
    explicit Element(int p) : p_(p) {}

    static Element zero(int p) { return Element(p); }
    static Element monomial(int p, Monomial m, int coeff = 1);
    static Element unit(int p) { return monomial(p, unit_monomial(p)); }

    int p() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    int coeff(const Monomial& m) const;

    /// Degree when homogeneous (or zero); nullopt for mixed degrees.
    std::optional<int> homogeneous_degree() const;

    void add_term(const Monomial& m, int coeff);

    bool operator==(const Element& o) const { return p_ == o.p_ && terms_same(o); }

private:
    bool terms_same(const Element& o) const;
    int p_;
    std::vector<Term> terms_;  // sorted by mono_less
};

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element scale(int c, const Element& a);

enum class RewriteOrder { Leftmost, Rightmost };

/// A(p) with normal forms computed by Adem rewriting. `unit_scale` is the
/// scalar value assigned to P^0 = Sq^0 when a relation's i = 0 summand
/// produces it; the algebra itself has unit_scale = 1.
class Algebra {
public:
    explicit Algebra(int p, int unit_scale = 1, RewriteOrder order = RewriteOrder::Leftmost);

    int p() const { return p_; }
    int unit_scale() const { return unit_scale_; }
    const Fp& field() const { return fp_; }

    /// Unique admissible-basis expansion of the word; idempotent on
    /// admissible input. Memoised; safe for concurrent use.
    Element reduce(const Monomial& m) const;
    Element reduce(const Element& e) const;

    Element mul(const Element& a, const Element& b) const;
    Element power(const Element& a, long long n) const;
    /// Plain ring commutator ab - ba.
    Element commutator(const Element& a, const Element& b) const;
    /// Super bracket: ab - (-1)^{deg a deg b} ba for homogeneous arguments.
    Element super_bracket(const Element& a, const Element& b) const;

    /// All admissible monomials of degree k, canonically ordered.
    std::vector<Monomial> basis(int k) const;
    long long dim(int k) const;

    void clear_cache() const;

private:
    Element reduce_atoms(const std::vector<int>& atoms, int depth) const;

    int p_;
    int unit_scale_;
    RewriteOrder order_;
    Fp fp_;
    mutable std::mutex mu_;
    mutable std::unordered_map<Monomial, Element, MonomialHash> cache_;
};

/// Expansion of one Adem relation instance applied to the atoms
/// P^a P^b (a < p*b) or P^a beta P^b (a <= p*b): the right-hand side as
/// (coefficient, replacement atoms). P^0 is dropped and its slot scaled by
/// unit_scale. The (-1)^{a+i} sign is vacuous mod 2.
std::vector<std::pair<int, std::vector<int>>> adem_rhs_pp(int a, int b, const Fp& fp, int unit_scale);
std::vector<std::pair<int, std::vector<int>>> adem_rhs_pbp(int a, int b, const Fp& fp, int unit_scale);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), pos_(pos)
    {
    }
    size_t position() const { return pos_; }

private:
    size_t pos_;
};

/// element := term ("+" term)* ; term := [coeff "*"] word ;
/// word := gen (ws gen)* | "1" ; gen := "Sq"digits (p=2) | "P"digits | "b" (p>2).
/// A bare "0" denotes the zero element so rendered output round-trips.
/// No Adem reduction is applied.
Element parse_expr(std::string_view text, int p);

std::string render(const Monomial& m, int p);
std::string render(const Element& e);

}  // namespace adem::steenrod
