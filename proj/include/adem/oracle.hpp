#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "adem/fp_matrix.hpp"
#include "adem/steenrod.hpp"

namespace adem::oracle {

/// Raw word in the free algebra on beta and the P^i: 0 = beta, i > 0 = P^i.
/// Unlike steenrod::Monomial this form can hold adjacent Bocksteins.
using Word = std::vector<int>;

int atom_degree(int atom, int p);
int word_degree(const Word& w, int p);

/// All interleaved words of degree exactly k (no admissibility constraint),
/// in canonical order.
std::vector<steenrod::Monomial> free_words(int p, int k);
long long free_word_count(int p, int k);

/// One defining relation, sum of coeff * word = 0: the Adem instances
/// (P^a P^b with a < pb, P^a beta P^b with a <= pb) and beta^2 for p > 2.
struct Relation {
    int degree;
    std::vector<std::pair<int, Word>> terms;
};

std::vector<Relation> relations(int p, int max_degree);

/// The degree-k slice of the relation ideal spanned over the free-word
/// basis: one row u * r * v for every relation r and every word pair (u, v)
/// of complementary degree. Rows are bit-packed for p = 2 and byte-packed
/// otherwise. In the interleaved-word ambient the beta^2 relation is
/// structural (concatenation kills beta*beta), so only Adem instances
/// produce rows.
struct RelationMatrix {
    int p = 2;
    int degree = 0;
    std::vector<steenrod::Monomial> columns;
    std::variant<linalg::GF2Mat, linalg::FpMat> rows{linalg::GF2Mat(0, 0)};

    size_t row_count() const;
    size_t rank(linalg::Exec exec = linalg::Exec::Serial) const;
};

RelationMatrix relation_rows(int p, int k, linalg::Exec exec = linalg::Exec::Serial);

/// A(p) in degrees <= k_max as a quotient of the free algebra, built one
/// degree at a time: stage k is (+_g g (x) A_{k-|g|}) modulo the rows
/// obtained from relations with their left edge at position 0, expanded
/// through the already-computed left-multiplication maps. Exact linear
/// algebra over F_p throughout; no rewriting and no confluence assumption.
class QuotientTower {
public:
    QuotientTower(int p, int k_max, linalg::Exec exec = linalg::Exec::Serial);

    int p() const { return p_; }
    int k_max() const { return k_max_; }
    long long dim(int k) const;

    /// Coordinates of the class of a raw word in the stage basis.
    std::vector<int> reduce_word(const Word& w) const;
    /// Coordinates of a linear combination of raw words (same degree).
    std::vector<int> reduce(const std::vector<std::pair<int, Word>>& terms) const;

private:
    void build_stage(int k, const std::vector<Relation>& rels, linalg::Exec exec);
    std::vector<int> apply_left(int atom, int src_degree, const std::vector<int>& v) const;

    int p_;
    int k_max_;
    Fp fp_;
    std::vector<int> gens_;                       // atoms available at this cap
    std::vector<long long> dims_;                 // dims_[k]
    std::vector<std::map<int, linalg::FpMat>> lmul_;  // lmul_[k][atom]: A_{k-|atom|} -> A_k
};

/// Degree cap for oracle computations (resource guard): defaults 20/40/60
/// for p = 2/3/5, overridable via the STEENROD_MAX_DEG environment variable.
int max_degree_cap(int p);

/// |free words| - rank of the relation slice, computed through the tower.
long long dim_oracle(int p, int k);

struct VerifyReport {
    int p = 2;
    int k_max = 0;
    std::vector<long long> dims;  // oracle dims for k = 0..k_max
    struct Mismatch {
        int degree;
        std::string what;
        long long core;
        long long oracle;
    };
    std::vector<Mismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// Per degree k <= k_max: oracle dimension equals the admissible count and
/// the images of the admissible monomials are linearly independent in the
/// quotient.
VerifyReport verify_basis(int p, int k_max, linalg::Exec exec = linalg::Exec::Serial);

}  // namespace adem::oracle
