#include "adem/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace adem::oracle {

using steenrod::Monomial;

int atom_degree(int atom, int p)
{
    if (atom == 0)
        return 1;
    return p == 2 ? atom : 2 * atom * (p - 1);
}

int word_degree(const Word& w, int p)
{
    int d = 0;
    for (int a : w)
        d += atom_degree(a, p);
    return d;
}

std::vector<Monomial> free_words(int p, int k)
{
    std::vector<Monomial> out;
    if (k < 0)
        return out;
    if (k == 0) {
        out.push_back(steenrod::unit_monomial(p));
        return out;
    }
    const int q = p == 2 ? 1 : 2 * (p - 1);
    std::vector<int> atoms;
    auto rec = [&](auto&& self, int dleft) -> void {
        if (dleft == 0) {
            out.push_back(*steenrod::from_atoms(atoms, p));
            return;
        }
        if (p > 2 && (atoms.empty() || atoms.back() != 0)) {
            atoms.push_back(0);
            self(self, dleft - 1);
            atoms.pop_back();
        }
        for (int s = 1; static_cast<long long>(q) * s <= dleft; ++s) {
            atoms.push_back(s);
            self(self, dleft - q * s);
            atoms.pop_back();
        }
    };
    rec(rec, k);
    std::sort(out.begin(), out.end(), [p](const Monomial& a, const Monomial& b) {
        return steenrod::mono_less(a, b, p);
    });
    return out;
}

long long free_word_count(int p, int k)
{
    // interleaved words counted by degree: c[k] = #(words of degree k)
    if (k < 0)
        return 0;
    const int q = p == 2 ? 1 : 2 * (p - 1);
    // f[k] = words starting with P, g[k] = words starting with beta (p > 2)
    std::vector<long long> f(k + 1, 0), g(k + 1, 0);
    std::vector<long long> total(k + 1, 0);
    total[0] = 1;
    for (int d = 1; d <= k; ++d) {
        long long fs = 0;
        for (int s = 1; static_cast<long long>(q) * s <= d; ++s) {
            int rest = d - q * s;
            fs += (rest == 0 ? 1 : f[rest] + g[rest]);
        }
        f[d] = fs;
        if (p > 2)
            g[d] = d == 1 ? 1 : f[d - 1];
        total[d] = f[d] + g[d];
    }
    return total[k];
}

namespace {

// Relation expansions transcribed here on purpose, independently of the
// rewriter's adem_rhs_* helpers, so a slip in either copy shows up as a
// core-vs-oracle mismatch instead of propagating to both routes.
void push_term(Relation& r, const Fp& fp, long long sign_exp, int binom, Word w)
{
    int c = binom;
    if (fp.p() > 2 && (sign_exp % 2))
        c = fp.neg(c);
    c = fp.neg(c);  // relation reads LHS - RHS = 0
    if (c)
        r.terms.push_back({c, std::move(w)});
}

Relation adem_pp_relation(int p, int a, int b, const Fp& fp)
{
    const int q = p == 2 ? 1 : 2 * (p - 1);
    Relation r{q * (a + b), {{1, Word{a, b}}}};
    for (int t = 0; t <= a / p; ++t) {
        long long n = p == 2 ? b - t - 1 : static_cast<long long>(p - 1) * (b - t) - 1;
        long long k = a - static_cast<long long>(p) * t;
        Word w = t == 0 ? Word{a + b} : Word{a + b - t, t};
        push_term(r, fp, a + t, fp.binom(n, k), std::move(w));
    }
    return r;
}

Relation adem_pbp_relation(int p, int a, int b, const Fp& fp)
{
    const int q = 2 * (p - 1);
    Relation r{q * (a + b) + 1, {{1, Word{a, 0, b}}}};
    for (int t = 0; t <= a / p; ++t) {
        long long n = static_cast<long long>(p - 1) * (b - t);
        long long k = a - static_cast<long long>(p) * t;
        Word w = t == 0 ? Word{0, a + b} : Word{0, a + b - t, t};
        push_term(r, fp, a + t, fp.binom(n, k), std::move(w));
    }
    for (int t = 0; t <= a / p; ++t) {
        long long n = static_cast<long long>(p - 1) * (b - t) - 1;
        long long k = a - static_cast<long long>(p) * t - 1;
        Word w = t == 0 ? Word{a + b, 0} : Word{a + b - t, 0, t};
        push_term(r, fp, a + t + 1, fp.binom(n, k), std::move(w));
    }
    return r;
}

}  // namespace

std::vector<Relation> relations(int p, int max_degree)
{
    std::vector<Relation> rels;
    Fp fp(p);
    const int q = p == 2 ? 1 : 2 * (p - 1);
    if (p > 2 && max_degree >= 2)
        rels.push_back(Relation{2, {{1, Word{0, 0}}}});
    for (int b = 1; static_cast<long long>(q) * (1 + b) <= max_degree + 1; ++b) {
        for (int a = 1; a <= p * b; ++a) {
            int d = q * (a + b);
            if (a < p * b && d <= max_degree)
                rels.push_back(adem_pp_relation(p, a, b, fp));
            if (p > 2 && d + 1 <= max_degree)
                rels.push_back(adem_pbp_relation(p, a, b, fp));
        }
    }
    return rels;
}

namespace {

bool raw_beta_beta(const Relation& r)
{
    return r.terms.size() == 1 && r.terms[0].second == Word{0, 0};
}

std::optional<Monomial> concat3(const Monomial& u, const Word& w, const Monomial& v, int p)
{
    std::vector<int> atoms = steenrod::to_atoms(u, p);
    for (int a : w) {
        if (a == 0 && !atoms.empty() && atoms.back() == 0)
            return std::nullopt;
        atoms.push_back(a);
    }
    std::vector<int> tail = steenrod::to_atoms(v, p);
    for (int a : tail) {
        if (a == 0 && !atoms.empty() && atoms.back() == 0)
            return std::nullopt;
        atoms.push_back(a);
    }
    return steenrod::from_atoms(atoms, p);
}

}  // namespace

size_t RelationMatrix::row_count() const
{
    return std::visit([](const auto& m) { return m.rows(); }, rows);
}

size_t RelationMatrix::rank(linalg::Exec exec) const
{
    return std::visit([exec](const auto& m) { return linalg::rank(m, exec); }, rows);
}

RelationMatrix relation_rows(int p, int k, linalg::Exec exec)
{
    RelationMatrix out;
    out.p = p;
    out.degree = k;
    out.columns = free_words(p, k);

    std::vector<std::pair<Monomial, size_t>> index;
    index.reserve(out.columns.size());
    for (size_t i = 0; i < out.columns.size(); ++i)
        index.push_back({out.columns[i], i});
    auto find_col = [&](const Monomial& m) -> size_t {
        auto it = std::lower_bound(index.begin(), index.end(), m,
                                   [p](const std::pair<Monomial, size_t>& a, const Monomial& key) {
                                       return steenrod::mono_less(a.first, key, p);
                                   });
        return it->second;
    };

    auto rels = relations(p, k);
    Fp fp(p);

    // enumerate (relation, left word, right word) triples, parallel over relations
    struct RowVec {
        std::vector<std::pair<size_t, int>> entries;
    };
    std::vector<std::vector<RowVec>> blocks(rels.size());

    const long long nrel = static_cast<long long>(rels.size());
#pragma omp parallel for schedule(dynamic) if (exec == linalg::Exec::Parallel)
    for (long long ri = 0; ri < nrel; ++ri) {
        const Relation& r = rels[ri];
        if (raw_beta_beta(r))
            continue;  // structural in the interleaved ambient
        std::vector<RowVec>& rows = blocks[ri];
        for (int du = 0; du + r.degree <= k; ++du) {
            int dv = k - r.degree - du;
            auto us = free_words(p, du);
            auto vs = free_words(p, dv);
            for (const Monomial& u : us) {
                for (const Monomial& v : vs) {
                    std::map<size_t, int> acc;
                    for (const auto& [c, w] : r.terms) {
                        auto m = concat3(u, w, v, p);
                        if (!m)
                            continue;
                        size_t col = find_col(*m);
                        acc[col] = (acc[col] + c) % p;
                    }
                    RowVec row;
                    for (auto& [col, c] : acc)
                        if (c % p)
                            row.entries.push_back({col, ((c % p) + p) % p});
                    if (!row.entries.empty())
                        rows.push_back(std::move(row));
                }
            }
        }
    }

    size_t total = 0;
    for (const auto& b : blocks)
        total += b.size();
    const size_t ncols = out.columns.size();
    if (p == 2) {
        linalg::GF2Mat m(total, ncols);
        size_t r = 0;
        for (const auto& b : blocks)
            for (const auto& row : b) {
                for (auto [col, c] : row.entries)
                    m.set(r, col, c & 1);
                ++r;
            }
        out.rows = std::move(m);
    } else {
        linalg::FpMat m(p, total, ncols);
        size_t r = 0;
        for (const auto& b : blocks)
            for (const auto& row : b) {
                for (auto [col, c] : row.entries)
                    m.set(r, col, static_cast<uint8_t>(c));
                ++r;
            }
        out.rows = std::move(m);
    }
    return out;
}

QuotientTower::QuotientTower(int p, int k_max, linalg::Exec exec) : p_(p), k_max_(k_max), fp_(p)
{
    if (k_max < 0)
        throw std::invalid_argument("QuotientTower: negative degree bound");
    const int q = p == 2 ? 1 : 2 * (p - 1);
    if (p > 2)
        gens_.push_back(0);
    for (int i = 1; static_cast<long long>(q) * i <= k_max; ++i)
        gens_.push_back(i);
    dims_.assign(k_max + 1, 0);
    dims_[0] = 1;
    lmul_.resize(k_max + 1);
    auto rels = relations(p, k_max);
    for (int k = 1; k <= k_max; ++k)
        build_stage(k, rels, exec);
}

std::vector<int> QuotientTower::apply_left(int atom, int src_degree, const std::vector<int>& v) const
{
    int dst = src_degree + atom_degree(atom, p_);
    const linalg::FpMat& m = lmul_[dst].at(atom);
    std::vector<int> out(static_cast<size_t>(dims_[dst]), 0);
    for (size_t j = 0; j < v.size(); ++j) {
        if (!v[j])
            continue;
        for (size_t i = 0; i < out.size(); ++i)
            out[i] = (out[i] + v[j] * m.get(i, j)) % p_;
    }
    return out;
}

void QuotientTower::build_stage(int k, const std::vector<Relation>& rels, linalg::Exec exec)
{
    // columns: (generator atom g, basis index of A_{k - deg g})
    struct Col {
        int atom;
        int idx;
    };
    std::vector<Col> cols;
    std::map<int, size_t> col_base;
    for (int g : gens_) {
        int dg = atom_degree(g, p_);
        if (dg > k)
            continue;
        col_base[g] = cols.size();
        for (int j = 0; j < dims_[k - dg]; ++j)
            cols.push_back({g, j});
    }

    std::vector<std::vector<uint8_t>> rows;
    for (const Relation& r : rels) {
        if (r.degree > k)
            continue;
        const int rest_deg = k - r.degree;
        for (int j = 0; j < dims_[rest_deg]; ++j) {
            std::vector<uint8_t> row(cols.size(), 0);
            bool nonzero = false;
            for (const auto& [c, w] : r.terms) {
                int g = w[0];
                // red(tail * b_j) via the lower left-multiplication maps
                std::vector<int> vec(static_cast<size_t>(dims_[rest_deg]), 0);
                vec[j] = 1;
                int d = rest_deg;
                for (size_t t = w.size(); t-- > 1;) {
                    vec = apply_left(w[t], d, vec);
                    d += atom_degree(w[t], p_);
                }
                size_t base = col_base.at(g);
                for (size_t i = 0; i < vec.size(); ++i) {
                    if (!vec[i])
                        continue;
                    row[base + i] = static_cast<uint8_t>((row[base + i] + c * vec[i]) % p_);
                    nonzero = true;
                }
            }
            if (nonzero)
                rows.push_back(std::move(row));
        }
    }

    linalg::FpMat mat(p_, rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            mat.set(i, j, rows[i][j]);
    auto pivots = linalg::rref(mat, exec);

    std::vector<char> is_pivot(cols.size(), 0);
    for (size_t c : pivots)
        is_pivot[c] = 1;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < cols.size(); ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    dims_[k] = static_cast<long long>(free_cols.size());

    // projection of each column onto the free-column basis
    std::vector<std::vector<int>> proj(cols.size(), std::vector<int>(free_cols.size(), 0));
    std::map<size_t, size_t> fidx;
    for (size_t i = 0; i < free_cols.size(); ++i) {
        fidx[free_cols[i]] = i;
        proj[free_cols[i]][i] = 1;
    }
    for (size_t r = 0; r < pivots.size(); ++r) {
        size_t pc = pivots[r];
        for (size_t i = 0; i < free_cols.size(); ++i) {
            uint8_t v = mat.get(r, free_cols[i]);
            if (v)
                proj[pc][i] = fp_.neg(v);
        }
    }

    for (int g : gens_) {
        int dg = atom_degree(g, p_);
        if (dg > k)
            continue;
        int nsrc = static_cast<int>(dims_[k - dg]);
        linalg::FpMat lm(p_, free_cols.size(), nsrc);
        size_t base = col_base.at(g);
        for (int j = 0; j < nsrc; ++j)
            for (size_t i = 0; i < free_cols.size(); ++i)
                lm.set(i, j, static_cast<uint8_t>(proj[base + j][i]));
        lmul_[k].emplace(g, std::move(lm));
    }
}

long long QuotientTower::dim(int k) const
{
    if (k < 0)
        return 0;
    if (k > k_max_)
        throw std::domain_error("QuotientTower::dim: degree above configured bound");
    return dims_[k];
}

std::vector<int> QuotientTower::reduce_word(const Word& w) const
{
    int d = word_degree(w, p_);
    if (d > k_max_)
        throw std::domain_error("QuotientTower::reduce_word: degree above configured bound");
    std::vector<int> vec{1};
    int deg = 0;
    for (size_t t = w.size(); t-- > 0;) {
        vec = apply_left(w[t], deg, vec);
        deg += atom_degree(w[t], p_);
    }
    return vec;
}

std::vector<int> QuotientTower::reduce(const std::vector<std::pair<int, Word>>& terms) const
{
    if (terms.empty())
        return {};
    int d = word_degree(terms.front().second, p_);
    std::vector<int> acc(static_cast<size_t>(dims_.at(d)), 0);
    for (const auto& [c, w] : terms) {
        if (word_degree(w, p_) != d)
            throw std::invalid_argument("QuotientTower::reduce: mixed degrees");
        auto v = reduce_word(w);
        for (size_t i = 0; i < acc.size(); ++i)
            acc[i] = ((acc[i] + c * v[i]) % p_ + p_) % p_;
    }
    return acc;
}

int max_degree_cap(int p)
{
    if (const char* env = std::getenv("STEENROD_MAX_DEG")) {
        int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    switch (p) {
        case 2:
            return 20;
        case 3:
            return 40;
        case 5:
            return 60;
        default:
            return 30;
    }
}

long long dim_oracle(int p, int k)
{
    if (k < 0)
        throw std::invalid_argument("dim_oracle: negative degree");
    if (k > max_degree_cap(p))
        throw std::domain_error("dim_oracle: degree above configured bound (STEENROD_MAX_DEG)");
    QuotientTower tower(p, k);
    return tower.dim(k);
}

VerifyReport verify_basis(int p, int k_max, linalg::Exec exec)
{
    VerifyReport rep;
    rep.p = p;
    rep.k_max = k_max;
    QuotientTower tower(p, k_max, exec);
    steenrod::Algebra core(p);

    rep.dims.resize(k_max + 1);
    for (int k = 0; k <= k_max; ++k)
        rep.dims[k] = tower.dim(k);

    for (int k = 0; k <= k_max; ++k) {
        auto adm = core.basis(k);
        long long core_dim = static_cast<long long>(adm.size());
        if (core_dim != rep.dims[k]) {
            rep.mismatches.push_back({k, "dimension", core_dim, rep.dims[k]});
            continue;
        }
        linalg::FpMat img(p, adm.size(), static_cast<size_t>(rep.dims[k]));
        for (size_t i = 0; i < adm.size(); ++i) {
            auto v = tower.reduce_word(steenrod::to_atoms(adm[i], p));
            for (size_t j = 0; j < v.size(); ++j)
                img.set(i, j, static_cast<uint8_t>(v[j]));
        }
        long long r = static_cast<long long>(linalg::rank(std::move(img), exec));
        if (r != core_dim)
            rep.mismatches.push_back({k, "admissible images dependent", core_dim, r});
    }
    return rep;
}

}  // namespace adem::oracle
