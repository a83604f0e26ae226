#include "adem/milnor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace adem::milnor {

void DualMonomial::trim()
{
    while (!exps.empty() && exps.back() == 0)
        exps.pop_back();
}

bool DualMonomial::is_unit() const
{
    for (long long e : exps)
        if (e)
            return false;
    return true;
}

int DualMonomial::max_index() const
{
    for (size_t i = exps.size(); i-- > 0;)
        if (exps[i])
            return static_cast<int>(i) + 1;
    return 0;
}

bool DualMonomial::operator==(const DualMonomial& o) const
{
    DualMonomial a = *this, b = o;
    a.trim();
    b.trim();
    return a.exps == b.exps;
}

bool DualMonomial::operator<(const DualMonomial& o) const
{
    // compare from the top generator down, so b2 > b1 > 1
    size_t n = std::max(exps.size(), o.exps.size());
    for (size_t i = n; i-- > 0;) {
        long long a = i < exps.size() ? exps[i] : 0;
        long long b = i < o.exps.size() ? o.exps[i] : 0;
        if (a != b)
            return a < b;
    }
    return false;
}

DualMonomial dual_unit()
{
    return {};
}

DualMonomial dual_gen(int k, long long e)
{
    if (k < 1)
        throw std::invalid_argument("dual_gen: index must be >= 1");
    DualMonomial m;
    m.exps.assign(k, 0);
    m.exps[k - 1] = e;
    return m;
}

DualMonomial dual_mul(const DualMonomial& a, const DualMonomial& b)
{
    DualMonomial m;
    m.exps.assign(std::max(a.exps.size(), b.exps.size()), 0);
    for (size_t i = 0; i < a.exps.size(); ++i)
        m.exps[i] += a.exps[i];
    for (size_t i = 0; i < b.exps.size(); ++i)
        m.exps[i] += b.exps[i];
    m.trim();
    return m;
}

void TensorElement::add_term(std::vector<DualMonomial> factors, int coeff)
{
    if (static_cast<int>(factors.size()) != arity_)
        throw std::invalid_argument("TensorElement: arity mismatch");
    coeff = ((coeff % p_) + p_) % p_;
    if (!coeff)
        return;
    for (auto& f : factors)
        f.trim();
    // canonical term order: leading factors descending, so b_k (x) 1 prints
    // before 1 (x) b_k
    auto less = [](const TensorTerm& t, const std::vector<DualMonomial>& key) {
        return std::lexicographical_compare(key.begin(), key.end(), t.factors.begin(),
                                            t.factors.end());
    };
    auto it = std::lower_bound(terms_.begin(), terms_.end(), factors, less);
    if (it != terms_.end() && it->factors == factors) {
        it->coeff = (it->coeff + coeff) % p_;
        if (!it->coeff)
            terms_.erase(it);
    } else {
        terms_.insert(it, TensorTerm{std::move(factors), coeff});
    }
}

bool TensorElement::operator==(const TensorElement& o) const
{
    if (p_ != o.p_ || arity_ != o.arity_ || terms_.size() != o.terms_.size())
        return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || !(terms_[i].factors == o.terms_[i].factors))
            return false;
    return true;
}

TensorElement TensorElement::unit(int p, int arity)
{
    TensorElement e(p, arity);
    e.add_term(std::vector<DualMonomial>(arity), 1);
    return e;
}

TensorElement add(const TensorElement& a, const TensorElement& b)
{
    TensorElement r = a;
    for (const TensorTerm& t : b.terms())
        r.add_term(t.factors, t.coeff);
    return r;
}

TensorElement mul(const TensorElement& a, const TensorElement& b)
{
    if (a.p() != b.p() || a.arity() != b.arity())
        throw std::invalid_argument("TensorElement mul: shape mismatch");
    TensorElement r(a.p(), a.arity());
    for (const TensorTerm& ta : a.terms()) {
        for (const TensorTerm& tb : b.terms()) {
            std::vector<DualMonomial> f(a.arity());
            for (int i = 0; i < a.arity(); ++i)
                f[i] = dual_mul(ta.factors[i], tb.factors[i]);
            r.add_term(std::move(f), ta.coeff * tb.coeff);
        }
    }
    return r;
}

TensorElement power(const TensorElement& a, long long e)
{
    TensorElement r = TensorElement::unit(a.p(), a.arity());
    TensorElement base = a;
    while (e) {
        if (e & 1)
            r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

TensorElement coproduct_gen(int k, int p, int K)
{
    if (k < 1 || k > K)
        throw std::out_of_range("coproduct_gen: index outside 1..K");
    TensorElement out(p, 2);
    long long pl = 1;  // p^l, exact
    for (int l = 0; l <= k; ++l) {
        DualMonomial left = l == 0 ? dual_unit() : dual_gen(l);
        DualMonomial right = l == k ? dual_unit() : dual_gen(k - l, pl);
        out.add_term({left, right}, 1);
        if (l < k) {
            if (pl > (1LL << 62) / p)
                throw std::overflow_error("coproduct_gen: p^l exceeds 64-bit range");
            pl *= p;
        }
    }
    return out;
}

TensorElement coproduct(const DualMonomial& m, int p, int K)
{
    if (m.max_index() > K)
        throw std::out_of_range("coproduct: monomial outside the truncation");
    TensorElement out = TensorElement::unit(p, 2);
    for (size_t i = 0; i < m.exps.size(); ++i) {
        if (!m.exps[i])
            continue;
        out = mul(out, power(coproduct_gen(static_cast<int>(i) + 1, p, K), m.exps[i]));
    }
    return out;
}

namespace {

TensorElement expand_factor(const TensorElement& e, int p, int K, int which)
{
    TensorElement out(p, 3);
    for (const TensorTerm& t : e.terms()) {
        TensorElement inner = coproduct(t.factors[which], p, K);
        for (const TensorTerm& it : inner.terms()) {
            std::vector<DualMonomial> f(3);
            if (which == 0) {
                f[0] = it.factors[0];
                f[1] = it.factors[1];
                f[2] = t.factors[1];
            } else {
                f[0] = t.factors[0];
                f[1] = it.factors[0];
                f[2] = it.factors[1];
            }
            out.add_term(std::move(f), t.coeff * it.coeff);
        }
    }
    return out;
}

}  // namespace

TensorElement expand_left(const TensorElement& e, int p, int K)
{
    return expand_factor(e, p, K, 0);
}

TensorElement expand_right(const TensorElement& e, int p, int K)
{
    return expand_factor(e, p, K, 1);
}

CoassocReport check_coassociativity(int p, int K)
{
    CoassocReport rep;
    rep.p = p;
    rep.K = K;
    rep.pass = true;
    for (int k = 1; k <= K; ++k) {
        TensorElement d = coproduct_gen(k, p, K);
        TensorElement lhs = expand_left(d, p, K);
        TensorElement rhs = expand_right(d, p, K);
        if (!(lhs == rhs)) {
            rep.pass = false;
            rep.detail = "coassociativity fails at b" + std::to_string(k);
            return rep;
        }
        // counit laws: (eps (x) id) Delta = id = (id (x) eps) Delta
        TensorElement left_counit(p, 1), right_counit(p, 1), id(p, 1);
        id.add_term({dual_gen(k)}, 1);
        for (const TensorTerm& t : d.terms()) {
            if (t.factors[0].is_unit())
                left_counit.add_term({t.factors[1]}, t.coeff);
            if (t.factors[1].is_unit())
                right_counit.add_term({t.factors[0]}, t.coeff);
        }
        if (!(left_counit == id) || !(right_counit == id)) {
            rep.pass = false;
            rep.detail = "counit law fails at b" + std::to_string(k);
            return rep;
        }
    }
    return rep;
}

std::string render(const DualMonomial& m)
{
    if (m.is_unit())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < m.exps.size(); ++i) {
        if (!m.exps[i])
            continue;
        if (!first)
            os << ' ';
        first = false;
        os << 'b' << (i + 1);
        if (m.exps[i] != 1)
            os << '^' << m.exps[i];
    }
    return os.str();
}

std::string render(const TensorElement& e)
{
    if (e.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const TensorTerm& t : e.terms()) {
        if (!first)
            os << " + ";
        first = false;
        if (t.coeff != 1)
            os << t.coeff << '*';
        for (size_t i = 0; i < t.factors.size(); ++i) {
            if (i)
                os << "⊗";
            os << render(t.factors[i]);
        }
    }
    return os.str();
}

}  // namespace adem::milnor
