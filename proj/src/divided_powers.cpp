#include "adem/divided_powers.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace adem::dpow {

std::optional<long long> Heights::bound(int i) const
{
    if (is_odd_var(i))
        return 2;
    int h = N[i];
    if (h == kInfiniteHeight)
        return std::nullopt;
    if (h < 1)
        throw std::invalid_argument("Heights: heights must be >= 1 (or infinite)");
    long long b = 1;
    for (int t = 0; t < h; ++t) {
        if (b > (1LL << 62) / p)
            throw std::overflow_error("Heights::bound: p^N exceeds 64-bit range");
        b *= p;
    }
    return b;
}

long long DPMonomial::total() const
{
    long long t = 0;
    for (long long e : exps)
        t += e;
    return t;
}

int DPMonomial::parity(const Heights& ctx) const
{
    long long s = 0;
    for (int i = ctx.m; i < ctx.vars(); ++i)
        s += exps[i];
    return static_cast<int>(s & 1);
}

bool dp_less(const DPMonomial& a, const DPMonomial& b)
{
    long long ta = a.total(), tb = b.total();
    if (ta != tb)
        return ta < tb;
    return a.exps < b.exps;
}

DPElement DPElement::monomial(Heights ctx, DPMonomial m, int coeff)
{
    if (static_cast<int>(m.exps.size()) != ctx.vars())
        throw std::invalid_argument("DPMonomial: wrong number of variables");
    DPElement e(std::move(ctx));
    e.add_term(m, coeff);
    return e;
}

DPElement DPElement::unit(Heights ctx)
{
    DPMonomial one;
    one.exps.assign(ctx.vars(), 0);
    return monomial(std::move(ctx), one, 1);
}

int DPElement::coeff(const DPMonomial& m) const
{
    for (const DPTerm& t : terms_)
        if (t.mon == m)
            return t.coeff;
    return 0;
}

void DPElement::add_term(const DPMonomial& m, int coeff)
{
    const int p = ctx_.p;
    coeff = ((coeff % p) + p) % p;
    if (!coeff)
        return;
    for (int i = 0; i < ctx_.vars(); ++i) {
        auto b = ctx_.bound(i);
        if (m.exps[i] < 0 || (b && m.exps[i] >= *b))
            throw std::invalid_argument("DPMonomial: exponent outside height bound");
    }
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const DPTerm& t, const DPMonomial& key) { return dp_less(t.mon, key); });
    if (it != terms_.end() && it->mon == m) {
        it->coeff = (it->coeff + coeff) % p;
        if (!it->coeff)
            terms_.erase(it);
    } else {
        terms_.insert(it, DPTerm{m, coeff});
    }
}

std::optional<int> DPElement::parity() const
{
    if (terms_.empty())
        return 0;
    int par = terms_.front().mon.parity(ctx_);
    for (const DPTerm& t : terms_)
        if (t.mon.parity(ctx_) != par)
            return std::nullopt;
    return par;
}

bool DPElement::operator==(const DPElement& o) const
{
    if (!(ctx_ == o.ctx_) || terms_.size() != o.terms_.size())
        return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || !(terms_[i].mon == o.terms_[i].mon))
            return false;
    return true;
}

namespace {

void require_same_ctx(const DPElement& a, const DPElement& b, const char* where)
{
    if (!(a.ctx() == b.ctx()))
        throw std::invalid_argument(std::string(where) + ": context mismatch");
}

}  // namespace

DPElement add(const DPElement& a, const DPElement& b)
{
    require_same_ctx(a, b, "dpow add");
    DPElement r = a;
    for (const DPTerm& t : b.terms())
        r.add_term(t.mon, t.coeff);
    return r;
}

DPElement sub(const DPElement& a, const DPElement& b)
{
    require_same_ctx(a, b, "dpow sub");
    DPElement r = a;
    for (const DPTerm& t : b.terms())
        r.add_term(t.mon, -t.coeff);
    return r;
}

DPElement scale(int c, const DPElement& a)
{
    DPElement r(a.ctx());
    for (const DPTerm& t : a.terms())
        r.add_term(t.mon, t.coeff * c);
    return r;
}

DPElement dp_mul(const DPElement& a, const DPElement& b)
{
    require_same_ctx(a, b, "dp_mul");
    const Heights& ctx = a.ctx();
    Fp fp(ctx.p);
    DPElement out(ctx);
    for (const DPTerm& ta : a.terms()) {
        for (const DPTerm& tb : b.terms()) {
            int c = fp.mul(ta.coeff, tb.coeff);
            bool dead = false;
            int sign = 0;
            if (ctx.p > 2) {
                // Koszul sign: each odd symbol of b moves left past the
                // higher-indexed odd symbols of a
                for (int j = ctx.m; j < ctx.vars() && !dead; ++j) {
                    if (!tb.mon.exps[j])
                        continue;
                    if (ta.mon.exps[j]) {
                        dead = true;  // odd square
                        break;
                    }
                    for (int i = j + 1; i < ctx.vars(); ++i)
                        if (ta.mon.exps[i])
                            sign ^= 1;
                }
            }
            if (dead)
                continue;
            DPMonomial m;
            m.exps.resize(ctx.vars());
            bool overflowed_even = false;
            for (int i = 0; i < ctx.vars() && c; ++i) {
                long long r = ta.mon.exps[i], s = tb.mon.exps[i];
                m.exps[i] = r + s;
                if (!ctx.is_odd_var(i) || ctx.p == 2) {
                    c = fp.mul(c, fp.binom(r + s, r));
                    auto bound = ctx.bound(i);
                    if (bound && r + s >= *bound) {
                        overflowed_even = true;
                        // Kummer: the carry in base p forces p | C(r+s, r)
                        if (c != 0)
                            throw std::logic_error("dp_mul: overflow term with nonzero binomial");
                    }
                }
            }
            (void)overflowed_even;
            if (!c)
                continue;
            if (sign)
                c = fp.neg(c);
            out.add_term(m, c);
        }
    }
    return out;
}

DPElement partial(int var, const DPElement& f)
{
    const Heights& ctx = f.ctx();
    if (var < 0 || var >= ctx.vars())
        throw std::invalid_argument("partial: variable index out of range");
    DPElement out(ctx);
    for (const DPTerm& t : f.terms()) {
        if (!t.mon.exps[var])
            continue;
        int c = t.coeff;
        if (ctx.p > 2 && ctx.is_odd_var(var)) {
            int sign = 0;
            for (int j = ctx.m; j < var; ++j)
                if (t.mon.exps[j])
                    sign ^= 1;
            if (sign)
                c = ctx.p - c;
        }
        DPMonomial m = t.mon;
        --m.exps[var];
        out.add_term(m, c);
    }
    return out;
}

Derivation make_derivation(std::vector<DPElement> coeffs)
{
    if (coeffs.empty())
        throw std::invalid_argument("make_derivation: empty coefficient vector");
    const Heights& ctx = coeffs.front().ctx();
    if (static_cast<int>(coeffs.size()) != ctx.vars())
        throw std::invalid_argument("make_derivation: one coefficient per variable required");
    int parity = 0;
    bool seen = false;
    for (int i = 0; i < ctx.vars(); ++i) {
        if (coeffs[i].is_zero())
            continue;
        auto cp = coeffs[i].parity();
        if (!cp)
            throw std::invalid_argument("make_derivation: mixed-parity coefficient");
        int par = (*cp + (ctx.is_odd_var(i) ? 1 : 0)) & 1;
        if (!seen) {
            parity = par;
            seen = true;
        } else if (par != parity) {
            throw std::invalid_argument("make_derivation: inhomogeneous parity");
        }
    }
    Derivation d{std::move(coeffs), parity};
    validate(d);
    return d;
}

void validate(const Derivation& d)
{
    if (d.coeffs.empty())
        throw std::invalid_argument("Derivation: empty");
    const Heights& ctx = d.coeffs.front().ctx();
    if (static_cast<int>(d.coeffs.size()) != ctx.vars())
        throw std::invalid_argument("Derivation: wrong coefficient count");
    for (int i = 0; i < ctx.vars(); ++i) {
        if (!(d.coeffs[i].ctx() == ctx))
            throw std::invalid_argument("Derivation: mixed contexts");
        if (d.coeffs[i].is_zero())
            continue;
        auto cp = d.coeffs[i].parity();
        if (!cp || ((*cp + (ctx.is_odd_var(i) ? 1 : 0)) & 1) != d.parity)
            throw std::invalid_argument("Derivation: parity inconsistent with coefficients");
    }
}

DPElement apply(const Derivation& d, const DPElement& f)
{
    validate(d);
    const Heights& ctx = d.coeffs.front().ctx();
    if (!(ctx == f.ctx()))
        throw std::invalid_argument("derivation apply: context mismatch");
    DPElement out(ctx);
    for (int i = 0; i < ctx.vars(); ++i) {
        if (d.coeffs[i].is_zero())
            continue;
        out = add(out, dp_mul(d.coeffs[i], partial(i, f)));
    }
    return out;
}

Derivation bracket(const Derivation& a, const Derivation& b)
{
    validate(a);
    validate(b);
    const Heights& ctx = a.coeffs.front().ctx();
    if (!(ctx == b.coeffs.front().ctx()))
        throw std::invalid_argument("derivation bracket: context mismatch");
    bool both_odd = a.parity && b.parity;
    std::vector<DPElement> coeffs;
    coeffs.reserve(ctx.vars());
    for (int i = 0; i < ctx.vars(); ++i) {
        DPElement first = apply(a, b.coeffs[i]);
        DPElement second = apply(b, a.coeffs[i]);
        coeffs.push_back(both_odd ? add(first, second) : sub(first, second));
    }
    Derivation d{std::move(coeffs), (a.parity + b.parity) & 1};
    // the bracket of the zero derivation has no parity evidence; keep as-is
    bool all_zero = true;
    for (const auto& c : d.coeffs)
        if (!c.is_zero())
            all_zero = false;
    if (all_zero)
        d.parity = (a.parity + b.parity) & 1;
    validate(d);
    return d;
}

std::optional<long long> dimension(const Heights& ctx)
{
    long long dim = 1;
    for (int i = 0; i < ctx.m; ++i) {
        auto b = ctx.bound(i);
        if (!b)
            return std::nullopt;
        dim *= *b;
    }
    for (int i = 0; i < ctx.n; ++i)
        dim *= 2;
    return dim;
}

namespace {

struct DCursor {
    std::string_view text;
    size_t pos = 0;
    void skip_ws()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    long long digits()
    {
        size_t start = pos;
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        if (pos == start)
            throw std::invalid_argument("dpow parse: expected digits at position " + std::to_string(start));
        return v;
    }
};

// "u<idx>" or "u<idx>^(<exp>)"; returns (0-based var, exponent)
std::pair<int, long long> parse_factor(DCursor& cur, const Heights& ctx)
{
    if (cur.peek() != 'u')
        throw std::invalid_argument("dpow parse: expected a variable at position " + std::to_string(cur.pos));
    ++cur.pos;
    long long idx = cur.digits();
    if (idx < 1 || idx > ctx.vars())
        throw std::invalid_argument("dpow parse: variable index out of range");
    long long e = 1;
    if (cur.peek() == '^') {
        ++cur.pos;
        if (cur.peek() != '(')
            throw std::invalid_argument("dpow parse: expected '(' after '^'");
        ++cur.pos;
        e = cur.digits();
        if (cur.peek() != ')')
            throw std::invalid_argument("dpow parse: expected ')'");
        ++cur.pos;
    }
    return {static_cast<int>(idx) - 1, e};
}

}  // namespace

DPElement parse_dp_element(std::string_view text, const Heights& ctx)
{
    DCursor cur{text};
    DPElement out(ctx);
    cur.skip_ws();
    if (cur.peek() == '0') {
        ++cur.pos;
        cur.skip_ws();
        if (cur.pos >= cur.text.size())
            return out;
        throw std::invalid_argument("dpow parse: junk after 0");
    }
    while (true) {
        cur.skip_ws();
        long long coeff = 1;
        bool have_word = true;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coeff = cur.digits();
            cur.skip_ws();
            if (cur.peek() == '*') {
                ++cur.pos;
                cur.skip_ws();
            } else if (coeff == 1) {
                have_word = cur.peek() == 'u';
            } else {
                throw std::invalid_argument("dpow parse: bare number must be 1");
            }
        }
        DPMonomial m;
        m.exps.assign(ctx.vars(), 0);
        if (have_word && cur.peek() == 'u') {
            while (cur.peek() == 'u') {
                auto [var, e] = parse_factor(cur, ctx);
                m.exps[var] += e;
                cur.skip_ws();
            }
        }
        out.add_term(m, static_cast<int>(coeff % ctx.p));
        cur.skip_ws();
        if (cur.pos >= cur.text.size())
            break;
        if (cur.peek() != '+')
            throw std::invalid_argument("dpow parse: expected '+' at position " + std::to_string(cur.pos));
        ++cur.pos;
    }
    return out;
}

Derivation parse_derivation(std::string_view text, const Heights& ctx)
{
    DCursor cur{text};
    std::vector<DPElement> coeffs(ctx.vars(), DPElement::zero(ctx));
    cur.skip_ws();
    if (cur.peek() == '0' && cur.pos + 1 >= cur.text.size())
        return make_derivation(std::move(coeffs));
    while (true) {
        cur.skip_ws();
        long long coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coeff = cur.digits();
            cur.skip_ws();
            if (cur.peek() == '*')
                ++cur.pos;
            else
                throw std::invalid_argument("dpow parse: expected '*' after coefficient");
            cur.skip_ws();
        }
        DPMonomial m;
        m.exps.assign(ctx.vars(), 0);
        while (cur.peek() == 'u') {
            auto [var, e] = parse_factor(cur, ctx);
            m.exps[var] += e;
            cur.skip_ws();
        }
        if (cur.peek() != 'd')
            throw std::invalid_argument("dpow parse: derivation term needs d<i> at position " +
                                        std::to_string(cur.pos));
        ++cur.pos;
        long long idx = cur.digits();
        if (idx < 1 || idx > ctx.vars())
            throw std::invalid_argument("dpow parse: derivation index out of range");
        coeffs[idx - 1].add_term(m, static_cast<int>(coeff % ctx.p));
        cur.skip_ws();
        if (cur.pos >= cur.text.size())
            break;
        if (cur.peek() != '+')
            throw std::invalid_argument("dpow parse: expected '+' between derivation terms");
        ++cur.pos;
    }
    return make_derivation(std::move(coeffs));
}

std::string render(const DPMonomial& m, const Heights& ctx)
{
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < ctx.vars(); ++i) {
        if (!m.exps[i])
            continue;
        if (!first)
            os << ' ';
        first = false;
        os << 'u' << (i + 1) << "^(" << m.exps[i] << ')';
    }
    if (first)
        os << '1';
    return os.str();
}

std::string render(const DPElement& e)
{
    if (e.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const DPTerm& t : e.terms()) {
        if (!first)
            os << " + ";
        first = false;
        if (t.coeff != 1)
            os << t.coeff << '*';
        os << render(t.mon, e.ctx());
    }
    return os.str();
}

std::string render(const Derivation& d)
{
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < d.coeffs.size(); ++i) {
        for (const DPTerm& t : d.coeffs[i].terms()) {
            if (!first)
                os << " + ";
            first = false;
            if (t.coeff != 1)
                os << t.coeff << '*';
            if (!t.mon.total())
                os << 'd' << (i + 1);
            else
                os << render(t.mon, d.coeffs[i].ctx()) << " d" << (i + 1);
        }
    }
    if (first)
        os << '0';
    return os.str();
}

}  // namespace adem::dpow
