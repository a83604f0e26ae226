#include "adem/steenrod.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace adem::steenrod {

namespace {

constexpr int kDepthGuard = 1 << 20;

bool valid_shape(const Monomial& m, int p)
{
    if (p == 2)
        return m.eps.empty();
    return m.eps.size() == m.exps.size() + 1 || (m.exps.empty() && m.eps.size() <= 1);
}

}  // namespace

bool Monomial::is_unit() const
{
    if (!exps.empty())
        return false;
    for (auto e : eps)
        if (e)
            return false;
    return true;
}

Monomial unit_monomial(int p)
{
    Monomial m;
    if (p > 2)
        m.eps = {0};
    return m;
}

int degree(const Monomial& m, int p)
{
    long long d = 0;
    for (int s : m.exps)
        d += p == 2 ? s : 2LL * s * (p - 1);
    for (auto e : m.eps)
        d += e;
    return static_cast<int>(d);
}

bool is_admissible(const Monomial& m, int p)
{
    for (size_t i = 0; i + 1 < m.exps.size(); ++i) {
        int bit = m.eps.empty() ? 0 : m.eps[i + 1];
        if (m.exps[i] < p * m.exps[i + 1] + bit)
            return false;
    }
    return true;
}

bool mono_less(const Monomial& a, const Monomial& b, int p)
{
    int da = degree(a, p), db = degree(b, p);
    if (da != db)
        return da < db;
    if (a.exps != b.exps)
        return std::lexicographical_compare(b.exps.begin(), b.exps.end(), a.exps.begin(), a.exps.end());
    return std::lexicographical_compare(a.eps.begin(), a.eps.end(), b.eps.begin(), b.eps.end());
}

std::vector<int> to_atoms(const Monomial& m, int p)
{
    std::vector<int> atoms;
    if (p == 2) {
        atoms = m.exps;
        return atoms;
    }
    for (size_t i = 0; i < m.exps.size(); ++i) {
        if (!m.eps.empty() && m.eps[i])
            atoms.push_back(0);
        atoms.push_back(m.exps[i]);
    }
    if (!m.eps.empty() && m.eps.back())
        atoms.push_back(0);
    return atoms;
}

std::optional<Monomial> from_atoms(const std::vector<int>& atoms, int p)
{
    Monomial m;
    if (p == 2) {
        m.exps = atoms;
        return m;
    }
    m.eps.push_back(0);
    for (int a : atoms) {
        if (a == 0) {
            if (m.eps.back())
                return std::nullopt;  // beta*beta = 0
            m.eps.back() = 1;
        } else {
            m.exps.push_back(a);
            m.eps.push_back(0);
        }
    }
    return m;
}

std::optional<Monomial> concat(const Monomial& a, const Monomial& b, int p)
{
    if (p == 2) {
        Monomial m;
        m.exps = a.exps;
        m.exps.insert(m.exps.end(), b.exps.begin(), b.exps.end());
        return m;
    }
    std::vector<int> atoms = to_atoms(a, p);
    std::vector<int> tail = to_atoms(b, p);
    atoms.insert(atoms.end(), tail.begin(), tail.end());
    return from_atoms(atoms, p);
}

size_t MonomialHash::operator()(const Monomial& m) const
{
    size_t h = 1469598103934665603ull;
    auto mix = [&h](size_t v) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (int s : m.exps)
        mix(static_cast<size_t>(s));
    mix(0xabcdu);
    for (auto e : m.eps)
        mix(e);
    return h;
}

Element Element::monomial(int p, Monomial m, int coeff)
{
    Element e(p);
    e.add_term(m, coeff);
    return e;
}

int Element::coeff(const Monomial& m) const
{
    for (const Term& t : terms_)
        if (t.mon == m)
            return t.coeff;
    return 0;
}

std::optional<int> Element::homogeneous_degree() const
{
    if (terms_.empty())
        return 0;
    int d = degree(terms_.front().mon, p_);
    for (const Term& t : terms_)
        if (degree(t.mon, p_) != d)
            return std::nullopt;
    return d;
}

void Element::add_term(const Monomial& m, int coeff)
{
    coeff %= p_;
    if (coeff < 0)
        coeff += p_;
    if (coeff == 0)
        return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [this](const Term& t, const Monomial& key) {
        return mono_less(t.mon, key, p_);
    });
    if (it != terms_.end() && it->mon == m) {
        it->coeff = (it->coeff + coeff) % p_;
        if (it->coeff == 0)
            terms_.erase(it);
    } else {
        terms_.insert(it, Term{m, coeff});
    }
}

bool Element::terms_same(const Element& o) const
{
    if (terms_.size() != o.terms_.size())
        return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || !(terms_[i].mon == o.terms_[i].mon))
            return false;
    return true;
}

Element add(const Element& a, const Element& b)
{
    if (a.p() != b.p())
        throw std::invalid_argument("Element add: prime mismatch");
    Element r = a;
    for (const Term& t : b.terms())
        r.add_term(t.mon, t.coeff);
    return r;
}

Element sub(const Element& a, const Element& b)
{
    if (a.p() != b.p())
        throw std::invalid_argument("Element sub: prime mismatch");
    Element r = a;
    for (const Term& t : b.terms())
        r.add_term(t.mon, -t.coeff);
    return r;
}

Element scale(int c, const Element& a)
{
    Element r(a.p());
    for (const Term& t : a.terms())
        r.add_term(t.mon, t.coeff * (((c % a.p()) + a.p()) % a.p()));
    return r;
}

std::vector<std::pair<int, std::vector<int>>> adem_rhs_pp(int a, int b, const Fp& fp, int unit_scale)
{
    const int p = fp.p();
    std::vector<std::pair<int, std::vector<int>>> out;
    for (int t = 0; t <= a / p; ++t) {
        int c;
        if (p == 2) {
            c = fp.binom(b - t - 1, a - 2 * t);
        } else {
            c = fp.binom(static_cast<long long>(p - 1) * (b - t) - 1, a - static_cast<long long>(p) * t);
            if ((a + t) % 2)
                c = fp.neg(c);
        }
        if (!c)
            continue;
        if (t == 0) {
            c = fp.mul(c, unit_scale);
            if (c)
                out.push_back({c, {a + b}});
        } else {
            out.push_back({c, {a + b - t, t}});
        }
    }
    return out;
}

std::vector<std::pair<int, std::vector<int>>> adem_rhs_pbp(int a, int b, const Fp& fp, int unit_scale)
{
    const int p = fp.p();
    std::vector<std::pair<int, std::vector<int>>> out;
    for (int t = 0; t <= a / p; ++t) {
        int c = fp.binom(static_cast<long long>(p - 1) * (b - t), a - static_cast<long long>(p) * t);
        if ((a + t) % 2)
            c = fp.neg(c);
        if (!c)
            continue;
        if (t == 0) {
            c = fp.mul(c, unit_scale);
            if (c)
                out.push_back({c, {0, a + b}});
        } else {
            out.push_back({c, {0, a + b - t, t}});
        }
    }
    for (int t = 0; t <= a / p; ++t) {
        // upper bound [(a-1)/p] is enforced by the vanishing binomial
        int c = fp.binom(static_cast<long long>(p - 1) * (b - t) - 1, a - static_cast<long long>(p) * t - 1);
        if ((a + t) % 2)
            c = fp.neg(c);
        c = fp.neg(c);
        if (!c)
            continue;
        if (t == 0) {
            c = fp.mul(c, unit_scale);
            if (c)
                out.push_back({c, {a + b, 0}});
        } else {
            out.push_back({c, {a + b - t, 0, t}});
        }
    }
    return out;
}

Algebra::Algebra(int p, int unit_scale, RewriteOrder order)
    : p_(p), unit_scale_(((unit_scale % p) + p) % p), order_(order), fp_(p)
{
}

namespace {

struct Redex {
    int pos;      // atom index of the left P
    bool bockstein;
};

std::optional<Redex> find_redex(const std::vector<int>& atoms, int p, RewriteOrder order)
{
    std::optional<Redex> found;
    const int n = static_cast<int>(atoms.size());
    for (int i = 0; i < n; ++i) {
        if (atoms[i] == 0)
            continue;
        std::optional<Redex> here;
        if (i + 1 < n && atoms[i + 1] > 0) {
            if (atoms[i] < p * atoms[i + 1])
                here = Redex{i, false};
        } else if (i + 2 < n && atoms[i + 1] == 0 && atoms[i + 2] > 0) {
            if (atoms[i] <= p * atoms[i + 2])
                here = Redex{i, true};
        }
        if (here) {
            found = here;
            if (order == RewriteOrder::Leftmost)
                return found;
        }
    }
    return found;
}

std::optional<std::vector<int>> splice(const std::vector<int>& atoms, int from, int count,
                                       const std::vector<int>& repl)
{
    std::vector<int> out;
    out.reserve(atoms.size() + repl.size());
    out.insert(out.end(), atoms.begin(), atoms.begin() + from);
    for (int a : repl) {
        if (a == 0 && !out.empty() && out.back() == 0)
            return std::nullopt;
        out.push_back(a);
    }
    for (size_t i = from + count; i < atoms.size(); ++i) {
        if (atoms[i] == 0 && !out.empty() && out.back() == 0)
            return std::nullopt;
        out.push_back(atoms[i]);
    }
    return out;
}

}  // namespace

Element Algebra::reduce_atoms(const std::vector<int>& atoms, int depth) const
{
    if (depth > kDepthGuard)
        throw std::runtime_error("internal error: Adem rewriting depth guard hit");

    Monomial key = *from_atoms(atoms, p_);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;
    }

    Element result(p_);
    auto redex = find_redex(atoms, p_, order_);
    if (!redex) {
        result.add_term(key, 1);
    } else {
        int a = atoms[redex->pos];
        int b = atoms[redex->pos + (redex->bockstein ? 2 : 1)];
        auto rhs = redex->bockstein ? adem_rhs_pbp(a, b, fp_, unit_scale_)
                                    : adem_rhs_pp(a, b, fp_, unit_scale_);
        int span = redex->bockstein ? 3 : 2;
        for (const auto& [c, repl] : rhs) {
            auto next = splice(atoms, redex->pos, span, repl);
            if (!next)
                continue;
            Element red = reduce_atoms(*next, depth + 1);
            for (const Term& t : red.terms())
                result.add_term(t.mon, fp_.mul(c, t.coeff));
        }
    }

    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(std::move(key), result);
    return result;
}

Element Algebra::reduce(const Monomial& m) const
{
    if (!valid_shape(m, p_))
        throw std::invalid_argument("Monomial shape does not match the prime");
    return reduce_atoms(to_atoms(m, p_), 0);
}

Element Algebra::reduce(const Element& e) const
{
    if (e.p() != p_)
        throw std::invalid_argument("reduce: prime mismatch");
    Element out(p_);
    for (const Term& t : e.terms()) {
        Element red = reduce(t.mon);
        for (const Term& rt : red.terms())
            out.add_term(rt.mon, fp_.mul(t.coeff, rt.coeff));
    }
    return out;
}

Element Algebra::mul(const Element& a, const Element& b) const
{
    if (a.p() != p_ || b.p() != p_)
        throw std::invalid_argument("mul: prime mismatch");
    Element out(p_);
    for (const Term& ta : a.terms()) {
        for (const Term& tb : b.terms()) {
            auto m = concat(ta.mon, tb.mon, p_);
            if (!m)
                continue;
            Element red = reduce(*m);
            int c = fp_.mul(ta.coeff, tb.coeff);
            for (const Term& t : red.terms())
                out.add_term(t.mon, fp_.mul(c, t.coeff));
        }
    }
    return out;
}

Element Algebra::power(const Element& a, long long n) const
{
    Element out = Element::unit(p_);
    for (long long i = 0; i < n; ++i)
        out = mul(out, a);
    return out;
}

Element Algebra::commutator(const Element& a, const Element& b) const
{
    return sub(mul(a, b), mul(b, a));
}

Element Algebra::super_bracket(const Element& a, const Element& b) const
{
    if (a.is_zero() || b.is_zero())
        return Element::zero(p_);
    auto da = a.homogeneous_degree(), db = b.homogeneous_degree();
    if (!da || !db)
        throw std::invalid_argument("super_bracket: arguments must be homogeneous");
    if ((*da % 2) && (*db % 2))
        return add(mul(a, b), mul(b, a));
    return sub(mul(a, b), mul(b, a));
}

std::vector<Monomial> Algebra::basis(int k) const
{
    std::vector<Monomial> out;
    if (k < 0)
        return out;
    if (k == 0) {
        out.push_back(unit_monomial(p_));
        return out;
    }
    if (p_ == 2) {
        std::vector<int> acc;
        auto rec = [&](auto&& self, int dleft, int cap) -> void {
            for (int s = std::min(cap, dleft); s >= 1; --s) {
                acc.push_back(s);
                if (s == dleft)
                    out.push_back(Monomial{acc, {}});
                else
                    self(self, dleft - s, s / 2);
                acc.pop_back();
            }
        };
        rec(rec, k, k);
    } else {
        const int q = 2 * (p_ - 1);
        std::vector<int> atoms;
        // prev_s < 0 marks the leading position (no admissibility cap yet)
        auto rec = [&](auto&& self, int dleft, int prev_s) -> void {
            if (dleft == 0) {
                out.push_back(*from_atoms(atoms, p_));
                return;
            }
            bool after_beta = !atoms.empty() && atoms.back() == 0;
            if (!after_beta) {
                atoms.push_back(0);
                if (dleft == 1)
                    out.push_back(*from_atoms(atoms, p_));
                int smax = prev_s >= 0 ? (prev_s - 1) / p_ : (dleft - 1) / q;
                for (int s = 1; s <= smax; ++s) {
                    if (static_cast<long long>(q) * s <= dleft - 1) {
                        atoms.push_back(s);
                        self(self, dleft - 1 - q * s, s);
                        atoms.pop_back();
                    }
                }
                atoms.pop_back();
            }
            int smax = prev_s >= 0 ? prev_s / p_ : dleft / q;
            for (int s = 1; s <= smax; ++s) {
                if (static_cast<long long>(q) * s <= dleft) {
                    atoms.push_back(s);
                    self(self, dleft - q * s, s);
                    atoms.pop_back();
                }
            }
        };
        rec(rec, k, -1);
    }
    std::sort(out.begin(), out.end(), [this](const Monomial& a, const Monomial& b) {
        return mono_less(a, b, p_);
    });
    return out;
}

long long Algebra::dim(int k) const
{
    return static_cast<long long>(basis(k).size());
}

void Algebra::clear_cache() const
{
    std::lock_guard<std::mutex> lock(mu_);
    cache_.clear();
}

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;

    void skip_ws()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool done()
    {
        skip_ws();
        return pos >= text.size();
    }
    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    bool starts_with(std::string_view s) const { return text.substr(pos, s.size()) == s; }
    long long digits()
    {
        size_t start = pos;
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > (1LL << 40))
                throw ParseError("number too large", start);
            ++pos;
        }
        if (pos == start)
            throw ParseError("expected digits", start);
        return v;
    }
};

// Parses one generator; returns atom (0 = beta) or nullopt at a term boundary.
std::optional<int> parse_gen(Cursor& cur, int p)
{
    cur.skip_ws();
    if (cur.pos >= cur.text.size() || cur.peek() == '+')
        return std::nullopt;
    size_t at = cur.pos;
    if (cur.starts_with("Sq")) {
        if (p != 2)
            throw ParseError("'Sq' generators require p = 2", at);
        cur.pos += 2;
        long long i = cur.digits();
        if (i < 1)
            throw ParseError("generator exponent must be positive", at);
        return static_cast<int>(i);
    }
    if (cur.peek() == 'P') {
        if (p == 2)
            throw ParseError("'P' generators require p > 2 (use Sq at p = 2)", at);
        ++cur.pos;
        long long i = cur.digits();
        if (i < 1)
            throw ParseError("generator exponent must be positive", at);
        return static_cast<int>(i);
    }
    if (cur.peek() == 'b') {
        if (p == 2)
            throw ParseError("Bockstein 'b' requires p > 2", at);
        ++cur.pos;
        return 0;
    }
    throw ParseError("expected a generator", at);
}

}  // namespace

Element parse_expr(std::string_view text, int p)
{
    if (!is_prime(p))
        throw std::invalid_argument("parse_expr: p must be prime");
    Cursor cur{text};
    Element out(p);

    cur.skip_ws();
    {
        size_t save = cur.pos;
        if (cur.peek() == '0') {
            ++cur.pos;
            if (cur.done())
                return out;  // the zero element
            cur.pos = save;
        }
    }

    if (cur.done())
        throw ParseError("empty expression", cur.pos);

    bool more = true;
    while (more) {
        cur.skip_ws();
        size_t term_at = cur.pos;
        long long coeff = 1;
        bool unit_word = false;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            long long v = cur.digits();
            size_t after = cur.pos;
            cur.skip_ws();
            if (cur.peek() == '*') {
                ++cur.pos;
                coeff = v;
            } else if (v == 1) {
                cur.pos = after;
                unit_word = true;
            } else {
                throw ParseError("a bare number must be 1 (or use coeff*word)", term_at);
            }
        }

        std::vector<int> atoms;
        if (!unit_word) {
            cur.skip_ws();
            if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
                size_t at = cur.pos;
                long long v = cur.digits();
                if (v != 1)
                    throw ParseError("expected a word", at);
            } else {
                auto first = parse_gen(cur, p);
                if (!first)
                    throw ParseError("expected a word", cur.pos);
                atoms.push_back(*first);
                while (true) {
                    size_t save = cur.pos;
                    cur.skip_ws();
                    if (cur.pos >= cur.text.size() || cur.peek() == '+') {
                        cur.pos = save;
                        break;
                    }
                    auto g = parse_gen(cur, p);
                    if (!g) {
                        cur.pos = save;
                        break;
                    }
                    atoms.push_back(*g);
                }
            }
        }

        auto mono = from_atoms(atoms, p);
        if (mono)
            out.add_term(*mono, static_cast<int>(coeff % p));
        // beta*beta inside a word contributes zero but is well-formed

        cur.skip_ws();
        if (cur.pos < cur.text.size()) {
            if (cur.peek() != '+')
                throw ParseError("expected '+' between terms", cur.pos);
            ++cur.pos;
            if (cur.done())
                throw ParseError("trailing '+'", cur.pos);
        } else {
            more = false;
        }
    }
    return out;
}

std::string render(const Monomial& m, int p)
{
    if (m.is_unit())
        return "1";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& s) {
        if (!first)
            os << ' ';
        os << s;
        first = false;
    };
    if (p == 2) {
        for (int s : m.exps)
            emit("Sq" + std::to_string(s));
    } else {
        for (size_t i = 0; i < m.exps.size(); ++i) {
            if (!m.eps.empty() && m.eps[i])
                emit("b");
            emit("P" + std::to_string(m.exps[i]));
        }
        if (!m.eps.empty() && m.eps.back())
            emit("b");
    }
    return os.str();
}

std::string render(const Element& e)
{
    if (e.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : e.terms()) {
        if (!first)
            os << " + ";
        first = false;
        if (t.coeff != 1)
            os << t.coeff << '*';
        os << render(t.mon, e.p());
    }
    return os.str();
}

}  // namespace adem::steenrod
