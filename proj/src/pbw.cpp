#include "adem/pbw.hpp"

#include <algorithm>
#include <stdexcept>

namespace adem::pbw {

using steenrod::Algebra;
using steenrod::Element;
using steenrod::Monomial;

std::string mode_name(Mode m)
{
    return m == Mode::Restricted ? "restricted" : "nonrestricted";
}

Mode mode_from_name(const std::string& s)
{
    if (s == "restricted")
        return Mode::Restricted;
    if (s == "nonrestricted" || s == "non-restricted" || s == "common")
        return Mode::Nonrestricted;
    throw std::invalid_argument("unknown mode: " + s + " (expected restricted|nonrestricted)");
}

namespace {

void require_prefix(const DimProfile& profile, int k)
{
    if (profile.k_max() < k - 1)
        throw std::invalid_argument("monomial_count: profile gap, need dims through degree " +
                                    std::to_string(k - 1));
}

// multiplies acc (truncated at degree k) by the generating function of one
// letter of degree j with multiplicity cap, `copies` times
void fold_letter(std::vector<long long>& acc, int k, int j, long long copies, long long cap)
{
    std::vector<long long> f(k + 1, 0);
    for (long long e = 0; e * j <= k && e <= cap; ++e)
        f[static_cast<size_t>(e * j)] = 1;
    for (long long c = 0; c < copies; ++c) {
        std::vector<long long> out(k + 1, 0);
        for (int i = 0; i <= k; ++i) {
            if (!acc[i])
                continue;
            for (int t = 0; i + t <= k; ++t)
                if (f[t])
                    out[i + t] += acc[i];
        }
        acc = std::move(out);
    }
}

}  // namespace

long long monomial_count(const DimProfile& profile, int k)
{
    if (k <= 0)
        return 0;
    require_prefix(profile, k);
    std::vector<long long> acc(k + 1, 0);
    acc[0] = 1;
    for (int j = 1; j < k; ++j) {
        long long d = profile.dims[j];
        if (d <= 0)
            continue;
        long long cap;
        if (profile.parity(j))
            cap = 1;  // odd letters never repeat (squares fold into g)
        else
            cap = profile.mode == Mode::Restricted ? profile.p - 1 : k / j;
        fold_letter(acc, k, j, d, cap);
    }
    return acc[k];
}

long long monomial_count_dp(const DimProfile& profile, int k)
{
    if (k <= 0)
        return 0;
    require_prefix(profile, k);
    // ways[t] = number of exponent assignments of total weight t
    std::vector<long long> ways(k + 1, 0);
    ways[0] = 1;
    for (int j = 1; j < k; ++j) {
        long long d = profile.dims[j];
        if (d <= 0)
            continue;
        long long cap = profile.parity(j) ? 1
                        : profile.mode == Mode::Restricted ? profile.p - 1
                                                           : static_cast<long long>(k);
        for (long long copy = 0; copy < d; ++copy) {
            std::vector<long long> next(k + 1, 0);
            for (int t = 0; t <= k; ++t) {
                if (!ways[t])
                    continue;
                for (long long e = 0; e <= cap && t + e * j <= k; ++e)
                    next[t + e * j] += ways[t];
            }
            ways = std::move(next);
        }
    }
    return ways[k];
}

DimProfile infer_profile(const std::vector<long long>& steenrod_dims, int p, Mode mode, int k_max)
{
    if (static_cast<int>(steenrod_dims.size()) <= k_max)
        throw std::invalid_argument("infer_profile: need dim A(p)_k for k = 0..k_max");
    DimProfile prof;
    prof.p = p;
    prof.mode = mode;
    prof.dims.assign(k_max + 1, 0);
    for (int k = 1; k <= k_max; ++k) {
        long long dk = monomial_count(prof, k);
        long long g = steenrod_dims[k] - dk;
        if (g < 0) {
            prof.negative_at = k;
            prof.dims[k] = 0;
            return prof;
        }
        prof.dims[k] = g;
    }
    return prof;
}

std::vector<int> minimal_weights(int p, Mode mode, int k_max)
{
    if (p < 3)
        throw std::domain_error("minimal_weights: defined for odd primes");
    Algebra core(p);
    std::vector<long long> dims(k_max + 1);
    for (int k = 0; k <= k_max; ++k)
        dims[k] = core.dim(k);
    DimProfile prof = infer_profile(dims, p, mode, k_max);
    std::vector<int> out;
    for (int k = 1; k <= prof.k_max(); ++k)
        if (prof.dims[k] > 0)
            out.push_back(k);
    return out;
}

int default_obstruction_kmax(int p)
{
    switch (p) {
        case 2:
            return 16;
        case 3:
            return 52;
        case 5:
            return 9;  // covers the first three minimal weights at desk scale
        default:
            return 4 * (p - 1) * p;
    }
}

namespace {

std::string W(const Element& e)
{
    return steenrod::render(e);
}

Element gen_p(int p, int i)
{
    Monomial m;
    m.exps = {i};
    if (p > 2)
        m.eps = {0, 0};
    return Element::monomial(p, m);
}

Element gen_beta(int p)
{
    Monomial m;
    m.eps = {1};
    return Element::monomial(p, m);
}

ObstructionReport obstruct_p2(Mode mode, int k_max)
{
    ObstructionReport rep;
    rep.p = 2;
    rep.mode = mode;
    rep.k_max = k_max;

    Algebra core(2, 1);
    Algebra core0(2, 0);
    std::vector<long long> dims(k_max + 1);
    for (int k = 0; k <= k_max; ++k)
        dims[k] = core.dim(k);
    DimProfile prof = infer_profile(dims, 2, mode, k_max);
    rep.profile = prof.dims;
    rep.negative_at = prof.negative_at;

    Element sq1 = gen_p(2, 1), sq2 = gen_p(2, 2);
    Element sq3sq1 = Element::monomial(2, Monomial{{3, 1}, {}});

    {
        Certificate c;
        c.id = "l1_l2_forced";
        c.claim = "dim g_1 = dim g_2 = 1, so Sq1 and Sq2 are elements of g";
        c.pass = dims[1] == 1 && dims[2] == 1 && prof.dims[1] == 1 && prof.dims[2] == 1;
        c.load_bearing = true;
        c.witnesses = {{"dim g_1", std::to_string(prof.dims[1])},
                       {"dim g_2", std::to_string(prof.dims[2])}};
        rep.certificates.push_back(std::move(c));
    }
    {
        Certificate c;
        c.id = "sq0_zero_branch";
        c.claim = "with Sq0 = 0, Sq1 Sq2 = 0, impossible since L1 L2 is a PBW monomial of U(g)";
        Element at0 = core0.mul(sq1, sq2);
        Element at1 = core.mul(sq1, sq2);
        c.pass = at0.is_zero() && !at1.is_zero();
        c.load_bearing = true;
        c.witnesses = {{"Sq1 Sq2 (Sq0 = 0)", W(at0)}, {"Sq1 Sq2 (Sq0 = 1)", W(at1)}};
        rep.certificates.push_back(std::move(c));
    }
    Element l2sq = core.mul(sq2, sq2);
    {
        Certificate c;
        c.id = "l2_squared";
        c.claim = "Sq2 Sq2 = Sq3 Sq1 != 0";
        c.pass = l2sq == sq3sq1 && !l2sq.is_zero();
        c.load_bearing = true;
        c.witnesses = {{"Sq2 Sq2", W(l2sq)}};
        rep.certificates.push_back(std::move(c));
    }
    {
        Certificate c;
        c.id = "l2_squared_l1";
        c.claim = "Sq2 Sq2 Sq1 = 0";
        Element v = core.mul(l2sq, sq1);
        c.pass = v.is_zero();
        c.load_bearing = true;
        c.witnesses = {{"Sq2 Sq2 Sq1", W(v)}};
        if (mode == Mode::Nonrestricted)
            c.note = "(L2)^2 L1 is itself a PBW basis monomial of the nonrestricted U(g), "
                     "so it cannot vanish";
        else
            c.note = "in the restricted algebra (L2)^2 = L2^[2] lies in g_4; the product of "
                     "two nonzero elements of g vanishes only if they are proportional";
        rep.certificates.push_back(std::move(c));
    }
    {
        Certificate c;
        c.id = "weight_clash";
        c.claim = "Sq3 Sq1 (weight 4) cannot be proportional to Sq1 (weight 1)";
        c.pass = steenrod::degree(sq3sq1.terms().front().mon, 2) == 4 && !l2sq.is_zero();
        c.load_bearing = mode == Mode::Restricted;
        c.witnesses = {{"weights", "4 vs 1"}};
        rep.certificates.push_back(std::move(c));
    }

    bool ok = true;
    for (const auto& c : rep.certificates)
        if (c.load_bearing && !c.pass)
            ok = false;
    if (prof.negative_at)
        ok = true;  // alternative contradiction: the induction itself fails
    rep.verdict = ok ? "NO_REALISATION" : "UNRESOLVED";
    return rep;
}

ObstructionReport obstruct_odd(int p, Mode mode, int k_max)
{
    ObstructionReport rep;
    rep.p = p;
    rep.mode = mode;
    rep.k_max = k_max;

    Algebra core(p, 1);
    Algebra core0(p, 0);
    std::vector<long long> dims(k_max + 1);
    for (int k = 0; k <= k_max; ++k)
        dims[k] = core.dim(k);
    DimProfile prof = infer_profile(dims, p, mode, k_max);
    rep.profile = prof.dims;
    rep.negative_at = prof.negative_at;

    const int q = 2 * (p - 1);
    Element P1 = gen_p(p, 1);
    Element Pp = gen_p(p, p);
    Element beta = gen_beta(p);

    {
        Certificate c;
        c.id = "p1_forced";
        c.claim = "dim g_" + std::to_string(q) + " = 1, so P1 is an element of g";
        c.pass = q <= k_max && dims[q] == 1 && prof.dims[q] == 1;
        c.load_bearing = true;
        c.witnesses = {{"dim g_" + std::to_string(q), std::to_string(q <= k_max ? prof.dims[q] : -1)}};
        rep.certificates.push_back(std::move(c));
    }
    {
        Certificate c;
        c.id = "p0_zero_branch";
        c.claim = "with P0 = 0, (P1)^2 = 0, impossible since L^2 is a PBW monomial (2 < p)";
        Element at0 = core0.mul(P1, P1);
        Element at1 = core.mul(P1, P1);
        c.pass = at0.is_zero() && !at1.is_zero();
        c.load_bearing = true;
        c.witnesses = {{"P1 P1 (P0 = 0)", W(at0)}, {"P1 P1 (P0 = 1)", W(at1)}};
        rep.certificates.push_back(std::move(c));
    }
    {
        Certificate c;
        c.id = "p1_pth_power";
        c.claim = "(P1)^" + std::to_string(p) + " = 0";
        Element v = core.power(P1, p);
        c.pass = v.is_zero();
        c.load_bearing = mode == Mode::Nonrestricted;
        c.witnesses = {{"(P1)^" + std::to_string(p), W(v)}};
        c.note = mode == Mode::Nonrestricted
                     ? "x^p of an even letter is a PBW basis monomial of the nonrestricted U(g), "
                       "so the vanishing is a contradiction"
                     : "consistent only with a restricted algebra (the p-map may send L to 0); "
                       "forces restrictedness";
        rep.certificates.push_back(std::move(c));
    }
    {
        Certificate c;
        c.id = "nested_bracket";
        c.claim = "[P1,[P1,P" + std::to_string(p) + "]] = 2*P" + std::to_string(p + 1) +
                  " P1 != 0";
        Element inner = core.commutator(P1, Pp);
        Element nested = core.commutator(P1, inner);
        Monomial claim_m;
        claim_m.exps = {p + 1, 1};
        claim_m.eps = {0, 0, 0};
        Element claimed = Element::monomial(p, claim_m, 2);
        c.pass = nested == claimed && !nested.is_zero();
        c.load_bearing = false;
        c.witnesses = {{"[P1,P" + std::to_string(p) + "]", W(inner)},
                       {"[P1,[P1,P" + std::to_string(p) + "]]", W(nested)},
                       {"claimed", W(claimed)}};
        if (!c.pass)
            c.note = "the nested bracket vanishes once P^p P^2 is reduced to admissible form; "
                     "the weight-clash argument it was meant to feed has no witness";
        rep.certificates.push_back(std::move(c));
    }
    {
        Certificate c;
        const int w = 2 * (p - 1) * (p + 2);
        c.id = "clash_weight_absent";
        c.claim = "dim g_" + std::to_string(w) + " = 0 (weight 2(p-1)(p+2))";
        c.pass = w <= k_max && prof.dims[w] == 0 && !prof.negative_at;
        c.load_bearing = false;
        c.witnesses = {{"dim g_" + std::to_string(w),
                        w <= k_max ? std::to_string(prof.dims[w]) : "out of range"}};
        rep.certificates.push_back(std::move(c));
    }
    if (mode == Mode::Restricted) {
        Certificate c;
        const int wz = q * p;           // weight of P^p
        const int wt = q * p * p + 1;   // weight of [beta, (P^p)^p]
        c.id = "restricted_pmap_escape";
        c.claim = "P" + std::to_string(p) + " lies in g; (P" + std::to_string(p) + ")^[" +
                  std::to_string(p) + "] = (P" + std::to_string(p) + ")^" + std::to_string(p) +
                  " lies in g at weight " + std::to_string(q * p * p) +
                  "; [b, (P" + std::to_string(p) + ")^" + std::to_string(p) +
                  "] != 0 must lie in g of weight " + std::to_string(wt) +
                  ", where dim g = 0";
        bool in_range = wz <= k_max && wt <= k_max;
        Element zp = core.power(Pp, p);
        Element esc = core.commutator(beta, zp);
        c.pass = in_range && dims[wz] == 1 && prof.dims[wz] == 1 && dims[1] == 1 &&
                 prof.dims[1] == 1 && !zp.is_zero() && !esc.is_zero() && prof.dims[wt] == 0 &&
                 !prof.negative_at;
        c.load_bearing = true;
        c.witnesses = {{"(P" + std::to_string(p) + ")^" + std::to_string(p), W(zp)},
                       {"[b, (P" + std::to_string(p) + ")^" + std::to_string(p) + "]", W(esc)},
                       {"dim g_" + std::to_string(wt),
                        in_range ? std::to_string(prof.dims[wt]) : "out of range"}};
        rep.certificates.push_back(std::move(c));
    }

    bool ok = true;
    for (const auto& c : rep.certificates)
        if (c.load_bearing && !c.pass)
            ok = false;
    if (prof.negative_at)
        ok = true;  // alternative contradiction: the induction itself fails
    rep.verdict = ok ? "NO_REALISATION" : "UNRESOLVED";
    return rep;
}

}  // namespace

ObstructionReport run_obstruction(int p, Mode mode, int k_max)
{
    if (!is_prime(p))
        throw std::invalid_argument("run_obstruction: p must be prime");
    if (k_max < 0)
        k_max = default_obstruction_kmax(p);
    if (p == 2)
        return obstruct_p2(mode, k_max);
    return obstruct_odd(p, mode, k_max);
}

}  // namespace adem::pbw
