#include "adem/fp.hpp"

namespace adem {

bool is_prime(int n)
{
    if (n < 2)
        return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Fp::Fp(int p) : p_(p)
{
    if (!is_prime(p))
        throw std::invalid_argument("Fp: characteristic must be prime, got " + std::to_string(p));
    digit_binom_.assign(static_cast<size_t>(p) * p, 0);
    for (int a = 0; a < p; ++a) {
        digit_binom_[static_cast<size_t>(a) * p] = 1;
        for (int b = 1; b <= a; ++b) {
            int up = digit_binom_[static_cast<size_t>(a - 1) * p + b];
            int upleft = digit_binom_[static_cast<size_t>(a - 1) * p + b - 1];
            digit_binom_[static_cast<size_t>(a) * p + b] = (up + upleft) % p;
        }
    }
}

int Fp::inv(int a) const
{
    if (a % p_ == 0)
        throw std::domain_error("Fp::inv: zero has no inverse");
    return pow(reduce(a), p_ - 2);
}

int Fp::pow(int a, long long e) const
{
    if (e < 0)
        return pow(inv(a), -e);
    long long base = reduce(a), r = 1;
    while (e) {
        if (e & 1)
            r = r * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<int>(r);
}

int Fp::binom(long long n, long long k) const
{
    if (k < 0 || k > n || n < 0)
        return 0;
    int r = 1;
    while (n || k) {
        int a = static_cast<int>(n % p_);
        int b = static_cast<int>(k % p_);
        if (b > a)
            return 0;
        r = mul(r, digit_binom_[static_cast<size_t>(a) * p_ + b]);
        n /= p_;
        k /= p_;
    }
    return r;
}

int binom_mod_p(long long n, long long k, int p)
{
    return Fp(p).binom(n, k);
}

}  // namespace adem
