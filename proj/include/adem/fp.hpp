#pragma once

#include <stdexcept>
#include <vector>

namespace adem {

bool is_prime(int n);

/// Arithmetic context for the prime field F_p. Scalars are kept as least
/// nonnegative residues; a context object carries the characteristic so one
/// process can serve several primes at once.
class Fp {
public:
    explicit Fp(int p);

    int p() const { return p_; }

    int reduce(long long x) const
    {
        int r = static_cast<int>(x % p_);
        return r < 0 ? r + p_ : r;
    }

    int add(int a, int b) const { return (a + b) % p_; }
    int sub(int a, int b) const { return reduce(static_cast<long long>(a) - b); }
    int mul(int a, int b) const { return static_cast<int>(static_cast<long long>(a) * b % p_); }
    int neg(int a) const { return a == 0 ? 0 : p_ - a; }

    /// Inverse of a nonzero residue.
    int inv(int a) const;
    int pow(int a, long long e) const;

    /// C(n, k) mod p by base-p digit decomposition (Lucas). Returns 0 when
    /// k < 0 or k > n, so relation sums may be indexed uniformly.
    int binom(long long n, long long k) const;

private:
    int p_;
    std::vector<int> digit_binom_;  // C(a, b) for 0 <= a, b < p
};

int binom_mod_p(long long n, long long k, int p);

}  // namespace adem
