#pragma once

// Exact integer/rational scalars and the elementary number theory used
// everywhere else: Kronecker symbols, divisor sums, squarefree splitting,
// fundamental discriminants.

#include <algorithm>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mhecke/errors.hpp"

namespace mhecke {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rational& r) { return rat_den(r) == 1; }

// Floor of p/q for exact rationals.
inline Integer rat_floor(const Rational& r) {
    Integer n = rat_num(r), d = rat_den(r);
    Integer q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

// Kronecker symbol (a/n), defined for all integers including n <= 0.
// (a/0) = 1 iff |a| = 1; (a/2) = 0 for even a, else +-1 by a mod 8.
inline int kronecker(Integer a, Integer n) {
    using std::swap;
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0) return 0;
    int k = 1;
    int twos = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++twos;
    }
    if (twos % 2 == 1) {
        int am8 = static_cast<int>(a % 8);
        if (am8 < 0) am8 += 8;
        if (am8 == 3 || am8 == 5) k = -k;
    }
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    // Jacobi loop on odd positive n.
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        twos = 0;
        while (a % 2 == 0) {
            a /= 2;
            ++twos;
        }
        if (twos % 2 == 1) {
            int nm8 = static_cast<int>(n % 8);
            if (nm8 == 3 || nm8 == 5) k = -k;
        }
        if (a % 4 == 3 && n % 4 == 3) k = -k;
        Integer t = n % a;
        n = a;
        a = t;
    }
    return (n == 1) ? k : 0;
}

inline int kronecker(long long a, long long n) { return kronecker(Integer(a), Integer(n)); }

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

// Trial-division factorization; adequate for the discriminants and Hecke
// indices this library handles.
inline std::vector<std::pair<long long, int>> factorize(long long n) {
    if (n <= 0) throw BadInput("factorize: argument must be positive");
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::vector<long long> divisors(long long n) {
    if (n < 1) throw BadInput("divisors: argument must be positive");
    std::vector<long long> out{1};
    for (auto [p, e] : factorize(n)) {
        std::size_t sz = out.size();
        long long pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline Integer sigma(long long n) {
    Integer s = 0;
    for (long long d : divisors(n)) s += d;
    return s;
}

// Sum of k-th powers of divisors (used by the classical Eisenstein series).
inline Integer sigma_k(long long n, int k) {
    Integer s = 0;
    for (long long d : divisors(n)) s += boost::multiprecision::pow(Integer(d), k);
    return s;
}

// n = g^2 * s with s squarefree carrying the sign of n.
inline void squarefree_split(long long n, long long& g, long long& s) {
    if (n == 0) throw BadInput("squarefree_split: zero argument");
    long long sign = n < 0 ? -1 : 1;
    long long m = n < 0 ? -n : n;
    g = 1;
    s = 1;
    for (auto [p, e] : factorize(m)) {
        for (int i = 0; i + 1 < e; i += 2) g *= p;
        if (e % 2 == 1) s *= p;
    }
    s *= sign;
}

inline long long squarefree_part(long long n) {
    long long g, s;
    squarefree_split(n, g, s);
    return s;
}

inline bool is_squarefree(long long n) {
    if (n == 0) return false;
    long long g, s;
    squarefree_split(n, g, s);
    return g == 1;
}

// Fundamental discriminant test, sign-agnostic: D = 1, or D ≡ 1 (mod 4)
// squarefree, or D = 4m with m ≡ 2,3 (mod 4) squarefree.
inline bool is_fundamental(long long D) {
    if (D == 0) return false;
    if (D == 1) return true;
    long long m4 = ((D % 4) + 4) % 4;
    if (m4 == 1) return is_squarefree(D);
    if (m4 != 0) return false;
    long long m = D / 4;
    long long mm4 = ((m % 4) + 4) % 4;
    if (mm4 != 2 && mm4 != 3) return false;
    return is_squarefree(m);
}

// Positive fundamental discriminant (1 allowed as the trivial case).
struct Discriminant {
    long long value;

    explicit Discriminant(long long v) : value(v) {
        if (v <= 0 || !is_fundamental(v))
            throw BadInput("Discriminant: " + std::to_string(v) +
                           " is not a positive fundamental discriminant");
    }
};

} // namespace mhecke
