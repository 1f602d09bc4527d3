#pragma once

// Standard expansions: Dedekind eta and eta quotients, Eisenstein series,
// Delta, j, Hauptmoduln for the supported genus-zero levels, Faber
// polynomials, and the Ligozat cusp-order formula for eta quotients.

#include <vector>

#include "mhecke/qseries.hpp"

namespace mhecke {

// prod_{n>=1} (1 - q^n) via the pentagonal number expansion.
inline QSeries euler_product(long long terms) {
    if (terms < 1) throw BadInput("euler_product: need at least one term");
    std::vector<QuadTowerNumber> c(static_cast<std::size_t>(terms));
    for (long long k = 0;; ++k) {
        long long g1 = k * (3 * k - 1) / 2;
        long long g2 = k * (3 * k + 1) / 2;
        if (g1 >= terms && g2 >= terms) break;
        QuadTowerNumber sign((k % 2 == 0) ? 1 : -1);
        if (g1 < terms) c[static_cast<std::size_t>(g1)] += sign;
        if (k > 0 && g2 < terms) c[static_cast<std::size_t>(g2)] += sign;
    }
    return QSeries(Rational(0), std::move(c));
}

// eta(tau) = q^{1/24} prod (1 - q^n).
inline QSeries eta_series(long long terms) {
    return euler_product(terms).shifted(Rational(1, 24));
}

struct EtaQuotientSpec {
    long long level = 1;
    std::vector<std::pair<long long, long long>> terms; // (m, r): eta(m tau)^r

    Rational weight() const {
        Rational k(0);
        for (auto [m, r] : terms) k += Rational(r, 2);
        return k;
    }

    Rational leading_power() const {
        Rational h(0);
        for (auto [m, r] : terms) h += Rational(m * r, 24);
        return h;
    }

    void validate_level() const {
        for (auto [m, r] : terms) {
            (void)r;
            if (m < 1 || level % m != 0)
                throw BadInput("EtaQuotientSpec: eta argument " + std::to_string(m) +
                               " does not divide the level " + std::to_string(level));
        }
    }
};

inline QSeries eta_quotient_series(const EtaQuotientSpec& spec, long long terms) {
    QSeries out = QSeries::one(terms);
    for (auto [m, r] : spec.terms) {
        long long inner = (terms + m - 1) / m + 1;
        QSeries u = euler_product(inner).substituted_power(m).truncated(terms);
        out = out * u.pow_int(r);
    }
    return out.shifted(spec.leading_power());
}

// E_2 = 1 - 24 sum sigma(n) q^n.
inline QSeries eisenstein2(long long terms) {
    std::vector<QuadTowerNumber> c(static_cast<std::size_t>(terms));
    c[0] = QuadTowerNumber(1);
    for (long long n = 1; n < terms; ++n)
        c[static_cast<std::size_t>(n)] = QuadTowerNumber(Rational(-24 * sigma(n)));
    return QSeries(Rational(0), std::move(c));
}

inline QSeries eisenstein4(long long terms) {
    std::vector<QuadTowerNumber> c(static_cast<std::size_t>(terms));
    c[0] = QuadTowerNumber(1);
    for (long long n = 1; n < terms; ++n)
        c[static_cast<std::size_t>(n)] = QuadTowerNumber(Rational(240 * sigma_k(n, 3)));
    return QSeries(Rational(0), std::move(c));
}

inline QSeries eisenstein6(long long terms) {
    std::vector<QuadTowerNumber> c(static_cast<std::size_t>(terms));
    c[0] = QuadTowerNumber(1);
    for (long long n = 1; n < terms; ++n)
        c[static_cast<std::size_t>(n)] = QuadTowerNumber(Rational(-504 * sigma_k(n, 5)));
    return QSeries(Rational(0), std::move(c));
}

// Delta = eta^24 = q prod (1-q^n)^24.
inline QSeries delta_series(long long terms) {
    return euler_product(terms).pow_int(24).shifted(Rational(1));
}

// j = E4^3 / Delta = q^{-1} + 744 + 196884 q + ...
inline QSeries j_series(long long terms) {
    long long inner = terms + 2;
    return (eisenstein4(inner).pow_int(3) / delta_series(inner)).truncated(terms);
}

// Cusps of Gamma_0(N): representatives a/c with c | N, one a per residue in
// (Z/gcd(c, N/c))^* adjusted so gcd(a, c) = 1.  Width = N / gcd(c^2, N).
struct Cusp {
    long long a;
    long long c;
};

inline long long gcd_ll(long long a, long long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long long cusp_width(const Cusp& s, long long N) {
    return N / gcd_ll(s.c * s.c, N);
}

inline std::vector<Cusp> cusps_of_gamma0(long long N) {
    std::vector<Cusp> out;
    for (long long c = 1; c <= N; ++c) {
        if (N % c != 0) continue;
        long long g = gcd_ll(c, N / c);
        for (long long a0 = 0; a0 < g; ++a0) {
            if (gcd_ll(a0, g) != 1 && g != 1) continue;
            long long a = (g == 1) ? 1 : a0;
            while (gcd_ll(a, c) != 1) a += g;
            out.push_back({a, c});
        }
    }
    return out;
}

inline long long gamma0_index(long long N) {
    long long idx = N;
    long long n = N;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            idx = idx / p * (p + 1);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) idx = idx / n * (n + 1);
    return idx;
}

// Ligozat: order of vanishing of prod eta(m tau)^{r_m} at the cusp a/c of
// Gamma_0(N), in local-uniformizer units:
//   (N / (24 gcd(c^2, N))) * sum_m r_m gcd(c, m)^2 / m.
// The numerator a does not enter.
inline Rational eta_cusp_order(const EtaQuotientSpec& spec, const Cusp& cusp, long long N) {
    spec.validate_level();
    if (cusp.c < 1 || N % cusp.c != 0)
        throw CuspNotOfLevel("eta_cusp_order: cusp denominator " + std::to_string(cusp.c) +
                             " does not divide the level " + std::to_string(N));
    if (gcd_ll(cusp.a, cusp.c) != 1)
        throw BadInput("eta_cusp_order: cusp must be given in lowest terms");
    Rational sum(0);
    for (auto [m, r] : spec.terms) {
        long long g = gcd_ll(cusp.c, m);
        sum += Rational(r * g * g, m);
    }
    return Rational(N, 24 * gcd_ll(cusp.c * cusp.c, N)) * sum;
}

inline bool hauptmodul_supported(long long N) { return N == 1 || N == 7 || N == 9; }

inline EtaQuotientSpec hauptmodul_eta_spec(long long N) {
    if (N == 7) return EtaQuotientSpec{7, {{1, 4}, {7, -4}}};
    if (N == 9) return EtaQuotientSpec{9, {{1, 3}, {9, -3}}};
    throw UnsupportedLevel("hauptmodul_eta_spec: level " + std::to_string(N));
}

// Additive normalization applied to the eta quotient (the +4 for level 7).
inline QuadTowerNumber hauptmodul_additive_constant(long long N) {
    if (N == 7) return QuadTowerNumber(4);
    if (N == 9) return QuadTowerNumber(0);
    throw UnsupportedLevel("hauptmodul_additive_constant: level " + std::to_string(N));
}

// Normalized Hauptmodul q^{-1} + O(1) for the supported genus-zero levels:
// j for N = 1, (eta/eta(7.))^4 + 4 for N = 7, eta^3/eta(9.)^3 for N = 9.
inline QSeries hauptmodul(long long N, long long terms) {
    if (N == 1) return j_series(terms);
    if (!hauptmodul_supported(N))
        throw UnsupportedLevel("hauptmodul: level " + std::to_string(N) +
                               " is not in the supported set {1,7,9}");
    QSeries t = eta_quotient_series(hauptmodul_eta_spec(N), terms);
    QuadTowerNumber add = hauptmodul_additive_constant(N);
    if (!add.is_zero()) t = t + QSeries::constant(add, terms);
    return t;
}

struct FaberPolynomial {
    long long level;
    long long n;
    std::vector<QuadTowerNumber> poly; // poly[k] = coefficient of X^k
    QSeries expansion;                 // q^{-n} + O(q), zero constant term
};

// The unique polynomial P with P(hauptmodul) = q^{-n} + O(q) and zero
// constant term.
inline FaberPolynomial faber(long long N, long long n, long long terms) {
    if (n < 1) throw BadInput("faber: index must be positive");
    if (!hauptmodul_supported(N))
        throw UnsupportedLevel("faber: level " + std::to_string(N) +
                               " is not in the supported set {1,7,9}");
    long long T = std::max(terms + n + 2, n + 4);
    QSeries t = hauptmodul(N, T);

    std::vector<std::vector<QuadTowerNumber>> polys; // polys[m] for f_{N,m}, m <= n
    std::vector<QSeries> elems;
    polys.push_back({QuadTowerNumber(1)}); // f_0 = 1
    elems.push_back(QSeries::one(T));
    for (long long m = 1; m <= n; ++m) {
        std::vector<QuadTowerNumber> p(static_cast<std::size_t>(m) + 1);
        QSeries e;
        if (m == 1) {
            p[1] = QuadTowerNumber(1);
            e = t;
        } else {
            // t * f_{m-1} = q^{-m} + lower principal part + constant + O(q)
            p = polys[static_cast<std::size_t>(m - 1)];
            p.insert(p.begin(), QuadTowerNumber(0));
            e = t * elems[static_cast<std::size_t>(m - 1)];
            for (long long k = m - 1; k >= 1; --k) {
                QuadTowerNumber coef = e.coeff_at(Rational(-k));
                if (coef.is_zero()) continue;
                e = e - elems[static_cast<std::size_t>(k)].scaled(coef);
                for (std::size_t i = 0; i < polys[static_cast<std::size_t>(k)].size(); ++i)
                    p[i] -= coef * polys[static_cast<std::size_t>(k)][i];
            }
        }
        QuadTowerNumber c0 = e.coeff_at(Rational(0));
        if (!c0.is_zero()) {
            e = e - QSeries::constant(c0, T);
            p[0] -= c0;
        }
        polys.push_back(p);
        elems.push_back(e);
    }
    return FaberPolynomial{N, n, polys.back(), elems.back().truncated(terms + n)};
}

} // namespace mhecke
