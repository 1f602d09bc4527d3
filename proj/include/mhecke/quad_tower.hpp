#pragma once

// Exact elements of a biquadratic field Q(sqrt(s1), sqrt(s2)).
//
// A value is x0 + x1*sqrt(s1) + x2*sqrt(s2) + x3*sqrt(s3) with s1, s2
// squarefree (possibly 1, possibly negative) and s3 the signed squarefree
// part of s1*s2.  Negative radicands use the embedding sqrt(s) = i*sqrt(|s|).
// Canonical form drops unused radicands, so equal values compare equal
// componentwise.  Two independent radicands are the most the library ever
// needs: coefficients live in a quadratic field and exponents adjoin sqrt(D).

#include <map>
#include <sstream>
#include <string>

#include "mhecke/errors.hpp"
#include "mhecke/number_theory.hpp"

namespace mhecke {

class QuadTowerNumber {
public:
    QuadTowerNumber() : s1_(1), s2_(1) {}

    QuadTowerNumber(const Rational& r) : s1_(1), s2_(1) { x_[0] = r; }
    QuadTowerNumber(const Integer& n) : QuadTowerNumber(Rational(n)) {}
    QuadTowerNumber(long long n) : QuadTowerNumber(Rational(n)) {}
    QuadTowerNumber(int n) : QuadTowerNumber(Rational(n)) {}

    // x * sqrt(s); s need not be squarefree.
    static QuadTowerNumber root_term(const Rational& x, long long s) {
        if (s == 0) throw BadInput("root_term: zero radicand");
        long long g, sf;
        squarefree_split(s, g, sf);
        QuadTowerNumber out;
        if (sf == 1) {
            out.x_[0] = x * g;
        } else {
            out.s1_ = sf;
            out.x_[1] = x * g;
        }
        out.normalize();
        return out;
    }

    // Positive square root of n > 0 as g*sqrt(s), s squarefree.
    static QuadTowerNumber sqrt_of_integer(long long n) {
        if (n <= 0) throw BadInput("sqrt_of_integer: argument must be positive");
        return root_term(Rational(1), n);
    }

    bool is_zero() const {
        return x_[0] == 0 && x_[1] == 0 && x_[2] == 0 && x_[3] == 0;
    }
    bool is_rational() const { return x_[1] == 0 && x_[2] == 0 && x_[3] == 0; }
    bool is_one() const { return is_rational() && x_[0] == 1; }

    const Rational& rational_value() const {
        if (!is_rational()) throw BadInput("rational_value: not a rational number");
        return x_[0];
    }

    long long s1() const { return s1_; }
    long long s2() const { return s2_; }
    long long s3() const { return third_radicand(s1_, s2_); }
    const Rational& x0() const { return x_[0]; }
    const Rational& x1() const { return x_[1]; }
    const Rational& x2() const { return x_[2]; }
    const Rational& x3() const { return x_[3]; }

    // Coefficient of sqrt(s) in this value (s squarefree; s = 1 gives x0).
    Rational coeff_of_radicand(long long s) const {
        if (s == 1) return x_[0];
        if (s == s1_) return x_[1];
        if (s == s2_) return x_[2];
        if (s1_ != 1 && s2_ != 1 && s == third_radicand(s1_, s2_)) return x_[3];
        return Rational(0);
    }

    friend QuadTowerNumber operator+(const QuadTowerNumber& a, const QuadTowerNumber& b) {
        QuadTowerNumber x = a, y = b;
        coerce(x, y);
        QuadTowerNumber out;
        out.s1_ = x.s1_;
        out.s2_ = x.s2_;
        for (int i = 0; i < 4; ++i) out.x_[i] = x.x_[i] + y.x_[i];
        out.normalize();
        return out;
    }

    friend QuadTowerNumber operator-(const QuadTowerNumber& a, const QuadTowerNumber& b) {
        return a + (-b);
    }

    QuadTowerNumber operator-() const {
        QuadTowerNumber out = *this;
        for (auto& c : out.x_) c = -c;
        return out;
    }

    friend QuadTowerNumber operator*(const QuadTowerNumber& a, const QuadTowerNumber& b) {
        // Fast path: at least one operand rational.
        if (a.is_rational()) return b.scaled(a.x_[0]);
        if (b.is_rational()) return a.scaled(b.x_[0]);
        QuadTowerNumber x = a, y = b;
        coerce(x, y);
        long long s1 = x.s1_, s2 = x.s2_;
        long long s3 = third_radicand(s1, s2);
        long long g = radicand_gcd(s1, s2);
        // sqrt(s1)*sqrt(s2) = eps*g*sqrt(s3); eps = -1 iff both radicands
        // are negative (i*i); the mixed products follow by associativity.
        Rational eps((s1 < 0 && s2 < 0) ? -1 : 1);
        Rational r1(s1), r2(s2), r3(s3);
        QuadTowerNumber out;
        out.s1_ = s1;
        out.s2_ = s2;
        const Rational* u = x.x_;
        const Rational* v = y.x_;
        out.x_[0] = u[0] * v[0] + r1 * u[1] * v[1] + r2 * u[2] * v[2] + r3 * u[3] * v[3];
        out.x_[1] = u[0] * v[1] + u[1] * v[0] + eps * (r2 / g) * (u[2] * v[3] + u[3] * v[2]);
        out.x_[2] = u[0] * v[2] + u[2] * v[0] + eps * (r1 / g) * (u[1] * v[3] + u[3] * v[1]);
        out.x_[3] = u[0] * v[3] + u[3] * v[0] + eps * Rational(g) * (u[1] * v[2] + u[2] * v[1]);
        out.normalize();
        return out;
    }

    QuadTowerNumber inverse() const {
        if (is_zero()) throw DivisionByZero("QuadTowerNumber: inverse of zero");
        if (is_rational()) return QuadTowerNumber(Rational(1) / x_[0]);
        // Norm down the tower: b*conj1(b) lies in Q(sqrt(s2)), then one more
        // conjugation reaches Q.
        QuadTowerNumber c1 = conj_s1();
        QuadTowerNumber t = (*this) * c1;
        QuadTowerNumber c2t = t.conj_s2();
        QuadTowerNumber n = t * c2t;
        if (!n.is_rational() || n.x_[0] == 0)
            throw DivisionByZero("QuadTowerNumber: vanishing norm");
        return (c1 * c2t).scaled(Rational(1) / n.x_[0]);
    }

    friend QuadTowerNumber operator/(const QuadTowerNumber& a, const QuadTowerNumber& b) {
        return a * b.inverse();
    }

    QuadTowerNumber& operator+=(const QuadTowerNumber& o) { return *this = *this + o; }
    QuadTowerNumber& operator-=(const QuadTowerNumber& o) { return *this = *this - o; }
    QuadTowerNumber& operator*=(const QuadTowerNumber& o) { return *this = *this * o; }
    QuadTowerNumber& operator/=(const QuadTowerNumber& o) { return *this = *this / o; }

    friend bool operator==(const QuadTowerNumber& a, const QuadTowerNumber& b) {
        return a.s1_ == b.s1_ && a.s2_ == b.s2_ && a.x_[0] == b.x_[0] && a.x_[1] == b.x_[1] &&
               a.x_[2] == b.x_[2] && a.x_[3] == b.x_[3];
    }
    friend bool operator!=(const QuadTowerNumber& a, const QuadTowerNumber& b) {
        return !(a == b);
    }

    // Galois conjugations sqrt(s1) -> -sqrt(s1) and sqrt(s2) -> -sqrt(s2);
    // each also flips sqrt(s3).
    QuadTowerNumber conj_s1() const {
        QuadTowerNumber out = *this;
        out.x_[1] = -out.x_[1];
        out.x_[3] = -out.x_[3];
        return out;
    }
    QuadTowerNumber conj_s2() const {
        QuadTowerNumber out = *this;
        out.x_[2] = -out.x_[2];
        out.x_[3] = -out.x_[3];
        return out;
    }

    QuadTowerNumber scaled(const Rational& r) const {
        QuadTowerNumber out = *this;
        for (auto& c : out.x_) c = c * r;
        out.normalize();
        return out;
    }

    // "x0 + x1*sqrt(s1) + ..." with p/q fractions; zero terms are skipped.
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        auto emit = [&](const Rational& coeff, long long rad) {
            if (coeff == 0) return;
            Rational c = coeff;
            if (first) {
                if (c < 0) {
                    os << "-";
                    c = -c;
                }
            } else {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            first = false;
            bool unit_coeff = (c == 1 && rad != 1);
            if (!unit_coeff) {
                os << rat_num(c);
                if (rat_den(c) != 1) os << "/" << rat_den(c);
            }
            if (rad != 1) {
                if (!unit_coeff) os << "*";
                os << "sqrt(" << rad << ")";
            }
        };
        emit(x_[0], 1);
        emit(x_[1], s1_);
        emit(x_[2], s2_);
        if (x_[3] != 0) emit(x_[3], third_radicand(s1_, s2_));
        return os.str();
    }

    // Parses sums of terms "p/q", "p/q*sqrt(s)", "sqrt(s)" joined by +/-.
    static QuadTowerNumber parse(const std::string& text);

private:
    long long s1_, s2_;
    Rational x_[4];

    static long long radicand_gcd(long long s1, long long s2) {
        long long a = s1 < 0 ? -s1 : s1;
        long long b = s2 < 0 ? -s2 : s2;
        while (b) {
            long long t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    static long long third_radicand(long long s1, long long s2) {
        if (s1 == 1) return s2;
        if (s2 == 1) return s1;
        return squarefree_part(s1 * s2);
    }

    // Rebuild the canonical minimal tower from the semantic radicand map.
    void normalize() {
        std::map<long long, Rational> terms;
        auto put = [&](long long s, const Rational& c) {
            if (c == 0) return;
            terms[s] += c;
            if (terms[s] == 0) terms.erase(s);
        };
        put(1, x_[0]);
        if (s1_ != 1) put(s1_, x_[1]);
        else put(1, x_[1]);
        if (s2_ != 1) put(s2_, x_[2]);
        else put(1, x_[2]);
        long long s3 = third_radicand(s1_, s2_);
        if (s3 != 1) put(s3, x_[3]);
        else put(1, x_[3]);

        Rational zero(0);
        x_[0] = terms.count(1) ? terms[1] : zero;
        terms.erase(1);
        x_[1] = x_[2] = x_[3] = zero;
        if (terms.empty()) {
            s1_ = s2_ = 1;
            return;
        }
        if (terms.size() == 1) {
            auto it = terms.begin();
            s1_ = it->first;
            s2_ = 1;
            x_[1] = it->second;
            return;
        }
        if (terms.size() == 2) {
            auto it = terms.begin();
            s1_ = it->first;
            x_[1] = it->second;
            ++it;
            s2_ = it->first;
            x_[2] = it->second;
            return;
        }
        if (terms.size() == 3) {
            auto it = terms.begin();
            long long a = it->first;
            Rational ca = it->second;
            ++it;
            long long b = it->first;
            Rational cb = it->second;
            ++it;
            long long c = it->first;
            Rational cc = it->second;
            if (third_radicand(a, b) != c)
                throw IncompatibleTower("QuadTowerNumber: radicands {" + std::to_string(a) +
                                        "," + std::to_string(b) + "," + std::to_string(c) +
                                        "} do not close under products");
            s1_ = a;
            s2_ = b;
            x_[1] = ca;
            x_[2] = cb;
            x_[3] = cc;
            return;
        }
        throw IncompatibleTower("QuadTowerNumber: more than three independent radicands");
    }

    // Bring both operands into one common tower.
    static void coerce(QuadTowerNumber& a, QuadTowerNumber& b) {
        if (a.s1_ == b.s1_ && a.s2_ == b.s2_) return;
        std::map<long long, Rational> need;
        auto collect = [&](const QuadTowerNumber& v) {
            if (v.x_[1] != 0) need[v.s1_] += 0;
            if (v.x_[2] != 0) need[v.s2_] += 0;
            if (v.x_[3] != 0) need[third_radicand(v.s1_, v.s2_)] += 0;
        };
        collect(a);
        collect(b);
        need.erase(1);
        long long t1 = 1, t2 = 1;
        if (need.size() == 1) {
            t1 = need.begin()->first;
        } else if (need.size() == 2) {
            auto it = need.begin();
            t1 = it->first;
            ++it;
            t2 = it->first;
        } else if (need.size() == 3) {
            auto it = need.begin();
            long long u = it->first;
            ++it;
            long long v = it->first;
            ++it;
            long long w = it->first;
            if (third_radicand(u, v) != w)
                throw IncompatibleTower("QuadTowerNumber: cannot merge radicand sets");
            t1 = u;
            t2 = v;
        } else if (need.size() > 3) {
            throw IncompatibleTower("QuadTowerNumber: cannot merge radicand sets");
        }
        a.recast(t1, t2);
        b.recast(t1, t2);
    }

    // Re-express in the tower (t1, t2); every current radicand must have a slot.
    void recast(long long t1, long long t2) {
        long long t3 = third_radicand(t1, t2);
        Rational nx[4];
        nx[0] = x_[0];
        auto place = [&](long long s, const Rational& c) {
            if (c == 0) return;
            if (s == 1)
                nx[0] += c;
            else if (s == t1)
                nx[1] += c;
            else if (s == t2)
                nx[2] += c;
            else if (s == t3)
                nx[3] += c;
            else
                throw IncompatibleTower("QuadTowerNumber: radicand " + std::to_string(s) +
                                        " has no slot in the target tower");
        };
        place(s1_, x_[1]);
        place(s2_, x_[2]);
        place(third_radicand(s1_, s2_), x_[3]);
        s1_ = t1;
        s2_ = t2;
        for (int i = 0; i < 4; ++i) x_[i] = nx[i];
    }
};

inline QuadTowerNumber operator*(const Rational& r, const QuadTowerNumber& q) {
    return q.scaled(r);
}

// sqrt(D) for a positive fundamental discriminant, as g*sqrt(s).
inline QuadTowerNumber sqrt_of(const Discriminant& D) {
    return QuadTowerNumber::sqrt_of_integer(D.value);
}

namespace detail {

inline Rational parse_rational(const std::string& tok) {
    auto slash = tok.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(tok));
        Integer num(tok.substr(0, slash));
        Integer den(tok.substr(slash + 1));
        if (den == 0) throw BadInput("rational with zero denominator: " + tok);
        return Rational(num, den);
    } catch (const std::exception&) {
        throw BadInput("cannot parse rational: '" + tok + "'");
    }
}

} // namespace detail

inline QuadTowerNumber QuadTowerNumber::parse(const std::string& text) {
    QuadTowerNumber out;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw BadInput("QuadTowerNumber::parse: empty input");
    bool first = true;
    while (i < text.size()) {
        skip_ws();
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw BadInput("QuadTowerNumber::parse: expected +/- near '" + text.substr(i) + "'");
        }
        first = false;
        // term: [rational][*][sqrt(s)]
        std::string numtok;
        while (i < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
            numtok += text[i++];
        skip_ws();
        bool has_star = false;
        if (i < text.size() && text[i] == '*') {
            has_star = true;
            ++i;
            skip_ws();
        }
        long long rad = 1;
        if (text.compare(i, 5, "sqrt(") == 0) {
            i += 5;
            std::string radtok;
            while (i < text.size() && text[i] != ')') radtok += text[i++];
            if (i == text.size()) throw BadInput("QuadTowerNumber::parse: unterminated sqrt(");
            ++i;
            try {
                rad = std::stoll(radtok);
            } catch (const std::exception&) {
                throw BadInput("QuadTowerNumber::parse: bad radicand '" + radtok + "'");
            }
            if (rad == 0) throw BadInput("QuadTowerNumber::parse: zero radicand");
        } else if (has_star) {
            throw BadInput("QuadTowerNumber::parse: '*' not followed by sqrt(...)");
        }
        Rational coeff = numtok.empty() ? Rational(1) : detail::parse_rational(numtok);
        if (numtok.empty() && rad == 1)
            throw BadInput("QuadTowerNumber::parse: empty term");
        if (sign < 0) coeff = -coeff;
        out += root_term(coeff, rad);
        skip_ws();
    }
    return out;
}

} // namespace mhecke
