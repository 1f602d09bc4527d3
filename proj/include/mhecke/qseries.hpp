#pragma once

// Truncated Laurent q-expansions over QuadTowerNumber.
//
// A QSeries holds coeff(k) of q^{offset+k} for 0 <= k < size(); size() is the
// truncation (number of known coefficients).  The offset is rational so raw
// eta quotients with their q^{1/24} prefactor are representable; arithmetic
// on series whose offsets differ by a non-integer is rejected.  Truncation
// propagates pessimistically: the result of a binary operation is known to
// as many terms as the weaker operand guarantees.

#include <utility>
#include <vector>

#include "mhecke/errors.hpp"
#include "mhecke/quad_tower.hpp"

namespace mhecke {

class QSeries {
public:
    QSeries() : offset_(0) {}

    QSeries(Rational offset, std::vector<QuadTowerNumber> coeffs)
        : offset_(std::move(offset)), c_(std::move(coeffs)) {
        normalize();
    }

    // Constant series value + O(q^terms).
    static QSeries constant(const QuadTowerNumber& value, long long terms) {
        std::vector<QuadTowerNumber> c(static_cast<std::size_t>(terms));
        if (terms < 1) throw BadInput("QSeries::constant: need at least one term");
        c[0] = value;
        return QSeries(Rational(0), std::move(c));
    }

    static QSeries one(long long terms) { return constant(QuadTowerNumber(1), terms); }

    // The monomial q^power, known to `terms` coefficients past the offset.
    static QSeries monomial(const Rational& power, long long terms) {
        std::vector<QuadTowerNumber> c(static_cast<std::size_t>(terms));
        c[0] = QuadTowerNumber(1);
        return QSeries(power, std::move(c));
    }

    const Rational& offset() const { return offset_; }
    long long size() const { return static_cast<long long>(c_.size()); }
    bool is_zero() const { return c_.empty() || leading().is_zero(); }

    long long integer_offset() const {
        if (!is_integral(offset_))
            throw FractionalOffset("QSeries: offset " + offset_str() + " is not an integer");
        return static_cast<long long>(rat_num(offset_));
    }

    const QuadTowerNumber& coeff_rel(long long k) const {
        static const QuadTowerNumber zero;
        if (k < 0) return zero;
        if (k >= size())
            throw InsufficientTruncation("QSeries: coefficient index " + std::to_string(k) +
                                         " beyond truncation " + std::to_string(size()));
        return c_[static_cast<std::size_t>(k)];
    }

    // Coefficient of q^power; power below the offset is exactly zero, power at
    // or beyond the truncation bound throws.
    QuadTowerNumber coeff_at(const Rational& power) const {
        Rational rel = power - offset_;
        if (rel < 0) return QuadTowerNumber(0);
        if (!is_integral(rel)) return QuadTowerNumber(0);
        Integer k = rat_num(rel);
        return coeff_rel(static_cast<long long>(k));
    }

    const QuadTowerNumber& leading() const {
        if (c_.empty()) throw BadInput("QSeries: empty series has no leading coefficient");
        return c_[0];
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        if (a.is_zero()) return align_zero(a, b);
        if (b.is_zero()) return align_zero(b, a);
        Rational diff = b.offset_ - a.offset_;
        if (!is_integral(diff))
            throw BadInput("QSeries: cannot add series on incompatible q-power grids (offsets " +
                           a.offset_str() + " and " + b.offset_str() + ")");
        Rational off = a.offset_ < b.offset_ ? a.offset_ : b.offset_;
        long long sa = static_cast<long long>(rat_num(a.offset_ - off));
        long long sb = static_cast<long long>(rat_num(b.offset_ - off));
        long long known = std::min(sa + a.size(), sb + b.size());
        std::vector<QuadTowerNumber> c(static_cast<std::size_t>(known));
        for (long long k = 0; k < known; ++k) {
            QuadTowerNumber v;
            if (k - sa >= 0 && k - sa < a.size()) v += a.c_[static_cast<std::size_t>(k - sa)];
            if (k - sb >= 0 && k - sb < b.size()) v += b.c_[static_cast<std::size_t>(k - sb)];
            c[static_cast<std::size_t>(k)] = v;
        }
        return QSeries(off, std::move(c));
    }

    friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

    QSeries operator-() const {
        QSeries out = *this;
        for (auto& v : out.c_) v = -v;
        return out;
    }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        if (a.is_zero() || b.is_zero()) {
            QSeries z;
            z.offset_ = 0;
            z.c_.assign(static_cast<std::size_t>(std::min(a.size(), b.size())),
                        QuadTowerNumber(0));
            if (z.c_.empty()) z.c_.assign(1, QuadTowerNumber(0));
            return z;
        }
        long long n = std::min(a.size(), b.size());
        std::vector<QuadTowerNumber> c(static_cast<std::size_t>(n));
        for (long long i = 0; i < std::min<long long>(a.size(), n); ++i) {
            if (a.c_[static_cast<std::size_t>(i)].is_zero()) continue;
            long long jmax = std::min<long long>(b.size(), n - i);
            for (long long j = 0; j < jmax; ++j) {
                if (b.c_[static_cast<std::size_t>(j)].is_zero()) continue;
                c[static_cast<std::size_t>(i + j)] +=
                    a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
            }
        }
        return QSeries(a.offset_ + b.offset_, std::move(c));
    }

    QSeries scaled(const QuadTowerNumber& s) const {
        QSeries out = *this;
        for (auto& v : out.c_) v = v * s;
        out.normalize();
        return out;
    }

    // Multiplicative inverse of q^offset * (c0 + ...), c0 != 0.
    QSeries inverse() const {
        if (is_zero()) throw DivisionByZero("QSeries: inverse of the zero series");
        long long n = size();
        std::vector<QuadTowerNumber> inv(static_cast<std::size_t>(n));
        QuadTowerNumber lead_inv = c_[0].inverse();
        inv[0] = lead_inv;
        for (long long k = 1; k < n; ++k) {
            QuadTowerNumber s;
            for (long long j = 1; j <= k; ++j)
                s += c_[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(k - j)];
            inv[static_cast<std::size_t>(k)] = -(lead_inv * s);
        }
        return QSeries(-offset_, std::move(inv));
    }

    friend QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.inverse(); }

    QSeries pow_int(long long e) const {
        if (e == 0) return one(size() > 0 ? size() : 1);
        if (e < 0) return inverse().pow_int(-e);
        QSeries base = *this;
        QSeries acc = one(size());
        acc.offset_ = 0;
        long long n = e;
        while (n > 0) {
            if (n & 1) acc = acc * base;
            base = (n >>= 1) ? base * base : base;
        }
        return acc;
    }

    // q -> q^m.
    QSeries substituted_power(long long m) const {
        if (m < 1) throw BadInput("substituted_power: m must be positive");
        if (m == 1) return *this;
        std::vector<QuadTowerNumber> c(static_cast<std::size_t>((size() - 1) * m + 1));
        for (long long k = 0; k < size(); ++k)
            c[static_cast<std::size_t>(k * m)] = c_[static_cast<std::size_t>(k)];
        return QSeries(offset_ * m, std::move(c));
    }

    // Theta operator (1/2*pi*i) d/dtau: coefficient of q^r is multiplied by r.
    QSeries theta() const {
        QSeries out = *this;
        for (long long k = 0; k < size(); ++k)
            out.c_[static_cast<std::size_t>(k)] =
                out.c_[static_cast<std::size_t>(k)] * QuadTowerNumber(offset_ + k);
        out.normalize();
        return out;
    }

    QSeries truncated(long long terms) const {
        if (terms >= size()) return *this;
        if (terms < 1) throw BadInput("truncated: need at least one term");
        std::vector<QuadTowerNumber> c(c_.begin(), c_.begin() + terms);
        return QSeries(offset_, std::move(c));
    }

    QSeries shifted(const Rational& dq) const {
        QSeries out = *this;
        out.offset_ += dq;
        return out;
    }

    // Exact equality of the known data.
    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.offset_ == b.offset_ && a.c_ == b.c_;
    }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    // Equality of all coefficients both series know (the common window).
    static bool agree_on_overlap(const QSeries& a, const QSeries& b) {
        if (a.is_zero() && b.is_zero()) return true;
        Rational lo = a.offset_ < b.offset_ ? a.offset_ : b.offset_;
        Rational hi_a = a.offset_ + a.size();
        Rational hi_b = b.offset_ + b.size();
        Rational hi = hi_a < hi_b ? hi_a : hi_b;
        if (!is_integral(b.offset_ - a.offset_)) return false;
        for (Rational p = lo; p < hi; p += 1)
            if (a.coeff_at(p) != b.coeff_at(p)) return false;
        return true;
    }

    std::string offset_str() const {
        std::string s = rat_num(offset_).str();
        if (rat_den(offset_) != 1) s += "/" + rat_den(offset_).str();
        return s;
    }

private:
    Rational offset_;
    std::vector<QuadTowerNumber> c_;

    // Shift leading zeros into the offset; an identically-zero window keeps
    // its length as the truncation witness.
    void normalize() {
        std::size_t k = 0;
        while (k < c_.size() && c_[k].is_zero()) ++k;
        if (k == c_.size()) {
            offset_ = 0;
            return;
        }
        if (k > 0) {
            offset_ += static_cast<long long>(k);
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k));
        }
    }

    // Adding the zero series only clips the truncation window.
    static QSeries align_zero(const QSeries& z, const QSeries& other) {
        long long known = std::min(z.size(), other.size());
        if (other.is_zero()) {
            QSeries out;
            out.c_.assign(static_cast<std::size_t>(std::max<long long>(known, 1)),
                          QuadTowerNumber(0));
            return out;
        }
        return other.truncated(std::max<long long>(known, 1));
    }
};

// Formal logarithm of a unit series f = 1 + O(q) (offset 0, leading 1).
inline QSeries log_unit(const QSeries& f) {
    if (f.is_zero() || !(f.offset() == 0) || !f.leading().is_one())
        throw NotAUnit("log_unit: series must be 1 + O(q)");
    long long n = f.size();
    std::vector<QuadTowerNumber> l(static_cast<std::size_t>(n));
    // n*l_n = n*a_n - sum_{k<n} k*l_k*a_{n-k}
    for (long long m = 1; m < n; ++m) {
        QuadTowerNumber s = QuadTowerNumber(m) * f.coeff_rel(m);
        for (long long k = 1; k < m; ++k)
            s -= QuadTowerNumber(k) * l[static_cast<std::size_t>(k)] * f.coeff_rel(m - k);
        l[static_cast<std::size_t>(m)] = s / QuadTowerNumber(m);
    }
    return QSeries(Rational(0), std::move(l));
}

// Formal exponential of a series with zero constant term.
inline QSeries exp_zero(const QSeries& g) {
    long long known = g.size();
    if (!g.is_zero()) {
        if (!is_integral(g.offset()))
            throw FractionalOffset("exp_zero: fractional leading power");
        long long off = g.integer_offset();
        if (off < 1) throw NonzeroConstant("exp_zero: series has a nonzero constant term");
        known = off + g.size();
    }
    std::vector<QuadTowerNumber> e(static_cast<std::size_t>(std::max<long long>(known, 1)));
    e[0] = QuadTowerNumber(1);
    // n*e_n = sum_{k<=n} k*g_k*e_{n-k}
    for (long long m = 1; m < known; ++m) {
        QuadTowerNumber s;
        for (long long k = 1; k <= m; ++k) {
            QuadTowerNumber gk = g.coeff_at(Rational(k));
            if (gk.is_zero()) continue;
            s += QuadTowerNumber(k) * gk * e[static_cast<std::size_t>(m - k)];
        }
        e[static_cast<std::size_t>(m)] = s / QuadTowerNumber(m);
    }
    return QSeries(Rational(0), std::move(e));
}

} // namespace mhecke
