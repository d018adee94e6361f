#pragma once

#include "qk/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace qk {

/// Laurent polynomial in the deformation variable s, where s^2 = q.
/// Exponents are s-exponents: q^m is stored as exponent 2m.
struct LPoly {
    std::map<int, GRat> terms; // exponent -> nonzero coefficient

    LPoly() = default;
    static LPoly zero() { return LPoly(); }
    static LPoly one() { return monomial(0, GRat(1)); }
    static LPoly monomial(int exp, GRat c) {
        LPoly p;
        if (!c.is_zero()) p.terms[exp] = std::move(c);
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    int low() const { return terms.begin()->first; }   // requires nonzero
    int high() const { return terms.rbegin()->first; } // requires nonzero

    LPoly operator-() const;
    friend LPoly operator+(const LPoly &a, const LPoly &b);
    friend LPoly operator-(const LPoly &a, const LPoly &b);
    friend LPoly operator*(const LPoly &a, const LPoly &b);

    LPoly conj() const; // i -> -i, s fixed
    bool operator==(const LPoly &o) const { return terms == o.terms; }

    /// Exact division; returns nullopt when b does not divide *this.
    std::optional<LPoly> divide_exact(const LPoly &b) const;
};

LPoly lpoly_gcd(const LPoly &a, const LPoly &b);

struct EvalPoint;
struct Value;

/// Exact scalar: element of the fraction field Q(i)(s), s^2 = q.
/// Kept normalized: num/den reduced, den a monic-lowest polynomial with min exponent 0.
/// Plain Laurent polynomials are exactly the elements with den == 1.
class QScalar {
  public:
    QScalar() : num_(), den_(LPoly::one()) {}
    QScalar(long v) : num_(LPoly::monomial(0, GRat(v))), den_(LPoly::one()) { normalize(); }
    QScalar(const GRat &c) : num_(LPoly::monomial(0, c)), den_(LPoly::one()) { normalize(); }
    QScalar(LPoly n, LPoly d);
    explicit QScalar(LPoly n) : num_(std::move(n)), den_(LPoly::one()) {}

    static QScalar zero() { return QScalar(); }
    static QScalar one() { return QScalar(1); }
    static QScalar i() { return QScalar(GRat::i()); }
    static QScalar q_pow(int m) { return QScalar(LPoly::monomial(2 * m, GRat(1))); }
    static QScalar s_pow(int m) { return QScalar(LPoly::monomial(m, GRat(1))); }
    static QScalar rat(const Rat &r) { return QScalar(GRat(r)); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_laurent() const; // den == 1
    const LPoly &num() const { return num_; }
    const LPoly &den() const { return den_; }

    QScalar operator-() const;
    friend QScalar operator+(const QScalar &a, const QScalar &b);
    friend QScalar operator-(const QScalar &a, const QScalar &b);
    friend QScalar operator*(const QScalar &a, const QScalar &b);
    friend QScalar operator/(const QScalar &a, const QScalar &b);
    QScalar &operator+=(const QScalar &o) { return *this = *this + o; }
    QScalar &operator-=(const QScalar &o) { return *this = *this - o; }
    QScalar &operator*=(const QScalar &o) { return *this = *this * o; }
    QScalar &operator/=(const QScalar &o) { return *this = *this / o; }
    bool operator==(const QScalar &o) const;
    bool operator!=(const QScalar &o) const { return !(*this == o); }

    QScalar inv() const;
    QScalar conj() const; // star-conjugation: fixes s, conjugates coefficients
    QScalar pow(int m) const;

    /// Canonical text: "c*q^(e/2)" pieces joined by " + ", exponents ascending;
    /// proper fractions render "(num)/(den)".
    std::string str() const;

    Value evaluate(const EvalPoint &at) const;

  private:
    void normalize();
    LPoly num_, den_;
};

/// Evaluation point for the deformation parameter.
struct EvalPoint {
    Rat q0;              // used in exact mode; must be > 0
    double q0f = 0.0;    // used in floating mode
    bool exact = true;

    static EvalPoint exact_q(const Rat &q) {
        if (q <= 0) throw std::domain_error("EvalPoint: q0 must be positive");
        EvalPoint p;
        p.q0 = q;
        p.q0f = q.get_d();
        p.exact = true;
        return p;
    }
    static EvalPoint floating(double q) {
        if (q <= 0) throw std::domain_error("EvalPoint: q0 must be positive");
        EvalPoint p;
        p.q0 = Rat(0);
        p.q0f = q;
        p.exact = false;
        return p;
    }
};

/// Result of evaluating a QScalar: exact Gaussian-rational pair or floating pair.
struct Value {
    bool exact = false;
    GRat ex;
    std::complex<double> fl{0.0, 0.0};

    std::complex<double> to_complex() const { return exact ? ex.to_complex() : fl; }
};

/// Quadratic extension Q(i)[s]/(s^2 - q0): exact arithmetic at a fixed rational q0.
/// Elements a + b*s.
struct Ext2 {
    GRat a, b;
    Rat q0 = Rat(1); // shared modulus; operations require matching q0

    Ext2() = default;
    Ext2(long v) : a(v), b(0) {}
    explicit Ext2(GRat x, GRat y = GRat(0), Rat q = Rat(1))
        : a(std::move(x)), b(std::move(y)), q0(std::move(q)) {}

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    Ext2 conj() const { return Ext2(a.conj(), b.conj(), q0); } // i -> -i, s fixed

    Ext2 operator-() const { return Ext2(-a, -b, q0); }
    friend Ext2 operator+(const Ext2 &x, const Ext2 &y) {
        return Ext2(x.a + y.a, x.b + y.b, x.q0 != 0 ? x.q0 : y.q0);
    }
    friend Ext2 operator-(const Ext2 &x, const Ext2 &y) {
        return Ext2(x.a - y.a, x.b - y.b, x.q0 != 0 ? x.q0 : y.q0);
    }
    friend Ext2 operator*(const Ext2 &x, const Ext2 &y) {
        Rat q = x.q0 != 0 ? x.q0 : y.q0;
        return Ext2(x.a * y.a + GRat(q) * (x.b * y.b), x.a * y.b + x.b * y.a, q);
    }
    Ext2 inv() const {
        // (a + bs)(a - bs) = a^2 - b^2 q0, a Gaussian rational; if that is zero
        // the element is w*(1 ± s/sqrt) only when q0 is a perfect square.
        GRat n = a * a - GRat(q0) * (b * b);
        if (!n.is_zero()) {
            GRat ni = GRat(1) / n;
            return Ext2(a * ni, -b * ni, q0);
        }
        if (is_zero()) throw std::domain_error("Ext2: division by zero");
        // a^2 = b^2 q0 with a,b Gaussian rationals forces q0 a rational square.
        Rat r;
        if (!rat_sqrt(q0, &r)) throw std::domain_error("Ext2: non-invertible element");
        // element = (a/b + s) b ; with s = r numerically a = -(±r) b... fall back:
        GRat v = a + GRat(r) * b; // value at s = +r
        if (v.is_zero()) throw std::domain_error("Ext2: division by zero divisor");
        GRat vi = GRat(1) / v;
        return Ext2(vi, GRat(0), q0); // constant representative (s == r in this field)
    }
    friend Ext2 operator/(const Ext2 &x, const Ext2 &y) { return x * y.inv(); }
    Ext2 &operator+=(const Ext2 &o) { return *this = *this + o; }
    Ext2 &operator-=(const Ext2 &o) { return *this = *this - o; }
    Ext2 &operator*=(const Ext2 &o) { return *this = *this * o; }
    Ext2 &operator/=(const Ext2 &o) { return *this = *this / o; }
    bool operator==(const Ext2 &o) const { return a == o.a && b == o.b; }
    bool operator!=(const Ext2 &o) const { return !(*this == o); }

    /// Sign of a real element (b term counts via sqrt(q0) > 0). Throws if not real.
    int sign_real() const;
    std::complex<double> to_complex() const {
        double r = std::sqrt(q0.get_d());
        auto ca = a.to_complex(), cb = b.to_complex();
        return ca + cb * r;
    }
    std::string str() const;
};

/// Evaluate a QScalar into the quadratic extension at rational q0.
Ext2 eval_ext2(const QScalar &x, const Rat &q0);

/// Evaluate a QScalar to a complex double at q0 (s = sqrt(q0)).
std::complex<double> eval_complex(const QScalar &x, double q0);

// -- quantum combinatorics ------------------------------------------------

/// Symmetric quantum integer [m]_q = q^{-(m-1)} + q^{-(m-3)} + ... + q^{m-1}.
QScalar qint(long m);
/// Quantum factorial [m]_q!.
QScalar qfact(long m);
/// Quantum binomial [n r]_q; exact Laurent polynomial.
QScalar qbinom(long n, long r);

enum class AltVariant { inclusive, exclusive };
/// Geometric q-integer (k)_alpha: inclusive sums alpha^0..alpha^k, exclusive alpha^0..alpha^{k-1}.
QScalar altint(long k, const QScalar &alpha, AltVariant variant);

/// [m] at an arbitrary invertible base p (symmetric form).
QScalar qint_at(const QScalar &p, long m);
/// [m]! at base p.
QScalar qfact_at(const QScalar &p, long m);

} // namespace qk
