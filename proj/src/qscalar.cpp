#include "qk/qscalar.hpp"

#include <cmath>
#include <sstream>

namespace qk {

// -- LPoly ------------------------------------------------------------------

LPoly LPoly::operator-() const {
    LPoly r;
    for (auto &[e, c] : terms) r.terms[e] = -c;
    return r;
}

LPoly operator+(const LPoly &a, const LPoly &b) {
    LPoly r = a;
    for (auto &[e, c] : b.terms) {
        auto it = r.terms.find(e);
        if (it == r.terms.end()) {
            r.terms[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms.erase(it);
        }
    }
    return r;
}

LPoly operator-(const LPoly &a, const LPoly &b) { return a + (-b); }

LPoly operator*(const LPoly &a, const LPoly &b) {
    LPoly r;
    for (auto &[ea, ca] : a.terms)
        for (auto &[eb, cb] : b.terms) {
            GRat p = ca * cb;
            if (p.is_zero()) continue;
            auto it = r.terms.find(ea + eb);
            if (it == r.terms.end()) {
                if (!p.is_zero()) r.terms[ea + eb] = p;
            } else {
                it->second += p;
                if (it->second.is_zero()) r.terms.erase(it);
            }
        }
    return r;
}

LPoly LPoly::conj() const {
    LPoly r;
    for (auto &[e, c] : terms) r.terms[e] = c.conj();
    return r;
}

namespace {

// Shift so the lowest exponent is 0 (true polynomial), returning the shift.
LPoly shift_to_poly(const LPoly &p, int *shift) {
    if (p.is_zero()) {
        *shift = 0;
        return p;
    }
    *shift = p.low();
    LPoly r;
    for (auto &[e, c] : p.terms) r.terms[e - *shift] = c;
    return r;
}

// Polynomial division a = q*b + r in GRat[x] (nonneg exponents), degree(r) < degree(b).
void poly_divmod(const LPoly &a, const LPoly &b, LPoly *quot, LPoly *rem) {
    LPoly r = a, q;
    int db = b.high();
    const GRat &lead = b.terms.rbegin()->second;
    while (!r.is_zero() && r.high() >= db) {
        int e = r.high() - db;
        GRat c = r.terms.rbegin()->second / lead;
        LPoly t = LPoly::monomial(e, c);
        q = q + t;
        r = r - t * b;
    }
    if (quot) *quot = q;
    if (rem) *rem = r;
}

LPoly make_monic(const LPoly &p) {
    if (p.is_zero()) return p;
    const GRat &lead = p.terms.rbegin()->second;
    LPoly r;
    for (auto &[e, c] : p.terms) r.terms[e] = c / lead;
    return r;
}

} // namespace

LPoly lpoly_gcd(const LPoly &a0, const LPoly &b0) {
    int sh;
    LPoly a = shift_to_poly(a0, &sh), b = shift_to_poly(b0, &sh);
    while (!b.is_zero()) {
        LPoly r;
        poly_divmod(a, b, nullptr, &r);
        a = b;
        int s2;
        b = shift_to_poly(r, &s2);
    }
    return make_monic(a);
}

std::optional<LPoly> LPoly::divide_exact(const LPoly &b) const {
    if (b.is_zero()) return std::nullopt;
    if (is_zero()) return LPoly::zero();
    int sa, sb;
    LPoly pa = shift_to_poly(*this, &sa), pb = shift_to_poly(b, &sb);
    LPoly q, r;
    poly_divmod(pa, pb, &q, &r);
    if (!r.is_zero()) return std::nullopt;
    LPoly out;
    for (auto &[e, c] : q.terms) out.terms[e + sa - sb] = c;
    return out;
}

// -- QScalar ----------------------------------------------------------------

QScalar::QScalar(LPoly n, LPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("QScalar: zero denominator");
    normalize();
}

void QScalar::normalize() {
    if (num_.is_zero()) {
        den_ = LPoly::one();
        return;
    }
    LPoly g = lpoly_gcd(num_, den_);
    if (!(g == LPoly::one())) {
        num_ = *num_.divide_exact(g);
        den_ = *den_.divide_exact(g);
    }
    // Make den a polynomial with lowest exponent 0 and lowest coefficient 1.
    int shift = den_.low();
    GRat lowc = den_.terms.begin()->second;
    LPoly nn, nd;
    for (auto &[e, c] : num_.terms) nn.terms[e - shift] = c / lowc;
    for (auto &[e, c] : den_.terms) nd.terms[e - shift] = c / lowc;
    num_ = std::move(nn);
    den_ = std::move(nd);
}

bool QScalar::is_one() const { return den_ == LPoly::one() && num_ == LPoly::one(); }
bool QScalar::is_laurent() const { return den_ == LPoly::one(); }

QScalar QScalar::operator-() const {
    QScalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

QScalar operator+(const QScalar &a, const QScalar &b) {
    return QScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
QScalar operator-(const QScalar &a, const QScalar &b) {
    return QScalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
QScalar operator*(const QScalar &a, const QScalar &b) {
    return QScalar(a.num_ * b.num_, a.den_ * b.den_);
}
QScalar operator/(const QScalar &a, const QScalar &b) {
    if (b.is_zero()) throw std::domain_error("QScalar: division by zero");
    return QScalar(a.num_ * b.den_, a.den_ * b.num_);
}

bool QScalar::operator==(const QScalar &o) const { return num_ == o.num_ && den_ == o.den_; }

QScalar QScalar::inv() const {
    if (is_zero()) throw std::domain_error("QScalar: inverse of zero");
    return QScalar(den_, num_);
}

QScalar QScalar::conj() const {
    QScalar r;
    r.num_ = num_.conj();
    r.den_ = den_.conj();
    r.normalize();
    return r;
}

QScalar QScalar::pow(int m) const {
    if (m == 0) return QScalar::one();
    QScalar base = m > 0 ? *this : inv();
    int e = m > 0 ? m : -m;
    QScalar r = QScalar::one();
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

namespace {

std::string lpoly_str(const LPoly &p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto &[e, c] : p.terms) {
        if (!first) out += " + ";
        first = false;
        std::string cs = c.str();
        if (!c.is_real() && c.re != 0) cs = "(" + cs + ")";
        out += cs;
        if (e != 0) {
            out += "*q^";
            if (e % 2 == 0) {
                out += std::to_string(e / 2);
            } else {
                out += "(" + std::to_string(e) + "/2)";
            }
        }
    }
    return out;
}

} // namespace

std::string QScalar::str() const {
    if (is_laurent()) return lpoly_str(num_);
    return "(" + lpoly_str(num_) + ")/(" + lpoly_str(den_) + ")";
}

namespace {

// exact evaluation of an LPoly at s with s^2 = q0; needs sqrt(q0) rational when
// odd exponents occur. Returns false in that case.
bool lpoly_eval_exact(const LPoly &p, const Rat &q0, GRat *out) {
    bool has_odd = false;
    for (auto &[e, c] : p.terms)
        if (e % 2 != 0) has_odd = true;
    Rat root;
    if (has_odd && !rat_sqrt(q0, &root)) return false;
    GRat acc(0);
    for (auto &[e, c] : p.terms) {
        Rat v(1);
        int ae = e >= 0 ? e : -e;
        Rat base = (e % 2 == 0) ? q0 : root; // q0^(e/2) or root^e
        int steps = (e % 2 == 0) ? ae / 2 : ae;
        for (int k = 0; k < steps; ++k) v *= base;
        if (e < 0) v = 1 / v;
        acc += c * GRat(v);
    }
    *out = acc;
    return true;
}

std::complex<double> lpoly_eval_c(const LPoly &p, double s) {
    std::complex<double> acc{0, 0};
    for (auto &[e, c] : p.terms) acc += c.to_complex() * std::pow(s, double(e));
    return acc;
}

} // namespace

Value QScalar::evaluate(const EvalPoint &at) const {
    Value v;
    if (at.exact) {
        GRat n, d;
        if (lpoly_eval_exact(num_, at.q0, &n) && lpoly_eval_exact(den_, at.q0, &d)) {
            if (d.is_zero()) throw std::domain_error("QScalar: pole at evaluation point");
            v.exact = true;
            v.ex = n / d;
            v.fl = v.ex.to_complex();
            return v;
        }
        throw std::domain_error(
            "QScalar: odd s-exponent at q0 with irrational square root (precision-mode error)");
    }
    v.exact = false;
    double s = std::sqrt(at.q0f);
    auto d = lpoly_eval_c(den_, s);
    v.fl = lpoly_eval_c(num_, s) / d;
    return v;
}

Ext2 eval_ext2(const QScalar &x, const Rat &q0) {
    auto split = [&](const LPoly &p) {
        GRat even(0), odd(0);
        for (auto &[e, c] : p.terms) {
            int half = (e >= 0 ? e : e - 1) / 2; // floor for odd negatives
            Rat v(1);
            if (e % 2 == 0) {
                int m = e / 2;
                int am = m >= 0 ? m : -m;
                for (int k = 0; k < am; ++k) v *= q0;
                if (m < 0) v = 1 / v;
                even += c * GRat(v);
            } else {
                // s^e = s * q0^{(e-1)/2}
                int m = (e - 1) / 2;
                int am = m >= 0 ? m : -m;
                for (int k = 0; k < am; ++k) v *= q0;
                if (m < 0) v = 1 / v;
                odd += c * GRat(v);
                (void)half;
            }
        }
        return Ext2(even, odd, q0);
    };
    Ext2 n = split(x.num()), d = split(x.den());
    return n / d;
}

std::complex<double> eval_complex(const QScalar &x, double q0) {
    EvalPoint p = EvalPoint::floating(q0);
    return x.evaluate(p).fl;
}

int Ext2::sign_real() const {
    if (!a.is_real() || !b.is_real()) throw std::domain_error("Ext2: sign of non-real element");
    const Rat &x = a.re;
    const Rat &y = b.re;
    if (y == 0) return x == 0 ? 0 : (x > 0 ? 1 : -1);
    if (x == 0) return y > 0 ? 1 : -1;
    // sign of x + y*sqrt(q0)
    if (x > 0 && y > 0) return 1;
    if (x < 0 && y < 0) return -1;
    Rat x2 = x * x, y2 = y * y * q0;
    if (x > 0) return x2 > y2 ? 1 : (x2 == y2 ? 0 : -1);
    return x2 > y2 ? -1 : (x2 == y2 ? 0 : 1);
}

std::string Ext2::str() const {
    if (b.is_zero()) return a.str();
    std::string out = a.is_zero() ? "" : a.str();
    if (!out.empty()) out += " + ";
    out += "(" + b.str() + ")*s";
    return out;
}

// -- quantum combinatorics ----------------------------------------------------

QScalar qint(long m) {
    if (m < 0) throw std::domain_error("qint: negative argument");
    LPoly p;
    for (long j = 0; j < m; ++j) {
        int e = int(2 * (m - 1 - 2 * j)); // q^{m-1-2j}
        p = p + LPoly::monomial(e, GRat(1));
    }
    return QScalar(p);
}

QScalar qfact(long m) {
    if (m < 0) throw std::domain_error("qfact: negative argument");
    QScalar r = QScalar::one();
    for (long j = 1; j <= m; ++j) r = r * qint(j);
    return r;
}

QScalar qbinom(long n, long r) {
    if (r < 0 || r > n) throw std::domain_error("qbinom: need 0 <= r <= n");
    QScalar num = qfact(n), den = qfact(r) * qfact(n - r);
    QScalar out = num / den;
    if (!out.is_laurent())
        throw std::runtime_error("qbinom: non-exact division (broken arithmetic)");
    return out;
}

QScalar altint(long k, const QScalar &alpha, AltVariant variant) {
    if (k < 0) throw std::domain_error("altint: negative argument");
    long top = (variant == AltVariant::inclusive) ? k : k - 1;
    QScalar acc = QScalar::zero(), p = QScalar::one();
    for (long j = 0; j <= top; ++j) {
        acc += p;
        p = p * alpha;
    }
    return acc;
}

QScalar qint_at(const QScalar &p, long m) {
    if (m < 0) throw std::domain_error("qint_at: negative argument");
    QScalar acc = QScalar::zero();
    for (long j = 0; j < m; ++j) acc += p.pow(int(m - 1 - 2 * j));
    return acc;
}

QScalar qfact_at(const QScalar &p, long m) {
    QScalar r = QScalar::one();
    for (long j = 1; j <= m; ++j) r = r * qint_at(p, j);
    return r;
}

} // namespace qk
