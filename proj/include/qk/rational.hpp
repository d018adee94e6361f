#pragma once

#include <gmpxx.h>
#include <complex>
#include <cstdint>
#include <string>

namespace qk {

using Rat = mpq_class;

/// Gaussian rational: re + im*i with exact rational parts.
struct GRat {
    Rat re, im;

    GRat() : re(0), im(0) {}
    GRat(long v) : re(v), im(0) {}
    GRat(const Rat &r) : re(r), im(0) {}
    GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GRat i() { return GRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GRat conj() const { return GRat(re, -im); }

    GRat operator-() const { return GRat(-re, -im); }
    GRat &operator+=(const GRat &o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GRat &operator-=(const GRat &o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GRat operator+(GRat a, const GRat &b) { return a += b; }
    friend GRat operator-(GRat a, const GRat &b) { return a -= b; }
    friend GRat operator*(const GRat &a, const GRat &b) {
        return GRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    GRat &operator*=(const GRat &o) { return *this = *this * o; }
    friend GRat operator/(const GRat &a, const GRat &b) {
        Rat n = b.re * b.re + b.im * b.im;
        return GRat((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
    }
    GRat &operator/=(const GRat &o) { return *this = *this / o; }

    friend bool operator==(const GRat &a, const GRat &b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GRat &a, const GRat &b) { return !(a == b); }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    std::string str() const;
};

std::string rat_str(const Rat &r);

/// Parse "p/q" or "p" into an exact rational. Throws std::invalid_argument on bad input.
Rat parse_rat(const std::string &s);

/// True if r is the square of a rational; if so *root is set to the positive square root.
bool rat_sqrt(const Rat &r, Rat *root);

} // namespace qk
