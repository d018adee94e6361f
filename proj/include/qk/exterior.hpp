#pragma once

#include "qk/qscalar.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace qk {

/// Basis label e^+_K ^ e^-_L with K, L strictly increasing subsets of {1..n},
/// stored as bitmasks (bit k-1 = index k).
struct FormLabel {
    uint32_t plus = 0, minus = 0;

    friend bool operator<(const FormLabel &x, const FormLabel &y) {
        return x.plus != y.plus ? x.plus < y.plus : x.minus < y.minus;
    }
    friend bool operator==(const FormLabel &x, const FormLabel &y) {
        return x.plus == y.plus && x.minus == y.minus;
    }
    int deg_plus() const { return __builtin_popcount(plus); }
    int deg_minus() const { return __builtin_popcount(minus); }
    int degree() const { return deg_plus() + deg_minus(); }
};

/// Element of the local exterior algebra of quantum projective space.
struct LocalForm {
    int n = 1;
    std::map<FormLabel, QScalar> terms;

    bool is_zero() const { return terms.empty(); }
    void add_term(const FormLabel &l, const QScalar &c);
    LocalForm operator-() const;
    friend LocalForm operator+(const LocalForm &x, const LocalForm &y);
    friend LocalForm operator-(const LocalForm &x, const LocalForm &y);
    friend LocalForm operator*(const QScalar &c, const LocalForm &x);
    bool operator==(const LocalForm &o) const { return n == o.n && terms == o.terms; }

    /// -1 if mixed, else the common (a,b) bidegree packed as a*8+b... use pair.
    bool homogeneous(int *a, int *b) const;
    std::string str() const;
};

/// The q-Grassmann algebra on e^+_1..e^+_n, e^-_1..e^-_n with the derived
/// mixed commutation table, the local Kaehler form, and the *-structure.
class LocalAlgebra {
  public:
    explicit LocalAlgebra(int rank);

    int rank() const { return n_; }

    LocalForm zero() const { return LocalForm{n_, {}}; }
    LocalForm one() const;
    LocalForm gen_plus(int i) const;  // e^+_i, 1-based
    LocalForm gen_minus(int i) const; // e^-_i
    LocalForm basis_form(const FormLabel &l) const;

    /// All basis labels of bidegree (a,b), in canonical order.
    std::vector<FormLabel> basis(int a, int b) const;
    int dim(int a, int b) const;

    LocalForm wedge(const LocalForm &x, const LocalForm &y) const;

    /// Anti-linear involutive *-map; (e^+-i)* = e^-_i with coefficient 1.
    LocalForm star(const LocalForm &x) const;

    /// Local Kaehler form i * sum t_k e^+_k ^ e^-_k with t_k = q^{(2 rho, wt v_k)}
    /// computed from the A_n root data.
    LocalForm kappa() const;

    /// Exponent (2 rho, wt v_{k+1}) of t_k, k = 1..n (root-system arithmetic).
    int kappa_exponent(int k) const;

  private:
    // straightening of a symbol sequence; symbols: +(i) as +i, -(i) as -i
    void straighten(std::vector<int> sym, QScalar coeff, LocalForm &out) const;

    int n_;
};

} // namespace qk
