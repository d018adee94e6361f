#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qk/exterior.hpp"

using namespace qk;

namespace {

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - j + 1) / j;
    return r;
}

std::vector<LocalForm> full_basis(const LocalAlgebra &A) {
    std::vector<LocalForm> out;
    for (int a = 0; a <= A.rank(); ++a)
        for (int b = 0; b <= A.rank(); ++b)
            for (auto &l : A.basis(a, b)) out.push_back(A.basis_form(l));
    return out;
}

} // namespace

TEST_CASE("dimension tables") {
    for (int n = 1; n <= 3; ++n) {
        LocalAlgebra A(n);
        for (int a = 0; a <= n; ++a)
            for (int b = 0; b <= n; ++b) {
                CHECK(A.dim(a, b) == binom(n, a) * binom(n, b));
                CHECK(A.dim(a, b) == A.dim(b, a));
                CHECK(A.dim(a, b) == A.dim(n - a, n - b));
            }
        // row sums: dim of the degree-k piece is binom(2n, k)
        for (int k = 0; k <= 2 * n; ++k) {
            long s = 0;
            for (int a = 0; a <= n; ++a) s += A.dim(a, k - a) * (k - a >= 0 && k - a <= n ? 1 : 0);
            CHECK(s == binom(2 * n, k));
        }
    }
    LocalAlgebra A2(2);
    long d2 = 0;
    for (int a = 0; a <= 2; ++a)
        if (2 - a >= 0 && 2 - a <= 2) d2 += A2.dim(a, 2 - a);
    CHECK(d2 == 6); // binom(4,2)
    LocalAlgebra A3(3);
    long d3 = 0;
    for (int a = 0; a <= 3; ++a)
        if (3 - a >= 0 && 3 - a <= 3) d3 += A3.dim(a, 3 - a);
    CHECK(d3 == 20); // binom(6,3)
}

TEST_CASE("generator relations") {
    LocalAlgebra A(2);
    // e+_2 ^ e+_1 = -q e+_1 ^ e+_2
    CHECK(A.wedge(A.gen_plus(2), A.gen_plus(1)) ==
          -QScalar::q_pow(1) * A.wedge(A.gen_plus(1), A.gen_plus(2)));
    // e-_2 ^ e-_1 = -q^-1 e-_1 ^ e-_2
    CHECK(A.wedge(A.gen_minus(2), A.gen_minus(1)) ==
          -QScalar::q_pow(-1) * A.wedge(A.gen_minus(1), A.gen_minus(2)));
    CHECK(A.wedge(A.gen_plus(1), A.gen_plus(1)).is_zero());
    CHECK(A.wedge(A.gen_minus(2), A.gen_minus(2)).is_zero());
    // rank mismatch is an error
    LocalAlgebra B(3);
    CHECK_THROWS(A.wedge(A.gen_plus(1), B.gen_plus(1)));
}

TEST_CASE("wedge is graded and associative") {
    for (int n = 1; n <= 3; ++n) {
        LocalAlgebra A(n);
        auto basis = full_basis(A);
        // bidegrees add
        for (auto &x : basis)
            for (auto &y : basis) {
                LocalForm w = A.wedge(x, y);
                int xa, xb, ya, yb, wa, wb;
                x.homogeneous(&xa, &xb);
                y.homogeneous(&ya, &yb);
                CHECK(w.homogeneous(&wa, &wb));
                if (!w.is_zero()) {
                    CHECK(wa == xa + ya);
                    CHECK(wb == xb + yb);
                }
            }
        // associativity: all triples for n <= 2, generator x basis x basis for n = 3
        std::vector<LocalForm> lefts;
        if (n <= 2) {
            lefts = basis;
        } else {
            for (int i = 1; i <= n; ++i) {
                lefts.push_back(A.gen_plus(i));
                lefts.push_back(A.gen_minus(i));
            }
        }
        for (auto &x : lefts)
            for (auto &y : basis)
                for (auto &z : basis)
                    CHECK(A.wedge(A.wedge(x, y), z) == A.wedge(x, A.wedge(y, z)));
    }
}

TEST_CASE("nilpotency of odd-degree forms") {
    // valid for the type-A algebra (fails for B-series quantum exterior algebras)
    for (int n = 1; n <= 3; ++n) {
        LocalAlgebra A(n);
        for (int a = 0; a <= n; ++a)
            for (int b = 0; b <= n; ++b) {
                if ((a + b) % 2 == 0) continue;
                for (auto &l : A.basis(a, b)) {
                    LocalForm x = A.basis_form(l);
                    CHECK(A.wedge(x, x).is_zero());
                }
            }
    }
}

TEST_CASE("star is an involutive graded anti-multiplicative map") {
    for (int n = 1; n <= 3; ++n) {
        LocalAlgebra A(n);
        CHECK(A.star(A.one()) == A.one());
        CHECK(A.star(A.gen_plus(1)) == A.gen_minus(1)); // coefficient 1 at q = 1 convention
        auto basis = full_basis(A);
        for (auto &x : basis) {
            CHECK(A.star(A.star(x)) == x);
            int a, b;
            LocalForm sx = A.star(x);
            x.homogeneous(&a, &b);
            int sa, sb;
            CHECK(sx.homogeneous(&sa, &sb));
            CHECK(sa == b);
            CHECK(sb == a);
        }
        // (x ^ y)* = (-1)^{kl} y* ^ x*
        for (auto &x : basis)
            for (auto &y : basis) {
                int xa, xb, ya, yb;
                x.homogeneous(&xa, &xb);
                y.homogeneous(&ya, &yb);
                int k = xa + xb, l = ya + yb;
                LocalForm lhs = A.star(A.wedge(x, y));
                LocalForm rhs = A.wedge(A.star(y), A.star(x));
                if ((k * l) % 2) rhs = -rhs;
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("local kaehler form") {
    {
        LocalAlgebra A(1);
        CHECK(A.kappa_exponent(1) == -1);
        LocalForm k = A.kappa();
        CHECK(k == QScalar::i() * QScalar::q_pow(-1) *
                       A.wedge(A.gen_plus(1), A.gen_minus(1)));
    }
    for (int n = 1; n <= 3; ++n) {
        LocalAlgebra A(n);
        LocalForm k = A.kappa();
        int a, b;
        CHECK(k.homogeneous(&a, &b));
        CHECK(a == 1);
        CHECK(b == 1);
        // real
        CHECK(A.star(k) == k);
        // central: commutes with every basis form
        for (auto &x : full_basis(A)) CHECK(A.wedge(k, x) == A.wedge(x, k));
        // exponents descend by 2 from n-2
        for (int j = 1; j <= n; ++j) CHECK(A.kappa_exponent(j) == n - 2 * j);
        // top power nonzero and the top space is one-dimensional
        LocalForm top = k;
        for (int j = 1; j < n; ++j) top = A.wedge(top, k);
        CHECK(!top.is_zero());
        CHECK(A.dim(n, n) == 1);
        // classical limit: at q = 1 kappa has all coefficients i
        for (auto &[l, c] : k.terms)
            CHECK(c.evaluate(EvalPoint::exact_q(Rat(1))).ex == GRat::i());
    }
}
