#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qk/matrix.hpp"
#include "qk/qscalar.hpp"

#include <random>

using namespace qk;

namespace {

// Independent oracle: evaluate the defining sum of [m]_q numerically.
double qint_oracle(long m, double q) {
    double acc = 0;
    for (long j = 0; j < m; ++j) acc += std::pow(q, double(m - 1 - 2 * j));
    return acc;
}

QScalar random_scalar(std::mt19937 &rng) {
    std::uniform_int_distribution<int> ed(-3, 3), cd(-4, 4);
    LPoly p;
    for (int t = 0; t < 3; ++t)
        p = p + LPoly::monomial(ed(rng), GRat(Rat(cd(rng)), Rat(cd(rng))));
    return QScalar(p);
}

} // namespace

TEST_CASE("quantum integers") {
    CHECK(qint(0).is_zero());
    CHECK(qint(1).is_one());
    // [3] at q0 = 2: 2^-2 + 2^0 + 2^2 = 21/4
    Value v2 = qint(3).evaluate(EvalPoint::exact_q(Rat(2)));
    CHECK(v2.ex == GRat(Rat(21, 4)));
    // classical limit
    Value v1 = qint(7).evaluate(EvalPoint::exact_q(Rat(1)));
    CHECK(v1.ex == GRat(7));
    // numeric oracle
    for (long m = 0; m <= 9; ++m) {
        auto fl = eval_complex(qint(m), 0.73);
        CHECK(std::abs(fl.real() - qint_oracle(m, 0.73)) < 1e-12);
    }
    // q <-> q^-1 symmetry for all m <= 12
    for (long m = 0; m <= 12; ++m) {
        QScalar p = qint(m);
        LPoly flip;
        for (auto &[e, c] : p.num().terms) flip = flip + LPoly::monomial(-e, c);
        CHECK(QScalar(flip) == p);
    }
    CHECK_THROWS(qint(-1));
}

TEST_CASE("quantum factorial and binomial") {
    CHECK(qfact(0).is_one());
    CHECK(qfact(2) == qint(2)); // [1][2] = q + q^-1
    CHECK(qfact(3).evaluate(EvalPoint::exact_q(Rat(1))).ex == GRat(6));
    CHECK(qbinom(5, 0).is_one());
    CHECK(qbinom(2, 1) == qint(2));
    CHECK(qbinom(4, 2).evaluate(EvalPoint::exact_q(Rat(1))).ex == GRat(6));
    CHECK_THROWS(qbinom(3, 4));
    CHECK_THROWS(qbinom(3, -1));
    // symmetry and the Pascal identity, symbolically, for n <= 12
    for (long n = 0; n <= 12; ++n)
        for (long r = 0; r <= n; ++r) {
            CHECK(qbinom(n, r) == qbinom(n, n - r));
            if (r >= 1 && r <= n - 1) {
                QScalar lhs = qbinom(n, r);
                QScalar rhs = QScalar::q_pow(int(-r)) * qbinom(n - 1, r) +
                              QScalar::q_pow(int(n - r)) * qbinom(n - 1, r - 1);
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("altint variants") {
    QScalar alpha = QScalar::q_pow(-1);
    CHECK(altint(0, alpha, AltVariant::inclusive).is_one());
    CHECK(altint(0, alpha, AltVariant::exclusive).is_zero());
    CHECK(altint(2, alpha, AltVariant::exclusive) == QScalar::one() + alpha);
    // classical limit: exclusive (k)_1 = k, inclusive = k + 1
    for (long k = 0; k <= 6; ++k) {
        CHECK(altint(k, QScalar::one(), AltVariant::exclusive) == QScalar(k));
        CHECK(altint(k, QScalar::one(), AltVariant::inclusive) == QScalar(k + 1));
    }
}

TEST_CASE("evaluate") {
    // [2]_q at q0 = 1/2: 1/2 + 2 = 5/2
    Value v = qint(2).evaluate(EvalPoint::exact_q(Rat(1, 2)));
    CHECK(v.ex == GRat(Rat(5, 2)));
    CHECK(QScalar::one().evaluate(EvalPoint::exact_q(Rat(7, 3))).ex == GRat(1));
    // odd s-exponent at non-square q0: precision-mode error in exact mode
    CHECK_THROWS(QScalar::s_pow(1).evaluate(EvalPoint::exact_q(Rat(1, 2))));
    // ... but fine at a perfect square
    CHECK(QScalar::s_pow(1).evaluate(EvalPoint::exact_q(Rat(9, 4))).ex == GRat(Rat(3, 2)));
    // and fine in floating mode
    auto f = QScalar::s_pow(1).evaluate(EvalPoint::floating(0.5));
    CHECK(std::abs(f.fl.real() - std::sqrt(0.5)) < 1e-14);

    // evaluation is a ring homomorphism on random pairs
    std::mt19937 rng(7);
    for (int t = 0; t < 40; ++t) {
        QScalar x = random_scalar(rng), y = random_scalar(rng);
        for (double q0 : {0.5, 0.8, 1.3}) {
            auto ex = eval_complex(x, q0), ey = eval_complex(y, q0);
            CHECK(std::abs(eval_complex(x + y, q0) - (ex + ey)) < 1e-9);
            CHECK(std::abs(eval_complex(x * y, q0) - (ex * ey)) < 1e-9);
        }
        Rat q0(4, 9);
        auto vx = eval_ext2(x, q0), vy = eval_ext2(y, q0);
        CHECK(eval_ext2(x * y, q0) == vx * vy);
        CHECK(eval_ext2(x + y, q0) == vx + vy);
        if (!x.is_zero()) CHECK(eval_ext2(x.inv(), q0) == Ext2(GRat(1), GRat(0), q0) / vx);
    }
}

TEST_CASE("star conjugation is an involutive homomorphism fixing s") {
    std::mt19937 rng(11);
    for (int t = 0; t < 30; ++t) {
        QScalar x = random_scalar(rng), y = random_scalar(rng);
        CHECK(x.conj().conj() == x);
        CHECK((x * y).conj() == x.conj() * y.conj()); // scalars commute
        CHECK((x * y).conj() == y.conj() * x.conj());
        CHECK((x + y).conj() == x.conj() + y.conj());
    }
    CHECK(QScalar::i().conj() == -QScalar::i());
    CHECK(QScalar::s_pow(3).conj() == QScalar::s_pow(3));
}

TEST_CASE("fraction field normalization and rendering") {
    QScalar half = QScalar::one() / qint(2);
    CHECK(!half.is_laurent());
    CHECK(half * qint(2) == QScalar::one());
    CHECK(qint(2).str() == "1*q^-1 + 1*q^1");
    CHECK((QScalar::s_pow(1)).str() == "1*q^(1/2)");
    CHECK(QScalar::zero().str() == "0");
}

TEST_CASE("exact matrix algebra over GRat") {
    Matrix<GRat> A(3, 3);
    A(0, 0) = GRat(2);
    A(0, 1) = GRat(1);
    A(1, 1) = GRat(1);
    A(1, 2) = GRat(Rat(1, 2));
    A(2, 0) = GRat(1);
    A(2, 2) = GRat(3);
    CHECK(rank(A) == 3);
    Matrix<GRat> I = A * inverse(A);
    CHECK((I - Matrix<GRat>::identity(3)).is_zero());

    Matrix<GRat> S(2, 3); // rank 1
    S(0, 0) = GRat(1);
    S(0, 1) = GRat(2);
    S(0, 2) = GRat(3);
    S(1, 0) = GRat(2);
    S(1, 1) = GRat(4);
    S(1, 2) = GRat(6);
    CHECK(rank(S) == 1);
    auto ker = nullspace(S);
    CHECK(ker.cols == 2);
    CHECK((S * ker).is_zero());
}

TEST_CASE("matrix algebra over the symbolic field") {
    Matrix<QScalar> A(2, 2);
    A(0, 0) = qint(2);
    A(0, 1) = QScalar::one();
    A(1, 0) = QScalar::q_pow(1);
    A(1, 1) = qint(3);
    auto Ai = inverse(A);
    CHECK((A * Ai - Matrix<QScalar>::identity(2)).is_zero());
}

TEST_CASE("hermitian definiteness pivots") {
    auto sgn = +[](const GRat &x) {
        if (!x.is_real()) throw std::domain_error("not real");
        return x.re == 0 ? 0 : (x.re > 0 ? 1 : -1);
    };
    Matrix<GRat> G(2, 2);
    G(0, 0) = GRat(2);
    G(0, 1) = GRat::i();
    G(1, 0) = -GRat::i();
    G(1, 1) = GRat(1);
    CHECK(hermitian_definiteness(G, sgn) == 1);
    G(1, 1) = GRat(Rat(1, 2)); // det = 0
    CHECK(hermitian_definiteness(G, sgn) == 0);
    G(1, 1) = GRat(Rat(1, 4));
    CHECK(hermitian_definiteness(G, sgn) == -1);
}
