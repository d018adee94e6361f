#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qk/peterweyl.hpp"

using namespace qk;

namespace {

const SUq2 &alg() {
    static SUq2 a;
    return a;
}

PeterWeyl &pw() {
    static PeterWeyl p(alg());
    return p;
}

int ext2_sign(const Ext2 &x) { return x.sign_real(); }

} // namespace

TEST_CASE("block dimensions follow the Clebsch-Gordan ladder") {
    Truncation t0 = pw().build(0);
    CHECK(t0.blocks.size() == 1);
    CHECK(t0.blocks[0].dim() == 1);
    CHECK(t0.blocks[0].slices.at(0).basis[0] == NCPoly::unit());

    Truncation t = pw().build(3);
    REQUIRE(t.blocks.size() == 4);
    for (int n = 0; n <= 3; ++n) CHECK(t.blocks[size_t(n)].dim() == (n + 1) * (n + 1));
}

TEST_CASE("weight slices match direct enumeration") {
    Truncation t = pw().build(3);
    // slice dim of block n at weight w is n+1 when |w| <= n, w = n mod 2
    for (auto &b : t.blocks) {
        for (int w = -4; w <= 4; ++w) {
            const Slice *s = t.slice(b.label, w);
            bool expected = std::abs(w) <= b.label && ((w - b.label) % 2 == 0);
            if (expected)
                CHECK(int(s->basis.size()) == b.label + 1);
            else
                CHECK(s == nullptr);
        }
    }
    // weight-0 slice across blocks: 1 + 3 pattern at L = 2 (odd labels skip 0)
    Truncation t2 = pw().build(2);
    CHECK(pw().weight_slice(t2, 0).size() == 4);
    CHECK(pw().weight_slice(t2, 5).empty());
    // unit is in the weight-0 slice
    auto ws = pw().weight_slice(t2, 0);
    CHECK(ws[0] == NCPoly::unit());
}

TEST_CASE("gram matrices are hermitian positive definite at rational points") {
    Truncation t = pw().build(3);
    for (auto &b : t.blocks)
        for (auto &[w, s] : b.slices) {
            Matrix<QScalar> g = pw().gram(s.basis);
            CHECK((g - g.dagger()).is_zero());
            for (Rat q0 : {Rat(1, 2), Rat(4, 5), Rat(1)}) {
                Matrix<Ext2> ge(g.rows, g.cols);
                for (int i = 0; i < g.rows; ++i)
                    for (int j = 0; j < g.cols; ++j) ge(i, j) = eval_ext2(g(i, j), q0);
                CHECK(hermitian_definiteness(ge, ext2_sign) == 1);
            }
        }
}

TEST_CASE("distinct blocks are haar-orthogonal") {
    Truncation t = pw().build(3);
    for (size_t m = 0; m < t.blocks.size(); ++m)
        for (size_t n = m + 1; n < t.blocks.size(); ++n)
            for (auto &[w1, s1] : t.blocks[m].slices)
                for (auto &[w2, s2] : t.blocks[n].slices) {
                    if (w1 != w2) continue; // different weights orthogonal by grading
                    for (auto &x : s1.basis)
                        for (auto &y : s2.basis) CHECK(pw().inner(x, y).is_zero());
                }
    // different weights are orthogonal outright (sample)
    auto s1 = t.slice(2, 0), s2 = t.slice(2, 2);
    for (auto &x : s1->basis)
        for (auto &y : s2->basis) CHECK(pw().inner(x, y).is_zero());
}

TEST_CASE("covariant operators preserve blocks") {
    // ◁K acts diagonally on slices; ◁E and ◁F map each block into itself
    Truncation t = pw().build(2);
    for (auto &b : t.blocks)
        for (auto &[w, s] : b.slices)
            for (auto &x : s.basis) {
                NCPoly ex = alg().act_E(x);
                if (ex.is_zero()) continue;
                // expand in the truncation: must be orthogonal to all other blocks
                for (auto &b2 : t.blocks) {
                    if (b2.label == b.label) continue;
                    auto it = b2.slices.find(w - 2);
                    if (it == b2.slices.end()) continue;
                    for (auto &y : it->second.basis) CHECK(pw().inner(ex, y).is_zero());
                }
            }
}

TEST_CASE("gram_inner span error and conjugate symmetry") {
    Truncation t = pw().build(1);
    CHECK(pw().inner(t, NCPoly::unit(), NCPoly::unit()).is_one());
    NCPoly big = NCPoly::monomial("aabb");
    CHECK_THROWS(pw().inner(t, big, big));
    Truncation t3 = pw().build(3);
    auto &s = t3.blocks[2].slices.at(0).basis;
    for (auto &x : s)
        for (auto &y : s) CHECK(pw().inner(x, y) == pw().inner(y, x).conj());
}
