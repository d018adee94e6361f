#pragma once

#include "qk/exterior.hpp"
#include "qk/matrix.hpp"
#include "qk/report.hpp"

#include <functional>
#include <optional>

namespace qk {

/// Finite-dimensional bigraded module with a distinguished (1,1)-form action.
/// Matrices are stored per source bidegree; maps leaving the grid are empty.
struct BiGradedSpace {
    int n = 1;                         // half the total degree
    std::vector<int> dims;             // (n+1)^2 entries, index a*(n+1)+b
    std::vector<Matrix<QScalar>> Lmat; // kappa-wedge: (a,b) -> (a+1,b+1)
    std::vector<Matrix<QScalar>> Smat; // calculus star (anti-linear): (a,b) -> (b,a)
    std::vector<Matrix<QScalar>> Gmat; // gram of the inner product per bidegree

    int idx(int a, int b) const { return a * (n + 1) + b; }
    bool ok(int a, int b) const { return a >= 0 && a <= n && b >= 0 && b <= n; }
    int dim(int a, int b) const { return ok(a, b) ? dims[size_t(idx(a, b))] : 0; }
};

/// The Hermitian/Kaehler operator suite: Lefschetz sl2 triple, primitive
/// decomposition, (deformed) Hodge map by the Weil formula, metric adjoints,
/// grading operators, and the exact identity verifiers.
class KahlerEngine {
  public:
    explicit KahlerEngine(BiGradedSpace space);

    const BiGradedSpace &space() const { return S_; }
    int n() const { return S_.n; }

    Matrix<QScalar> L(int a, int b) const;
    Matrix<QScalar> Lpow(int a, int b, int m) const;
    Matrix<QScalar> H(int a, int b) const; // (k - n) id

    int primitive_dim(int a, int b) const;
    /// Columns form the chosen basis of P^(a,b).
    Matrix<QScalar> primitive(int a, int b) const;
    /// Columns L^j(p_i) spanning the bidegree, ordered by (j, source label).
    const Matrix<QScalar> &lefschetz_basis(int a, int b) const;
    const std::vector<int> &lefschetz_levels(int a, int b) const;

    /// Weil-formula Hodge map at Hodge parameter p; (a,b) -> (n-b,n-a).
    Matrix<QScalar> hodge(int a, int b, const QScalar &p) const;
    /// Dual Lefschetz at parameter p: *_p^{-1} L *_p; (a,b) -> (a-1,b-1).
    Matrix<QScalar> lambda(int a, int b, const QScalar &p) const;
    /// Gram adjoint of L (degree (-1,-1)) with respect to the stored metric.
    Matrix<QScalar> lambda_adjoint(int a, int b) const;

    Matrix<QScalar> grading_gamma(int a, int b) const;
    Matrix<QScalar> grading_tau(int a, int b) const;
    Matrix<QScalar> grading_taubar(int a, int b) const;
    Matrix<QScalar> grading_level(int a, int b) const; // Lefschetz level operator

    /// Engine for the opposite structure (-kappa); metric is reused.
    KahlerEngine opposite() const;

    // verifier suites (append to the report)
    void verify_hermitian_gate(Report &r) const;
    void verify_hodge_properties(const QScalar &p, Report &r) const;
    void verify_sl2(Report &r) const;
    void verify_upsl2(const QScalar &p, Report &r) const;
    void verify_metric(const std::vector<Rat> &points, Report &r) const;
    void verify_opposite(Report &r) const;
    void verify_gradings(const QScalar &p, Report &r) const;
    void verify_primitive_dims(Report &r) const;

  private:
    void decompose();
    BiGradedSpace S_;
    std::vector<Matrix<QScalar>> prim_;    // primitive bases per bidegree
    std::vector<Matrix<QScalar>> lef_;     // Lefschetz-adapted basis T per bidegree
    std::vector<Matrix<QScalar>> lef_inv_; // T^{-1}
    std::vector<std::vector<int>> levels_; // Lefschetz level per T column
};

/// Adjoint of A: (src, G_src) -> (tgt, G_tgt) with respect to sesquilinear
/// inner products <x,y> = x^T G conj(y).
Matrix<QScalar> gram_adjoint(const Matrix<QScalar> &A, const Matrix<QScalar> &G_src,
                             const Matrix<QScalar> &G_tgt);

/// Entrywise conjugate.
Matrix<QScalar> conj_mat(const Matrix<QScalar> &A);

/// Build the bigraded space of the local exterior algebra, including the
/// metric computed from the Weil formula: g(x, y) = *(x ^ *(y^*)).
BiGradedSpace local_space(const LocalAlgebra &A);

/// The same with the p-deformed Hodge map in the metric.
BiGradedSpace local_space_deformed(const LocalAlgebra &A, const QScalar &p);

} // namespace qk
