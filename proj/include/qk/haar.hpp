#pragma once

#include "qk/presentation.hpp"
#include "qk/suq2.hpp"

#include <vector>

namespace qk {

/// The Haar state of the quantum SU(2) algebra, computed from the invariance
/// equations (id (x) h)Delta(x) = h(x) 1 on the bi-invariant support rather
/// than from any closed formula.
///
/// The functional vanishes on every normal-form word that is not bi-weight
/// (0,0); those words are exactly a^i d^i in the shipped basis, and their
/// values are obtained by one exact linear solve.
class Haar {
  public:
    explicit Haar(const SUq2 &alg) : alg_(&alg) {}

    QScalar operator()(const NCPoly &x) const;

    /// The cached value h(a^m d^m).
    QScalar eta(int m) const;

    /// Inner product <x,y> = h(x y*).
    QScalar inner(const NCPoly &x, const NCPoly &y) const;

    /// Residual of the right-invariance equation (id (x) h)Delta(x) - h(x) 1,
    /// for property tests.
    NCPoly invariance_residual_right(const NCPoly &x) const;
    /// Residual of (h (x) id)Delta(x) - h(x) 1.
    NCPoly invariance_residual_left(const NCPoly &x) const;

  private:
    void extend(int n) const;
    const SUq2 *alg_;
    mutable std::vector<QScalar> eta_; // eta_[m] = h(a^m d^m)
};

} // namespace qk
