#pragma once

#include "qk/presentation.hpp"

#include <memory>

namespace qk {

/// Dual pairing data for {E, F, K, K^-1} against the quantum SU(2) generators,
/// realized through the induced right action on the coordinate algebra.
struct PairingTable {
    // single-letter actions: g -> sum c * g' (zero if absent)
    std::map<char, NCPoly> E_act, F_act;
    // K acts diagonally by q^{weight}
    // values <X, g> for the four generators, X in {E,F,K,K^-1}; used by validators
    std::map<char, QScalar> E_pair, F_pair, K_pair, Kinv_pair;
};

/// The shipped quantum SU(2) algebra: presentation, pairing, and helpers.
class SUq2 {
  public:
    SUq2();

    const Presentation &P() const { return *pres_; }
    const PairingTable &pairing() const { return pairing_; }

    /// Right module-algebra action of a U-monomial, written over {E,F,K,k}
    /// with k = K^-1; x ◁ (XY) = (x ◁ X) ◁ Y.
    NCPoly right_action(const std::string &umonomial, const NCPoly &x) const;

    NCPoly act_E(const NCPoly &x) const;
    NCPoly act_F(const NCPoly &x) const;
    NCPoly act_K(const NCPoly &x, int power) const;
    /// x ◁ (E K^-1): the antiholomorphic derivation used by the calculus.
    NCPoly act_EKinv(const NCPoly &x) const;

    /// Pairing of a U-monomial with an algebra element: counit of the action.
    QScalar pair(const std::string &umonomial, const NCPoly &x) const;

    /// Consistency of the pairing with the algebra relations and with the
    /// U_q(sl2) relations, on words up to the given length. Returns failures.
    std::vector<std::string> validate_pairing(int max_len = 4) const;

  private:
    NCPoly act_E_word(const Word &w) const;
    NCPoly act_F_word(const Word &w) const;

    std::shared_ptr<Presentation> pres_;
    PairingTable pairing_;
    mutable std::map<Word, NCPoly> ecache_, fcache_;
};

/// Text of the shipped presentation (also parseable from a file).
const char *suq2_presentation_text();

} // namespace qk
