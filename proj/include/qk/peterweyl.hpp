#pragma once

#include "qk/haar.hpp"
#include "qk/matrix.hpp"
#include "qk/suq2.hpp"

#include <map>
#include <vector>

namespace qk {

/// One weight slice of a Peter-Weyl block: ordered basis of normal forms.
struct Slice {
    int weight = 0;
    std::vector<NCPoly> basis;
};

/// One Peter-Weyl block: label n carries the (n+1)^2-dimensional coefficient
/// space of the spin-n/2 irreducible, sliced by the right U(1)-grading.
struct Block {
    int label = 0;
    std::map<int, Slice> slices; // weight -> slice

    int dim() const {
        int d = 0;
        for (auto &[w, s] : slices) d += int(s.basis.size());
        return d;
    }
};

/// All blocks with label <= cutoff (spanned by words of length <= cutoff).
struct Truncation {
    int cutoff = 0;
    std::vector<Block> blocks;

    const Slice *slice(int label, int weight) const {
        for (auto &b : blocks)
            if (b.label == label) {
                auto it = b.slices.find(weight);
                return it == b.slices.end() ? nullptr : &it->second;
            }
        return nullptr;
    }
};

/// Constructs Peter-Weyl decompositions of the quantum SU(2) algebra by exact
/// Haar-orthogonal projection against lower blocks.
class PeterWeyl {
  public:
    explicit PeterWeyl(const SUq2 &alg) : alg_(&alg), haar_(alg) {}

    const SUq2 &alg() const { return *alg_; }
    const Haar &haar() const { return haar_; }

    /// All normal-form words of the given weight with length <= maxlen.
    std::vector<Word> words_of_weight(int w, int maxlen) const;

    /// Blockwise decomposition of the span of words of length <= L.
    Truncation build(int L) const;

    /// Haar inner product <x, y> = h(x y*). Throws a span error when a word
    /// exceeds the truncation.
    QScalar inner(const Truncation &t, const NCPoly &x, const NCPoly &y) const;
    QScalar inner(const NCPoly &x, const NCPoly &y) const { return haar_.inner(x, y); }

    Matrix<QScalar> gram(const std::vector<NCPoly> &basis) const;

    /// Concatenated weight-w bases across blocks, in label order.
    std::vector<NCPoly> weight_slice(const Truncation &t, int w) const;

  private:
    const SUq2 *alg_;
    Haar haar_;
};

} // namespace qk
