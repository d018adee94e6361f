#include "qk/peterweyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace qk {

std::vector<Word> PeterWeyl::words_of_weight(int w, int maxlen) const {
    // normal forms: a^i b^j d^l (weight -i-j+l) and a^i c^k d^l, k >= 1
    // (weight -i+k+l)
    std::vector<Word> out;
    for (int i = 0; i <= maxlen; ++i)
        for (int j = 0; i + j <= maxlen; ++j)
            for (int l = 0; i + j + l <= maxlen; ++l) {
                if (-i - j + l == w) {
                    Word word;
                    word.append(size_t(i), 'a');
                    word.append(size_t(j), 'b');
                    word.append(size_t(l), 'd');
                    out.push_back(word);
                }
            }
    for (int i = 0; i <= maxlen; ++i)
        for (int k = 1; i + k <= maxlen; ++k)
            for (int l = 0; i + k + l <= maxlen; ++l) {
                if (-i + k + l == w) {
                    Word word;
                    word.append(size_t(i), 'a');
                    word.append(size_t(k), 'c');
                    word.append(size_t(l), 'd');
                    out.push_back(word);
                }
            }
    std::sort(out.begin(), out.end(), [](const Word &x, const Word &y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return out;
}

Matrix<QScalar> PeterWeyl::gram(const std::vector<NCPoly> &basis) const {
    int n = int(basis.size());
    Matrix<QScalar> g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            g(i, j) = haar_.inner(basis[size_t(i)], basis[size_t(j)]);
            if (j != i) g(j, i) = g(i, j).conj();
        }
    return g;
}

namespace {

// coordinates of polys in the span of the given words
Matrix<QScalar> coords(const std::vector<NCPoly> &polys, const std::vector<Word> &words) {
    std::map<Word, int> index;
    for (int i = 0; i < int(words.size()); ++i) index[words[size_t(i)]] = i;
    Matrix<QScalar> m(int(polys.size()), int(words.size()));
    for (int r = 0; r < m.rows; ++r)
        for (auto &[w, c] : polys[size_t(r)].terms) {
            auto it = index.find(w);
            if (it == index.end()) throw std::runtime_error("coords: word outside span");
            m(r, it->second) = c;
        }
    return m;
}

} // namespace

Truncation PeterWeyl::build(int L) const {
    if (L < 0) throw std::domain_error("build_blocks: negative cutoff");
    Truncation t;
    t.cutoff = L;
    for (int n = 0; n <= L; ++n) {
        Block blk;
        blk.label = n;
        for (int w = -n; w <= n; w += 2) {
            // candidates: weight-w words of length <= n, projected off lower blocks
            std::vector<Word> cand = words_of_weight(w, n);
            std::vector<NCPoly> lower;
            for (auto &b : t.blocks) {
                auto it = b.slices.find(w);
                if (it == b.slices.end()) continue;
                for (auto &x : it->second.basis) lower.push_back(x);
            }
            Matrix<QScalar> G, Gi;
            if (!lower.empty()) {
                G = gram(lower);
                Gi = inverse(G);
            }
            std::vector<NCPoly> projected;
            for (auto &wrd : cand) {
                NCPoly v = NCPoly::monomial(wrd);
                if (!lower.empty()) {
                    int m = int(lower.size());
                    // coefficients from t_j = <v, b_j>, c = t G^{-1}
                    Matrix<QScalar> tv(1, m);
                    for (int j = 0; j < m; ++j) tv(0, j) = haar_.inner(v, lower[size_t(j)]);
                    Matrix<QScalar> cv = tv * Gi;
                    for (int i = 0; i < m; ++i) v = v - cv(0, i) * lower[size_t(i)];
                }
                projected.push_back(v);
            }
            // deterministic linearly independent subset via word coordinates
            Matrix<QScalar> M = coords(projected, cand);
            Slice slice;
            slice.weight = w;
            Matrix<QScalar> chosen(0, M.cols);
            for (int r = 0; r < M.rows; ++r) {
                Matrix<QScalar> trial(chosen.rows + 1, M.cols);
                for (int i = 0; i < chosen.rows; ++i)
                    for (int j = 0; j < M.cols; ++j) trial(i, j) = chosen(i, j);
                for (int j = 0; j < M.cols; ++j) trial(chosen.rows, j) = M(r, j);
                if (rank(trial) == trial.rows) {
                    chosen = trial;
                    slice.basis.push_back(projected[size_t(r)]);
                }
            }
            if (int(slice.basis.size()) != n + 1)
                throw std::runtime_error("build_blocks: unexpected slice dimension (degenerate "
                                         "metric or presentation bug)");
            blk.slices[w] = std::move(slice);
        }
        t.blocks.push_back(std::move(blk));
    }
    return t;
}

QScalar PeterWeyl::inner(const Truncation &t, const NCPoly &x, const NCPoly &y) const {
    for (auto &[w, c] : x.terms)
        if (int(w.size()) > t.cutoff) throw std::domain_error("gram_inner: element outside span");
    for (auto &[w, c] : y.terms)
        if (int(w.size()) > t.cutoff) throw std::domain_error("gram_inner: element outside span");
    return haar_.inner(x, y);
}

std::vector<NCPoly> PeterWeyl::weight_slice(const Truncation &t, int w) const {
    std::vector<NCPoly> out;
    for (auto &b : t.blocks) {
        auto it = b.slices.find(w);
        if (it == b.slices.end()) continue;
        for (auto &x : it->second.basis) out.push_back(x);
    }
    return out;
}

} // namespace qk
