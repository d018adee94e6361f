#include "qk/haar.hpp"

#include "qk/matrix.hpp"

#include <stdexcept>

namespace qk {

namespace {

// a^m d^m word
Word ad_word(int m) {
    Word w;
    for (int k = 0; k < m; ++k) w += 'a';
    for (int k = 0; k < m; ++k) w += 'd';
    return w;
}

// m if the word is a^m d^m, else -1
int ad_index(const Word &w) {
    size_t n = w.size();
    if (n % 2) return -1;
    size_t m = n / 2;
    for (size_t k = 0; k < m; ++k)
        if (w[k] != 'a') return -1;
    for (size_t k = m; k < n; ++k)
        if (w[k] != 'd') return -1;
    return int(m);
}

} // namespace

void Haar::extend(int n) const {
    if (int(eta_.size()) > n) return;
    const Presentation &P = alg_->P();
    int N = n;
    // unknowns eta_0..eta_N; equations from x = a^j d^j for all j <= N
    std::vector<std::vector<QScalar>> rows; // coefficients over unknowns
    std::vector<QScalar> rhs;               // zero rows except the normalization
    for (int j = 0; j <= N; ++j) {
        TensorPoly T = P.coproduct(ad_word(j));
        // group by left word
        std::map<Word, std::vector<QScalar>> by_left;
        for (auto &[uv, c] : T.terms) {
            int m = ad_index(uv.second);
            if (m < 0) continue; // h vanishes off the bi-invariant support
            auto &row = by_left[uv.first];
            if (row.empty()) row.assign(N + 1, QScalar::zero());
            row[m] += c;
        }
        for (auto &[u, row] : by_left) {
            std::vector<QScalar> r = row;
            if (u.empty()) r[j] -= QScalar::one(); // = h(x) on the unit component
            bool nonzero = false;
            for (auto &v : r) nonzero = nonzero || !v.is_zero();
            if (nonzero) {
                rows.push_back(std::move(r));
                rhs.push_back(QScalar::zero());
            }
        }
    }
    // normalization h(1) = 1
    {
        std::vector<QScalar> r(N + 1, QScalar::zero());
        r[0] = QScalar::one();
        rows.push_back(std::move(r));
        rhs.push_back(QScalar::one());
    }
    Matrix<QScalar> A(int(rows.size()), N + 1), B(int(rows.size()), 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int k = 0; k <= N; ++k) A(i, k) = rows[i][k];
        B(i, 0) = rhs[i];
    }
    Matrix<QScalar> X;
    try {
        X = solve(A, B);
    } catch (const std::exception &) {
        throw std::runtime_error("haar: invariance system is singular (presentation inconsistency)");
    }
    eta_.clear();
    for (int m = 0; m <= N; ++m) eta_.push_back(X(m, 0));
}

QScalar Haar::eta(int m) const {
    if (m < 0) throw std::domain_error("haar: negative index");
    if (m >= int(eta_.size())) extend(std::max(m, 2));
    return eta_[m];
}

QScalar Haar::operator()(const NCPoly &x) const {
    QScalar out = QScalar::zero();
    for (auto &[w, c] : x.terms) {
        int m = ad_index(w);
        if (m >= 0) out += c * eta(m);
    }
    return out;
}

QScalar Haar::inner(const NCPoly &x, const NCPoly &y) const {
    return (*this)(alg_->P().mul(x, alg_->P().star(y)));
}

NCPoly Haar::invariance_residual_right(const NCPoly &x) const {
    const Presentation &P = alg_->P();
    TensorPoly T = P.coproduct(x);
    NCPoly acc;
    for (auto &[uv, c] : T.terms) {
        QScalar hv = (*this)(NCPoly::monomial(uv.second));
        if (!hv.is_zero()) acc.add_term(uv.first, c * hv);
    }
    acc.add_term("", -(*this)(x));
    return acc;
}

NCPoly Haar::invariance_residual_left(const NCPoly &x) const {
    const Presentation &P = alg_->P();
    TensorPoly T = P.coproduct(x);
    NCPoly acc;
    for (auto &[uv, c] : T.terms) {
        QScalar hv = (*this)(NCPoly::monomial(uv.first));
        if (!hv.is_zero()) acc.add_term(uv.second, c * hv);
    }
    acc.add_term("", -(*this)(x));
    return acc;
}

} // namespace qk
