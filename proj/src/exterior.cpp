#include "qk/exterior.hpp"

#include <stdexcept>

namespace qk {

void LocalForm::add_term(const FormLabel &l, const QScalar &c) {
    if (c.is_zero()) return;
    auto it = terms.find(l);
    if (it == terms.end()) {
        terms[l] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

LocalForm LocalForm::operator-() const {
    LocalForm r{n, {}};
    for (auto &[l, c] : terms) r.terms[l] = -c;
    return r;
}

LocalForm operator+(const LocalForm &x, const LocalForm &y) {
    if (x.n != y.n) throw std::domain_error("local forms: rank mismatch");
    LocalForm r = x;
    for (auto &[l, c] : y.terms) r.add_term(l, c);
    return r;
}

LocalForm operator-(const LocalForm &x, const LocalForm &y) { return x + (-y); }

LocalForm operator*(const QScalar &c, const LocalForm &x) {
    LocalForm r{x.n, {}};
    for (auto &[l, k] : x.terms) r.add_term(l, c * k);
    return r;
}

bool LocalForm::homogeneous(int *a, int *b) const {
    if (terms.empty()) {
        *a = *b = 0;
        return true;
    }
    int pa = terms.begin()->first.deg_plus(), pb = terms.begin()->first.deg_minus();
    for (auto &[l, c] : terms)
        if (l.deg_plus() != pa || l.deg_minus() != pb) return false;
    *a = pa;
    *b = pb;
    return true;
}

std::string LocalForm::str() const {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto &[l, c] : terms) {
        if (!first) out += " + ";
        first = false;
        out += "(" + c.str() + ")";
        for (int k = 1; k <= n; ++k)
            if (l.plus & (1u << (k - 1))) out += "*e+" + std::to_string(k);
        for (int k = 1; k <= n; ++k)
            if (l.minus & (1u << (k - 1))) out += "*e-" + std::to_string(k);
    }
    return out;
}

LocalAlgebra::LocalAlgebra(int rank) : n_(rank) {
    if (rank < 1 || rank > 4) throw std::domain_error("local algebra: rank must be 1..4");
}

LocalForm LocalAlgebra::one() const {
    LocalForm r{n_, {}};
    r.terms[FormLabel{}] = QScalar::one();
    return r;
}

LocalForm LocalAlgebra::gen_plus(int i) const {
    LocalForm r{n_, {}};
    r.terms[FormLabel{uint32_t(1u << (i - 1)), 0}] = QScalar::one();
    return r;
}

LocalForm LocalAlgebra::gen_minus(int i) const {
    LocalForm r{n_, {}};
    r.terms[FormLabel{0, uint32_t(1u << (i - 1))}] = QScalar::one();
    return r;
}

LocalForm LocalAlgebra::basis_form(const FormLabel &l) const {
    LocalForm r{n_, {}};
    r.terms[l] = QScalar::one();
    return r;
}

std::vector<FormLabel> LocalAlgebra::basis(int a, int b) const {
    std::vector<FormLabel> out;
    for (uint32_t p = 0; p < (1u << n_); ++p) {
        if (__builtin_popcount(p) != a) continue;
        for (uint32_t m = 0; m < (1u << n_); ++m) {
            if (__builtin_popcount(m) != b) continue;
            out.push_back(FormLabel{p, m});
        }
    }
    return out;
}

int LocalAlgebra::dim(int a, int b) const { return int(basis(a, b).size()); }

int LocalAlgebra::kappa_exponent(int k) const {
    // Weights of the first fundamental module of sl_{n+1}: mu_i = w1 - a_1 - ... - a_{i-1}.
    // The local label k corresponds to i = k + 1 (the highest-weight vector is
    // not a cotangent label). Inverse-Cartan pairing for A_n:
    // (w_i, w_j) = min(i,j)(n+1-max(i,j))/(n+1); (2 rho, a_j) = 2.
    int n = n_;
    Rat two_rho_w1(0);
    for (int j = 1; j <= n; ++j) {
        Rat frac(2 * (n + 1 - std::max(1, j)), n + 1);
        frac.canonicalize();
        two_rho_w1 += frac;
    }
    Rat val = two_rho_w1 - Rat(2 * k);
    val.canonicalize();
    if (val.get_den() != 1) throw std::logic_error("kappa exponent not integral");
    return int(val.get_num().get_si());
}

LocalForm LocalAlgebra::kappa() const {
    LocalForm out = zero();
    for (int k = 1; k <= n_; ++k) {
        FormLabel l{uint32_t(1u << (k - 1)), uint32_t(1u << (k - 1))};
        out.add_term(l, QScalar::i() * QScalar::q_pow(kappa_exponent(k)));
    }
    return out;
}

// Straighten a symbol sequence into normal order (all + ascending, then all -
// ascending). Symbols: +i for e^+_i, -i for e^-_i.
//
// Relations (specialization of the type-A braiding; validated by the tests):
//   e+_j e+_i = -q    e+_i e+_j   (i < j),  e+_i e+_i = 0
//   e-_j e-_i = -q^-1 e-_i e-_j   (i < j),  e-_i e-_i = 0
//   e-_j e+_i = -q^-1 e+_i e-_j   (i != j)
//   e-_m e+_m = -q^-2 e+_m e-_m - (q^-2 - 1) sum_{k<m} q^{2(m-k)} e+_k e-_k
void LocalAlgebra::straighten(std::vector<int> sym, QScalar coeff, LocalForm &out) const {
    for (size_t pos = 0; pos + 1 < sym.size(); ++pos) {
        int s = sym[pos], t = sym[pos + 1];
        if (s > 0 && t > 0) {
            if (s == t) return;
            if (s > t) {
                std::swap(sym[pos], sym[pos + 1]);
                straighten(std::move(sym), -QScalar::q_pow(1) * coeff, out);
                return;
            }
        } else if (s < 0 && t < 0) {
            if (s == t) return;
            if (-s > -t) {
                std::swap(sym[pos], sym[pos + 1]);
                straighten(std::move(sym), -QScalar::q_pow(-1) * coeff, out);
                return;
            }
        } else if (s < 0 && t > 0) {
            int j = -s, i = t;
            if (i != j) {
                sym[pos] = t;
                sym[pos + 1] = s;
                straighten(std::move(sym), -QScalar::q_pow(-1) * coeff, out);
                return;
            }
            int m = i;
            for (int k = m; k >= 1; --k) {
                std::vector<int> branch = sym;
                branch[pos] = k;
                branch[pos + 1] = -k;
                QScalar c = (k == m)
                                ? -QScalar::q_pow(-2) * coeff
                                : -(QScalar::q_pow(-2) - QScalar::one()) *
                                      QScalar::q_pow(2 * (m - k)) * coeff;
                straighten(std::move(branch), c, out);
            }
            return;
        }
    }
    FormLabel l;
    for (int s : sym) {
        if (s > 0)
            l.plus |= 1u << (s - 1);
        else
            l.minus |= 1u << (-s - 1);
    }
    out.add_term(l, coeff);
}

LocalForm LocalAlgebra::wedge(const LocalForm &x, const LocalForm &y) const {
    if (x.n != n_ || y.n != n_) throw std::domain_error("wedge: rank mismatch");
    LocalForm out = zero();
    for (auto &[lx, cx] : x.terms)
        for (auto &[ly, cy] : y.terms) {
            std::vector<int> sym;
            for (int k = 1; k <= n_; ++k)
                if (lx.plus & (1u << (k - 1))) sym.push_back(k);
            for (int k = 1; k <= n_; ++k)
                if (lx.minus & (1u << (k - 1))) sym.push_back(-k);
            for (int k = 1; k <= n_; ++k)
                if (ly.plus & (1u << (k - 1))) sym.push_back(k);
            for (int k = 1; k <= n_; ++k)
                if (ly.minus & (1u << (k - 1))) sym.push_back(-k);
            straighten(std::move(sym), cx * cy, out);
        }
    return out;
}

LocalForm LocalAlgebra::star(const LocalForm &x) const {
    if (x.n != n_) throw std::domain_error("star: rank mismatch");
    LocalForm out = zero();
    for (auto &[l, c] : x.terms) {
        std::vector<int> sym;
        for (int k = 1; k <= n_; ++k)
            if (l.plus & (1u << (k - 1))) sym.push_back(k);
        for (int k = 1; k <= n_; ++k)
            if (l.minus & (1u << (k - 1))) sym.push_back(-k);
        // (s1 ^ ... ^ sk)* = (-1)^{k(k-1)/2} sk* ^ ... ^ s1*, (e+-_i)* = e-+_i
        int k = int(sym.size());
        std::vector<int> rev;
        for (auto it = sym.rbegin(); it != sym.rend(); ++it) rev.push_back(-*it);
        QScalar sign = ((k * (k - 1) / 2) % 2 == 0) ? QScalar::one() : -QScalar::one();
        straighten(std::move(rev), sign * c.conj(), out);
    }
    return out;
}

} // namespace qk
