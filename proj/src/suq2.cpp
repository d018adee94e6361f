#include "qk/suq2.hpp"

#include <stdexcept>

namespace qk {

const char *suq2_presentation_text() {
    return R"(# quantum SU(2) coordinate algebra, FRT presentation
# generators ((a b), (c d)); deglex order a < b < c < d
generators a b c d
weight a -1
weight b -1
weight c 1
weight d 1
rule b a -> q^-1 a b
rule c a -> q^-1 a c
rule b c -> q^-1 a d + -q^-1
rule c b -> q^-1 a d + -q^-1
rule d b -> q^-1 b d
rule d c -> q^-1 c d
rule d a -> q^-2 a d + 1 + -q^-2
star a -> d
star b -> -q c
star c -> -q^-1 b
star d -> a
coproduct a -> a . a + b . c
coproduct b -> a . b + b . d
coproduct c -> c . a + d . c
coproduct d -> c . b + d . d
counit a -> 1
counit b -> 0
counit c -> 0
counit d -> 1
antipode a -> d
antipode b -> -q^-1 b
antipode c -> -q c
antipode d -> a
)";
}

SUq2::SUq2() {
    pres_ = std::make_shared<Presentation>(
        Presentation::parse(suq2_presentation_text(), "suq2-builtin"));

    // Dual pairing: <K,a> = q^-1, <K,d> = q, <E,c> = s^-1, <F,b> = s.
    // <K,a> is forced by the relation ac = qca once <E,c> is nonzero; the E/F
    // scales are pinned by the [E,F] relation (alpha*beta = 1) together with
    // *-compatibility (beta = q*alpha), hence the half-integer powers of q.
    QScalar alpha = QScalar::s_pow(-1);
    QScalar beta = QScalar::s_pow(1);

    pairing_.E_pair = {{'a', QScalar::zero()},
                       {'b', QScalar::zero()},
                       {'c', alpha},
                       {'d', QScalar::zero()}};
    pairing_.F_pair = {{'a', QScalar::zero()},
                       {'b', beta},
                       {'c', QScalar::zero()},
                       {'d', QScalar::zero()}};
    pairing_.K_pair = {{'a', QScalar::q_pow(-1)},
                       {'b', QScalar::zero()},
                       {'c', QScalar::zero()},
                       {'d', QScalar::q_pow(1)}};
    pairing_.Kinv_pair = {{'a', QScalar::q_pow(1)},
                          {'b', QScalar::zero()},
                          {'c', QScalar::zero()},
                          {'d', QScalar::q_pow(-1)}};

    // letter actions x ◁ X = <X, x_(1)> x_(2)
    auto act_from = [&](const std::map<char, QScalar> &pair_tab) {
        std::map<char, NCPoly> act;
        for (char g : pres_->gens) {
            NCPoly out;
            for (auto &[uv, c] : pres_->cop_tab.at(g).terms) {
                if (uv.first.size() != 1) throw std::logic_error("non-matrix coproduct");
                QScalar v = pair_tab.at(uv.first[0]);
                if (!v.is_zero()) out.add_term(uv.second, c * v);
            }
            act[g] = out;
        }
        return act;
    };
    pairing_.E_act = act_from(pairing_.E_pair);
    pairing_.F_act = act_from(pairing_.F_pair);
}

NCPoly SUq2::act_K(const NCPoly &x, int power) const {
    NCPoly out;
    for (auto &[w, c] : x.terms)
        out.add_term(w, c * QScalar::q_pow(power * pres_->weight(w)));
    return out;
}

// (g w') ◁ E = (g◁E)(w'◁K) + g (w'◁E)
NCPoly SUq2::act_E_word(const Word &w) const {
    if (w.empty()) return NCPoly::zero();
    auto it = ecache_.find(w);
    if (it != ecache_.end()) return it->second;
    char g = w[0];
    Word rest = w.substr(1);
    NCPoly out;
    const NCPoly &gE = pairing_.E_act.at(g);
    if (!gE.is_zero()) {
        QScalar kfac = QScalar::q_pow(pres_->weight(rest));
        NCPoly t = pres_->mul(gE, NCPoly::monomial(rest));
        out = out + kfac * t;
    }
    NCPoly restE = act_E_word(rest);
    if (!restE.is_zero()) out = out + pres_->mul(NCPoly::monomial(Word(1, g)), restE);
    if (w.size() <= 14) ecache_[w] = out;
    return out;
}

// (g w') ◁ F = (g◁F) w' + q^{-wt(g)} g (w'◁F)
NCPoly SUq2::act_F_word(const Word &w) const {
    if (w.empty()) return NCPoly::zero();
    auto it = fcache_.find(w);
    if (it != fcache_.end()) return it->second;
    char g = w[0];
    Word rest = w.substr(1);
    NCPoly out;
    const NCPoly &gF = pairing_.F_act.at(g);
    if (!gF.is_zero()) out = out + pres_->mul(gF, NCPoly::monomial(rest));
    NCPoly restF = act_F_word(rest);
    if (!restF.is_zero()) {
        QScalar kfac = QScalar::q_pow(-pres_->weight_tab.at(g));
        out = out + kfac * pres_->mul(NCPoly::monomial(Word(1, g)), restF);
    }
    if (w.size() <= 14) fcache_[w] = out;
    return out;
}

NCPoly SUq2::act_E(const NCPoly &x) const {
    NCPoly out;
    for (auto &[w, c] : x.terms) {
        NCPoly r = act_E_word(w);
        for (auto &[v, k] : r.terms) out.add_term(v, c * k);
    }
    return out;
}

NCPoly SUq2::act_F(const NCPoly &x) const {
    NCPoly out;
    for (auto &[w, c] : x.terms) {
        NCPoly r = act_F_word(w);
        for (auto &[v, k] : r.terms) out.add_term(v, c * k);
    }
    return out;
}

NCPoly SUq2::act_EKinv(const NCPoly &x) const { return act_K(act_E(x), -1); }

NCPoly SUq2::right_action(const std::string &umonomial, const NCPoly &x) const {
    NCPoly cur = x;
    for (char X : umonomial) {
        switch (X) {
        case 'E': cur = act_E(cur); break;
        case 'F': cur = act_F(cur); break;
        case 'K': cur = act_K(cur, 1); break;
        case 'k': cur = act_K(cur, -1); break;
        default: throw std::invalid_argument("right_action: unknown U generator");
        }
        if (cur.is_zero()) break;
    }
    return cur;
}

QScalar SUq2::pair(const std::string &umonomial, const NCPoly &x) const {
    return pres_->counit(right_action(umonomial, x));
}

std::vector<std::string> SUq2::validate_pairing(int max_len) const {
    std::vector<std::string> failures;
    const Presentation &P = *pres_;

    // 1. well-definedness: the action kills every rewriting relation.
    //    Act letter-wise on the raw LHS word and compare with the action on RHS.
    for (auto &rule : P.rules) {
        for (std::string X : {"E", "F", "K", "k"}) {
            // act on the unreduced word via the recursion, then reduce
            NCPoly lhs = right_action(X, NCPoly::monomial(rule.lhs));
            NCPoly rhs = right_action(X, rule.rhs);
            if (!(P.normal_form(lhs) == P.normal_form(rhs)))
                failures.push_back("pairing vs rule " + rule.lhs + " under " + X);
        }
    }

    // 2. U_q(sl2) relations acting on all words of length <= max_len:
    //    KE = q^2 EK, KF = q^-2 FK, [E,F] = (K - K^-1)/(q - q^-1).
    std::vector<Word> words{""};
    for (int l = 0; l < max_len; ++l) {
        std::vector<Word> next;
        for (auto &w : words)
            for (char g : P.gens) next.push_back(w + g);
        for (auto &w : next) words.push_back(w);
        if (l == max_len - 1) break;
    }
    QScalar qm = QScalar::q_pow(1) - QScalar::q_pow(-1);
    for (auto &w : words) {
        if (int(w.size()) > max_len) continue;
        NCPoly x = P.normal_form(w);
        NCPoly ke = right_action("KE", x), ek = right_action("EK", x);
        if (!(ke == QScalar::q_pow(2) * ek)) failures.push_back("KE = q^2 EK on " + w);
        NCPoly kf = right_action("KF", x), fk = right_action("FK", x);
        if (!(kf == QScalar::q_pow(-2) * fk)) failures.push_back("KF = q^-2 FK on " + w);
        NCPoly ef = right_action("EF", x), fe = right_action("FE", x);
        NCPoly kk = act_K(x, 1) - act_K(x, -1);
        NCPoly lhs = ef - fe;
        NCPoly rhs = QScalar::one() / qm * kk;
        if (!(lhs == rhs)) failures.push_back("[E,F] relation on " + w);
    }
    return failures;
}

} // namespace qk
