#include "qk/presentation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qk {

// -- NCPoly -------------------------------------------------------------------

void NCPoly::add_term(const Word &w, const QScalar &c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms[w] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

NCPoly NCPoly::operator-() const {
    NCPoly r;
    for (auto &[w, c] : terms) r.terms[w] = -c;
    return r;
}

NCPoly operator+(const NCPoly &x, const NCPoly &y) {
    NCPoly r = x;
    for (auto &[w, c] : y.terms) r.add_term(w, c);
    return r;
}

NCPoly operator-(const NCPoly &x, const NCPoly &y) { return x + (-y); }

NCPoly operator*(const QScalar &c, const NCPoly &x) {
    NCPoly r;
    for (auto &[w, k] : x.terms) r.add_term(w, c * k);
    return r;
}

std::string NCPoly::str() const {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto &[w, c] : terms) {
        if (!first) out += " + ";
        first = false;
        out += "(" + c.str() + ")";
        if (!w.empty()) out += "*" + w;
    }
    return out;
}

void TensorPoly::add_term(const Word &u, const Word &v, const QScalar &c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(u, v);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms[key] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

TensorPoly operator+(const TensorPoly &x, const TensorPoly &y) {
    TensorPoly r = x;
    for (auto &[k, c] : y.terms) r.add_term(k.first, k.second, c);
    return r;
}

// -- rewriting ------------------------------------------------------------------

bool Presentation::is_generator(char g) const {
    return std::find(gens.begin(), gens.end(), g) != gens.end();
}

int Presentation::weight(const Word &w) const {
    int s = 0;
    for (char g : w) s += weight_tab.at(g);
    return s;
}

NCPoly Presentation::reduce_once(const Word &w, bool *changed) const {
    // leftmost occurrence of any rule LHS; ties broken by rule order
    size_t best_pos = Word::npos;
    int best_rule = -1;
    for (int r = 0; r < int(rules.size()); ++r) {
        size_t pos = w.find(rules[r].lhs);
        if (pos != Word::npos && (best_pos == Word::npos || pos < best_pos)) {
            best_pos = pos;
            best_rule = r;
        }
    }
    if (best_rule < 0) {
        *changed = false;
        return NCPoly::monomial(w);
    }
    *changed = true;
    const Rule &rule = rules[best_rule];
    Word pre = w.substr(0, best_pos);
    Word post = w.substr(best_pos + rule.lhs.size());
    NCPoly out;
    for (auto &[mid, c] : rule.rhs.terms) out.add_term(pre + mid + post, c);
    return out;
}

NCPoly Presentation::normal_form(const Word &w) const {
    auto it = nf_cache_.find(w);
    if (it != nf_cache_.end()) return it->second;

    long budget = 2'000'000;
    NCPoly acc;                      // fully reduced part
    std::vector<std::pair<Word, QScalar>> work{{w, QScalar::one()}};
    while (!work.empty()) {
        if (--budget < 0)
            throw std::runtime_error("normal_form: step budget exhausted (confluence failure?)");
        auto [cur, coeff] = work.back();
        work.pop_back();
        bool changed = false;
        NCPoly red = reduce_once(cur, &changed);
        if (!changed) {
            acc.add_term(cur, coeff);
            continue;
        }
        for (auto &[u, c] : red.terms) {
            auto cached = nf_cache_.find(u);
            if (cached != nf_cache_.end()) {
                for (auto &[v, k] : cached->second.terms) acc.add_term(v, coeff * c * k);
            } else {
                work.emplace_back(u, coeff * c);
            }
        }
    }
    if (w.size() <= 14) nf_cache_[w] = acc;
    return acc;
}

NCPoly Presentation::normal_form(const NCPoly &x) const {
    NCPoly out;
    for (auto &[w, c] : x.terms) {
        NCPoly r = normal_form(w);
        for (auto &[v, k] : r.terms) out.add_term(v, c * k);
    }
    return out;
}

NCPoly Presentation::mul(const NCPoly &x, const NCPoly &y) const {
    NCPoly out;
    for (auto &[u, cu] : x.terms)
        for (auto &[v, cv] : y.terms) {
            NCPoly r = normal_form(u + v);
            QScalar c = cu * cv;
            for (auto &[w, k] : r.terms) out.add_term(w, c * k);
        }
    return out;
}

NCPoly Presentation::mul(const NCPoly &x, const NCPoly &y, const NCPoly &z) const {
    return mul(mul(x, y), z);
}

NCPoly Presentation::star(const NCPoly &x) const {
    NCPoly out;
    for (auto &[w, c] : x.terms) {
        NCPoly acc = NCPoly::unit();
        for (auto it = w.rbegin(); it != w.rend(); ++it) acc = mul(acc, star_tab.at(*it));
        out = out + c.conj() * acc;
    }
    return out;
}

NCPoly Presentation::antipode(const NCPoly &x) const {
    NCPoly out;
    for (auto &[w, c] : x.terms) {
        NCPoly acc = NCPoly::unit();
        for (auto it = w.rbegin(); it != w.rend(); ++it) acc = mul(acc, antipode_tab.at(*it));
        out = out + c * acc;
    }
    return out;
}

QScalar Presentation::counit(const NCPoly &x) const {
    QScalar out = QScalar::zero();
    for (auto &[w, c] : x.terms) {
        QScalar e = QScalar::one();
        for (char g : w) e = e * counit_tab.at(g);
        out += c * e;
    }
    return out;
}

TensorPoly Presentation::coproduct(const Word &w) const {
    TensorPoly acc;
    acc.add_term("", "", QScalar::one());
    for (char g : w) {
        const TensorPoly &dg = cop_tab.at(g);
        TensorPoly next;
        for (auto &[uv, c] : acc.terms)
            for (auto &[gg, k] : dg.terms) {
                NCPoly left = normal_form(uv.first + gg.first);
                NCPoly right = normal_form(uv.second + gg.second);
                QScalar cc = c * k;
                for (auto &[lw, lc] : left.terms)
                    for (auto &[rw, rc] : right.terms) next.add_term(lw, rw, cc * lc * rc);
            }
        acc = std::move(next);
    }
    return acc;
}

TensorPoly Presentation::coproduct(const NCPoly &x) const {
    TensorPoly out;
    for (auto &[w, c] : x.terms) {
        TensorPoly t = coproduct(w);
        for (auto &[uv, k] : t.terms) out.add_term(uv.first, uv.second, c * k);
    }
    return out;
}

NCPoly Presentation::weight_component(const NCPoly &x, int w) const {
    NCPoly out;
    for (auto &[word, c] : x.terms)
        if (weight(word) == w) out.add_term(word, c);
    return out;
}

std::vector<Word> Presentation::diamond_check(int max_len) const {
    std::vector<Word> failures;
    auto check_word = [&](const Word &w, size_t pos1, int r1, size_t pos2, int r2) {
        auto apply = [&](size_t pos, int r) {
            const Rule &rule = rules[r];
            Word pre = w.substr(0, pos);
            Word post = w.substr(pos + rule.lhs.size());
            NCPoly out;
            for (auto &[mid, c] : rule.rhs.terms) out.add_term(pre + mid + post, c);
            return normal_form(out);
        };
        NCPoly n1 = apply(pos1, r1), n2 = apply(pos2, r2);
        if (!(n1 == n2)) failures.push_back(w);
    };
    for (int i = 0; i < int(rules.size()); ++i)
        for (int j = 0; j < int(rules.size()); ++j) {
            const Word &l1 = rules[i].lhs, &l2 = rules[j].lhs;
            // overlap: proper suffix of l1 equals proper prefix of l2
            for (size_t k = 1; k < l1.size() && k < l2.size() + 1; ++k) {
                if (k >= l2.size() && i == j) continue;
                size_t ov = std::min(k, l2.size());
                if (l1.substr(l1.size() - ov) == l2.substr(0, ov)) {
                    Word w = l1 + l2.substr(ov);
                    if (int(w.size()) <= max_len && ov < l2.size())
                        check_word(w, 0, i, l1.size() - ov, j);
                }
            }
            // containment: l2 inside l1
            if (i != j && l1.size() > l2.size()) {
                size_t pos = l1.find(l2);
                if (pos != Word::npos && int(l1.size()) <= max_len) check_word(l1, 0, i, pos, j);
            }
        }
    return failures;
}

bool Presentation::grading_check() const {
    for (auto &r : rules) {
        int lw = weight(r.lhs);
        for (auto &[w, c] : r.rhs.terms)
            if (weight(w) != lw) return false;
    }
    return true;
}

// -- parser ---------------------------------------------------------------------

namespace {

struct ParseError : std::runtime_error {
    ParseError(const std::string &src, int line, int col, const std::string &msg)
        : std::runtime_error(src + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                             msg) {}
};

std::vector<std::string> tokenize(const std::string &line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

// scalar atom: [-]i | [-]q[^int] | [-]s[^int] | [-]int[/int]
bool parse_scalar_atom(const std::string &tok, QScalar *out) {
    std::string t = tok;
    bool neg = false;
    if (!t.empty() && t[0] == '-') {
        neg = true;
        t = t.substr(1);
    }
    if (t.empty()) return false;
    QScalar v;
    if (t == "i") {
        v = QScalar::i();
    } else if (t[0] == 'q' || t[0] == 's') {
        int exp = 1;
        if (t.size() > 1) {
            if (t[1] != '^') return false;
            try {
                exp = std::stoi(t.substr(2));
            } catch (...) {
                return false;
            }
        }
        v = (t[0] == 'q') ? QScalar::q_pow(exp) : QScalar::s_pow(exp);
    } else if (isdigit(t[0])) {
        try {
            v = QScalar::rat(parse_rat(t));
        } catch (...) {
            return false;
        }
    } else {
        return false;
    }
    *out = neg ? -v : v;
    return true;
}

} // namespace

NCPoly parse_monomial(const Presentation &p, const std::string &text) {
    QScalar c = QScalar::one();
    Word w;
    for (auto &tok : tokenize(text)) {
        QScalar atom;
        if (tok.size() == 1 && p.is_generator(tok[0])) {
            w += tok[0];
        } else if (parse_scalar_atom(tok, &atom)) {
            c *= atom;
        } else {
            throw std::runtime_error("bad monomial token: " + tok);
        }
    }
    return NCPoly::monomial(w, c);
}

Presentation Presentation::parse(const std::string &text, const std::string &src) {
    Presentation p;
    p.name = src;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    auto split_terms = [](const std::string &s) {
        // split on top-level " + " token boundaries
        std::vector<std::string> parts;
        std::string cur;
        for (auto &tok : tokenize(s)) {
            if (tok == "+") {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += tok + " ";
            }
        }
        parts.push_back(cur);
        return parts;
    };

    auto parse_poly = [&](const std::string &s, int ln) {
        NCPoly out;
        for (auto &part : split_terms(s)) {
            if (tokenize(part).empty()) throw ParseError(src, ln, 1, "empty term");
            NCPoly m = parse_monomial(p, part);
            out = out + m;
        }
        return out;
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string &kw = toks[0];
        auto rest_after = [&](size_t n) {
            std::string s;
            for (size_t k = n; k < toks.size(); ++k) s += toks[k] + " ";
            return s;
        };
        try {
            if (kw == "generators") {
                for (size_t k = 1; k < toks.size(); ++k) {
                    if (toks[k].size() != 1 ||
                        std::string("iqs0123456789").find(toks[k][0]) != std::string::npos)
                        throw ParseError(src, lineno, int(k + 1), "bad generator symbol");
                    p.gens.push_back(toks[k][0]);
                }
            } else if (kw == "weight") {
                if (toks.size() != 3 || toks[1].size() != 1)
                    throw ParseError(src, lineno, 1, "weight <gen> <int>");
                p.weight_tab[toks[1][0]] = std::stoi(toks[2]);
            } else if (kw == "rule") {
                auto arrow = std::find(toks.begin(), toks.end(), "->");
                if (arrow == toks.end()) throw ParseError(src, lineno, 1, "rule needs ->");
                Word lhs;
                for (auto it = toks.begin() + 1; it != arrow; ++it) {
                    if (it->size() != 1 || !p.is_generator((*it)[0]))
                        throw ParseError(src, lineno, 1, "rule LHS must be a generator word");
                    lhs += (*it)[0];
                }
                std::string rhs;
                for (auto it = arrow + 1; it != toks.end(); ++it) rhs += *it + " ";
                p.rules.push_back({lhs, parse_poly(rhs, lineno)});
            } else if (kw == "star" || kw == "antipode") {
                if (toks.size() < 4 || toks[1].size() != 1 || toks[2] != "->")
                    throw ParseError(src, lineno, 1, kw + " <gen> -> <poly>");
                NCPoly v = parse_poly(rest_after(3), lineno);
                if (kw == "star")
                    p.star_tab[toks[1][0]] = v;
                else
                    p.antipode_tab[toks[1][0]] = v;
            } else if (kw == "counit") {
                if (toks.size() < 4 || toks[1].size() != 1 || toks[2] != "->")
                    throw ParseError(src, lineno, 1, "counit <gen> -> <scalar>");
                QScalar v = QScalar::zero();
                for (auto &part : split_terms(rest_after(3))) {
                    QScalar atom = QScalar::one();
                    bool any = false;
                    for (auto &tok : tokenize(part)) {
                        QScalar x;
                        if (!parse_scalar_atom(tok, &x))
                            throw ParseError(src, lineno, 1, "bad scalar: " + tok);
                        atom *= x;
                        any = true;
                    }
                    if (any) v += atom;
                }
                p.counit_tab[toks[1][0]] = v;
            } else if (kw == "coproduct") {
                if (toks.size() < 4 || toks[1].size() != 1 || toks[2] != "->")
                    throw ParseError(src, lineno, 1, "coproduct <gen> -> <tensor poly>");
                TensorPoly t;
                for (auto &part : split_terms(rest_after(3))) {
                    auto ptoks = tokenize(part);
                    auto dot = std::find(ptoks.begin(), ptoks.end(), ".");
                    if (dot == ptoks.end())
                        throw ParseError(src, lineno, 1, "tensor term needs '.'");
                    QScalar c = QScalar::one();
                    Word u, v;
                    for (auto it = ptoks.begin(); it != dot; ++it) {
                        QScalar x;
                        if (it->size() == 1 && p.is_generator((*it)[0]))
                            u += (*it)[0];
                        else if (parse_scalar_atom(*it, &x))
                            c *= x;
                        else
                            throw ParseError(src, lineno, 1, "bad tensor token: " + *it);
                    }
                    for (auto it = dot + 1; it != ptoks.end(); ++it) {
                        if (it->size() == 1 && p.is_generator((*it)[0]))
                            v += (*it)[0];
                        else
                            throw ParseError(src, lineno, 1, "bad tensor token: " + *it);
                    }
                    t.add_term(u, v, c);
                }
                p.cop_tab[toks[1][0]] = t;
            } else {
                throw ParseError(src, lineno, 1, "unknown keyword: " + kw);
            }
        } catch (const ParseError &) {
            throw;
        } catch (const std::exception &e) {
            throw ParseError(src, lineno, 1, e.what());
        }
    }
    return p;
}

} // namespace qk
