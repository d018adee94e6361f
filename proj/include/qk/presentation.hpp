#pragma once

#include "qk/qscalar.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qk {

/// Monomial word over single-character generator symbols; "" is the unit.
using Word = std::string;

/// Noncommutative polynomial in normal form: word -> nonzero coefficient.
struct NCPoly {
    std::map<Word, QScalar> terms;

    NCPoly() = default;
    static NCPoly zero() { return NCPoly(); }
    static NCPoly unit(const QScalar &c = QScalar::one()) { return monomial("", c); }
    static NCPoly monomial(const Word &w, const QScalar &c = QScalar::one()) {
        NCPoly p;
        if (!c.is_zero()) p.terms[w] = c;
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    void add_term(const Word &w, const QScalar &c);

    NCPoly operator-() const;
    friend NCPoly operator+(const NCPoly &x, const NCPoly &y);
    friend NCPoly operator-(const NCPoly &x, const NCPoly &y);
    friend NCPoly operator*(const QScalar &c, const NCPoly &x);
    bool operator==(const NCPoly &o) const { return terms == o.terms; }

    std::string str() const;
};

/// Element of the tensor square, legs kept in normal form.
struct TensorPoly {
    std::map<std::pair<Word, Word>, QScalar> terms;

    bool is_zero() const { return terms.empty(); }
    void add_term(const Word &u, const Word &v, const QScalar &c);
    friend TensorPoly operator+(const TensorPoly &x, const TensorPoly &y);
};

struct Rule {
    Word lhs;
    NCPoly rhs;
};

enum class HopfOp { coproduct, counit, antipode, star };

/// Finitely presented graded *-algebra with Hopf data and an oriented,
/// confluence-checked rewriting system.
class Presentation {
  public:
    std::string name;
    std::vector<char> gens;
    std::map<char, int> weight_tab;
    std::vector<Rule> rules;
    std::map<char, NCPoly> star_tab;
    std::map<char, TensorPoly> cop_tab;
    std::map<char, QScalar> counit_tab;
    std::map<char, NCPoly> antipode_tab;

    /// Parse the line-oriented presentation format; errors carry line/column.
    static Presentation parse(const std::string &text, const std::string &source_name = "<string>");

    bool is_generator(char g) const;
    int weight(const Word &w) const;

    /// Rewrite to the normal form; throws on step-budget exhaustion.
    NCPoly normal_form(const Word &w) const;
    NCPoly normal_form(const NCPoly &x) const;

    NCPoly mul(const NCPoly &x, const NCPoly &y) const;
    NCPoly mul(const NCPoly &x, const NCPoly &y, const NCPoly &z) const;

    NCPoly star(const NCPoly &x) const;
    NCPoly antipode(const NCPoly &x) const;
    QScalar counit(const NCPoly &x) const;
    TensorPoly coproduct(const NCPoly &x) const;
    TensorPoly coproduct(const Word &w) const;

    /// Projection onto the span of weight-w normal-form words.
    NCPoly weight_component(const NCPoly &x, int w) const;

    /// Local confluence on all rule overlaps of length <= max_len (diamond check).
    /// Returns the list of failing overlap words (empty = pass).
    std::vector<Word> diamond_check(int max_len = 4) const;

    /// Every rule preserves the generator grading.
    bool grading_check() const;

  private:
    mutable std::map<Word, NCPoly> nf_cache_;
    NCPoly reduce_once(const Word &w, bool *changed) const;
};

/// Parse a scalar/word monomial string ("q^-1 a d"), used by the presentation
/// parser and by tests.
NCPoly parse_monomial(const Presentation &p, const std::string &text);

} // namespace qk
