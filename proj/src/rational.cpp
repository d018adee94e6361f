#include "qk/rational.hpp"

#include <stdexcept>

namespace qk {

std::string rat_str(const Rat &r) { return r.get_str(); }

std::string GRat::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re != 0) out += rat_str(re);
    if (im != 0) {
        if (!out.empty() && im > 0) out += "+";
        if (im == -1)
            out += "-i";
        else if (im == 1)
            out += "i";
        else
            out += rat_str(im) + "i";
    }
    return out;
}

Rat parse_rat(const std::string &s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    return r;
}

bool rat_sqrt(const Rat &r, Rat *root) {
    if (r < 0) return false;
    mpz_class num = r.get_num(), den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    if (root) {
        Rat r(sn, sd);
        r.canonicalize();
        *root = r;
    }
    return true;
}

} // namespace qk
