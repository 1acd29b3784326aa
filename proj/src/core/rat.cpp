#include "core/rat.hpp"

namespace orifold {

Rat::Rat(long num, long den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
    Rat d;
    mpq_set_si(d.q_, den, 1);
    mpq_div(q_, q_, d.q_);
}

Rat Rat::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rat: empty string");
    for (char c : s) {
        if (!(c == '-' || c == '+' || c == '/' || (c >= '0' && c <= '9')))
            throw std::invalid_argument("Rat: invalid character in '" + s + "'");
    }
    Rat r;
    if (mpq_set_str(r.q_, s.c_str(), 10) != 0)
        throw std::invalid_argument("Rat: cannot parse '" + s + "'");
    if (mpz_sgn(mpq_denref(r.q_)) == 0)
        throw std::invalid_argument("Rat: zero denominator in '" + s + "'");
    mpq_canonicalize(r.q_);
    return r;
}

std::string Rat::str() const {
    char* c = mpq_get_str(nullptr, 10, q_);
    std::string s(c);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(c, s.size() + 1);
    return s;
}

long Rat::to_long() const {
    if (!is_integer()) throw std::domain_error("Rat: not an integer");
    if (!mpz_fits_slong_p(mpq_numref(q_))) throw std::domain_error("Rat: integer overflow");
    return mpz_get_si(mpq_numref(q_));
}

Rat Rat::floor() const {
    Rat r;
    mpz_t f;
    mpz_init(f);
    mpz_fdiv_q(f, mpq_numref(q_), mpq_denref(q_));
    mpq_set_z(r.q_, f);
    mpz_clear(f);
    return r;
}

}  // namespace orifold
