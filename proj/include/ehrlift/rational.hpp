#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace ehrlift {

// Exact rational scalar. Always reduced, denominator > 0 (gmp invariant).
using Rat = mpq_class;

inline Rat rat_pow(const Rat& base, long e) {
    if (base == 0) {
        if (e < 0) throw std::domain_error("rat_pow: 0 to negative power");
        return e == 0 ? Rat(1) : Rat(0);
    }
    Rat b = e < 0 ? Rat(1) / base : base;
    unsigned long k = e < 0 ? -(unsigned long)e : (unsigned long)e;
    Rat r = 1;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

// mpq_class(n, d) does not reduce; this does.
inline Rat rat_frac(long n, long d) {
    if (d == 0) throw std::domain_error("rat_frac: zero denominator");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

// Parses "p", "-p" or "p/q".
inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline long rat_to_long(const Rat& r) {
    if (r.get_den() != 1) throw std::domain_error("not an integer: " + r.get_str());
    if (!r.get_num().fits_slong_p()) throw std::overflow_error("integer too large");
    return r.get_num().get_si();
}

inline Rat rat_floor(const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return Rat(q);
}

inline long long rat_floor_ll(const Rat& r) {
    Rat f = rat_floor(r);
    if (!f.get_num().fits_slong_p()) throw std::overflow_error("floor too large");
    return f.get_num().get_si();
}

inline long long rat_ceil_ll(const Rat& r) { return -rat_floor_ll(-r); }

}  // namespace ehrlift
