#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace v22 {

// Exact rational scalar. mpq_class keeps gcd-reduced num/den with den > 0 as
// long as every value is canonicalized on construction, which the helpers
// below guarantee.
using Rat = mpq_class;

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& m) : std::runtime_error(m) {}
};

inline Rat ratq(long num, long den = 1) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw DomainError("bad rational literal: " + s);
    if (r.get_den() == 0) throw DomainError("rational with zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    // base is canonical, so num^e and den^e stay coprime
    return out;
}

// Exact square root when the argument is the square of a rational.
inline std::optional<Rat> rat_sqrt(const Rat& r) {
    if (sgn(r) < 0) return std::nullopt;
    if (sgn(r) == 0) return Rat(0);
    if (mpz_perfect_square_p(r.get_num_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(r.get_den_mpz_t()) == 0) return std::nullopt;
    Rat out;
    mpz_sqrt(out.get_num_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(out.get_den_mpz_t(), r.get_den_mpz_t());
    return out;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace v22
