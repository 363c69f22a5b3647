#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace coringlab {

/// Exact scalar. Over the rationals this is an arbitrary-precision
/// fraction; over a prime field it is kept as an integer in [0, p).
using Rat = mpq_class;

struct Error : std::runtime_error {
    std::string code;
    Error(std::string code_, const std::string& msg)
        : std::runtime_error(msg), code(std::move(code_)) {}
};

enum class FieldKind { rational, prime };

/// Coefficient field shared by every scalar in a document: either Q or F_p.
class Field {
public:
    Field() : kind_(FieldKind::rational) {}

    static Field rationals() { return Field(); }

    static Field prime(const mpz_class& p) {
        if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
            throw Error("field.not_prime", "modulus " + p.get_str() + " is not prime");
        Field f;
        f.kind_ = FieldKind::prime;
        f.p_ = p;
        return f;
    }

    FieldKind kind() const { return kind_; }
    const mpz_class& modulus() const { return p_; }

    bool operator==(const Field& o) const {
        return kind_ == o.kind_ && (kind_ != FieldKind::prime || p_ == o.p_);
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    Rat zero() const { return Rat(0); }
    Rat one() const { return Rat(1); }

    /// Bring a raw rational into canonical form for this field.
    /// For F_p the value is reduced to an integer residue; a denominator
    /// divisible by p is rejected.
    Rat normalize(const Rat& x) const {
        if (kind_ == FieldKind::rational) {
            Rat y = x;
            y.canonicalize();
            return y;
        }
        Rat y = x;
        y.canonicalize();
        mpz_class num = y.get_num() % p_;
        if (num < 0) num += p_;
        mpz_class den = y.get_den() % p_;
        if (den == 0)
            throw Error("field.bad_denominator",
                        "denominator of " + x.get_str() + " vanishes mod " + p_.get_str());
        if (den != 1) {
            mpz_class dinv;
            if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p_.get_mpz_t()) == 0)
                throw Error("field.bad_denominator", "no inverse mod " + p_.get_str());
            num = (num * dinv) % p_;
        }
        return Rat(num);
    }

    // mpq arithmetic keeps canonical form on canonical inputs, so the
    // rational case needs no renormalisation
    Rat add(const Rat& a, const Rat& b) const {
        Rat r(a + b);
        return kind_ == FieldKind::rational ? r : normalize(r);
    }
    Rat sub(const Rat& a, const Rat& b) const {
        Rat r(a - b);
        return kind_ == FieldKind::rational ? r : normalize(r);
    }
    Rat mul(const Rat& a, const Rat& b) const {
        Rat r(a * b);
        return kind_ == FieldKind::rational ? r : normalize(r);
    }
    Rat neg(const Rat& a) const {
        Rat r(-a);
        return kind_ == FieldKind::rational ? r : normalize(r);
    }

    Rat inv(const Rat& a) const {
        if (sgn(a) == 0) throw Error("field.div_by_zero", "inverse of zero");
        if (kind_ == FieldKind::rational) return Rat(1 / a);
        mpz_class ainv;
        mpz_class num = normalize(a).get_num();
        if (mpz_invert(ainv.get_mpz_t(), num.get_mpz_t(), p_.get_mpz_t()) == 0)
            throw Error("field.div_by_zero", "no inverse mod " + p_.get_str());
        return Rat(ainv);
    }

    Rat div(const Rat& a, const Rat& b) const { return mul(a, inv(b)); }

    /// slot += x * y without temporaries; the workhorse of the matrix kernels.
    void acc(Rat& slot, const Rat& x, const Rat& y) const {
        static thread_local Rat scratch;
        mpq_mul(scratch.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
        mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), scratch.get_mpq_t());
        if (kind_ == FieldKind::prime) slot = normalize(slot);
    }

    static bool is_zero(const Rat& a) { return sgn(a) == 0; }

    /// Parse "p", "-p" or "p/q"; arbitrary precision.
    Rat parse_scalar(const std::string& s) const {
        if (s.empty()) throw Error("field.bad_scalar", "empty scalar");
        size_t pos = 0;
        if (s[0] == '+' || s[0] == '-') pos = 1;
        bool seen_digit = false, seen_slash = false;
        for (size_t i = pos; i < s.size(); ++i) {
            if (s[i] == '/') {
                if (seen_slash || !seen_digit || i + 1 == s.size())
                    throw Error("field.bad_scalar", "malformed scalar '" + s + "'");
                seen_slash = true;
                seen_digit = false;
            } else if (s[i] >= '0' && s[i] <= '9') {
                seen_digit = true;
            } else {
                throw Error("field.bad_scalar", "malformed scalar '" + s + "'");
            }
        }
        if (!seen_digit) throw Error("field.bad_scalar", "malformed scalar '" + s + "'");
        Rat x(s);
        if (x.get_den() == 0) throw Error("field.bad_scalar", "zero denominator in '" + s + "'");
        return normalize(x);
    }

    static std::string to_string(const Rat& a) { return a.get_str(); }

    std::string describe() const {
        return kind_ == FieldKind::rational ? "rational" : "prime:" + p_.get_str();
    }

private:
    FieldKind kind_;
    mpz_class p_;
};

}  // namespace coringlab
