#pragma once

/* Exact field scalars: arbitrary-precision rationals (GMP) or prime fields. */

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace ainfty {

struct MathError : std::runtime_error {
    explicit MathError(const std::string& msg) : std::runtime_error(msg) {}
};

/* p == 0 means the rationals; p > 0 means Z/p (p prime, not verified). */
struct Field {
    unsigned long p = 0;

    bool is_rational() const { return p == 0; }
    bool operator==(const Field& o) const { return p == o.p; }
    bool operator!=(const Field& o) const { return p != o.p; }
    std::string str() const { return p == 0 ? "Q" : "Fp:" + std::to_string(p); }
    static Field parse(const std::string& s);
};

/* Immutable exact scalar. Rationals are kept canonical (lowest terms,
 * positive denominator); prime-field residues lie in [0, p). */
class Scalar {
public:
    Scalar() = default;
    explicit Scalar(Field f) : p_(f.p) {}
    Scalar(Field f, long n) : v_(n), p_(f.p) { reduce(); }
    Scalar(Field f, long num, long den);
    Scalar(Field f, const mpq_class& q) : v_(q), p_(f.p) { v_.canonicalize(); reduce(); }

    Field field() const { return Field{p_}; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /* "n" or "n/d" for rationals, the residue for prime fields */
    std::string str() const;
    static Scalar parse(Field f, const std::string& s);

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_ = 0;
    unsigned long p_ = 0;

    void reduce();
    void check(const Scalar& o) const {
        if (p_ != o.p_) throw MathError("scalar field mismatch: " + field().str() + " vs " + o.field().str());
    }
};

} // namespace ainfty
