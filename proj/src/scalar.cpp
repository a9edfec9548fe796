#include "ainfty/scalar.hpp"

namespace ainfty {

Field Field::parse(const std::string& s)
{
    if (s == "Q") return Field{0};
    if (s.rfind("Fp:", 0) == 0) {
        unsigned long p = std::stoul(s.substr(3));
        if (p < 2) throw MathError("invalid prime in field spec: " + s);
        return Field{p};
    }
    throw MathError("unknown field spec: " + s + " (expected \"Q\" or \"Fp:<p>\")");
}

Scalar::Scalar(Field f, long num, long den) : v_(num, den), p_(f.p)
{
    if (den == 0) throw MathError("zero denominator");
    v_.canonicalize();
    reduce();
}

void Scalar::reduce()
{
    if (p_ == 0) return;
    mpz_class p(static_cast<unsigned long>(p_));
    if (v_.get_den() != 1) {
        /* fold the denominator in via a modular inverse */
        mpz_class dinv;
        if (mpz_invert(dinv.get_mpz_t(), v_.get_den().get_mpz_t(), p.get_mpz_t()) == 0)
            throw MathError("denominator not invertible mod " + std::to_string(p_));
        mpz_class n = v_.get_num() * dinv;
        v_ = mpq_class(n);
    }
    mpz_class r = v_.get_num() % p;
    if (r < 0) r += p;
    v_ = mpq_class(r);
}

Scalar Scalar::operator+(const Scalar& o) const
{
    check(o);
    Scalar s(field(), v_ + o.v_);
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const
{
    check(o);
    return Scalar(field(), v_ - o.v_);
}

Scalar Scalar::operator*(const Scalar& o) const
{
    check(o);
    return Scalar(field(), v_ * o.v_);
}

Scalar Scalar::operator/(const Scalar& o) const
{
    check(o);
    return *this * o.inverse();
}

Scalar Scalar::operator-() const
{
    return Scalar(field(), -v_);
}

Scalar Scalar::inverse() const
{
    if (is_zero()) throw MathError("division by zero");
    if (p_ == 0) return Scalar(field(), 1 / v_);
    mpz_class p(p_), inv;
    if (mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
        throw MathError("non-invertible residue mod " + std::to_string(p_));
    return Scalar(field(), mpq_class(inv));
}

bool Scalar::operator==(const Scalar& o) const
{
    check(o);
    return v_ == o.v_;
}

std::string Scalar::str() const
{
    return v_.get_str();
}

Scalar Scalar::parse(Field f, const std::string& s)
{
    if (s.empty()) throw MathError("empty scalar literal");
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
        if (!ok) throw MathError("bad scalar literal: " + s);
    }
    mpq_class q(s);
    q.canonicalize();
    return Scalar(f, q);
}

} // namespace ainfty
