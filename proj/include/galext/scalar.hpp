#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>

namespace galext {

/**
 * Exact Gaussian rational re + im*i.
 *
 * Both parts are GMP rationals kept in lowest terms with positive
 * denominators, so zero has the single representation 0/1 + 0/1*i and
 * structural equality is numeric equality.
 */
class Scalar
{
public:
    Scalar() = default;
    Scalar(long value) : re_(value) {}
    Scalar(mpq_class re, mpq_class im = 0);

    /// p/q + (r/s)*i from machine integers; q and s must be nonzero.
    static Scalar ratio(long num, long den);
    static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class &re() const { return re_; }
    const mpq_class &im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    /// Multiplicative inverse; throws std::domain_error on zero.
    Scalar inverse() const;

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar &operator+=(const Scalar &o);
    Scalar &operator-=(const Scalar &o);
    Scalar &operator*=(const Scalar &o);
    Scalar &operator/=(const Scalar &o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

    friend bool operator==(const Scalar &a, const Scalar &b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Total order (real part first), used only for canonical containers.
    friend std::strong_ordering operator<=>(const Scalar &a, const Scalar &b);

    /// Deterministic text: "0", "3/4", "-i", "1/2*i", "(1/2+i)".
    std::string str() const;

    /// Parse "p", "p/q", "p/q*i", "i", "-i"; throws std::invalid_argument.
    static Scalar parse(const std::string &text);

private:
    void normalize();

    mpq_class re_{0};
    mpq_class im_{0};
};

inline std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.str(); }

} // namespace galext
