#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace aknsmf {

/// Error thrown by engine operations: bad input, division by zero,
/// insufficient truncation order, unknown variable, ...
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Element of Q(i), the field of Gaussian rationals: re + im*i with
/// arbitrary-precision rational parts. Values are immutable and always
/// stored canonically (lowest terms, positive denominator), so equality
/// is structural. sqrt(2i) is representable exactly as 1+i.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}
    GaussianRational(mpq_class re, mpq_class im);

    /// num/den as a real value; den must be nonzero.
    static GaussianRational rational(long num, long den);
    /// (re_num/re_den) + (im_num/im_den)*i
    static GaussianRational make(long re_num, long re_den, long im_num, long im_den);
    static GaussianRational imag_unit();
    /// The exact square root of 2i used to normalize the phase coordinates:
    /// (1+i)^2 = 2i.
    static GaussianRational sqrt_two_i();

    /// Parses the text grammar produced by str(): "3", "-1/4", "i", "-2i",
    /// "3/8i", "-1/4+3/8i", ...
    static GaussianRational parse(std::string_view text);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational operator-() const;
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
        a += b;
        return a;
    }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
        a -= b;
        return a;
    }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) {
        a *= b;
        return a;
    }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) {
        a /= b;
        return a;
    }

    /// Multiplicative inverse; throws on zero.
    GaussianRational inverse() const;

    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    /// Canonical text form, e.g. "0", "3", "-1/4", "i", "-2i", "-1/4+3/8i".
    std::string str() const;

private:
    mpq_class re_, im_;
};

inline GaussianRational operator*(long n, const GaussianRational& x) {
    return GaussianRational(n) * x;
}

}  // namespace aknsmf
