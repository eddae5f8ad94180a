#include "aknsmf/scalar.hpp"

#include <cctype>

namespace aknsmf {

namespace {

mpq_class canonical(mpq_class q) {
    q.canonicalize();
    return q;
}

// Renders a rational without sign handling quirks: mpq_class::get_str is
// already "num/den" in lowest terms with positive denominator.
std::string rat_str(const mpq_class& q) {
    return q.get_str();
}

// Parses "num" or "num/den" starting at pos; advances pos.
mpq_class parse_rat(std::string_view s, size_t& pos) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw Error("scalar parse: expected digits in '" + std::string(s) + "'");
    std::string num(s.substr(start, pos - start));
    std::string den = "1";
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) throw Error("scalar parse: expected denominator in '" + std::string(s) + "'");
        den = std::string(s.substr(dstart, pos - dstart));
    }
    return canonical(mpq_class(num + "/" + den));
}

}  // namespace

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(canonical(std::move(re))), im_(canonical(std::move(im))) {}

GaussianRational GaussianRational::rational(long num, long den) {
    if (den == 0) throw Error("rational with zero denominator");
    return GaussianRational(canonical(mpq_class(num, den)), 0);
}

GaussianRational GaussianRational::make(long re_num, long re_den, long im_num, long im_den) {
    if (re_den == 0 || im_den == 0) throw Error("rational with zero denominator");
    return GaussianRational(canonical(mpq_class(re_num, re_den)), canonical(mpq_class(im_num, im_den)));
}

GaussianRational GaussianRational::imag_unit() { return GaussianRational(0, 1); }

GaussianRational GaussianRational::sqrt_two_i() { return GaussianRational(1, 1); }

GaussianRational GaussianRational::operator-() const {
    GaussianRational r;
    r.re_ = -re_;
    r.im_ = -im_;
    return r;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw Error("division by zero in Q(i)");
    mpq_class n = re_ * re_ + im_ * im_;
    GaussianRational r;
    r.re_ = re_ / n;
    r.im_ = -im_ / n;
    return r;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    *this *= o.inverse();
    return *this;
}

std::string GaussianRational::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re_ != 0) out += rat_str(re_);
    if (im_ != 0) {
        if (re_ != 0 && im_ > 0) out += "+";
        if (im_ == 1) {
            out += "i";
        } else if (im_ == -1) {
            out += "-i";
        } else {
            out += rat_str(im_) + "i";
        }
    }
    return out;
}

GaussianRational GaussianRational::parse(std::string_view text) {
    size_t pos = 0;
    mpq_class re = 0, im = 0;
    bool any = false;
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+') {
            ++pos;
        } else if (text[pos] == '-') {
            sign = -1;
            ++pos;
        }
        if (pos >= text.size()) throw Error("scalar parse: dangling sign in '" + std::string(text) + "'");
        mpq_class mag;
        if (text[pos] == 'i') {
            mag = 1;
            ++pos;
            im += sign * mag;
        } else {
            mag = parse_rat(text, pos);
            if (pos < text.size() && text[pos] == 'i') {
                ++pos;
                im += sign * mag;
            } else {
                re += sign * mag;
            }
        }
        any = true;
    }
    if (!any) throw Error("scalar parse: empty input");
    return GaussianRational(re, im);
}

}  // namespace aknsmf
