#include "galext/scalar.hpp"

#include <stdexcept>

namespace galext {

Scalar::Scalar(mpq_class re, mpq_class im)
    : re_(std::move(re))
    , im_(std::move(im))
{
    normalize();
}

void Scalar::normalize()
{
    re_.canonicalize();
    im_.canonicalize();
}

Scalar Scalar::ratio(long num, long den)
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    return Scalar(mpq_class(num, den));
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero");
    mpq_class norm = re_ * re_ + im_ * im_;
    return Scalar(re_ / norm, -im_ / norm);
}

Scalar &Scalar::operator+=(const Scalar &o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar &Scalar::operator-=(const Scalar &o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar &Scalar::operator*=(const Scalar &o)
{
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::strong_ordering operator<=>(const Scalar &a, const Scalar &b)
{
    int c = cmp(a.re_, b.re_);
    if (c == 0)
        c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

namespace {

std::string imag_text(const mpq_class &im)
{
    if (im == 1)
        return "i";
    if (im == -1)
        return "-i";
    return im.get_str() + "*i";
}

} // namespace

std::string Scalar::str() const
{
    if (sgn(im_) == 0)
        return re_.get_str();
    if (sgn(re_) == 0)
        return imag_text(im_);
    std::string im = imag_text(im_);
    if (im.front() != '-')
        im = "+" + im;
    return "(" + re_.get_str() + im + ")";
}

Scalar Scalar::parse(const std::string &text)
{
    std::string body = text;
    bool imaginary = false;
    if (body == "i" || body == "+i")
        return imaginary_unit();
    if (body == "-i")
        return -imaginary_unit();
    if (body.size() > 2 && body.compare(body.size() - 2, 2, "*i") == 0) {
        imaginary = true;
        body.resize(body.size() - 2);
    }
    if (body.empty())
        throw std::invalid_argument("empty numeric literal");
    std::size_t start = (body[0] == '-' || body[0] == '+') ? 1 : 0;
    bool seen_slash = false;
    bool digit_before = false;
    bool digit_after = false;
    for (std::size_t k = start; k < body.size(); ++k) {
        char ch = body[k];
        if (ch == '/' && !seen_slash && digit_before) {
            seen_slash = true;
        } else if (ch >= '0' && ch <= '9') {
            (seen_slash ? digit_after : digit_before) = true;
        } else {
            throw std::invalid_argument("bad numeric literal '" + text + "'");
        }
    }
    if (!digit_before || (seen_slash && !digit_after))
        throw std::invalid_argument("bad numeric literal '" + text + "'");
    if (body[0] == '+')
        body.erase(0, 1);
    mpq_class value(body, 10);
    if (value.get_den() == 0)
        throw std::invalid_argument("zero denominator in '" + text + "'");
    value.canonicalize();
    return imaginary ? Scalar(0, value) : Scalar(value);
}

} // namespace galext
