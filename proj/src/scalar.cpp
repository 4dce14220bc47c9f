#include "cpt/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "cpt/error.hpp"

namespace cpt {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

Rational parse_compact_rational(const std::string& s, std::string_view original) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  const std::string body = s.substr(pos);
  const auto slash = body.find('/');
  const std::string num = body.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
  auto all_digits = [](const std::string& t) {
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational: '" + std::string(original) + "'");
  }
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(original) + "'");
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace

Scalar::Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Rational parse_rational(std::string_view text) {
  return parse_compact_rational(strip_spaces(text), text);
}

std::string rational_str(const Rational& q) { return q.get_str(10); }

Scalar Scalar::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty scalar");
  if (s.back() != 'i') return Scalar(parse_compact_rational(s, text));

  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not leading and not part of an exponent-free rational.
  std::size_t split = std::string::npos;
  for (std::size_t p = body.size(); p-- > 1;) {
    if (body[p] == '+' || body[p] == '-') {
      split = p;
      break;
    }
  }
  std::string real_part = split == std::string::npos ? "" : body.substr(0, split);
  std::string imag_part = split == std::string::npos ? body : body.substr(split);
  if (imag_part.empty() || imag_part == "+") imag_part = "1";
  if (imag_part == "-") imag_part = "-1";
  Rational re = real_part.empty() ? Rational(0) : parse_compact_rational(real_part, text);
  return Scalar(std::move(re), parse_compact_rational(imag_part, text));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidArgument("inverse of zero scalar");
  const Rational d = norm();
  return {re_ / d, -im_ / d};
}

Scalar& Scalar::operator+=(const Scalar& other) {
  re_ += other.re_;
  im_ += other.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  re_ -= other.re_;
  im_ -= other.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  if (sgn(im_) == 0 && sgn(other.im_) == 0) {
    re_ *= other.re_;
    return *this;
  }
  Rational re = re_ * other.re_ - im_ * other.im_;
  Rational im = re_ * other.im_ + im_ * other.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  if (other.is_zero()) throw InvalidArgument("division by zero scalar");
  if (sgn(other.im_) == 0) {
    re_ /= other.re_;
    im_ /= other.re_;
    return *this;
  }
  return *this *= other.inverse();
}

std::string Scalar::str() const {
  if (is_real()) return rational_str(re_);
  std::string out;
  if (sgn(re_) != 0) out = rational_str(re_);
  const std::string im = rational_str(im_);
  if (!out.empty() && sgn(im_) > 0) out += '+';
  out += im;
  out += " i";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace cpt
