#include "laxwb/exactnum/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace laxwb {

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: division by zero");
  if (sgn(im_) == 0) return Scalar(mpq_class(1) / re_);
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

std::string Scalar::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "*i";
  }
  if (sgn(re_) == 0) return imag;
  if (imag.front() == '-') return re_.get_str() + imag;
  return re_.get_str() + "+" + imag;
}

namespace {

mpq_class parse_rational(std::string_view text, std::string_view whole) {
  if (text.empty()) throw std::invalid_argument("malformed scalar: '" + std::string(whole) + "'");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+')) {
      throw std::invalid_argument("malformed scalar: '" + std::string(whole) + "'");
    }
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed scalar: '" + std::string(whole) + "'");
  }
  if (sgn(q.get_den()) == 0) {
    throw std::invalid_argument("zero denominator in scalar: '" + std::string(whole) + "'");
  }
  q.canonicalize();
  return q;
}

// "i", "-i", "3*i", "-1/2*i", "+i"
mpq_class parse_imaginary(std::string_view term, std::string_view whole) {
  term.remove_suffix(1);  // trailing 'i'
  if (!term.empty() && term.back() == '*') term.remove_suffix(1);
  if (term.empty() || term == "+") return 1;
  if (term == "-") return -1;
  return parse_rational(term, whole);
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  std::string_view s(compact);
  if (s.empty()) throw std::invalid_argument("empty scalar");
  if (s.back() != 'i') return Scalar(parse_rational(s, text));
  // Split at the last sign that is not the first character.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return Scalar(0, parse_imaginary(s, text));
  return Scalar(parse_rational(s.substr(0, split), text), parse_imaginary(s.substr(split), text));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace laxwb
