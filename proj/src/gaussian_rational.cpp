#include "slocc/gaussian_rational.hpp"

#include <cctype>
#include <stdexcept>

namespace slocc {

GaussianRational GaussianRational::inverse() const {
  mpq_class n = norm();
  if (sgn(n) == 0) throw std::domain_error("GaussianRational: division by zero");
  return {re_ / n, -im_ / n};
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
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (sgn(o.im_) == 0) {
    if (sgn(o.re_) == 0) throw std::domain_error("GaussianRational: division by zero");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

int GaussianRational::compare(const GaussianRational& a, const GaussianRational& b) {
  int c = cmp(a.re_, b.re_);
  if (c != 0) return c < 0 ? -1 : 1;
  c = cmp(a.im_, b.im_);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') pos = 1;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t i = pos; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '/') {
      if (seen_slash || !digit_before) throw std::invalid_argument("bad rational: " + std::string(text));
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw std::invalid_argument("bad rational: " + std::string(text));
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) {
    throw std::invalid_argument("bad rational: " + std::string(text));
  }
  std::string s(text[0] == '+' ? text.substr(1) : text);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + std::string(text));
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  q.canonicalize();
  return q;
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "i";
  }
  if (sgn(re_) == 0) return imag;
  if (imag[0] != '-') imag = "+" + imag;
  return re_.get_str() + imag;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("empty number");
  if (s.back() != 'i') return GaussianRational(parse_rational(s));
  s.pop_back();
  // Split real and imaginary parts at the last sign that is not leading.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if (s[i] == '+' || s[i] == '-') {
      split = i;
      break;
    }
  }
  auto imag_of = [](const std::string& part) -> mpq_class {
    if (part.empty() || part == "+") return mpq_class(1);
    if (part == "-") return mpq_class(-1);
    return parse_rational(part);
  };
  if (split == std::string::npos) return {mpq_class(0), imag_of(s)};
  return {parse_rational(s.substr(0, split)), imag_of(s.substr(split))};
}

std::size_t GaussianRational::hash() const {
  std::hash<std::string> h;
  return h(to_string());
}

}  // namespace slocc
