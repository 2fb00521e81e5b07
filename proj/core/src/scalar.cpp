#include "kgraph/scalar.hpp"

#include <stdexcept>

#include "kgraph/error.hpp"

namespace kgraph {

Scalar Scalar::inverse() const {
  mpq_class n = norm();
  if (sgn(n) == 0) throw std::domain_error("inverse of zero");
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string Scalar::to_string() const {
  if (is_real()) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "i";
  }
  if (sgn(re_) == 0) return imag;
  return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + imag;
}

Scalar Scalar::parse(const std::string& text) {
  auto rational = [&](std::string part) -> mpq_class {
    if (part.empty() || part == "+") return 1;
    if (part == "-") return -1;
    if (part.front() == '+') part.erase(0, 1);
    mpq_class q;
    if (q.set_str(part, 10) != 0) {
      throw Error(ErrorCode::InvalidSpec, "not a number: '" + text + "'");
    }
    q.canonicalize();
    return q;
  };
  if (text.empty()) throw Error(ErrorCode::InvalidSpec, "empty scalar");
  if (text.back() != 'i') return Scalar(rational(text));
  std::string body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not the leading one.
  std::size_t split = body.find_last_of("+-");
  if (split == std::string::npos || split == 0) return Scalar(0, rational(body));
  return Scalar(rational(body.substr(0, split)), rational(body.substr(split)));
}

}  // namespace kgraph
