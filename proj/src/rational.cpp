#include "hpd/rational.hpp"

namespace hpd {

namespace {

std::string q_str(const mpq_class& q) { return q.get_str(); }

// |coeff|*i with coefficient 1 printed as bare "i".
std::string imag_str(const mpq_class& q) {
  if (q == 1) return "i";
  if (q == -1) return "-i";
  return q_str(q) + "*i";
}

}  // namespace

std::string GaussianRational::str() const {
  if (im_ == 0) return q_str(re_);
  if (re_ == 0) return imag_str(im_);
  std::string s = "(" + q_str(re_);
  if (im_ > 0) {
    s += "+";
    s += (im_ == 1) ? "i" : q_str(im_) + "*i";
  } else {
    mpq_class a(-im_);
    s += "-";
    s += (a == 1) ? "i" : a.get_str() + "*i";
  }
  s += ")";
  return s;
}

}  // namespace hpd
