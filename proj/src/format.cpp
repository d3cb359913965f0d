#include "kmersenne/format.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

namespace kmersenne {

namespace {

std::string dec(const Integer& v) { return v.str(); }

std::string power_of_two_dec(std::int64_t e) {
  return pow2(static_cast<std::uint64_t>(e)).str();
}

/// "a+bi" for a Gaussian integer numerator (b folded as "i", "-i", "3i", ...).
std::string gaussian_int_string(const Integer& a, const Integer& b) {
  if (b == 0) return dec(a);
  std::string imag = b == 1 ? "i" : b == -1 ? "-i" : dec(b) + "i";
  if (a == 0) return imag;
  return dec(a) + (b > 0 ? "+" : "") + imag;
}

bool dyadic_real_negative(const GaussianDyadic& c) { return c.re_num() < 0; }

GaussianDyadic dyadic_real_abs(const GaussianDyadic& c) {
  return dyadic_real_negative(c) ? -c : c;
}

/// One monomial |c| * x^j of a real-dyadic-coefficient polynomial, without sign.
std::string real_term(const GaussianDyadic& c_abs, std::size_t j) {
  const Integer& num = c_abs.re_num();
  std::string piece;
  if (j == 0) {
    piece = dec(num);
  } else {
    if (num != 1) piece = dec(num);
    piece += "x";
    if (j >= 2) piece += "^" + std::to_string(j);
  }
  if (c_abs.exp2() > 0) piece += "/" + power_of_two_dec(c_abs.exp2());
  return piece;
}

/// Polynomial with real dyadic coefficients (ascending input), descending output.
std::string real_poly_string(const std::vector<GaussianDyadic>& coeffs) {
  std::string out;
  for (std::size_t j = coeffs.size(); j-- > 0;) {
    const GaussianDyadic& c = coeffs[j];
    if (c.is_zero()) continue;
    const bool negative = dyadic_real_negative(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    out += real_term(dyadic_real_abs(c), j);
  }
  return out.empty() ? "0" : out;
}

void split_parts(const GaussianPolynomial& p, std::vector<GaussianDyadic>& re,
                 std::vector<GaussianDyadic>& im) {
  for (const auto& c : p.coefficients()) {
    re.emplace_back(c.re_num(), Integer(0), c.exp2());
    im.emplace_back(c.im_num(), Integer(0), c.exp2());
  }
  while (!re.empty() && re.back().is_zero()) re.pop_back();
  while (!im.empty() && im.back().is_zero()) im.pop_back();
}

}  // namespace

std::string to_string(const Integer& v) { return dec(v); }

std::string to_string(const GaussianDyadic& v) {
  if (v.is_zero()) return "0";
  const std::string numerator = gaussian_int_string(v.re_num(), v.im_num());
  if (v.exp2() == 0) return numerator;
  const std::string denominator = power_of_two_dec(v.exp2());
  if (v.re_num() != 0 && v.im_num() != 0)
    return "(" + numerator + ")/" + denominator;
  return numerator + "/" + denominator;
}

std::string to_string(const IntPolynomial& p) { return to_string(to_gaussian(p)); }

std::string to_string(const GaussianPolynomial& p) {
  if (p.is_zero()) return "0";
  if (p.degree() == 0) return to_string(p.coefficient(0));

  std::vector<GaussianDyadic> re, im;
  split_parts(p, re, im);
  const std::string re_str = real_poly_string(re);
  if (im.empty()) return re_str;

  std::string im_piece;
  if (im.size() == 1 && im[0] == GaussianDyadic(1)) {
    im_piece = "+i";
  } else if (im.size() == 1 && im[0] == GaussianDyadic(-1)) {
    im_piece = "-i";
  } else if (dyadic_real_negative(im.back())) {
    for (auto& c : im) c = -c;
    im_piece = "-i(" + real_poly_string(im) + ")";
  } else {
    im_piece = "+i(" + real_poly_string(im) + ")";
  }

  if (re.empty()) {
    // purely imaginary: drop the leading '+' of "+i(...)"
    return im_piece[0] == '+' ? im_piece.substr(1) : im_piece;
  }
  return re_str + im_piece;
}

std::string family_name(Family family) {
  switch (family) {
    case Family::M: return "M";
    case Family::GM: return "GM";
    case Family::MP: return "MP";
    case Family::GMP: return "GMP";
  }
  throw std::invalid_argument("unknown family");
}

Family family_from_string(const std::string& name) {
  if (name == "M") return Family::M;
  if (name == "GM") return Family::GM;
  if (name == "MP") return Family::MP;
  if (name == "GMP") return Family::GMP;
  throw std::invalid_argument("unknown family '" + name + "' (expected M, GM, MP or GMP)");
}

std::ostream& operator<<(std::ostream& os, const GaussianDyadic& v) { return os << to_string(v); }
std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const GaussianPolynomial& p) { return os << to_string(p); }

}  // namespace kmersenne
