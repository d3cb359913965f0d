#pragma once

#include <iosfwd>
#include <string>

#include "kmersenne/gaussian_dyadic.hpp"
#include "kmersenne/polynomial.hpp"
#include "kmersenne/sequences.hpp"

namespace kmersenne {

// Plain-text rendering, matching the usual presentation of these families:
// Gaussian scalars as "a+bi" (or "numerator/denominator" with a decimal
// power-of-two denominator, e.g. "-i/2", "-1/4"), polynomials descending by
// degree with explicit signs, Gaussian polynomials as "re+i(im)".

std::string to_string(const Integer& v);
std::string to_string(const GaussianDyadic& v);
std::string to_string(const IntPolynomial& p);
std::string to_string(const GaussianPolynomial& p);

std::string family_name(Family family);
Family family_from_string(const std::string& name);  // throws on unknown names

std::ostream& operator<<(std::ostream& os, const GaussianDyadic& v);
std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);
std::ostream& operator<<(std::ostream& os, const GaussianPolynomial& p);

}  // namespace kmersenne
