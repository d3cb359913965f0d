#include "kmersenne/json_io.hpp"

#include <stdexcept>

#include "kmersenne/format.hpp"

namespace kmersenne {

using nlohmann::json;

json value_to_json(const GaussianDyadic& v) {
  return json{{"re", v.re_num().str()}, {"im", v.im_num().str()}, {"exp2", v.exp2()}};
}

json value_to_json(const GaussianPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(value_to_json(c));
  return json{{"coeffs", std::move(coeffs)}};
}

json value_to_json(const IntPolynomial& p) { return value_to_json(to_gaussian(p)); }

namespace {

Integer integer_from_json(const json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.get<long long>());
  throw std::invalid_argument("expected a decimal string or integer");
}

}  // namespace

GaussianDyadic dyadic_from_json(const json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im") || !j.contains("exp2"))
    throw std::invalid_argument("expected a dyadic object {re, im, exp2}");
  return GaussianDyadic(integer_from_json(j.at("re")), integer_from_json(j.at("im")),
                        j.at("exp2").get<std::int64_t>());
}

GaussianPolynomial value_from_json(const json& j) {
  if (j.is_object() && j.contains("coeffs")) {
    std::vector<GaussianDyadic> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(dyadic_from_json(c));
    return GaussianPolynomial::from_coefficients(std::move(coeffs));
  }
  return to_gaussian(dyadic_from_json(j));
}

json term_record(Family family, std::uint64_t n, std::uint64_t k,
                 const GaussianPolynomial& value) {
  const bool scalar = family == Family::M || family == Family::GM;
  return json{{"family", family_name(family)},
              {"n", n},
              {"k", k},
              {"value", scalar ? value_to_json(value.coefficient(0)) : value_to_json(value)}};
}

json report_to_json(const IdentityReport& report) {
  json params = json::object();
  for (const auto& [name, value] : report.params) params[name] = value;
  return json{{"identity", report.identity}, {"params", std::move(params)},
              {"orientation", report.orientation},
              {"lhs", value_to_json(report.lhs)},   {"rhs", value_to_json(report.rhs)},
              {"holds", report.holds}};
}

json suite_result_to_json(const SuiteResult& result) {
  json failures = json::array();
  for (const auto& f : result.failures) failures.push_back(report_to_json(f));
  return json{{"suite", result.suite},   {"family", result.family},
              {"cells", result.cells},   {"passed", result.passed},
              {"holds", result.ok()},    {"failures", std::move(failures)}};
}

}  // namespace kmersenne
