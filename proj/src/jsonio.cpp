#include "tdp/jsonio.hpp"

#include <stdexcept>

namespace tdp {

namespace {

const mpz_class& double_safe_max() {
  static const mpz_class v("9007199254740991");  // 2^53 - 1
  return v;
}

}  // namespace

Json json_int(const mpz_class& value) {
  if (value <= double_safe_max() && value >= -double_safe_max()) {
    return Json(static_cast<long long>(value.get_si()));
  }
  return Json(value.get_str());
}

Json coeffs_json(const Polynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(json_int(c));
  return arr;
}

Polynomial poly_from_json(const Json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("polynomial json: expected an array");
  }
  std::vector<mpz_class> coeffs;
  coeffs.reserve(j.size());
  for (const auto& item : j) {
    if (item.is_number_unsigned()) {
      coeffs.emplace_back(static_cast<unsigned long>(item.get<unsigned long long>()));
    } else if (item.is_number_integer()) {
      coeffs.emplace_back(static_cast<long>(item.get<long long>()));
    } else if (item.is_string()) {
      try {
        coeffs.emplace_back(item.get<std::string>());
      } catch (const std::invalid_argument&) {
        throw std::invalid_argument("polynomial json: malformed integer '" +
                                    item.get<std::string>() + "'");
      }
    } else {
      throw std::invalid_argument(
          "polynomial json: coefficients must be integers or decimal strings");
    }
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace tdp
