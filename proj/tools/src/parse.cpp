#include "cli.hpp"

#include "mocklab/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>

namespace mocklab::cli {

namespace {

std::string strip(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

Real parse_decimal(const std::string& s) {
  static const std::regex number(R"([+-]?(\d+\.?\d*|\.\d+)(e[+-]?\d+)?)");
  if (!std::regex_match(s, number)) {
    throw DomainError("cannot parse number '" + s + "'");
  }
  return real_from_string(s);
}

}  // namespace

Real parse_real(const std::string& text) {
  std::string s = strip(text);
  const auto at = s.find("pi");
  if (at == std::string::npos) {
    return parse_decimal(s);
  }
  std::string coef = s.substr(0, at);
  std::string rest = s.substr(at + 2);
  if (!coef.empty() && coef.back() == '*') {
    coef.pop_back();
  }
  Real value = pi();
  if (coef == "-") {
    value = -value;
  } else if (!coef.empty() && coef != "+") {
    value *= parse_decimal(coef);
  }
  if (!rest.empty()) {
    if (rest.front() != '/') {
      throw DomainError("cannot parse number '" + text + "'");
    }
    const Real den = parse_decimal(rest.substr(1));
    if (den == 0) {
      throw DomainError("division by zero in '" + text + "'");
    }
    value /= den;
  }
  return value;
}

Complex parse_complex(const std::string& text) {
  std::string s = strip(text);
  if (s.empty()) {
    throw DomainError("empty number");
  }
  const bool imaginary =
      s.back() == 'i' && (s.size() < 2 || s.compare(s.size() - 2, 2, "pi") != 0 || s.ends_with("*i"));
  if (!imaginary) {
    return Complex(parse_real(s));
  }
  s.pop_back();
  if (!s.empty() && s.back() == '*') {
    s.pop_back();
  }
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e') {
      split = k;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : s.substr(0, split);
  const std::string im = split == std::string::npos ? s : s.substr(split);
  auto coefficient = [](const std::string& t) {
    if (t.empty() || t == "+") {
      return Real(1);
    }
    if (t == "-") {
      return Real(-1);
    }
    return parse_real(t);
  };
  return {re.empty() ? Real(0) : parse_real(re), coefficient(im)};
}

std::vector<Real> parse_real_list(const std::string& text) {
  std::vector<Real> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(parse_real(item));
  }
  if (out.empty()) {
    throw DomainError("empty list");
  }
  return out;
}

std::vector<GridPoint> parse_grid(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("invalid grid JSON: ") + e.what());
  }
  if (!doc.is_array() || doc.empty()) {
    throw DomainError("grid must be a nonempty JSON list");
  }
  auto component = [](const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) {
      return Real(0);
    }
    const auto& v = j.at(key);
    if (v.is_string()) {
      return parse_real(v.get<std::string>());
    }
    if (v.is_number()) {
      return parse_decimal(v.dump());
    }
    throw DomainError(std::string("grid field '") + key + "' must be a number or string");
  };
  std::vector<GridPoint> grid;
  for (const auto& j : doc) {
    if (!j.is_object() || !j.contains("as")) {
      throw DomainError("grid points need re, im and an \"as\" tag");
    }
    const std::string as = j.at("as").get<std::string>();
    if (as != "tau" && as != "alpha") {
      throw DomainError("grid tag must be \"tau\" or \"alpha\", got '" + as + "'");
    }
    grid.push_back({Complex(component(j, "re"), component(j, "im")), as == "tau"});
  }
  return grid;
}

}  // namespace mocklab::cli
