#pragma once

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "opwin/matrix.hpp"

namespace opwin {

// Wire format: complex numbers are [re, im] pairs; grids are row-major and
// carry an explicit "n" field.

namespace detail {

inline cplx complex_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw domain_error(where + ": expected a [re, im] pair, got " + j.dump());
  return cplx{j[0].get<double>(), j[1].get<double>()};
}

inline nlohmann::json complex_to_json(cplx v) {
  return nlohmann::json::array({v.real(), v.imag()});
}

inline void check_grid(const nlohmann::json& j, const char* values_key,
                       const std::string& where, std::size_t rank) {
  if (!j.is_object()) throw domain_error(where + ": expected a JSON object");
  if (!j.contains("n") || !j["n"].is_number_unsigned() || j["n"].get<std::size_t>() == 0)
    throw domain_error(where + ": missing or invalid \"n\"");
  if (!j.contains(values_key) || !j[values_key].is_array())
    throw domain_error(where + ": missing \"" + values_key + "\" array");
  const std::size_t n = j["n"].get<std::size_t>();
  const std::size_t expect = rank == 1 ? n : n * n;
  if (j[values_key].size() != expect)
    throw domain_error(where + ": expected " + std::to_string(expect) + " entries for n=" +
                       std::to_string(n) + ", got " + std::to_string(j[values_key].size()));
}

}  // namespace detail

inline nlohmann::json to_json(const Signal& f) {
  nlohmann::json j;
  j["n"] = f.size();
  j["values"] = nlohmann::json::array();
  for (const auto& v : f.values()) j["values"].push_back(detail::complex_to_json(v));
  return j;
}

inline Signal signal_from_json(const nlohmann::json& j) {
  detail::check_grid(j, "values", "signal", 1);
  const std::size_t n = j["n"].get<std::size_t>();
  Signal f(n);
  for (std::size_t t = 0; t < n; ++t)
    f[t] = detail::complex_from_json(j["values"][t], "signal.values[" + std::to_string(t) + "]");
  return f;
}

inline nlohmann::json to_json(const PhaseField& F) {
  nlohmann::json j;
  j["n"] = F.group_size();
  j["values"] = nlohmann::json::array();
  for (const auto& v : F.values()) j["values"].push_back(detail::complex_to_json(v));
  return j;
}

inline PhaseField field_from_json(const nlohmann::json& j) {
  detail::check_grid(j, "values", "field", 2);
  const std::size_t n = j["n"].get<std::size_t>();
  PhaseField F(n);
  for (std::size_t i = 0; i < n * n; ++i)
    F.values()[i] =
        detail::complex_from_json(j["values"][i], "field.values[" + std::to_string(i) + "]");
  return F;
}

inline nlohmann::json to_json(const OperatorWindow& S) {
  nlohmann::json j;
  j["n"] = S.size();
  j["entries"] = nlohmann::json::array();
  for (const auto& v : S.entries()) j["entries"].push_back(detail::complex_to_json(v));
  return j;
}

inline OperatorWindow operator_from_json(const nlohmann::json& j) {
  detail::check_grid(j, "entries", "operator", 2);
  const std::size_t n = j["n"].get<std::size_t>();
  OperatorWindow S(n);
  for (std::size_t i = 0; i < n * n; ++i)
    S.entries()[i] =
        detail::complex_from_json(j["entries"][i], "operator.entries[" + std::to_string(i) + "]");
  return S;
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open '" + path + "' for reading");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw domain_error("'" + path + "' is not valid JSON: " + e.what());
  }
  return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw domain_error("cannot open '" + path + "' for writing");
  out << text;
}

// CSV rendering of a phase-space grid: one row per point.
inline std::string field_to_csv(const PhaseField& F) {
  std::ostringstream os;
  os << "x,xi,re,im\n";
  const std::size_t n = F.group_size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xi = 0; xi < n; ++xi)
      os << x << ',' << xi << ',' << nlohmann::json(F(x, xi).real()).dump() << ','
         << nlohmann::json(F(x, xi).imag()).dump() << '\n';
  return os.str();
}

}  // namespace opwin
