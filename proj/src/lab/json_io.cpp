#include "splab/lab/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace splab::lab {

namespace {

std::size_t read_genus(const Json& j) {
  if (!j.is_object() || !j.contains("g") || !j.at("g").is_number_integer())
    throw std::invalid_argument("expected an object with integer field \"g\"");
  const auto g = j.at("g").get<long long>();
  if (g < 1) throw std::invalid_argument("genus must be at least 1");
  return static_cast<std::size_t>(g);
}

std::vector<Vec> read_rows(const Json& j, const char* key, std::size_t count, std::size_t width) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw std::invalid_argument(std::string("missing array field \"") + key + "\"");
  const Json& rows = j.at(key);
  if (rows.size() != count) throw std::invalid_argument(std::string("wrong length of ") + key);
  std::vector<Vec> out;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != width)
      throw std::invalid_argument(std::string("wrong row width in ") + key);
    Vec v;
    for (const auto& x : row) v.push_back(rational_from_json(x));
    out.push_back(std::move(v));
  }
  return out;
}

Json rows_to_json(const std::vector<Vec>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(rational_to_json(x));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(j.dump());
  throw std::invalid_argument("rational entries must be strings or integers: " + j.dump());
}

Json matrix_to_json(const SymplecticMap& f) {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < f.dim(); ++r) rows.push_back(f.matrix().row(r));
  return Json{{"g", f.genus()}, {"rows", rows_to_json(rows)}};
}

SymplecticMap matrix_from_json(const Json& j) {
  const std::size_t g = read_genus(j);
  const auto rows = read_rows(j, "rows", 2 * g, 2 * g);
  QMatrix m(2 * g, 2 * g);
  for (std::size_t r = 0; r < 2 * g; ++r)
    for (std::size_t c = 0; c < 2 * g; ++c) m(r, c) = rows[r][c];
  return SymplecticMap(g, std::move(m));
}

Json ext_to_json(const ExtElement& e) {
  Json j = matrix_to_json(e.f);
  j["level"] = e.m.get_str();
  return j;
}

Json lagrangian_to_json(const OrientedLagrangian& l) {
  return Json{{"g", l.genus()}, {"basis", rows_to_json(l.basis())}};
}

OrientedLagrangian lagrangian_from_json(const Json& j) {
  const std::size_t g = read_genus(j);
  return OrientedLagrangian(g, read_rows(j, "basis", g, 2 * g));
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

}  // namespace splab::lab
