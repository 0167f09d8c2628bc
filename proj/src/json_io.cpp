#include "accinfo/json_io.hpp"

#include <fstream>

#include <json.hpp>

namespace accinfo {

namespace {

using nlohmann::json;

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const json& rows, Eigen::Index dim) {
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != dim)
    throw InvalidInput("matrix row count does not match dim");
  CMatrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim)
      throw InvalidInput("matrix column count does not match dim");
    for (Eigen::Index c = 0; c < dim; ++c) {
      const json& entry = row[c];
      if (!entry.is_array() || entry.size() != 2)
        throw InvalidInput("matrix entry is not an [re, im] pair");
      m(r, c) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return m;
}

std::vector<HermMatrix> load_operator_list(const std::string& path,
                                           const char* key) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& err) {
    throw InvalidInput("malformed JSON in " + path + ": " + err.what());
  }
  if (!doc.contains("dim") || !doc.contains(key))
    throw InvalidInput(path + ": expected keys \"dim\" and \"" +
                       std::string(key) + "\"");
  const Eigen::Index dim = doc["dim"].get<Eigen::Index>();
  if (dim < 1) throw InvalidInput(path + ": dim must be positive");
  std::vector<HermMatrix> ops;
  for (const json& m : doc[key])
    ops.emplace_back(matrix_from_json(m, dim), 1e-9);
  return ops;
}

void save_operator_list(const std::vector<HermMatrix>& ops, Eigen::Index dim,
                        const char* key, const std::string& path) {
  json doc;
  doc["dim"] = dim;
  json list = json::array();
  for (const HermMatrix& op : ops) list.push_back(matrix_to_json(op.mat()));
  doc[key] = std::move(list);
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot open " + path);
  out << doc.dump(2) << '\n';
}

}  // namespace

Ensemble load_ensemble(const std::string& path) {
  return Ensemble(load_operator_list(path, "states"));
}

void save_ensemble(const Ensemble& e, const std::string& path) {
  save_operator_list(e.states(), e.dim(), "states", path);
}

Povm load_povm(const std::string& path) {
  return Povm(load_operator_list(path, "members"));
}

void save_povm(const Povm& m, const std::string& path) {
  save_operator_list(m.members(), m.dim(), "members", path);
}

}  // namespace accinfo
