#include "fueterkit/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fueterkit {

namespace {

FieldScalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return {Rational(j.get<long>())};
  return parse_field_scalar(j.get<std::string>());
}

Json scalar_to_json(const FieldScalar& s) { return s.str(); }

std::vector<FieldScalar> coeff_from_json(const Json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw ParseError("coefficient vector must list one entry per basis element");
  std::vector<FieldScalar> c;
  for (auto& x : j) c.push_back(scalar_from_json(x));
  return c;
}

}  // namespace

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

AlgebraPtr resolve_algebra(const std::string& name_or_path) {
  try {
    return builtin_algebra(name_or_path);
  } catch (const ParseError&) {
  }
  namespace fs = std::filesystem;
  std::vector<fs::path> candidates{name_or_path};
  if (const char* env = std::getenv("FUETERKIT_ALGEBRA_PATH")) {
    std::stringstream ss(env);
    std::string dir;
    while (std::getline(ss, dir, ':'))
      if (!dir.empty()) candidates.push_back(fs::path(dir) / name_or_path);
  }
  for (const auto& p : candidates)
    if (fs::exists(p)) return algebra_from_json(load_json(p.string()));
  throw ParseError("algebra '" + name_or_path + "' is neither a builtin nor a readable file");
}

Json algebra_to_json(const AlgebraPtr& spec) {
  Json j;
  j["field"] = spec->field() == Field::Complex ? "C" : "R";
  j["dim"] = spec->dim();
  j["basis"] = spec->basis_labels();
  Json chi = Json::array();
  for (int l = 0; l < spec->dim(); ++l) {
    Json mat = Json::array();
    for (int a = 0; a < spec->dim(); ++a) {
      Json row = Json::array();
      for (int b = 0; b < spec->dim(); ++b) row.push_back(scalar_to_json(spec->chi(l, a, b)));
      mat.push_back(row);
    }
    chi.push_back(mat);
  }
  j["chi"] = chi;
  Json invol = Json::array();
  for (auto& row : spec->involution_matrix()) {
    Json r = Json::array();
    for (auto& x : row) r.push_back(scalar_to_json(x));
    invol.push_back(r);
  }
  j["involution"] = invol;
  switch (spec->norm_policy()) {
    case NormPolicy::CoeffL2: j["norm_policy"] = "coeff_l2"; break;
    case NormPolicy::CoeffSup: j["norm_policy"] = "coeff_sup"; break;
    default: j["norm_policy"] = "regular_rep";
  }
  j["name"] = spec->name();
  return j;
}

AlgebraPtr algebra_from_json(const Json& j) {
  Field field = j.at("field").get<std::string>() == "C" ? Field::Complex : Field::Real;
  int dim = j.at("dim").get<int>();
  std::vector<std::string> basis = j.at("basis").get<std::vector<std::string>>();
  if (static_cast<int>(basis.size()) != dim) throw ParseError("basis label count mismatch");
  std::vector<std::vector<std::vector<FieldScalar>>> chi(
      dim, std::vector<std::vector<FieldScalar>>(dim, std::vector<FieldScalar>(dim)));
  const Json& cj = j.at("chi");
  if (static_cast<int>(cj.size()) != dim) throw ParseError("chi tensor size mismatch");
  for (int l = 0; l < dim; ++l)
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) chi[l][a][b] = scalar_from_json(cj.at(l).at(a).at(b));
  std::vector<std::vector<FieldScalar>> invol(dim, std::vector<FieldScalar>(dim));
  const Json& ij = j.at("involution");
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) invol[a][b] = scalar_from_json(ij.at(a).at(b));
  NormPolicy policy = NormPolicy::RegularRep;
  if (j.contains("norm_policy")) {
    std::string p = j.at("norm_policy").get<std::string>();
    if (p == "coeff_l2")
      policy = NormPolicy::CoeffL2;
    else if (p == "coeff_sup")
      policy = NormPolicy::CoeffSup;
    else if (p != "regular_rep")
      throw ParseError("unknown norm policy '" + p + "'");
  }
  std::string name = j.contains("name") ? j.at("name").get<std::string>() : "custom";
  return std::make_shared<AlgebraSpec>(field, std::move(basis), std::move(chi), std::move(invol),
                                       policy, std::move(name));
}

Json element_to_json(const AlgebraElement& a) {
  Json j = Json::array();
  for (auto& x : a.coeff()) j.push_back(scalar_to_json(x));
  return j;
}

AlgebraElement element_from_json(const Json& j, const AlgebraPtr& spec) {
  return {spec, coeff_from_json(j, spec->dim())};
}

Json matrix_to_json(const MatrixOverA& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(element_to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

MatrixOverA matrix_from_json(const Json& j, const AlgebraPtr& spec) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  int rows = static_cast<int>(j.size());
  int cols = rows ? static_cast<int>(j.at(0).size()) : 0;
  MatrixOverA m(spec, rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j.at(i).size()) != cols) throw ParseError("ragged matrix rows");
    for (int c = 0; c < cols; ++c) m.at(i, c) = element_from_json(j.at(i).at(c), spec);
  }
  return m;
}

Json point_to_json(const FueterPoint& p) {
  Json j = Json::array();
  for (auto& x : p.v()) j.push_back(scalar_to_json(x));
  return j;
}

FueterPoint point_from_json(const Json& j, const AlgebraPtr& spec) {
  return {spec, coeff_from_json(j, spec->dim())};
}

namespace {

template <class S>
Json series_to_json_impl(const S& f, bool matrix_valued) {
  Json j;
  j["algebra"] = f.spec()->name();
  j["center_v"] = point_to_json(f.center());
  j["order"] = f.order();
  j["side"] = f.side() == Side::Left ? "left" : "right";
  Json terms = Json::array();
  for (auto& [alpha, coeff] : f.coeff()) {
    Json t;
    t["alpha"] = alpha;
    if constexpr (std::is_same_v<S, FueterSeries>)
      t["coeff"] = element_to_json(coeff);
    else
      t["coeff"] = matrix_to_json(coeff);
    terms.push_back(t);
  }
  (void)matrix_valued;
  j["terms"] = terms;
  return j;
}

}  // namespace

Json series_to_json(const FueterSeries& f) { return series_to_json_impl(f, false); }
Json series_to_json(const MatrixSeries& f) { return series_to_json_impl(f, true); }

FueterSeries series_from_json(const Json& j) {
  AlgebraPtr spec = resolve_algebra(j.at("algebra").get<std::string>());
  FueterPoint center = point_from_json(j.at("center_v"), spec);
  int order = j.at("order").get<int>();
  Side side = Side::Left;
  if (j.contains("side") && j.at("side").get<std::string>() == "right") side = Side::Right;
  FueterSeries f(center, order, 1, 1, side);
  for (auto& t : j.at("terms")) {
    MultiIndex alpha = t.at("alpha").get<MultiIndex>();
    f.add_coeff(alpha, element_from_json(t.at("coeff"), spec));
  }
  return f;
}

MatrixSeries matrix_series_from_json(const Json& j) {
  AlgebraPtr spec = resolve_algebra(j.at("algebra").get<std::string>());
  FueterPoint center = point_from_json(j.at("center_v"), spec);
  int order = j.at("order").get<int>();
  const Json& terms = j.at("terms");
  if (terms.empty()) return {center, order, 1, 1};
  // flat coefficient vectors denote a scalar series; lift entries to 1x1
  const Json& c0 = terms.at(0).at("coeff");
  bool scalar = !c0.empty() && !c0.at(0).is_array();
  if (scalar) {
    FueterSeries s = series_from_json(j);
    MatrixSeries f(center, order, 1, 1);
    for (auto& [alpha, v] : s.coeff()) f.set_coeff(alpha, MatrixOverA::from_element(v));
    return f;
  }
  MatrixOverA first = matrix_from_json(c0, spec);
  MatrixSeries f(center, order, first.rows(), first.cols());
  for (auto& t : terms) {
    MultiIndex alpha = t.at("alpha").get<MultiIndex>();
    f.add_coeff(alpha, matrix_from_json(t.at("coeff"), spec));
  }
  return f;
}

Json realization_to_json(const Realization& r) {
  Json j;
  j["algebra"] = r.spec()->name();
  j["center_v"] = point_to_json(r.center);
  Json a = Json::array(), b = Json::array();
  for (auto& mat : r.A) a.push_back(matrix_to_json(mat));
  for (auto& mat : r.B) b.push_back(matrix_to_json(mat));
  j["A"] = a;
  j["B"] = b;
  j["C"] = matrix_to_json(r.C);
  j["D"] = matrix_to_json(r.D);
  return j;
}

Realization realization_from_json(const Json& j) {
  AlgebraPtr spec = resolve_algebra(j.at("algebra").get<std::string>());
  Realization r{point_from_json(j.at("center_v"), spec),
                {},
                {},
                matrix_from_json(j.at("C"), spec),
                matrix_from_json(j.at("D"), spec)};
  for (auto& mat : j.at("A")) r.A.push_back(matrix_from_json(mat, spec));
  for (auto& mat : j.at("B")) r.B.push_back(matrix_from_json(mat, spec));
  r.validate();
  return r;
}

std::vector<FieldScalar> parse_coords(const std::string& text) {
  std::vector<FieldScalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_field_scalar(item));
  return out;
}

MultiIndex parse_multi_index(const std::string& text, int m) {
  MultiIndex out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  if (static_cast<int>(out.size()) != m)
    throw ParseError("multi-index needs exactly m components");
  for (int x : out)
    if (x < 0) throw ParseError("multi-index entries must be nonnegative");
  return out;
}

std::string series_str(const FueterSeries& f) {
  if (f.coeff().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [alpha, c] : f.coeff()) {
    if (!first) os << " + ";
    first = false;
    bool anyvar = false;
    for (size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] == 0) continue;
      if (anyvar) os << "*";
      os << "z" << (i + 1);
      if (alpha[i] > 1) os << "^" << alpha[i];
      anyvar = true;
    }
    if (anyvar) os << "*";
    os << "[" << c.str() << "]";
  }
  return os.str();
}

}  // namespace fueterkit
