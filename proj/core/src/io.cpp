#include "angularity/io.hpp"

#include <fstream>
#include <sstream>

namespace angularity {
namespace {

std::string at(const std::string& path, const std::string& key) { return path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(at(path, key), "missing field");
  return *it;
}

int int_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  return j.get<int>();
}

double double_from_json(const Json& j, const std::string& path) {
  if (!j.is_number()) throw ParseError(path, "expected a number");
  return j.get<double>();
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  return j;
}

Vec vec_from_json(const Json& j, int n, const std::string& path) {
  array_at(j, path);
  if (static_cast<int>(j.size()) != n) throw ParseError(path, "expected " + std::to_string(n) + " entries");
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = double_from_json(j[static_cast<std::size_t>(i)], at(path, static_cast<std::size_t>(i)));
  return v;
}

Subset index_set(const Json& j, int n, int grade, const std::string& path) {
  array_at(j, path);
  if (static_cast<int>(j.size()) != grade) throw ParseError(path, "expected " + std::to_string(grade) + " indices");
  Subset s;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const int idx = int_from_json(j[i], at(path, i));
    if (idx < 1 || idx > n) throw ParseError(at(path, i), "index out of range 1.." + std::to_string(n));
    if (!s.empty() && idx - 1 <= s.back()) throw ParseError(at(path, i), "indices must be strictly increasing");
    s.push_back(idx - 1);
  }
  return s;
}

Json index_json(const Subset& s) {
  Json j = Json::array();
  for (int i : s) j.push_back(i + 1);
  return j;
}

}  // namespace

Json load_json_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ParseError(file, "cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(file, e.what());
  }
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number()) return to_rational(j.get<double>());
  if (!j.is_string()) throw ParseError(path, "expected a rational (\"p/q\") or a number");
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  if (slash != std::string::npos && s.find_first_not_of("0+-", slash + 1) == std::string::npos)
    throw ParseError(path, "zero denominator in '" + s + "'");
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw ParseError(path, "malformed rational '" + s + "'");
  }
}

std::string rational_to_string(const Rational& q) { return q.str(); }

BiGradedForm form_from_json(const Json& j, const std::string& path) {
  const int n = int_from_json(field(j, "n", path), at(path, "n"));
  const int base = int_from_json(field(j, "base", path), at(path, "base"));
  const int fiber = int_from_json(field(j, "fiber", path), at(path, "fiber"));
  if (n < 1) throw ParseError(at(path, "n"), "dimension must be positive");
  if (base < 0 || base > n) throw ParseError(at(path, "base"), "grade out of range");
  if (fiber < 0 || fiber > n) throw ParseError(at(path, "fiber"), "grade out of range");
  BiGradedForm omega(n, base, fiber);
  const std::string tp = at(path, "terms");
  const Json& terms = array_at(field(j, "terms", path), tp);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string p = at(tp, t);
    const Subset bi = index_set(field(terms[t], "base_idx", p), n, base, at(p, "base_idx"));
    const Subset fi = index_set(field(terms[t], "fiber_idx", p), n, fiber, at(p, "fiber_idx"));
    omega.add(bi, fi, double_from_json(field(terms[t], "coef", p), at(p, "coef")));
  }
  return omega;
}

Json to_json(const BiGradedForm& omega) {
  Json terms = Json::array();
  const auto bs = sorted_subsets(omega.dim(), omega.base_grade());
  const auto fs = sorted_subsets(omega.dim(), omega.fiber_grade());
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t f = 0; f < fs.size(); ++f)
      if (omega.coeff(i, f) != 0.0)
        terms.push_back({{"base_idx", index_json(bs[i])}, {"fiber_idx", index_json(fs[f])}, {"coef", omega.coeff(i, f)}});
  return {{"n", omega.dim()}, {"base", omega.base_grade()}, {"fiber", omega.fiber_grade()}, {"terms", terms}};
}

PolyCone cone_from_json(const Json& j, const std::string& path) {
  const int n = int_from_json(field(j, "n", path), at(path, "n"));
  if (n < 1) throw ParseError(at(path, "n"), "dimension must be positive");
  auto read = [&](const char* key) {
    std::vector<Vec> out;
    if (!j.contains(key)) return out;
    const std::string p = at(path, key);
    const Json& a = array_at(j[key], p);
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(vec_from_json(a[i], n, at(p, i)));
    return out;
  };
  if (!j.contains("generators") && !j.contains("lineality")) throw ParseError(at(path, "generators"), "missing field");
  return PolyCone(n, read("generators"), read("lineality"));
}

Json to_json(const PolyCone& cone) {
  auto dump = [](const std::vector<Vec>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(std::vector<double>(v.data(), v.data() + v.size()));
    return a;
  };
  return {{"n", cone.dim()}, {"generators", dump(cone.generators())}, {"lineality", dump(cone.lineality())}};
}

Polytope polytope_from_json(const Json& j, const std::string& path) {
  const int n = int_from_json(field(j, "n", path), at(path, "n"));
  if (n < 1) throw ParseError(at(path, "n"), "dimension must be positive");
  const std::string vp = at(path, "vertices");
  const Json& verts = array_at(field(j, "vertices", path), vp);
  if (verts.empty()) throw ParseError(vp, "at least one vertex is required");
  std::vector<RVec> pts;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const std::string p = at(vp, i);
    array_at(verts[i], p);
    if (static_cast<int>(verts[i].size()) != n) throw ParseError(p, "expected " + std::to_string(n) + " coordinates");
    RVec v;
    for (std::size_t c = 0; c < verts[i].size(); ++c) v.push_back(rational_from_json(verts[i][c], at(p, c)));
    pts.push_back(std::move(v));
  }
  try {
    return Polytope(std::move(pts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(vp, e.what());
  }
}

Json to_json(const Polytope& p) {
  Json verts = Json::array();
  for (const auto& v : p.vertices()) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(rational_to_string(x));
    verts.push_back(row);
  }
  return {{"n", p.ambient_dim()}, {"vertices", verts}};
}

WeightSpec weight_from_json(const Json& j, int n, const std::string& path) {
  const Json& variant = field(j, "variant", path);
  if (!variant.is_string()) throw ParseError(at(path, "variant"), "expected a string");
  const std::string v = variant.get<std::string>();
  WeightSpec w;
  if (v == "constcoeff") {
    const BiGradedForm omega = form_from_json(field(j, "omega", path), at(path, "omega"));
    if (omega.dim() != n) throw ParseError(at(path, "omega.n"), "form dimension does not match the polytope");
    if (j.contains("k") && int_from_json(j["k"], at(path, "k")) != omega.base_grade())
      throw ParseError(at(path, "k"), "does not match the form's base grade");
    w = ConstCoeff{omega};
  } else {
    const int k = int_from_json(field(j, "k", path), at(path, "k"));
    if (k < 0 || k > n) throw ParseError(at(path, "k"), "degree out of range");
    if (v == "federer") {
      w = Federer{k};
    } else if (v == "quadratic") {
      const std::string qp = at(path, "Q");
      const Json& q = array_at(field(j, "Q", path), qp);
      const auto m = static_cast<int>(binomial(n, k));
      if (static_cast<int>(q.size()) != m) throw ParseError(qp, "expected " + std::to_string(m) + " rows");
      Mat mat(m, m);
      for (int r = 0; r < m; ++r) mat.row(r) = vec_from_json(q[static_cast<std::size_t>(r)], m, at(qp, static_cast<std::size_t>(r))).transpose();
      w = Quadratic{k, mat};
    } else if (v == "tabulated-id") {
      const Json& id = field(j, "id", path);
      if (!id.is_string()) throw ParseError(at(path, "id"), "expected a string");
      try {
        w = tabulated_weight(id.get<std::string>(), n, k);
      } catch (const std::invalid_argument& e) {
        throw ParseError(at(path, "id"), e.what());
      }
    } else {
      throw ParseError(at(path, "variant"), "unknown variant '" + v + "'");
    }
  }
  try {
    validate_weight(w, n);
  } catch (const std::invalid_argument& e) {
    throw ParseError(path, e.what());
  }
  return w;
}

std::vector<WeightSpec> weights_from_json(const Json& j, int n, const std::string& path) {
  std::vector<WeightSpec> out;
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(weight_from_json(j[i], n, at(path, i)));
  } else {
    out.push_back(weight_from_json(j, n, path));
  }
  return out;
}

BorelBox box_from_json(const Json& j, int n, const std::string& path) {
  if (j.is_string() && j.get<std::string>() == "all") return BorelBox::everything();
  Vec lo = vec_from_json(field(j, "lo", path), n, at(path, "lo"));
  Vec hi = vec_from_json(field(j, "hi", path), n, at(path, "hi"));
  try {
    return BorelBox::box(std::move(lo), std::move(hi));
  } catch (const std::invalid_argument& e) {
    throw ParseError(path, e.what());
  }
}

Partition partition_from_json(const Json& j, const std::string& path) {
  array_at(j, path);
  std::vector<int> parts;
  for (std::size_t i = 0; i < j.size(); ++i) parts.push_back(int_from_json(j[i], at(path, i)));
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(path, e.what());
  }
}

Json to_json(const Partition& p) { return p.parts(); }

}  // namespace angularity
