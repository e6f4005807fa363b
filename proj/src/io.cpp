#include "hklat/io.hpp"

#include <fstream>
#include <limits>

namespace hklat::io {
namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::kParse, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  fail("expected a rational string or integer, got " + j.dump());
}

json to_json(const Rational& r) { return format_rational(r); }

VectorQ vector_from_json(const json& j) {
  if (!j.is_array()) fail("expected an array of rationals, got " + j.dump());
  VectorQ v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = rational_from_json(j[i]);
  return v;
}

json to_json(const VectorQ& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(format_rational(v(i)));
  return out;
}

json to_json(const QuadExt& x) {
  // The radicand is a JSON integer when it fits, a decimal string otherwise.
  const json d = x.d() <= std::numeric_limits<long long>::max() ? json(x.d().convert_to<long long>())
                                                                 : json(x.d().str());
  return {{"a", format_rational(x.a())}, {"b", format_rational(x.b())}, {"d", d}};
}

QuadExt quad_ext_from_json(const json& j) {
  const json& d = field(j, "d");
  const Integer radicand = d.is_string() ? Integer(d.get<std::string>()) : Integer(d.get<long long>());
  return QuadExt(rational_from_json(field(j, "a")), rational_from_json(field(j, "b")), radicand);
}

json to_json(const Vector<QuadExt>& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Lattice lattice_from_json(const json& j) {
  const json& gram = field(j, "gram");
  if (!gram.is_array() || gram.empty()) fail("gram must be a nonempty array of rows");
  const auto n = static_cast<Eigen::Index>(gram.size());
  if (j.contains("rank") && j.at("rank").get<long long>() != n) {
    fail("rank " + j.at("rank").dump() + " does not match gram size " + std::to_string(n));
  }
  MatrixQ g(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const json& row = gram[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) fail("gram must be square");
    for (Eigen::Index c = 0; c < n; ++c) g(r, c) = rational_from_json(row[static_cast<std::size_t>(c)]);
  }
  const std::string label = j.contains("label") ? j.at("label").get<std::string>() : std::string();
  return Lattice(std::move(g), label);
}

json to_json(const Lattice& lat) {
  json gram = json::array();
  for (Eigen::Index r = 0; r < lat.gram().rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < lat.gram().cols(); ++c) row.push_back(format_rational(lat.gram()(r, c)));
    gram.push_back(std::move(row));
  }
  return {{"label", lat.label()}, {"rank", lat.rank()}, {"gram", std::move(gram)}};
}

PolynomialQ polynomial_from_json(const json& j) {
  const json& terms = field(j, "terms");
  if (!terms.is_array()) fail("terms must be an array");
  std::optional<std::size_t> rho;
  if (j.contains("rank")) rho = j.at("rank").get<std::size_t>();
  for (const auto& t : terms) {
    const std::size_t len = field(t, "exps").size();
    if (rho && *rho != len) fail("terms have inconsistent exponent lengths");
    rho = len;
  }
  if (!rho) fail("cannot infer the number of variables of an empty polynomial without \"rank\"");
  PolynomialQ p(*rho);
  for (const auto& t : terms) p.add_term(field(t, "exps").get<Exponents>(), rational_from_json(field(t, "coef")));
  if (j.contains("degree") && !p.is_zero() && p.degree() != j.at("degree").get<int>()) {
    fail("declared degree does not match the terms");
  }
  return p;
}

json to_json(const PolynomialQ& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back({{"exps", it->first}, {"coef", format_rational(it->second)}});
  }
  json out = {{"rank", p.variables()}, {"terms", std::move(terms)}};
  if (const auto d = p.degree()) out["degree"] = *d;
  return out;
}

VarietyDescriptor descriptor_from_json(const json& j) {
  std::vector<VectorQ> walls;
  if (j.contains("walls")) {
    for (const auto& w : j.at("walls")) walls.push_back(vector_from_json(w));
  }
  return VarietyDescriptor{parse_deformation_type(field(j, "deformation_type").get<std::string>()),
                           field(j, "n").get<int>(), lattice_from_json(j),
                           vector_from_json(field(j, "ample")), std::move(walls)};
}

json to_json(const VarietyDescriptor& desc) {
  json out = to_json(desc.ns_lattice);
  out["deformation_type"] = to_string(desc.deformation_type);
  out["n"] = desc.n;
  out["ample"] = to_json(desc.ample);
  if (!desc.walls.empty()) {
    json walls = json::array();
    for (const auto& w : desc.walls) walls.push_back(to_json(w));
    out["walls"] = std::move(walls);
  }
  return out;
}

Certificate certificate_from_json(const json& j) {
  Certificate cert;
  cert.verdict = parse_verdict(field(j, "verdict").get<std::string>());
  for (const auto& s : field(j, "steps")) {
    cert.steps.push_back({field(s, "tag").get<std::string>(), field(s, "anchor").get<std::string>(),
                          s.contains("data") ? s.at("data") : json::object()});
  }
  if (j.contains("witness") && !j.at("witness").is_null()) cert.witness = vector_from_json(j.at("witness"));
  if (j.contains("word") && !j.at("word").is_null()) cert.word = j.at("word").get<ReflectionWord>();
  if (j.contains("notes")) cert.notes = j.at("notes").get<std::vector<std::string>>();
  return cert;
}

json to_json(const Certificate& cert) {
  json steps = json::array();
  for (const auto& s : cert.steps) steps.push_back({{"tag", s.tag}, {"anchor", s.anchor}, {"data", s.data}});
  return {{"verdict", to_string(cert.verdict)},
          {"steps", std::move(steps)},
          {"witness", cert.witness ? to_json(*cert.witness) : json(nullptr)},
          {"word", cert.word ? json(*cert.word) : json(nullptr)},
          {"notes", cert.notes}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) fail("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace hklat::io
