#include "scmc/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace scmc {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

json poly_json(const Poly& p) {
  json a = json::array();
  for (cplx c : p.coeffs()) a.push_back(cjson(c));
  return a;
}

json mat_json(const Mat2& m) {
  return json::array({json::array({cjson(m(0, 0)), cjson(m(0, 1))}), json::array({cjson(m(1, 0)), cjson(m(1, 1))})});
}

double num(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a finite number");
  double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(where + ": expected a finite number");
  return v;
}

cplx cparse(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw ParseError(where + ": expected [re, im]");
  return {num(j[0], where + "[0]"), num(j[1], where + "[1]")};
}

Poly poly_parse(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a coefficient list");
  std::vector<cplx> c;
  for (size_t k = 0; k < j.size(); ++k) c.push_back(cparse(j[k], where + "[" + std::to_string(k) + "]"));
  return Poly(c);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError("$: expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("$.") + key + ": missing");
  return *it;
}

void check_header(const json& j, const char* type) {
  const json& v = field(j, "version");
  if (!v.is_number_integer() || v.get<long>() != kFormatVersion)
    throw ParseError("$.version: expected version " + std::to_string(kFormatVersion));
  const json& t = field(j, "type");
  if (!t.is_string() || t.get<std::string>() != type) throw ParseError(std::string("$.type: expected \"") + type + "\"");
}

int genus(const json& j) {
  const json& g = field(j, "g");
  if (!g.is_number_integer() || g.get<long>() < 0) throw ParseError("$.g: expected a nonnegative integer");
  return g.get<int>();
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte) + ": malformed JSON");
  }
}

}  // namespace

json to_json(const SpectralData& d) {
  json j;
  j["version"] = kFormatVersion;
  j["type"] = "spectral_data";
  j["g"] = d.g;
  j["a"] = poly_json(d.a);
  j["b"] = poly_json(d.b);
  j["lambda1"] = cjson(d.lambda1);
  return j;
}

json to_json(const Potential& p) {
  json j;
  j["version"] = kFormatVersion;
  j["type"] = "potential";
  j["g"] = p.g;
  json xi = json::array();
  for (const Mat2& m : p.xi) xi.push_back(mat_json(m));
  j["xi"] = xi;
  return j;
}

json to_json(const ConditionReport& r) {
  auto item = [](const ConditionReport::Item& i) { return json{{"pass", i.pass}, {"residual", i.residual}}; };
  json j;
  j["all_pass"] = r.all_pass();
  j["max_residual"] = r.max_residual();
  j["reality"] = item(r.reality);
  j["segments"] = item(r.segments);
  j["branch_values"] = item(r.branch_values);
  j["sym_values"] = item(r.sym_values);
  j["normalization"] = item(r.normalization);
  j["residual_a"] = r.residual_a;
  j["residual_b"] = r.residual_b;
  j["sign_min"] = r.sign_min;
  j["segment_residuals"] = r.segment_residuals;
  json roots = json::array(), hr = json::array();
  for (cplx z : r.roots_of_a) roots.push_back(cjson(z));
  for (cplx z : r.h_roots) hr.push_back(cjson(z));
  j["roots_of_a"] = roots;
  j["h_roots"] = hr;
  j["h1"] = cjson(r.h1);
  j["h2"] = cjson(r.h2);
  j["m1"] = r.m1;
  j["m2"] = r.m2;
  j["f1"] = cjson(r.f1);
  j["f2"] = cjson(r.f2);
  j["g1"] = cjson(r.g1);
  j["g2"] = cjson(r.g2);
  j["abs_a0_defect"] = r.abs_a0_defect;
  j["sym_defect"] = r.sym_defect;
  return j;
}

SpectralData spectral_data_from_json(const json& j) {
  check_header(j, "spectral_data");
  SpectralData d;
  d.g = genus(j);
  d.a = poly_parse(field(j, "a"), "$.a");
  d.b = poly_parse(field(j, "b"), "$.b");
  d.lambda1 = cparse(field(j, "lambda1"), "$.lambda1");
  if (d.lambda1 == cplx{}) throw ParseError("$.lambda1: must be nonzero");
  return d;
}

Potential potential_from_json(const json& j) {
  check_header(j, "potential");
  Potential p(genus(j));
  const json& xi = field(j, "xi");
  if (!xi.is_array() || static_cast<int>(xi.size()) != p.g + 2)
    throw ParseError("$.xi: expected g + 2 matrices");
  for (size_t d = 0; d < xi.size(); ++d) {
    std::string w = "$.xi[" + std::to_string(d) + "]";
    const json& m = xi[d];
    if (!m.is_array() || m.size() != 2) throw ParseError(w + ": expected a 2x2 matrix");
    for (int r = 0; r < 2; ++r) {
      if (!m[r].is_array() || m[r].size() != 2) throw ParseError(w + ": expected a 2x2 matrix");
      for (int c = 0; c < 2; ++c)
        p.xi[d](r, c) = cparse(m[r][c], w + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
  }
  return p;
}

std::string serialize(const SpectralData& d) { return to_json(d).dump(2) + "\n"; }
std::string serialize(const Potential& p) { return to_json(p).dump(2) + "\n"; }

SpectralData parse_spectral_data(const std::string& text) { return spectral_data_from_json(parse_text(text)); }
Potential parse_potential(const std::string& text) { return potential_from_json(parse_text(text)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(path + ": cannot write");
  out << text;
}

}  // namespace scmc
