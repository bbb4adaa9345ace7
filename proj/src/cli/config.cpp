#include "laxwb/cli/config.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <openssl/evp.h>

#include "laxwb/errors.hpp"

namespace laxwb {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw ConfigError("config field '" + field + "': " + what);
}

const json& require(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

int as_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) bad(field, "expected an integer");
  return j.get<int>();
}

// Exact scalars are strings; plain integers are accepted too.
std::string as_scalar(const json& j, const std::string& field) {
  std::string text;
  if (j.is_string()) {
    text = j.get<std::string>();
  } else if (j.is_number_integer()) {
    text = std::to_string(j.get<long long>());
  } else {
    bad(field, "expected an exact scalar string such as \"3/2\" or \"1+2*i\"");
  }
  try {
    Scalar::parse(text);
  } catch (const std::exception& e) {
    bad(field, "cannot parse scalar \"" + text + "\": " + e.what());
  }
  return text;
}

PointConfig as_point(const json& j, const std::string& field) {
  PointConfig p;
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s != "inf" && s != "infinity") bad(field, "expected \"inf\" or a coordinate list");
    p.infinity = true;
    return p;
  }
  if (!j.is_array() || j.empty() || j.size() > 2) bad(field, "expected \"inf\" or [x, y]");
  for (std::size_t i = 0; i < j.size(); ++i) p.coords.push_back(as_scalar(j[i], field + "[" + std::to_string(i) + "]"));
  return p;
}

json point_json(const PointConfig& p) {
  if (p.infinity) return "inf";
  return p.coords;
}

CurvePoint to_point(const PointConfig& p, int genus, const std::string& field) {
  if (p.infinity) return CurvePoint::infinity();
  const Scalar x = Scalar::parse(p.coords[0]);
  if (p.coords.size() == 1) {
    if (genus == 1) bad(field, "a point of an elliptic curve needs both coordinates");
    return CurvePoint::finite(x);
  }
  const Scalar y = Scalar::parse(p.coords[1]);
  if (genus == 0 && !y.is_zero()) bad(field, "points of the projective line have the form [z]");
  return CurvePoint::finite(x, y);
}

}  // namespace

WorkbenchConfig config_from_json(const json& j) {
  if (!j.is_object()) bad("", "the document must be a JSON object");
  WorkbenchConfig c;
  const json& curve = require(j, "curve", "");
  c.genus = as_int(require(curve, "genus", "curve"), "curve.genus");
  if (c.genus != 0 && c.genus != 1) bad("curve.genus", "only genus 0 and 1 are supported");
  if (curve.contains("a")) c.a = as_scalar(curve["a"], "curve.a");
  if (curve.contains("b")) c.b = as_scalar(curve["b"], "curve.b");

  const json& points = require(j, "points", "");
  c.p_plus = as_point(require(points, "p_plus", "points"), "points.p_plus");
  c.p_minus = as_point(require(points, "p_minus", "points"), "points.p_minus");

  const json& algebra = require(j, "algebra", "");
  const json& type = require(algebra, "type", "algebra");
  if (!type.is_string()) bad("algebra.type", "expected one of gl, sl, s, so, sp");
  c.algebra_type = type.get<std::string>();
  c.algebra_n = as_int(require(algebra, "n", "algebra"), "algebra.n");
  try {
    AlgebraType::parse(c.algebra_type, c.algebra_n);
  } catch (const std::exception& e) {
    bad("algebra", e.what());
  }

  if (j.contains("tyurin")) {
    const json& ty = j["tyurin"];
    if (!ty.is_array()) bad("tyurin", "expected a list");
    for (std::size_t i = 0; i < ty.size(); ++i) {
      const std::string f = "tyurin[" + std::to_string(i) + "]";
      TyurinConfig t;
      t.gamma = as_point(require(ty[i], "gamma", f), f + ".gamma");
      const json& alpha = require(ty[i], "alpha", f);
      if (!alpha.is_array()) bad(f + ".alpha", "expected a list of scalars");
      for (std::size_t k = 0; k < alpha.size(); ++k)
        t.alpha.push_back(as_scalar(alpha[k], f + ".alpha[" + std::to_string(k) + "]"));
      c.tyurin.push_back(std::move(t));
    }
  }
  if (j.contains("window")) {
    c.window_min = as_int(require(j["window"], "min", "window"), "window.min");
    c.window_max = as_int(require(j["window"], "max", "window"), "window.max");
    if (c.window_min > c.window_max) bad("window", "min exceeds max");
  }
  if (j.contains("connection")) {
    c.p_minus_pole_budget = as_int(require(j["connection"], "p_minus_pole_budget", "connection"),
                                   "connection.p_minus_pole_budget");
    if (c.p_minus_pole_budget < 0) bad("connection.p_minus_pole_budget", "must be nonnegative");
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) bad("seed", "expected a nonnegative integer");
    c.seed = j["seed"].get<unsigned>();
  }
  return c;
}

json config_to_json(const WorkbenchConfig& c) {
  json ty = json::array();
  for (const auto& t : c.tyurin) ty.push_back({{"gamma", point_json(t.gamma)}, {"alpha", t.alpha}});
  return {{"curve", {{"genus", c.genus}, {"a", c.a}, {"b", c.b}}},
          {"points", {{"p_plus", point_json(c.p_plus)}, {"p_minus", point_json(c.p_minus)}}},
          {"algebra", {{"type", c.algebra_type}, {"n", c.algebra_n}}},
          {"tyurin", ty},
          {"window", {{"min", c.window_min}, {"max", c.window_max}}},
          {"connection", {{"p_minus_pole_budget", c.p_minus_pole_budget}}},
          {"seed", c.seed}};
}

WorkbenchConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ConfigError("config syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                      e.what());
  }
  return config_from_json(j);
}

WorkbenchConfig load_config(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return parse_config_text(ss.str());
  }
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

AlgebraSpec to_spec(const WorkbenchConfig& c) {
  std::optional<Curve> curve;
  try {
    curve = c.genus == 0 ? Curve::projective_line() : Curve::elliptic(Scalar::parse(c.a), Scalar::parse(c.b));
  } catch (const std::invalid_argument& e) {
    bad("curve", e.what());
  }
  std::vector<TyurinPoint> ty;
  for (std::size_t i = 0; i < c.tyurin.size(); ++i) {
    ScalarVector alpha;
    for (const auto& s : c.tyurin[i].alpha) alpha.push_back(Scalar::parse(s));
    ty.push_back({to_point(c.tyurin[i].gamma, c.genus, "tyurin[" + std::to_string(i) + "].gamma"), std::move(alpha)});
  }
  AlgebraSpec spec{*curve, to_point(c.p_plus, c.genus, "points.p_plus"), to_point(c.p_minus, c.genus, "points.p_minus"),
                   AlgebraType::parse(c.algebra_type, c.algebra_n), std::move(ty)};
  try {
    spec.validate();
  } catch (const InvalidTyurin& e) {
    throw ConfigError(std::string("invalid configuration: ") + e.what());
  }
  return spec;
}

std::string config_hash(const WorkbenchConfig& c) {
  const std::string text = config_to_json(c).dump();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return out.str();
}

std::pair<int, int> parse_window(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) bad("--window", "expected MIN:MAX");
  try {
    std::size_t used = 0;
    const std::string lo_text = text.substr(0, colon), hi_text = text.substr(colon + 1);
    const int lo = std::stoi(lo_text, &used);
    if (used != lo_text.size()) bad("--window", "expected MIN:MAX");
    const int hi = std::stoi(hi_text, &used);
    if (used != hi_text.size()) bad("--window", "expected MIN:MAX");
    if (lo > hi) bad("--window", "MIN exceeds MAX");
    return {lo, hi};
  } catch (const std::logic_error&) {
    bad("--window", "expected MIN:MAX with integers");
  }
}

}  // namespace laxwb
