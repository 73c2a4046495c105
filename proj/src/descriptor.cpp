////////////////////////////////////////////////////////////////////////////////
//                                                                            //
//  This file is part of rotflow                                              //
//                                                                            //
//  Copyright 2026 rotflow developers                                         //
//                                                                            //
//  Licensed under the Apache License, Version 2.0 (the "License");           //
//  you may not use this file except in compliance with the License.          //
//  You may obtain a copy of the License at                                   //
//                                                                            //
//      http://www.apache.org/licenses/LICENSE-2.0                            //
//                                                                            //
//  Unless required by applicable law or agreed to in writing, software       //
//  distributed under the License is distributed on an "AS IS" BASIS,         //
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.  //
//  See the License for the specific language governing permissions and       //
//  limitations under the License.                                            //
//                                                                            //
////////////////////////////////////////////////////////////////////////////////

#include "rotflow/descriptor.hpp"

#include <cmath>

#include "rotflow/error.hpp"

namespace rotflow {

using nlohmann::json;

Fn1 Fn1::constant(double c) { return {Kind::constant, {c}}; }
Fn1 Fn1::poly(std::vector<double> coeffs) {
  if (coeffs.empty()) coeffs.push_back(0);
  return {Kind::poly, std::move(coeffs)};
}
Fn1 Fn1::cosine(double A, double B, double w, double phase) { return {Kind::cos, {A, B, w, phase}}; }
Fn1 Fn1::sine(double A, double B, double w, double phase) { return {Kind::sin, {A, B, w, phase}}; }
Fn1 Fn1::exponential(double A, double B, double c) { return {Kind::exp, {A, B, c}}; }
Fn1 Fn1::sqrt_neg_log() { return {Kind::sqrt_neg_log, {}}; }

double Fn1::operator()(double x) const {
  switch (kind) {
    case Kind::constant: return p[0];
    case Kind::poly: {
      double r = 0;
      for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
      return r;
    }
    case Kind::cos: return p[0] + p[1] * std::cos(p[2] * x + p[3]);
    case Kind::sin: return p[0] + p[1] * std::sin(p[2] * x + p[3]);
    case Kind::exp: return p[0] + p[1] * std::exp(p[2] * x);
    case Kind::sqrt_neg_log:
      if (!(x > 0 && x <= 1)) fail(ErrorCode::domain, "sqrt(-log x) needs x in (0, 1]");
      return std::sqrt(-std::log(x));
  }
  return 0;
}

double Fn1::deriv(double x) const {
  switch (kind) {
    case Kind::constant: return 0;
    case Kind::poly: {
      double r = 0;
      for (std::size_t i = p.size(); i-- > 1;) r = r * x + static_cast<double>(i) * p[i];
      return r;
    }
    case Kind::cos: return -p[1] * p[2] * std::sin(p[2] * x + p[3]);
    case Kind::sin: return p[1] * p[2] * std::cos(p[2] * x + p[3]);
    case Kind::exp: return p[1] * p[2] * std::exp(p[2] * x);
    case Kind::sqrt_neg_log: {
      if (!(x > 0 && x < 1)) fail(ErrorCode::domain, "sqrt(-log x)' needs x in (0, 1)");
      return -0.5 / (x * std::sqrt(-std::log(x)));
    }
  }
  return 0;
}

double Fn1::deriv2(double x) const {
  switch (kind) {
    case Kind::constant: return 0;
    case Kind::poly: {
      double r = 0;
      for (std::size_t i = p.size(); i-- > 2;) r = r * x + static_cast<double>(i * (i - 1)) * p[i];
      return r;
    }
    case Kind::cos: return -p[1] * p[2] * p[2] * std::cos(p[2] * x + p[3]);
    case Kind::sin: return -p[1] * p[2] * p[2] * std::sin(p[2] * x + p[3]);
    case Kind::exp: return p[1] * p[2] * p[2] * std::exp(p[2] * x);
    case Kind::sqrt_neg_log: {
      if (!(x > 0 && x < 1)) fail(ErrorCode::domain, "sqrt(-log x)'' needs x in (0, 1)");
      const double L = -std::log(x), s = std::sqrt(L);
      return 0.5 / (x * x * s) - 0.25 / (x * x * L * s);
    }
  }
  return 0;
}

int Fn1::degree() const {
  if (kind == Kind::constant) return 0;
  if (kind != Kind::poly) return -1;
  int d = static_cast<int>(p.size()) - 1;
  while (d > 0 && p[d] == 0) --d;
  return d;
}

bool Fn1::has_inverse() const {
  if (kind == Kind::poly) return degree() == 1;
  return kind == Kind::sqrt_neg_log || (kind == Kind::exp && p[1] != 0 && p[2] != 0);
}

double Fn1::inverse(double y) const {
  if (kind == Kind::poly && degree() == 1) return (y - p[0]) / p[1];
  if (kind == Kind::sqrt_neg_log) {
    if (y < 0) fail(ErrorCode::domain, "inverse of sqrt(-log x) needs y >= 0");
    return std::exp(-y * y);
  }
  if (kind == Kind::exp && p[1] != 0 && p[2] != 0) {
    const double r = (y - p[0]) / p[1];
    if (!(r > 0)) fail(ErrorCode::domain, "exp descriptor: value outside the range");
    return std::log(r) / p[2];
  }
  fail(ErrorCode::invalid_argument, "descriptor has no closed-form inverse");
}

bool Fn1::is_2pi_periodic() const {
  if (kind == Kind::constant) return true;
  if (kind == Kind::poly) return degree() == 0;
  if (kind == Kind::cos || kind == Kind::sin) {
    const double w = p[2];
    return p[1] == 0 || (w == std::round(w));
  }
  return false;
}

json Fn1::to_json() const {
  switch (kind) {
    case Kind::constant: return {{"kind", "const"}, {"value", p[0]}};
    case Kind::poly: return {{"kind", "poly"}, {"coeffs", p}};
    case Kind::cos:
    case Kind::sin:
      return {{"kind", kind == Kind::cos ? "cos" : "sin"}, {"A", p[0]}, {"B", p[1]}, {"w", p[2]},
              {"phase", p[3]}};
    case Kind::exp: return {{"kind", "exp"}, {"A", p[0]}, {"B", p[1]}, {"c", p[2]}};
    case Kind::sqrt_neg_log: return {{"kind", "sqrt_neg_log"}};
  }
  return {};
}

namespace {

void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& what) {
  if (!j.is_object()) fail(ErrorCode::config, what + ": expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) fail(ErrorCode::config, what + ": unknown key '" + it.key() + "'");
  }
}

double num(const json& j, const char* key, double def, const std::string& what) {
  if (!j.contains(key)) return def;
  if (!j[key].is_number()) fail(ErrorCode::config, what + ": '" + key + "' must be a number");
  return j[key].get<double>();
}

}  // namespace

Fn1 Fn1::from_json(const json& j) {
  if (j.is_number()) return constant(j.get<double>());
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    fail(ErrorCode::config, "function descriptor needs a string 'kind'");
  const std::string k = j["kind"];
  const std::string what = "descriptor '" + k + "'";
  if (k == "const") {
    check_keys(j, {"kind", "value"}, what);
    return constant(num(j, "value", 0, what));
  }
  if (k == "poly") {
    check_keys(j, {"kind", "coeffs"}, what);
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
      fail(ErrorCode::config, what + ": 'coeffs' must be an array");
    std::vector<double> c;
    for (const auto& e : j["coeffs"]) {
      if (!e.is_number()) fail(ErrorCode::config, what + ": coefficients must be numbers");
      c.push_back(e.get<double>());
    }
    return poly(c);
  }
  if (k == "cos" || k == "sin") {
    check_keys(j, {"kind", "A", "B", "w", "phase"}, what);
    double A = num(j, "A", 0, what), B = num(j, "B", 1, what), w = num(j, "w", 1, what),
           ph = num(j, "phase", 0, what);
    return k == "cos" ? cosine(A, B, w, ph) : sine(A, B, w, ph);
  }
  if (k == "exp") {
    check_keys(j, {"kind", "A", "B", "c"}, what);
    return exponential(num(j, "A", 0, what), num(j, "B", 1, what), num(j, "c", 1, what));
  }
  if (k == "sqrt_neg_log") {
    check_keys(j, {"kind"}, what);
    return sqrt_neg_log();
  }
  fail(ErrorCode::config, "unknown descriptor kind '" + k + "'");
}

json Fn2::to_json() const { return {{"first", first.to_json()}, {"second", second.to_json()}}; }

Fn2 Fn2::from_json(const json& j) {
  check_keys(j, {"first", "second"}, "two-argument descriptor");
  Fn2 d;
  if (j.contains("first")) d.first = Fn1::from_json(j["first"]);
  if (j.contains("second")) d.second = Fn1::from_json(j["second"]);
  return d;
}

Fn2Callable Fn2Callable::from(const Fn2& d) {
  return {[d](double a, double b) { return d(a, b); },
          [d](double a, double b) { return d.da(a, b); }};
}

}  // namespace rotflow
