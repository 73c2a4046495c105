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

#include "rotflow/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rotflow/error.hpp"
#include "rotflow/quadrature.hpp"

namespace rotflow::elliptic {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double pi = std::numbers::pi;

const double tolRF = std::pow(3 * eps * 0.01, 1 / 8.0);
const double tolRD = std::pow(0.2 * (eps * 0.01), 1 / 8.0);
const double tolJAC = std::sqrt(eps * 0.01);

void check_carlson_args(double x, double y, double z) {
  if (!(x >= 0 && y >= 0 && z >= 0))
    fail(ErrorCode::domain, "Carlson integral: negative argument");
  int zeros = (x == 0) + (y == 0) + (z == 0);
  if (zeros > 1) fail(ErrorCode::domain, "Carlson integral: more than one zero argument");
}

}  // namespace

double carlson_rf(double x, double y, double z) {
  check_carlson_args(x, y, z);
  double A0 = (x + y + z) / 3, An = A0;
  double Q = std::max({std::abs(A0 - x), std::abs(A0 - y), std::abs(A0 - z)}) / tolRF;
  double x0 = x, y0 = y, z0 = z, mul = 1;
  while (Q >= mul * std::abs(An)) {
    double lam = std::sqrt(x0) * std::sqrt(y0) + std::sqrt(y0) * std::sqrt(z0) +
                 std::sqrt(z0) * std::sqrt(x0);
    An = (An + lam) / 4;
    x0 = (x0 + lam) / 4;
    y0 = (y0 + lam) / 4;
    z0 = (z0 + lam) / 4;
    mul *= 4;
  }
  double X = (A0 - x) / (mul * An), Y = (A0 - y) / (mul * An), Z = -(X + Y);
  double E2 = X * Y - Z * Z, E3 = X * Y * Z;
  return (E3 * (6930 * E3 + E2 * (15015 * E2 - 16380) + 17160) +
          E2 * ((10010 - 5775 * E2) * E2 - 24024) + 240240) /
         (240240 * std::sqrt(An));
}

double carlson_rd(double x, double y, double z) {
  if (!(z > 0)) fail(ErrorCode::domain, "R_D: third argument must be positive");
  check_carlson_args(x, y, z);
  double A0 = (x + y + 3 * z) / 5, An = A0;
  double Q = std::max({std::abs(A0 - x), std::abs(A0 - y), std::abs(A0 - z)}) / tolRD;
  double x0 = x, y0 = y, z0 = z, mul = 1, s = 0;
  while (Q >= mul * std::abs(An)) {
    double lam = std::sqrt(x0) * std::sqrt(y0) + std::sqrt(y0) * std::sqrt(z0) +
                 std::sqrt(z0) * std::sqrt(x0);
    s += 1 / (mul * std::sqrt(z0) * (z0 + lam));
    An = (An + lam) / 4;
    x0 = (x0 + lam) / 4;
    y0 = (y0 + lam) / 4;
    z0 = (z0 + lam) / 4;
    mul *= 4;
  }
  double X = (A0 - x) / (mul * An), Y = (A0 - y) / (mul * An), Z = -(X + Y) / 3;
  double E2 = X * Y - 6 * Z * Z, E3 = (3 * X * Y - 8 * Z * Z) * Z,
         E4 = 3 * (X * Y - Z * Z) * Z * Z, E5 = X * Y * Z * Z * Z;
  return ((471240 - 540540 * E2) * E5 + (612612 * E2 - 540540 * E3 - 556920) * E4 +
          E3 * (306306 * E3 + E2 * (675675 * E2 - 706860) + 680680) +
          E2 * ((417690 - 255255 * E2) * E2 - 875160) + 4084080) /
             (4084080 * mul * An * std::sqrt(An)) +
         3 * s;
}

double carlson_rc(double x, double y) {
  if (!(x >= 0) || !(y > 0)) fail(ErrorCode::domain, "R_C: invalid arguments");
  if (x < y) return std::atan(std::sqrt((y - x) / x)) / std::sqrt(y - x);
  if (x == y) return 1 / std::sqrt(y);
  return std::asinh(std::sqrt((x - y) / y)) / std::sqrt(x - y);
}

double carlson_rj(double x, double y, double z, double p) {
  if (!(p > 0)) fail(ErrorCode::domain, "R_J: p must be positive");
  check_carlson_args(x, y, z);
  double A0 = (x + y + z + 2 * p) / 5, An = A0;
  double delta = (p - x) * (p - y) * (p - z);
  double Q = std::max({std::abs(A0 - x), std::abs(A0 - y), std::abs(A0 - z),
                       std::abs(A0 - p)}) / tolRD;
  double x0 = x, y0 = y, z0 = z, p0 = p, mul = 1, mul3 = 1, s = 0;
  while (Q >= mul * std::abs(An)) {
    double lam = std::sqrt(x0) * std::sqrt(y0) + std::sqrt(y0) * std::sqrt(z0) +
                 std::sqrt(z0) * std::sqrt(x0);
    double d0 = (std::sqrt(p0) + std::sqrt(x0)) * (std::sqrt(p0) + std::sqrt(y0)) *
                (std::sqrt(p0) + std::sqrt(z0));
    double e0 = delta / (mul3 * d0 * d0);
    s += carlson_rc(1, 1 + e0) / (mul * d0);
    An = (An + lam) / 4;
    x0 = (x0 + lam) / 4;
    y0 = (y0 + lam) / 4;
    z0 = (z0 + lam) / 4;
    p0 = (p0 + lam) / 4;
    mul *= 4;
    mul3 *= 64;
  }
  double X = (A0 - x) / (mul * An), Y = (A0 - y) / (mul * An), Z = (A0 - z) / (mul * An),
         P = -(X + Y + Z) / 2;
  double E2 = X * Y + X * Z + Y * Z - 3 * P * P,
         E3 = X * Y * Z + 2 * P * (E2 + 2 * P * P),
         E4 = (2 * X * Y * Z + P * (E2 + 3 * P * P)) * P, E5 = X * Y * Z * P * P;
  return ((471240 - 540540 * E2) * E5 + (612612 * E2 - 540540 * E3 - 556920) * E4 +
          E3 * (306306 * E3 + E2 * (675675 * E2 - 706860) + 680680) +
          E2 * ((417690 - 255255 * E2) * E2 - 875160) + 4084080) /
             (4084080 * mul * An * std::sqrt(An)) +
         6 * s;
}

double ellint_f_sc(double s, double c, double delta2) {
  if (s == 0) return 0;
  return s * carlson_rf(c * c, delta2, 1);
}

double ellint_pi_sc(double s, double c, double delta2, double alpha2) {
  if (s == 0) return 0;
  double p = 1 - alpha2 * s * s;
  if (!(p > 0)) fail(ErrorCode::domain, "Pi: integrand pole on the path");
  double r = s * carlson_rf(c * c, delta2, 1);
  if (alpha2 != 0) r += alpha2 / 3 * s * s * s * carlson_rj(c * c, delta2, 1, p);
  return r;
}

double complete_k(double k) {
  if (!(std::abs(k) < 1)) fail(ErrorCode::domain, "K(k) needs |k| < 1");
  return carlson_rf(0, 1 - k * k, 1);
}

double complete_pi(double alpha2, double k) {
  if (!(std::abs(k) < 1)) fail(ErrorCode::domain, "Pi(n,k) needs |k| < 1");
  if (!(alpha2 < 1)) fail(ErrorCode::domain, "complete Pi needs alpha2 < 1");
  double kp2 = 1 - k * k;
  double r = carlson_rf(0, kp2, 1);
  if (alpha2 != 0) r += alpha2 / 3 * carlson_rj(0, kp2, 1, 1 - alpha2);
  return r;
}

namespace {

// Split phi = m*pi + r with |r| <= pi/2.
void reduce_half_period(double phi, double& m, double& r) {
  m = std::round(phi / pi);
  r = phi - m * pi;
}

void check_k_domain(double phi, double k) {
  if (std::abs(phi) > pi / 2 + 4 * eps)
    fail(ErrorCode::domain, "elliptic integral with k >= 1 needs |phi| <= pi/2");
  if (k * std::abs(std::sin(phi)) >= 1 && !(k == 1 && std::abs(phi) < pi / 2))
    fail(ErrorCode::domain, "elliptic integral: k sin(phi) >= 1");
}

}  // namespace

EllipticEval ellint_f(double phi, double k) {
  k = std::abs(k);
  EllipticEval out;
  out.modulus_k = k;
  if (k < 1) {
    double m, r;
    reduce_half_period(phi, m, r);
    double s = std::sin(r), c = std::cos(r);
    out.value = ellint_f_sc(s, c, 1 - k * k * s * s);
    if (m != 0) out.value += 2 * m * complete_k(k);
    return out;
  }
  check_k_domain(phi, k);
  double s = std::sin(phi), c = std::cos(phi);
  if (k == 1) {
    out.value = ellint_f_sc(s, c, c * c);
    return out;
  }
  // k F(phi,k) = F(psi,1/k) with sin(psi) = k sin(phi).
  double sp = k * s, cp2 = (1 - sp) * (1 + sp);
  out.value = ellint_f_sc(sp, std::sqrt(cp2), 1 - s * s) / k;
  if (c < 0) out.value = -out.value;  // unreachable for |phi| <= pi/2
  out.branch_note = Branch::reciprocal_modulus;
  return out;
}

EllipticEval ellint_pi(double phi, double alpha2, double k) {
  k = std::abs(k);
  EllipticEval out;
  out.modulus_k = k;
  if (k < 1) {
    double m, r;
    reduce_half_period(phi, m, r);
    double s = std::sin(r), c = std::cos(r);
    if (m != 0 && !(alpha2 < 1)) fail(ErrorCode::domain, "Pi: integrand pole on the path");
    out.value = ellint_pi_sc(s, c, 1 - k * k * s * s, alpha2);
    if (m != 0) out.value += 2 * m * complete_pi(alpha2, k);
    return out;
  }
  check_k_domain(phi, k);
  double s = std::sin(phi), c = std::cos(phi);
  if (k == 1) {
    out.value = ellint_pi_sc(s, c, c * c, alpha2);
    return out;
  }
  // Pi(phi, n, k) = Pi(psi, n/k^2, 1/k) / k.
  double sp = k * s, cp2 = (1 - sp) * (1 + sp);
  out.value = ellint_pi_sc(sp, std::sqrt(cp2), 1 - s * s, alpha2 / (k * k)) / k;
  out.branch_note = Branch::reciprocal_modulus;
  return out;
}

double ellint_e(double phi, double k) {
  k = std::abs(k);
  auto e_sc = [k](double s, double c) {
    if (s == 0) return 0.0;
    double c2 = c * c, d2 = 1 - k * k * s * s;
    return s * carlson_rf(c2, d2, 1) - k * k / 3 * s * s * s * carlson_rd(c2, d2, 1);
  };
  if (k < 1) {
    double m, r;
    reduce_half_period(phi, m, r);
    double v = e_sc(std::sin(r), std::cos(r));
    if (m != 0) {
      double kp2 = 1 - k * k;
      double ec = carlson_rf(0, kp2, 1) - k * k / 3 * carlson_rd(0, kp2, 1);
      v += 2 * m * ec;
    }
    return v;
  }
  check_k_domain(phi, k);
  return e_sc(std::sin(phi), std::cos(phi));
}

double ellint_f_dk(double phi, double k) {
  // dF/dk = k * int_0^phi sin^2 / Delta^3 = k s^3/3 * R_D(c^2, 1, Delta^2).
  double sk = k < 0 ? -1 : 1;
  k = std::abs(k);
  auto piece = [k](double s, double c) {
    if (s == 0) return 0.0;
    double d2 = 1 - k * k * s * s;
    return k * s * s * s / 3 * carlson_rd(c * c, 1, d2);
  };
  double v;
  if (k < 1) {
    double m, r;
    reduce_half_period(phi, m, r);
    v = piece(std::sin(r), std::cos(r));
    if (m != 0) v += 2 * m * k / 3 * carlson_rd(0, 1, 1 - k * k);
  } else {
    check_k_domain(phi, k);
    if (k == 1 && std::abs(std::sin(phi)) >= 1)
      fail(ErrorCode::domain, "dF/dk diverges");
    v = piece(std::sin(phi), std::cos(phi));
  }
  return sk * v;
}

JacobiTriple jacobi_sn_cn_dn(double x, double k) {
  k = std::abs(k);
  if (k > 1) fail(ErrorCode::domain, "Jacobi functions need k in [0,1]");
  if (k < 1e-8) return {std::sin(x), std::cos(x), 1.0};
  double kp2 = (1 - k) * (1 + k);
  if (kp2 == 0) {
    double sech = 1 / std::cosh(x);
    return {std::tanh(x), sech, sech};
  }
  // Bulirsch's descending Landen / AGM recursion.
  constexpr int num = 13;
  double m[num], n[num];
  double mc = kp2, c = 0;
  int l = 0;
  for (double a = 1; l < num; ++l) {
    m[l] = a;
    n[l] = mc = std::sqrt(mc);
    c = (a + mc) / 2;
    if (!(std::abs(a - mc) > tolJAC * a)) {
      ++l;
      break;
    }
    mc *= a;
    a = c;
  }
  x *= c;
  double sn = std::sin(x), cn = std::cos(x), dn = 1;
  if (sn != 0) {
    double a = cn / sn;
    c *= a;
    while (l--) {
      double b = m[l];
      a *= c;
      c *= dn;
      dn = (n[l] + a) / (b + a);
      a = c / b;
    }
    a = 1 / std::sqrt(c * c + 1);
    sn = std::signbit(sn) ? -a : a;
    cn = c * sn;
  }
  return {sn, cn, dn};
}

double jacobi_am(double x, double k) {
  double K = complete_k(k);
  double n = std::round(x / (2 * K));
  double xr = x - 2 * n * K;
  auto j = jacobi_sn_cn_dn(xr, k);
  return std::atan2(j.sn, j.cn) + n * pi;
}

double ellint_pi_u(double y, double alpha2, double k) {
  return ellint_pi(jacobi_am(y, k), alpha2, k).value;
}

ReciprocalModulus reciprocal_modulus(double phi, double k) {
  if (!(k > 1)) fail(ErrorCode::domain, "reciprocal modulus needs k > 1");
  double s = std::sin(phi);
  if (!(k * std::abs(s) < 1) || std::abs(phi) > pi / 2)
    fail(ErrorCode::domain, "reciprocal modulus: k sin(phi) >= 1");
  double psi = std::asin(k * s);
  if (phi == 0) return {0.0, 0.0};
  auto raw = [k](double t) {
    double st = std::sin(t);
    return 1 / std::sqrt(1 - k * k * st * st);
  };
  auto rec = [k](double t) {
    double st = std::sin(t);
    return 1 / std::sqrt(1 - st * st / (k * k));
  };
  double lhs = k * quad::integrate(raw, 0, phi, 1e-14, 1e-16);
  double rhs = quad::integrate(rec, 0, psi, 1e-14, 1e-16);
  return {psi, std::abs(lhs - rhs)};
}

}  // namespace rotflow::elliptic
