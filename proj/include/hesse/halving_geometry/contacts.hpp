#pragma once

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "hesse/algebra/cubic.hpp"
#include "hesse/algebra/errors.hpp"
#include "hesse/algebra/homogeneous.hpp"
#include "hesse/curves/conic.hpp"
#include "hesse/curves/cubic_form.hpp"
#include "hesse/curves/hesse.hpp"
#include "hesse/elliptic/eab.hpp"

namespace hesse {

using CVec3 = std::array<Complex, 3>;

/// The cubic a x^3 + 3 x y^2 + 3 b x^2 z - b^2 z^3 whose Hesse derivative is
/// the curve y^2 z = x^3 + a x^2 z + b x z^2.
struct GammaAB {
  double a;
  double b;

  GammaAB(double a_, double b_) : a(a_), b(b_) {
    if (b == 0.0) throw Error(ErrorKind::SingularInput, "b = 0");
  }
  RealCubicForm form() const { return gamma_ab<double>(a, b); }
  BasicCubicForm<Complex> complex_form() const { return gamma_ab<Complex>(Complex(a), Complex(b)); }
  EabCurve hesse_curve() const { return EabCurve(Complex(a), Complex(b)); }
};

namespace detail {

inline CVec3 cross(const CVec3& u, const CVec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

inline Complex dot(const CVec3& u, const CVec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

inline double cnorm(const CVec3& u) { return std::sqrt(std::norm(u[0]) + std::norm(u[1]) + std::norm(u[2])); }

inline CVec3 line_vec(const LinearForm3<Complex>& l) { return {l.at(1, 0, 0), l.at(0, 1, 0), l.at(0, 0, 1)}; }

/// Distance between two lines as projective points (scale invariant).
inline double line_distance(const CVec3& u, const CVec3& v) {
  const double nu = cnorm(u), nv = cnorm(v);
  if (nu == 0.0 || nv == 0.0) return 1.0;
  return cnorm(cross(u, v)) / (nu * nv);
}

/// The three (with multiplicity) points where a line meets a cubic, over C.
inline std::vector<CVec3> line_cubic_points(const BasicCubicForm<Complex>& f, const CVec3& l) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (std::abs(l[i]) > std::abs(l[k])) k = i;
  }
  std::array<CVec3, 2> basis;
  int slot = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i == k) continue;
    CVec3 v{Complex(0.0), Complex(0.0), Complex(0.0)};
    v[i] = l[k];
    v[k] = -l[i];
    basis[slot++] = v;
  }
  const CVec3& A = basis[0];
  const CVec3& B = basis[1];
  auto g = [&](double s, double t) { return f(s * A[0] + t * B[0], s * A[1] + t * B[1], s * A[2] + t * B[2]); };
  const Complex c3 = g(1, 0), c0 = g(0, 1), gp = g(1, 1), gm = g(1, -1);
  const Complex sum = gp - c3 - c0, diff = gm - c3 + c0;
  const Complex c1 = (sum + diff) / 2.0, c2 = (sum - diff) / 2.0;
  const double cmax = std::max({std::abs(c0), std::abs(c1), std::abs(c2), std::abs(c3)});
  if (cmax == 0.0) throw Error(ErrorKind::LineIsComponent, "line is a component of the curve");
  std::vector<CVec3> pts;
  std::array<Complex, 4> c{c0, c1, c2, c3};
  int deg = 3;
  while (deg > 0 && std::abs(c[deg]) <= 1e-13 * cmax) {
    pts.push_back(A);
    --deg;
  }
  std::vector<Complex> us;
  if (deg == 3) {
    auto r = solve_cubic(c3, c2, c1, c0);
    us.assign(r.begin(), r.end());
  } else if (deg == 2) {
    const Complex d = std::sqrt(c[1] * c[1] - 4.0 * c[2] * c[0]);
    us = {(-c[1] + d) / (2.0 * c[2]), (-c[1] - d) / (2.0 * c[2])};
  } else if (deg == 1) {
    us = {-c[0] / c[1]};
  }
  for (const auto& u : us) pts.push_back({u * A[0] + B[0], u * A[1] + B[1], u * A[2] + B[2]});
  return pts;
}

/// |<grad f(T), P>| relative to |grad f(T)| |P|: zero iff the tangent at T
/// passes through P.
inline double tangent_through(const BasicCubicForm<Complex>& f, const CVec3& t, const CVec3& p) {
  const auto g = gradient(f, t[0], t[1], t[2]);
  const CVec3 gv{g[0], g[1], g[2]};
  const double n = cnorm(gv) * cnorm(p);
  if (n == 0.0) return 0.0;  // singular point: every line through it is tangent
  return std::abs(dot(gv, p)) / n;
}

/// |f(T)| relative to |f| |T|^3.
inline double on_cubic(const BasicCubicForm<Complex>& f, const CVec3& t) {
  double fn = 0.0;
  for (const auto& c : f.coeffs()) fn = std::max(fn, std::abs(c));
  const double tn = cnorm(t);
  if (tn == 0.0 || fn == 0.0) return 0.0;
  return std::abs(f(t[0], t[1], t[2])) / (fn * tn * tn * tn);
}

inline double point_distance(const EPoint& p, const EPoint& q) {
  if (p.infinite || q.infinite) return (p.infinite && q.infinite) ? 0.0 : std::numeric_limits<double>::infinity();
  const double s = std::max({1.0, std::abs(p.x), std::abs(q.x), std::abs(p.y), std::abs(q.y)});
  return std::max(std::abs(p.x - q.x), std::abs(p.y - q.y)) / s;
}

/// Largest distance in an optimal matching of two small complex multisets
/// (relative to max(1, |value|)).
inline double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<std::size_t> perm(b.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      worst = std::max(worst, std::abs(a[i] - b[perm[i]]) / std::max(1.0, std::abs(a[i])));
    }
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline nlohmann::json cjson(const Complex& z) {
  if (z.imag() == 0.0) return z.real();
  return nlohmann::json::array({z.real(), z.imag()});
}

inline nlohmann::json cjson(const CVec3& v) { return nlohmann::json::array({cjson(v[0]), cjson(v[1]), cjson(v[2])}); }

inline nlohmann::json cjson(const EPoint& p) {
  if (p.infinite) return "infinity";
  return nlohmann::json::array({cjson(p.x), cjson(p.y)});
}

inline bool is_real(const CVec3& v, double tol = 1e-9) {
  const double n = std::max(1.0, cnorm(v));
  return std::abs(v[0].imag()) <= tol * n && std::abs(v[1].imag()) <= tol * n && std::abs(v[2].imag()) <= tol * n;
}

}  // namespace detail

/// The two lines making up the polar conic of GammaAB at P = (x0, y0) on
/// its Hesse derivative:
///   l1 = (-x0 - R, -gamma, b), l2 = (-x0 + R, gamma, b),
/// with gamma = sqrt(x0) and R = y0 / gamma, so R^2 = (e1 - x0)(e2 - x0)
/// and the product l1 * l2 is minus the conic (in the z = 1 chart).
inline ComplexLinePair polar_line_pair(const GammaAB& g, const EPoint& p) {
  if (p.infinite) throw Error(ErrorKind::InvalidArgument, "P must be affine");
  if (std::abs(p.x) == 0.0) throw Error(ErrorKind::PoleAtZero, "pole at x0=0");
  const Complex gamma = std::sqrt(p.x);
  const Complex R = p.y / gamma;
  const Complex b(g.b);
  return {linear_form<Complex>(-p.x - R, -gamma, b), linear_form<Complex>(-p.x + R, gamma, b)};
}

/// S = (b / x0, -b y0 / x0^2), where the two polar lines meet.
inline EPoint companion_point(const GammaAB& g, const EPoint& p) {
  if (p.infinite) throw Error(ErrorKind::InvalidArgument, "P must be affine");
  if (std::abs(p.x) == 0.0) throw Error(ErrorKind::PoleAtZero, "pole at x0=0");
  return EPoint::affine(g.b / p.x, -g.b * p.y / (p.x * p.x));
}

/// One named check inside a report.
struct Residual {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass() const { return value <= tolerance; }
};

/// Result bundle of a contact-point verification. status is PASS exactly
/// when every residual is within its tolerance.
struct ContactReport {
  nlohmann::json inputs = nlohmann::json::object();
  std::array<CVec3, 2> lines{};
  bool complex_lines = false;
  bool complex_contacts = false;
  EPoint s_point;
  CVec3 q_point{};
  std::vector<CVec3> contacts_on_curve;
  std::vector<CVec3> contacts_on_hesse;
  std::vector<Residual> residuals;
  std::string error;

  void check(const std::string& name, double value, double tol) { residuals.push_back({name, value, tol}); }

  bool pass() const {
    if (!error.empty()) return false;
    return std::all_of(residuals.begin(), residuals.end(), [](const Residual& r) { return r.pass(); });
  }
  std::string status() const { return pass() ? "PASS" : "FAIL"; }

  double residual(const std::string& name) const {
    for (const auto& r : residuals) {
      if (r.name == name) return r.value;
    }
    return std::numeric_limits<double>::quiet_NaN();
  }

  nlohmann::json to_json() const {
    using nlohmann::json;
    json res = json::object();
    for (const auto& r : residuals) res[r.name] = {{"value", r.value}, {"tolerance", r.tolerance}, {"pass", r.pass()}};
    json pts = json::object();
    if (!s_point.infinite) pts["S"] = detail::cjson(s_point);
    pts["Q"] = detail::cjson(q_point);
    json on_curve = json::array(), on_hesse = json::array();
    for (const auto& t : contacts_on_curve) on_curve.push_back(detail::cjson(t));
    for (const auto& t : contacts_on_hesse) on_hesse.push_back(detail::cjson(t));
    pts["contacts_on_curve"] = on_curve;
    pts["contacts_on_hesse_derivative"] = on_hesse;
    json out = {{"inputs", inputs},
                {"lines", json::array({detail::cjson(lines[0]), detail::cjson(lines[1])})},
                {"points", pts},
                {"residuals", res},
                {"status", status()}};
    out["flags"] = {{"complex_lines", complex_lines}, {"complex_contacts", complex_contacts}};
    if (!error.empty()) out["error"] = error;
    return out;
  }
};

/// Checks that the polar lines cut the Hesse curve in S and in the four
/// halving points of P, that the two residual quadratics are
/// x^2 - 2(x0 +- alpha beta) x + e1 e2, and that 2P = 2S.
inline ContactReport halving_fiber_check(const GammaAB& g, const EPoint& p) {
  ContactReport rep;
  const EabCurve e = g.hesse_curve();
  const auto lines = polar_line_pair(g, p);
  const EPoint s = companion_point(g, p);
  const HalvingRadicals rad = halving_radicals(e, p);
  const auto hx = halving_x(rad);
  rep.s_point = s;
  rep.lines = {detail::line_vec(lines.l1), detail::line_vec(lines.l2)};

  std::vector<Complex> line_x;
  double quad_res = 0.0;
  double s_res = 0.0;
  const Complex ab = rad.alpha * rad.beta;
  std::array<int, 2> quad_sign{0, 0};
  for (int li = 0; li < 2; ++li) {
    const CVec3 l = rep.lines[li];
    // y = -(u x + w) / v; then x^3 + a x^2 + b x - (u x + w)^2 / v^2 = 0.
    const Complex u = l[0], v = l[1], w = l[2];
    const Complex v2 = v * v;
    const Complex c3 = 1.0, c2 = Complex(g.a) - u * u / v2, c1 = Complex(g.b) - 2.0 * u * w / v2, c0 = -w * w / v2;
    auto roots = solve_cubic(c3, c2, c1, c0);
    std::size_t is = 0;
    for (std::size_t i = 1; i < 3; ++i) {
      if (std::abs(roots[i] - s.x) < std::abs(roots[is] - s.x)) is = i;
    }
    s_res = std::max(s_res, std::abs(roots[is] - s.x) / std::max(1.0, std::abs(s.x)));
    // Residual quadratic after dividing out (x - x_S): x^2 + (c2 + x_S) x + ...
    const Complex q1 = c2 + s.x;
    const Complex q0 = -c0 / s.x;
    double best = std::numeric_limits<double>::infinity();
    for (int sign : {1, -1}) {
      const Complex e1c = -2.0 * (p.x + static_cast<double>(sign) * ab);
      const double r = std::max(std::abs(q1 - e1c) / std::max(1.0, std::abs(e1c)), std::abs(q0 - g.b) / std::max(1.0, std::abs(g.b)));
      if (r < best) {
        best = r;
        quad_sign[li] = sign;
      }
    }
    quad_res = std::max(quad_res, best);
    for (std::size_t i = 0; i < 3; ++i) {
      if (i != is) line_x.push_back(roots[i]);
    }
  }
  rep.check("line_meets_hesse_curve_at_S", s_res, 1e-7);
  rep.check("residual_quadratics", quad_res, 1e-7);
  rep.check("residual_quadratic_signs_differ", quad_sign[0] == quad_sign[1] ? 1.0 : 0.0, 0.5);
  rep.check("line_x_set_equals_halving_x_set", detail::multiset_distance(line_x, {hx.begin(), hx.end()}), 1e-6);
  rep.check("two_P_equals_two_S", detail::point_distance(double_point(e, p), double_point(e, s)), 1e-7);
  return rep;
}

/// Full contact-point verification for GammaAB and P on its Hesse
/// derivative: the polar conic splits into the two closed-form lines, they
/// meet at S on the Hesse curve, S is an involution partner of P, the
/// lines' other intersections with the Hesse curve are the halving points,
/// and every intersection of the lines with either curve is a contact point
/// of a tangent through P.
inline ContactReport verify_contacts(const GammaAB& g, const EPoint& p, double tol = 1e-8) {
  ContactReport rep;
  rep.inputs = {{"a", g.a}, {"b", g.b}};
  if (!p.infinite) {
    rep.inputs["x0"] = detail::cjson(p.x);
    rep.inputs["y0"] = detail::cjson(p.y);
  }
  try {
    if (p.infinite) throw Error(ErrorKind::InvalidArgument, "P must be affine");
    const EabCurve e = g.hesse_curve();
    if (!on_curve(e, p, tol)) throw Error(ErrorKind::NotOnHesseDerivative, "P is not on the Hesse derivative");
    if (std::abs(p.x) == 0.0) throw Error(ErrorKind::PoleAtZero, "pole at x0=0");

    const auto f = g.complex_form();
    const auto hc = e_ab_form<Complex>(Complex(g.a), Complex(g.b));
    const CVec3 P{p.x, p.y, Complex(1.0)};

    // Lines from the closed form against the polar conic.
    const ComplexLinePair lines = polar_line_pair(g, p);
    const ComplexSymConic conic = polar_conic<Complex, Complex>(f, P);
    rep.lines = {detail::line_vec(lines.l1), detail::line_vec(lines.l2)};
    rep.complex_lines = !(detail::is_real(rep.lines[0]) && detail::is_real(rep.lines[1]));
    rep.check("line_product_vs_polar_conic", line_pair_residual(conic, lines), 1e-7);

    // Independent split of the conic must give the same unordered pair.
    const ComplexLinePair split = split_degenerate_conic_complex(conic);
    const CVec3 s1 = detail::line_vec(split.l1), s2 = detail::line_vec(split.l2);
    const double d_same = std::max(detail::line_distance(s1, rep.lines[0]), detail::line_distance(s2, rep.lines[1]));
    const double d_swap = std::max(detail::line_distance(s1, rep.lines[1]), detail::line_distance(s2, rep.lines[0]));
    rep.check("adjugate_split_matches_lines", std::min(d_same, d_swap), 1e-7);

    // S: meeting point of the lines, on the Hesse curve, involutive.
    const EPoint s = companion_point(g, p);
    rep.s_point = s;
    rep.q_point = detail::cross(rep.lines[0], rep.lines[1]);
    const CVec3 sv{s.x, s.y, Complex(1.0)};
    rep.check("lines_meet_at_S", detail::line_distance(rep.q_point, sv), 1e-7);
    const double s_on = std::abs(s.y * s.y - e.rhs(s.x)) / std::max(1.0, std::pow(std::abs(s.x), 3));
    rep.check("S_on_hesse_curve", s_on, 1e-8);
    rep.check("S_involution", detail::point_distance(companion_point(g, s), p), 1e-8);

    // Contact points on the Hesse curve: the halving points.
    ContactReport fib = halving_fiber_check(g, p);
    for (const auto& r : fib.residuals) rep.residuals.push_back(r);

    // Contact points of the tangents from P, to both curves.
    double tangent_curve = 0.0, tangent_hesse = 0.0, on_res = 0.0;
    for (const auto& l : rep.lines) {
      for (const auto& t : detail::line_cubic_points(f, l)) {
        rep.contacts_on_curve.push_back(t);
        if (!detail::is_real(t, 1e-7)) rep.complex_contacts = true;
        tangent_curve = std::max(tangent_curve, detail::tangent_through(f, t, P));
        on_res = std::max(on_res, detail::on_cubic(f, t));
      }
      for (const auto& t : detail::line_cubic_points(hc, l)) {
        if (detail::line_distance(t, sv) <= 1e-6) continue;
        rep.contacts_on_hesse.push_back(t);
        if (!detail::is_real(t, 1e-7)) rep.complex_contacts = true;
        tangent_hesse = std::max(tangent_hesse, detail::tangent_through(hc, t, P));
      }
    }
    rep.check("contacts_on_curve_lie_on_curve", on_res, 1e-8);
    rep.check("tangents_to_curve_pass_through_P", tangent_curve, 1e-7);
    rep.check("hesse_contacts_count", std::abs(static_cast<double>(rep.contacts_on_hesse.size()) - 4.0), 0.5);
    rep.check("tangents_to_hesse_pass_through_P", tangent_hesse, 1e-7);
  } catch (const Error& err) {
    rep.error = err.what();
    throw;
  }
  return rep;
}

/// Same verification for an arbitrary cubic given with real coefficients,
/// using only the polar conic: it must split, the lines must meet on the
/// Hesse derivative, and every intersection of the lines with the curve or
/// its Hesse derivative (other than the meeting point) must be a contact
/// point of a tangent through P.
inline ContactReport verify_contacts_general(const RealCubicForm& f_real, const std::array<double, 3>& p, double tol = 1e-8) {
  ContactReport rep;
  rep.inputs = {{"point", {p[0], p[1], p[2]}}};
  const RealCubicForm h_real = hesse_derivative(f_real);
  const auto f = f_real.map<Complex>([](double v) { return Complex(v); });
  const auto h = h_real.map<Complex>([](double v) { return Complex(v); });
  const CVec3 P{p[0], p[1], p[2]};
  const double on_h = detail::on_cubic(h, P);
  if (on_h > tol) throw Error(ErrorKind::NotOnHesseDerivative, "P is not on the Hesse derivative");
  rep.check("P_on_hesse_derivative", on_h, tol);

  const ComplexSymConic conic = polar_conic<Complex, Complex>(f, P);
  const ComplexLinePair lines = split_degenerate_conic_complex(conic, 1e-7);
  rep.lines = {detail::line_vec(lines.l1), detail::line_vec(lines.l2)};
  rep.complex_lines = !(detail::is_real(rep.lines[0]) && detail::is_real(rep.lines[1]));
  rep.check("line_product_vs_polar_conic", line_pair_residual(conic, lines), 1e-7);
  rep.q_point = detail::cross(rep.lines[0], rep.lines[1]);
  rep.check("Q_on_hesse_derivative", detail::on_cubic(h, rep.q_point), 1e-7);

  double tangent_curve = 0.0, tangent_hesse = 0.0;
  for (const auto& l : rep.lines) {
    for (const auto& t : detail::line_cubic_points(f, l)) {
      rep.contacts_on_curve.push_back(t);
      if (!detail::is_real(t, 1e-7)) rep.complex_contacts = true;
      tangent_curve = std::max(tangent_curve, detail::tangent_through(f, t, P));
    }
    for (const auto& t : detail::line_cubic_points(h, l)) {
      if (detail::line_distance(t, rep.q_point) <= 1e-6) continue;
      rep.contacts_on_hesse.push_back(t);
      if (!detail::is_real(t, 1e-7)) rep.complex_contacts = true;
      tangent_hesse = std::max(tangent_hesse, detail::tangent_through(h, t, P));
    }
  }
  rep.check("tangents_to_curve_pass_through_P", tangent_curve, 1e-7);
  rep.check("tangents_to_hesse_pass_through_P", tangent_hesse, 1e-7);
  return rep;
}

}  // namespace hesse
