// The two-cycle c0 = 3(sqrt3 - 1), c1 = -3(sqrt3 + 1) of the Hesse
// parameter map, checked exactly in Q(sqrt3), and the D3-symmetric cubic
// that two Hesse derivatives send back to itself.

#include <cstdio>

#include <hesse/curves/hesse.hpp>
#include <hesse/dynamics/loops.hpp>
#include <hesse/normal_forms/normal_forms.hpp>

int main() {
  using namespace hesse;
  const auto w0 = hesse_to_wnf(loop2_q0());
  const auto w1 = hesse_to_wnf(loop2_q1());
  std::printf("q0 = %s: c = %s, a = %s, b = %s\n", w0.q.to_string().c_str(), w0.c.to_string().c_str(),
              w0.a.to_string().c_str(), w0.b.to_string().c_str());
  std::printf("q1 = %s: c = %s, a = %s, b = %s\n", w1.q.to_string().c_str(), w1.c.to_string().c_str(),
              w1.a.to_string().c_str(), w1.b.to_string().c_str());
  std::printf("step(c0) = %s\n", step_value(w0.c).to_string().c_str());
  std::printf("step(c1) = %s\n", step_value(w1.c).to_string().c_str());
  std::printf("exact two-cycle check: %s\n", wnf_loop2_check() ? "true" : "false");

  const auto loops = enumerate_loops(2);
  for (const auto& c : loops.cycles) std::printf("cycle found by root isolation: %.12f %.12f\n", c.values[0], c.values[1]);

  const auto f = two_loop_d3_curve<QSqrt3>();
  const auto h = hesse_derivative_field(f);
  std::printf("curve:            %s\n", to_string(f).c_str());
  std::printf("Hesse derivative: %s\n", to_string(h).c_str());
  std::printf("fixed by two derivatives: %s\n", proportional(hesse_derivative_field(h), f) ? "yes" : "no");
  std::printf("D3 symmetry residual: %.2e\n", d3_symmetry_residual(to_real(f)));
  return 0;
}
