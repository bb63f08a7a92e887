// Tangents from a point P on the Hesse curve y^2 = x^3 + a x^2 + b x to the
// cubic a x^3 + 3xy^2 + 3b x^2 z - b^2 z^3. The polar conic of P splits into
// two lines; they meet at S and touch the Hesse curve at the four halves
// of -P.
//
//   demo_contact_points [a] [b] [x0]

#include <cstdio>
#include <cstdlib>

#include <hesse/halving_geometry/contacts.hpp>

int main(int argc, char** argv) {
  using namespace hesse;
  const double a = argc > 1 ? std::atof(argv[1]) : 0.0;
  const double b = argc > 2 ? std::atof(argv[2]) : -1.0;
  const double x0 = argc > 3 ? std::atof(argv[3]) : 4.0;
  try {
    const GammaAB g(a, b);
    const EabCurve e = g.hesse_curve();
    const EPoint p = e.point_at(x0);
    const auto rep = verify_contacts(g, p);
    std::printf("P = (%g, %g)\n", p.x.real(), p.y.real());
    for (int i = 0; i < 2; ++i) {
      const auto& l = rep.lines[static_cast<std::size_t>(i)];
      std::printf("line %d: %.6g x + %.6g y + %.6g z%s\n", i + 1, l[0].real(), l[1].real(), l[2].real(),
                  rep.complex_lines ? "  (complex)" : "");
    }
    std::printf("S = (%.6g, %.6g)\n", rep.s_point.x.real(), rep.s_point.y.real());
    std::printf("contacts on the Hesse curve:\n");
    for (const auto& t : rep.contacts_on_hesse) {
      const Complex x = t[0] / t[2], y = t[1] / t[2];
      std::printf("  (%.6g%+.6gi, %.6g%+.6gi)\n", x.real(), x.imag(), y.real(), y.imag());
    }
    for (const auto& r : rep.residuals) {
      std::printf("  %-40s %.2e  %s\n", r.name.c_str(), r.value, r.pass() ? "ok" : "FAIL");
    }
    std::printf("%s\n", rep.status().c_str());
    return rep.pass() ? 0 : 3;
  } catch (const Error& err) {
    std::fprintf(stderr, "%s\n", err.what());
    return 2;
  }
}
