// Follows x^3 + y^3 + z^3 + c xyz under repeated Hesse derivatives and
// prints the parameter sequence together with the number of real
// components of each curve.
//
//   demo_hesse_orbit [c0] [steps]

#include <cstdio>
#include <cstdlib>
#include <string>

#include <hesse/algebra/bigrational.hpp>
#include <hesse/curves/components.hpp>
#include <hesse/dynamics/orbit.hpp>

int main(int argc, char** argv) {
  using namespace hesse;
  const std::string c0 = argc > 1 ? argv[1] : "1/2";
  const int steps = argc > 2 ? std::atoi(argv[2]) : 6;
  try {
    const auto rec = orbit(ExtendedParam(parse_rational(c0)), steps);
    for (std::size_t k = 0; k < rec.states.size(); ++k) {
      const auto& c = rec.states[k];
      std::string comps = "-";
      if (!c.is_infinite() && !(c == ExtendedParam(-3))) comps = std::to_string(component_count_hesse_form(c));
      std::string text = c.to_string();
      if (text.size() > 48) text = text.substr(0, 20) + "..." + text.substr(text.size() - 20);
      std::printf("%2zu  components=%s  c=%s  (~%.6g)\n", k, comps.c_str(), text.c_str(),
                  c.is_infinite() ? 0.0 : c.real());
    }
    std::printf("terminal: %s at step %d\n", to_string(rec.terminal).c_str(), rec.at);
  } catch (const Error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 1;
  }
  return 0;
}
