#include "lpwan/hop_model.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "lpwan/error.hpp"
#include "lpwan/number_format.hpp"

namespace lpwan::sim {
namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::InvalidParameters, what);
}

} // namespace

void validate(const LatencyLaw& law) {
  std::visit(overloaded{
                 [](const Lognormal& l) {
                   if (!std::isfinite(l.mu) || !positive_finite(l.sigma))
                     invalid("lognormal needs finite mu and sigma > 0");
                 },
                 [](const Gamma& g) {
                   if (!positive_finite(g.shape) || !positive_finite(g.scale))
                     invalid("gamma needs shape > 0 and scale > 0");
                 },
                 [](const ShiftedExponential& e) {
                   if (!std::isfinite(e.shift) || e.shift < 0.0 || !positive_finite(e.rate))
                     invalid("shifted exponential needs shift >= 0 and rate > 0");
                 },
                 [](const Constant& c) {
                   if (!positive_finite(c.value)) invalid("constant law needs value > 0");
                 },
             },
             law);
}

double law_mean(const LatencyLaw& law) {
  return std::visit(overloaded{
                        [](const Lognormal& l) { return std::exp(l.mu + 0.5 * l.sigma * l.sigma); },
                        [](const Gamma& g) { return g.shape * g.scale; },
                        [](const ShiftedExponential& e) { return e.shift + 1.0 / e.rate; },
                        [](const Constant& c) { return c.value; },
                    },
                    law);
}

double law_variance(const LatencyLaw& law) {
  return std::visit(overloaded{
                        [](const Lognormal& l) {
                          const double s2 = l.sigma * l.sigma;
                          return std::expm1(s2) * std::exp(2.0 * l.mu + s2);
                        },
                        [](const Gamma& g) { return g.shape * g.scale * g.scale; },
                        [](const ShiftedExponential& e) { return 1.0 / (e.rate * e.rate); },
                        [](const Constant&) { return 0.0; },
                    },
                    law);
}

Lognormal lognormal_from_moments(double mean, double cv) {
  if (!positive_finite(mean) || !positive_finite(cv)) {
    invalid("lognormal moments need mean > 0 and cv > 0");
  }
  const double s2 = std::log1p(cv * cv);
  return {std::log(mean) - 0.5 * s2, std::sqrt(s2)};
}

double sample_hop(const HopModel& hop, SampleStream& rng) {
  validate(hop.law);
  const double draw = std::visit(
      overloaded{
          [&](const Lognormal& l) { return std::exp(l.mu + l.sigma * rng.standard_normal()); },
          [&](const Gamma& g) { return g.scale * rng.standard_gamma(g.shape); },
          [&](const ShiftedExponential& e) { return e.shift - std::log(rng.uniform01()) / e.rate; },
          [](const Constant& c) { return c.value; },
      },
      hop.law);
  // exp() of a very negative normal can underflow; keep the law's support.
  return draw > 0.0 ? draw : std::numeric_limits<double>::min();
}

std::string format_law(const LatencyLaw& law) {
  return std::visit(
      overloaded{
          [](const Lognormal& l) {
            return "lognormal mu=" + format_shortest(l.mu) + " sigma=" + format_shortest(l.sigma);
          },
          [](const Gamma& g) {
            return "gamma shape=" + format_shortest(g.shape) + " scale=" + format_shortest(g.scale);
          },
          [](const ShiftedExponential& e) {
            return "shifted_exponential shift=" + format_shortest(e.shift) +
                   " rate=" + format_shortest(e.rate);
          },
          [](const Constant& c) { return "constant value=" + format_shortest(c.value); },
      },
      law);
}

LatencyLaw parse_law(const std::string& text) {
  std::istringstream in(text);
  std::string family;
  in >> family;

  std::map<std::string, double> params;
  for (std::string token; in >> token;) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) invalid("expected key=value, got '" + token + "'");
    const auto value = parse_double(std::string_view(token).substr(eq + 1));
    if (!value) invalid("bad number in '" + token + "'");
    params[token.substr(0, eq)] = *value;
  }

  auto take = [&](const char* key) {
    const auto it = params.find(key);
    if (it == params.end()) invalid(family + " law is missing '" + key + "'");
    const double v = it->second;
    params.erase(it);
    return v;
  };

  LatencyLaw law;
  if (family == "lognormal") {
    const double mu = take("mu");
    law = Lognormal{mu, take("sigma")};
  } else if (family == "gamma") {
    const double shape = take("shape");
    law = Gamma{shape, take("scale")};
  } else if (family == "shifted_exponential") {
    const double shift = take("shift");
    law = ShiftedExponential{shift, take("rate")};
  } else if (family == "constant") {
    law = Constant{take("value")};
  } else {
    invalid("unknown law family '" + family + "'");
  }
  if (!params.empty()) invalid("unexpected parameter '" + params.begin()->first + "'");
  validate(law);
  return law;
}

} // namespace lpwan::sim
