// Named, re-evaluable properties: inputs are grammar strings, the output is
// the printed residual ("0" when the property holds).
#pragma once

#include "qtwist/algebra.hpp"
#include "qtwist/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qtwist {

using PropertyFn = std::function<std::string(const SpecPtr&, const std::vector<std::string>&)>;

struct Property {
  std::string name;
  PropertyFn eval;
};

/// Parses a 1-based node label; throws std::invalid_argument when out of range.
int parse_index(const std::string& text, int rank);
/// Printed Serre normal form of x.
std::string residual(const Element& x);

/// Evaluates `p` and records the outcome in `report`.
void run_property(Report& report, const Property& p, const SpecPtr& spec, std::vector<std::string> inputs);

}  // namespace qtwist
