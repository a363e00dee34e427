// Outcome of a property sweep: case count plus the failing cases.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qtwist {

/// One failing evaluation. Inputs are grammar strings; `residual` is the
/// normal form of lhs - rhs, "0" when the property holds.
struct Counterexample {
  std::string property;
  std::string cartan;
  std::string spec;
  std::vector<std::string> inputs;
  std::string residual;
};

struct Report {
  std::string check;
  std::size_t cases = 0;
  std::size_t failed = 0;
  std::vector<Counterexample> failures;  // first few only
  std::size_t keep = 8;

  bool passed() const { return failed == 0; }

  /// Records one evaluation; anything other than "0" is a failure.
  void expect(Counterexample c) {
    ++cases;
    if (c.residual == "0") return;
    ++failed;
    if (failures.size() < keep) failures.push_back(std::move(c));
  }

  void merge(const Report& o) {
    cases += o.cases;
    failed += o.failed;
    for (const auto& c : o.failures)
      if (failures.size() < keep) failures.push_back(c);
  }
};

}  // namespace qtwist
