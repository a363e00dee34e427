#include "qtwist/property.hpp"

#include <stdexcept>

namespace qtwist {

int parse_index(const std::string& text, int rank) {
  std::size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad node index '" + text + "'");
  }
  if (used != text.size() || k < 1 || k > rank) throw std::invalid_argument("bad node index '" + text + "'");
  return k - 1;
}

std::string residual(const Element& x) { return format_element(serre_normal_form(x)); }

void run_property(Report& report, const Property& p, const SpecPtr& spec, std::vector<std::string> inputs) {
  std::string res = p.eval(spec, inputs);
  report.expect({p.name, spec->cartan().label(), spec->name(), std::move(inputs), std::move(res)});
}

}  // namespace qtwist
