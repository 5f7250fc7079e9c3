#include "kschmidt/report.hpp"

namespace kschmidt {

void Report::add_input(const FiniteGroup& group, std::string label) {
  if (label.empty()) label = group.label();
  inputs.push_back(ReportInput{std::move(label), digest(group)});
}

Json Report::to_json() const {
  Json in = Json::array();
  for (const auto& i : inputs) in.push_back(Json{{"label", i.label}, {"digest", i.digest}});
  return Json{{"command", command}, {"inputs", std::move(in)}, {"result", result}, {"lemma_refs", lemma_refs}};
}

}  // namespace kschmidt
