#pragma once

#include <string>
#include <vector>

#include "kschmidt/group.hpp"
#include "kschmidt/io.hpp"

namespace kschmidt {

struct ReportInput {
  std::string label;
  std::string digest;
};

/// Machine-readable result of one CLI command. Serialization is
/// deterministic: keys are sorted and arrays keep insertion order.
struct Report {
  std::string command;
  std::vector<ReportInput> inputs;
  Json result = Json::object();
  std::vector<std::string> lemma_refs;

  void add_input(const FiniteGroup& group, std::string label = {});
  Json to_json() const;
  std::string dump() const { return to_json().dump(2); }
};

}  // namespace kschmidt
