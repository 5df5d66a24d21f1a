#pragma once

// Machine-checkable verdicts for exactness and isomorphism claims.  A report
// is a flat record of named flags and dimensions; the verdict is always the
// conjunction of its flags.

#include <string>
#include <utility>
#include <vector>

namespace leibniz {

struct SequenceNode {
  std::string label;        // space at this node
  int dim_image_in = -1;    // dim image of the incoming map
  int dim_kernel_out = -1;  // dim kernel of the outgoing map
  bool composite_zero = true;
  bool exact = true;        // image == kernel as subspaces
};

struct IsoWitness {
  std::string label;
  bool bijective = false;
};

struct SequenceReport {
  std::string name;
  std::vector<SequenceNode> nodes;
  std::vector<IsoWitness> isos;
  // extra named facts (dimensions, ranks) for report emission
  std::vector<std::pair<std::string, std::string>> facts;
  bool verdict = true;
  double elapsed_ms = 0.0;

  void require(const std::string& label, bool ok) {
    isos.push_back({label, ok});
    verdict = verdict && ok;
  }
  void fact(const std::string& key, long value) {
    facts.emplace_back(key, std::to_string(value));
  }
  void fact(const std::string& key, const std::string& value) {
    facts.emplace_back(key, value);
  }
  void absorb_nodes(const std::vector<SequenceNode>& ns) {
    for (const auto& n : ns) {
      nodes.push_back(n);
      verdict = verdict && n.exact && n.composite_zero;
    }
  }
};

}  // namespace leibniz
