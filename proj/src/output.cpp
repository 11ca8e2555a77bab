#include "cbh/output.hpp"

#include <sstream>

namespace cbh {

namespace {

void render_node(std::ostringstream& os, const OutputNode& node, int depth) {
  const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
  os << pad << node.key << ":";
  if (!node.value.empty()) os << " " << node.value;
  os << "\n";
  for (const OutputNode& child : node.children) render_node(os, child, depth + 1);
}

}  // namespace

std::string OutputDocument::render() const {
  std::ostringstream os;
  os << "cbh/1\n";
  os << "version: " << kArtifactVersion << "\n";
  os << "command: " << command << "\n";
  for (const auto& [k, v] : params) os << "param." << k << ": " << v << "\n";
  os << "mode: " << mode << "\n";
  if (!tolerance.empty()) os << "tolerance: " << tolerance << "\n";
  for (const OutputNode& node : body) render_node(os, node, 0);
  return os.str();
}

}  // namespace cbh
