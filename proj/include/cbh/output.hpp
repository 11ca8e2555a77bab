#pragma once

// Deterministic key/value output documents for the CLI. No timestamps;
// solution lists are emitted in canonical (ascending-parameter) order, so
// identical inputs render byte-identical documents.

#include "cbh/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cbh {

inline constexpr const char* kArtifactVersion = "1.0.0";

struct OutputNode {
  std::string key;
  std::string value;  // empty for pure containers
  std::vector<OutputNode> children;

  OutputNode() = default;
  OutputNode(std::string k, std::string v) : key(std::move(k)), value(std::move(v)) {}
  explicit OutputNode(std::string k) : key(std::move(k)) {}

  OutputNode& add(std::string k, std::string v) {
    children.emplace_back(std::move(k), std::move(v));
    return children.back();
  }
  OutputNode& add(OutputNode n) {
    children.push_back(std::move(n));
    return children.back();
  }
};

struct OutputDocument {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::string mode = "exact";  // "exact" | "float"
  std::string tolerance;       // optional
  std::vector<OutputNode> body;

  OutputNode& add(OutputNode n) {
    body.push_back(std::move(n));
    return body.back();
  }
  std::string render() const;
};

}  // namespace cbh
