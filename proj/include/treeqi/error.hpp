#pragma once

#include <stdexcept>
#include <string>

namespace treeqi {

/// Malformed input document or structurally invalid value.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reasons a complex fails the tree-complex membership test.
enum class TnFailure {
  Disconnected,
  Cyclic,
  Uncolorable,
  // The gluing graph is a tree but some simplex reuses a vertex that a tree
  // gluing would have introduced fresh.
  IdentifiedVertices,
};

const char* to_string(TnFailure failure);

class NotInTnError : public std::runtime_error {
 public:
  NotInTnError(TnFailure failure, const std::string& detail)
      : std::runtime_error(std::string(to_string(failure)) + ": " + detail),
        failure_(failure),
        detail_(detail) {}

  TnFailure failure() const { return failure_; }
  const std::string& detail() const { return detail_; }

 private:
  TnFailure failure_;
  std::string detail_;
};

}  // namespace treeqi
