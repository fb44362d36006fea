#pragma once

#include <stdexcept>
#include <string>

namespace thin {

/// Error raised by every module. `code()` is module-qualified, e.g.
/// "graph.self_loop" or "overlay.not_total".
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string &message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string &code() const noexcept { return code_; }

private:
  std::string code_;
};

} // namespace thin
