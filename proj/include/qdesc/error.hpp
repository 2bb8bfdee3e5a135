#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qdesc {

// Error raised by every module; `code` is a short machine-readable tag.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message, std::string context = {})
      : std::runtime_error(message), code_(std::move(code)), context_(std::move(context)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& context() const noexcept { return context_; }

 private:
  std::string code_;
  std::string context_;
};

}  // namespace qdesc
