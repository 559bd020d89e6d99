#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcalab {

/// Malformed input: names the source, line and field when known.
class InputError : public std::runtime_error {
 public:
  InputError(std::string source, std::size_t line, std::string field, const std::string& what)
      : std::runtime_error(format(source, line, field, what)),
        source_(std::move(source)),
        line_(line),
        field_(std::move(field)) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  static std::string format(const std::string& source, std::size_t line, const std::string& field,
                            const std::string& what) {
    std::string out = source.empty() ? "<input>" : source;
    if (line > 0) out += ":" + std::to_string(line);
    if (!field.empty()) out += ": field '" + field + "'";
    return out + ": " + what;
  }

  std::string source_;
  std::size_t line_;
  std::string field_;
};

/// An exhaustive enumeration would exceed its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::size_t count)
      : std::runtime_error(what + " (more than " + std::to_string(count) + ")"), count_(count) {}
  std::size_t count() const noexcept { return count_; }

 private:
  std::size_t count_;
};

}  // namespace pcalab
