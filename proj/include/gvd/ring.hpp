#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gvd {

/// Polynomial ring over Q, identified by its ordered list of variable names.
/// Copies are cheap handles; two rings compare equal iff their variable lists
/// are identical.
class Ring {
 public:
  Ring() : vars_(std::make_shared<const std::vector<std::string>>()) {}
  explicit Ring(std::vector<std::string> variables);

  int size() const { return static_cast<int>(vars_->size()); }
  const std::vector<std::string>& variables() const { return *vars_; }
  const std::string& name(int i) const { return (*vars_)[static_cast<size_t>(i)]; }
  std::optional<int> index_of(const std::string& name) const;

  /// Ring with variable i removed, order of the others preserved.
  Ring without_variable(int i) const;
  /// Ring with a fresh variable prepended (largest default-lex position).
  Ring with_variable_prepended(const std::string& name) const;
  /// A variable name not colliding with any existing one ("t", "t_1", ...).
  std::string fresh_variable_name(const std::string& stem = "t") const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
  }
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

  std::string to_string() const;  // "a,b,c"

 private:
  std::shared_ptr<const std::vector<std::string>> vars_;
};

}  // namespace gvd
