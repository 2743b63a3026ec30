#include "gvd/ring.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace gvd {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Ring::Ring(std::vector<std::string> variables) {
  std::unordered_set<std::string> seen;
  for (const auto& v : variables) {
    if (!valid_identifier(v)) throw std::invalid_argument("invalid variable name: '" + v + "'");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name: '" + v + "'");
  }
  vars_ = std::make_shared<const std::vector<std::string>>(std::move(variables));
}

std::optional<int> Ring::index_of(const std::string& name) const {
  for (size_t i = 0; i < vars_->size(); ++i)
    if ((*vars_)[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

Ring Ring::without_variable(int i) const {
  std::vector<std::string> v = *vars_;
  v.erase(v.begin() + i);
  return Ring(std::move(v));
}

Ring Ring::with_variable_prepended(const std::string& name) const {
  std::vector<std::string> v;
  v.reserve(vars_->size() + 1);
  v.push_back(name);
  v.insert(v.end(), vars_->begin(), vars_->end());
  return Ring(std::move(v));
}

std::string Ring::fresh_variable_name(const std::string& stem) const {
  if (!index_of(stem)) return stem;
  for (int k = 1;; ++k) {
    std::string candidate = stem + "_" + std::to_string(k);
    if (!index_of(candidate)) return candidate;
  }
}

std::string Ring::to_string() const {
  std::string out;
  for (size_t i = 0; i < vars_->size(); ++i) {
    if (i) out += ",";
    out += (*vars_)[i];
  }
  return out;
}

}  // namespace gvd
