#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace ncfact {

/// Append-only set of equal-length byte strings with dense integer ids.
/// Storage is a single arena plus an open-addressing table, so enumerating
/// a group of a few million elements costs one allocation per growth step.
class ElementIndex {
 public:
  explicit ElementIndex(std::size_t degree) : degree_(degree) { rehash(64); }

  void reserve(std::size_t count);

  std::optional<std::uint32_t> find(std::string_view bytes) const;
  /// Returns (id, inserted).
  std::pair<std::uint32_t, bool> insert(std::string_view bytes);

  std::string_view at(std::uint32_t id) const {
    return {arena_.data() + static_cast<std::size_t>(id) * degree_, degree_};
  }
  std::size_t size() const { return count_; }
  std::size_t degree() const { return degree_; }

 private:
  void rehash(std::size_t slot_count);

  std::size_t degree_;
  std::size_t count_ = 0;
  std::vector<char> arena_;
  std::vector<std::uint32_t> slots_;  // id + 1, 0 = empty
  std::size_t mask_ = 0;
};

}  // namespace ncfact
