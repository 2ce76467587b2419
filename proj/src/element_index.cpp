#include "ncfact/element_index.hpp"

#include <bit>
#include <functional>

namespace ncfact {

namespace {
std::size_t hash_bytes(std::string_view bytes) { return std::hash<std::string_view>{}(bytes); }
}  // namespace

void ElementIndex::reserve(std::size_t count) {
  arena_.reserve(count * degree_);
  const std::size_t wanted = std::bit_ceil(2 * count + 1);
  if (wanted > slots_.size()) rehash(wanted);
}

void ElementIndex::rehash(std::size_t slot_count) {
  slots_.assign(slot_count, 0);
  mask_ = slot_count - 1;
  for (std::uint32_t id = 0; id < count_; ++id) {
    std::size_t s = hash_bytes(at(id)) & mask_;
    while (slots_[s] != 0) s = (s + 1) & mask_;
    slots_[s] = id + 1;
  }
}

std::optional<std::uint32_t> ElementIndex::find(std::string_view bytes) const {
  std::size_t s = hash_bytes(bytes) & mask_;
  while (const std::uint32_t tag = slots_[s]) {
    if (at(tag - 1) == bytes) return tag - 1;
    s = (s + 1) & mask_;
  }
  return std::nullopt;
}

std::pair<std::uint32_t, bool> ElementIndex::insert(std::string_view bytes) {
  std::size_t s = hash_bytes(bytes) & mask_;
  while (const std::uint32_t tag = slots_[s]) {
    if (at(tag - 1) == bytes) return {tag - 1, false};
    s = (s + 1) & mask_;
  }
  const auto id = static_cast<std::uint32_t>(count_);
  arena_.insert(arena_.end(), bytes.begin(), bytes.end());
  ++count_;
  slots_[s] = id + 1;
  if (2 * count_ > slots_.size()) rehash(2 * slots_.size());
  return {id, true};
}

}  // namespace ncfact
