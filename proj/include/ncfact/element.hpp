#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace ncfact {

/// An exact group element, stored as the permutation it induces on a finite
/// set of points (colored basis vectors for monomial groups, roots for the
/// exceptional Coxeter groups). Byte i is the image of point i.
///
/// Equality, ordering and hashing all go through the byte string, so two
/// elements are equal iff their serializations are equal.
class Element {
 public:
  Element() = default;
  explicit Element(std::string images) : images_(std::move(images)) {}

  static Element identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint8_t operator[](std::size_t point) const {
    return static_cast<std::uint8_t>(images_[point]);
  }
  const std::string& bytes() const { return images_; }
  bool is_identity() const;

  bool operator==(const Element&) const = default;
  std::strong_ordering operator<=>(const Element& other) const {
    // std::string compares bytes as unsigned char
    const int c = images_.compare(other.images_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  std::string images_;
};

/// a*b: apply b first, then a.
Element compose(const Element& a, const Element& b);
Element inverse(const Element& a);

/// Allocation-free variants used in the enumeration loops. `out` must hold
/// degree bytes and must not alias the inputs.
void compose_into(std::string_view a, std::string_view b, char* out);
void inverse_into(std::string_view a, char* out);

std::string to_hex(std::string_view bytes);

}  // namespace ncfact

template <>
struct std::hash<ncfact::Element> {
  std::size_t operator()(const ncfact::Element& e) const noexcept {
    return std::hash<std::string>{}(e.bytes());
  }
};
