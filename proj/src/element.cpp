#include "ncfact/element.hpp"

#include <numeric>

namespace ncfact {

Element Element::identity(std::size_t degree) {
  std::string images(degree, '\0');
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<char>(i);
  return Element(std::move(images));
}

bool Element::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if ((*this)[i] != i) return false;
  }
  return true;
}

void compose_into(std::string_view a, std::string_view b, char* out) {
  const auto* pa = reinterpret_cast<const unsigned char*>(a.data());
  const auto* pb = reinterpret_cast<const unsigned char*>(b.data());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = static_cast<char>(pa[pb[i]]);
}

void inverse_into(std::string_view a, char* out) {
  const auto* pa = reinterpret_cast<const unsigned char*>(a.data());
  for (std::size_t i = 0; i < a.size(); ++i) out[pa[i]] = static_cast<char>(i);
}

Element compose(const Element& a, const Element& b) {
  std::string out(b.degree(), '\0');
  compose_into(a.bytes(), b.bytes(), out.data());
  return Element(std::move(out));
}

Element inverse(const Element& a) {
  std::string out(a.degree(), '\0');
  inverse_into(a.bytes(), out.data());
  return Element(std::move(out));
}

std::string to_hex(std::string_view bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (const char c : bytes) {
    const auto u = static_cast<unsigned char>(c);
    out.push_back(kDigits[u >> 4]);
    out.push_back(kDigits[u & 15]);
  }
  return out;
}

}  // namespace ncfact
