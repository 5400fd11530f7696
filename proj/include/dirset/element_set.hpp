#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dirset {

// Canonical element index in [0, q). See FieldContext for the encoding.
using Element = std::uint32_t;

// Subset of F_q as a bitmask over canonical indices. Universes of up to 256
// elements live inline so campaign inner loops never allocate.
class ElementSet {
 public:
  static constexpr std::size_t kInlineWords = 4;

  ElementSet() = default;
  explicit ElementSet(std::uint32_t universe)
      : universe_(universe), word_count_((universe + 63) / 64) {
    if (word_count_ > kInlineWords) heap_.assign(word_count_, 0);
  }

  static ElementSet of(std::uint32_t universe, std::span<const Element> elems) {
    ElementSet s(universe);
    for (Element e : elems) s.insert(e);
    return s;
  }
  static ElementSet of(std::uint32_t universe, std::initializer_list<Element> elems) {
    return of(universe, std::span<const Element>(elems.begin(), elems.size()));
  }
  static ElementSet full(std::uint32_t universe) {
    ElementSet s(universe);
    for (Element e = 0; e < universe; ++e) s.insert(e);
    return s;
  }

  std::uint32_t universe() const noexcept { return universe_; }

  void insert(Element e) noexcept { words()[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Element e) noexcept { words()[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
  bool contains(Element e) const noexcept {
    return (words()[e >> 6] >> (e & 63)) & 1U;
  }
  void clear() noexcept {
    for (auto& w : words()) w = 0;
  }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words()) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept {
    for (auto w : words())
      if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const noexcept {
    auto a = words();
    auto b = other.words();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] & ~b[i]) return false;
    return true;
  }

  ElementSet& operator|=(const ElementSet& other) noexcept {
    auto a = words();
    auto b = other.words();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] |= b[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& other) noexcept {
    auto a = words();
    auto b = other.words();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] &= b[i];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) noexcept {
    if (a.universe_ != b.universe_) return false;
    auto x = a.words();
    auto y = b.words();
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != y[i]) return false;
    return true;
  }

  // Calls fn(e) for each member in increasing index order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    auto w = words();
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::uint64_t bits = w[i];
      while (bits) {
        const int t = std::countr_zero(bits);
        fn(static_cast<Element>(i * 64 + static_cast<std::size_t>(t)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for_each([&](Element e) { out.push_back(e); });
    return out;
  }

  std::span<std::uint64_t> words() noexcept {
    return word_count_ > kInlineWords ? std::span<std::uint64_t>(heap_)
                                      : std::span<std::uint64_t>(inline_.data(), word_count_);
  }
  std::span<const std::uint64_t> words() const noexcept {
    return word_count_ > kInlineWords
               ? std::span<const std::uint64_t>(heap_)
               : std::span<const std::uint64_t>(inline_.data(), word_count_);
  }

 private:
  std::uint32_t universe_ = 0;
  std::uint32_t word_count_ = 0;
  std::array<std::uint64_t, kInlineWords> inline_{};
  std::vector<std::uint64_t> heap_;
};

}  // namespace dirset
