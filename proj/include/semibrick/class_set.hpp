#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace semibrick {

/// Index of an isomorphism class inside one Universe.
struct IsoClassId {
  std::uint32_t value = 0;

  friend auto operator<=>(const IsoClassId&, const IsoClassId&) = default;
};

/// Set of class ids backed by a bitmap; iteration is in increasing id order.
class ClassSet {
 public:
  ClassSet() = default;
  ClassSet(std::initializer_list<IsoClassId> ids) {
    for (auto id : ids) insert(id);
  }
  explicit ClassSet(const std::vector<IsoClassId>& ids) {
    for (auto id : ids) insert(id);
  }

  bool contains(IsoClassId id) const noexcept {
    const auto w = id.value / 64;
    return w < words_.size() && ((words_[w] >> (id.value % 64)) & 1u);
  }
  void insert(IsoClassId id) {
    const auto w = id.value / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (id.value % 64);
  }
  void erase(IsoClassId id) {
    const auto w = id.value / 64;
    if (w < words_.size()) words_[w] &= ~(std::uint64_t{1} << (id.value % 64));
    trim();
  }
  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
  }
  bool empty() const noexcept { return words_.empty(); }

  bool is_subset_of(const ClassSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const auto o = i < other.words_.size() ? other.words_[i] : 0;
      if (words_[i] & ~o) return false;
    }
    return true;
  }

  std::vector<IsoClassId> ids() const {
    std::vector<IsoClassId> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::uint32_t b = 0; b < 64; ++b) {
        if ((words_[i] >> b) & 1u) out.push_back({static_cast<std::uint32_t>(i * 64 + b)});
      }
    }
    return out;
  }

  /// Ordered by size first, then lexicographically by sorted ids.
  friend bool operator<(const ClassSet& a, const ClassSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.ids() < b.ids();
  }
  friend bool operator==(const ClassSet& a, const ClassSet& b) noexcept { return a.words_ == b.words_; }

 private:
  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  std::vector<std::uint64_t> words_;
};

}  // namespace semibrick
