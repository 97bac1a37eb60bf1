#pragma once

#include <cstddef>
#include <iterator>
#include <optional>
#include <utility>
#include <vector>

namespace wreath {

/// Wraps a cursor exposing `std::optional<value_type> next()` as an input
/// range, so enumerators work both with range-for and with explicit pulls.
template <class Cursor>
class Stream {
public:
  using value_type = typename Cursor::value_type;

  explicit Stream(Cursor cursor) : cursor_(std::move(cursor)) {}

  std::optional<value_type> next() { return cursor_.next(); }

  class iterator {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = typename Cursor::value_type;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(Stream* s) : stream_(s) { advance(); }

    const value_type& operator*() const { return *current_; }
    const value_type* operator->() const { return &*current_; }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return !it.current_; }

  private:
    void advance() { current_ = stream_->next(); }
    Stream* stream_ = nullptr;
    std::optional<value_type> current_;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() { return {}; }

  std::vector<value_type> collect() {
    std::vector<value_type> out;
    while (auto v = next()) out.push_back(std::move(*v));
    return out;
  }

  std::size_t count() {
    std::size_t c = 0;
    while (next()) ++c;
    return c;
  }

private:
  Cursor cursor_;
};

}  // namespace wreath
