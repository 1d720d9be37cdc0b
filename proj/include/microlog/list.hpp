#ifndef MICROLOG_LIST_HPP
#define MICROLOG_LIST_HPP

#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <memory>
#include <utility>
#include <vector>

namespace microlog {

// Immutable singly-linked list with structural sharing. Cons and tail are
// O(1), so every prover step shares the unchanged suffix of its parent
// state, the same way the functional original behaves.
template <typename T>
class List {
  struct Cell {
    T head;
    std::shared_ptr<Cell> tail;
  };

 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = T;
    using difference_type = std::ptrdiff_t;
    using pointer = const T*;
    using reference = const T&;

    const_iterator() = default;
    reference operator*() const { return cell_->head; }
    pointer operator->() const { return &cell_->head; }
    const_iterator& operator++() {
      cell_ = cell_->tail.get();
      return *this;
    }
    const_iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const const_iterator&, const const_iterator&) = default;

   private:
    friend class List;
    explicit const_iterator(const Cell* cell) : cell_(cell) {}
    const Cell* cell_ = nullptr;
  };

  using value_type = T;
  using iterator = const_iterator;

  List() = default;

  List(std::initializer_list<T> items) {
    for (auto it = std::rbegin(items); it != std::rend(items); ++it)
      cell_ = std::make_shared<Cell>(Cell{*it, std::move(cell_)});
  }

  template <typename Range>
  static List from_range(const Range& items) {
    std::vector<T> buffer(std::begin(items), std::end(items));
    List out;
    for (auto it = buffer.rbegin(); it != buffer.rend(); ++it)
      out = cons(std::move(*it), std::move(out));
    return out;
  }

  List(const List&) = default;
  List(List&& other) noexcept : cell_(std::move(other.cell_)) {}
  List& operator=(List other) noexcept {
    std::swap(cell_, other.cell_);
    return *this;
  }

  // Unlink uniquely owned cells one at a time; the default destructor would
  // recurse once per cell.
  ~List() {
    auto cell = std::move(cell_);
    while (cell && cell.use_count() == 1) {
      auto next = std::move(cell->tail);
      cell = std::move(next);
    }
  }

  friend List cons(T head, List tail) {
    List out;
    out.cell_ = std::make_shared<Cell>(Cell{std::move(head), std::move(tail.cell_)});
    return out;
  }

  bool empty() const noexcept { return cell_ == nullptr; }

  // Precondition: !empty().
  const T& head() const { return cell_->head; }
  List tail() const {
    List out;
    out.cell_ = cell_->tail;
    return out;
  }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (const Cell* c = cell_.get(); c != nullptr; c = c->tail.get()) ++n;
    return n;
  }

  const_iterator begin() const noexcept { return const_iterator(cell_.get()); }
  const_iterator end() const noexcept { return const_iterator(); }

  std::vector<T> to_vector() const { return std::vector<T>(begin(), end()); }

  friend bool operator==(const List& lhs, const List& rhs) {
    const Cell* x = lhs.cell_.get();
    const Cell* y = rhs.cell_.get();
    while (x != nullptr && y != nullptr) {
      if (x == y) return true;
      if (!(x->head == y->head)) return false;
      x = x->tail.get();
      y = y->tail.get();
    }
    return x == y;
  }

 private:
  std::shared_ptr<Cell> cell_;
};

}  // namespace microlog

#endif  // MICROLOG_LIST_HPP
