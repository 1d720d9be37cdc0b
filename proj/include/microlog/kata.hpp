#ifndef MICROLOG_KATA_HPP
#define MICROLOG_KATA_HPP

#include <concepts>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

// Warm-up exercises: small recursive functions and the laws they satisfy.
namespace microlog::kata {

using Nat = std::uint64_t;

constexpr Nat succ(Nat n) {
  if (n == std::numeric_limits<Nat>::max()) throw std::overflow_error("successor overflow");
  return n + 1;
}

// Structural recursion on n using only zero and successor; triple(n) == 3 * n.
constexpr Nat triple(Nat n) {
  if (n == 0) return 0;
  return succ(succ(succ(triple(n - 1))));
}

namespace detail {
template <std::signed_integral Int>
Int checked_add(Int x, Int y) {
  Int out{};
  if (__builtin_add_overflow(x, y, &out)) throw std::overflow_error("integer overflow");
  return out;
}

template <std::signed_integral Int>
void shift_from(std::span<const Int> xs, Int delta, std::vector<Int>& out) {
  if (xs.empty()) return;
  out.push_back(checked_add(xs.front(), delta));
  shift_from(xs.subspan(1), delta, out);
}
}  // namespace detail

// Element-wise +42 and -42. Overflow throws instead of wrapping, so
// sub42(add42(xs)) == xs whenever add42(xs) returns.
template <std::signed_integral Int>
std::vector<Int> add42(std::span<const Int> xs) {
  std::vector<Int> out;
  out.reserve(xs.size());
  detail::shift_from(xs, Int{42}, out);
  return out;
}

template <std::signed_integral Int>
std::vector<Int> sub42(std::span<const Int> xs) {
  std::vector<Int> out;
  out.reserve(xs.size());
  detail::shift_from(xs, Int{-42}, out);
  return out;
}

inline std::vector<std::int64_t> add42(const std::vector<std::int64_t>& xs) {
  return add42(std::span<const std::int64_t>(xs));
}
inline std::vector<std::int64_t> sub42(const std::vector<std::int64_t>& xs) {
  return sub42(std::span<const std::int64_t>(xs));
}

}  // namespace microlog::kata

#endif  // MICROLOG_KATA_HPP
