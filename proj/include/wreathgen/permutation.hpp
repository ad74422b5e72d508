#ifndef WREATHGEN_PERMUTATION_HPP
#define WREATHGEN_PERMUTATION_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace wreathgen
{

/// Exact nonnegative integer for group orders and indices.
using BigCount = boost::multiprecision::cpp_int;

using Point = std::uint32_t;

/**
 * A bijection of {0, ..., m-1}. Points are 0-based here and 1-based in all
 * text I/O. Products apply left to right: (p * q)(x) = q(p(x)).
 */
class Permutation
{
public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree) : _images(degree)
  {
    std::iota(_images.begin(), _images.end(), Point{0});
  }

  /// Takes ownership of an image array; throws if it is not a bijection.
  explicit Permutation(std::vector<Point> images) : _images(std::move(images))
  {
    std::vector<bool> seen(_images.size(), false);
    for (Point x : _images) {
      if (x >= _images.size() || seen[x])
        throw precondition_error("image array is not a bijection");
      seen[x] = true;
    }
  }

  Permutation(std::initializer_list<Point> images)
    : Permutation(std::vector<Point>(images))
  {}

  std::size_t degree() const { return _images.size(); }
  Point operator[](Point x) const { return _images[x]; }
  std::span<Point const> images() const { return _images; }

  bool is_identity() const
  {
    for (std::size_t i = 0; i < _images.size(); ++i)
      if (_images[i] != i)
        return false;
    return true;
  }

  /// Smallest point not fixed, or degree() for the identity.
  Point smallest_moved_point() const
  {
    for (std::size_t i = 0; i < _images.size(); ++i)
      if (_images[i] != i)
        return static_cast<Point>(i);
    return static_cast<Point>(_images.size());
  }

  Permutation inverse() const
  {
    Permutation res;
    res._images.resize(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i)
      res._images[_images[i]] = static_cast<Point>(i);
    return res;
  }

  Permutation operator*(Permutation const &rhs) const
  {
    if (degree() != rhs.degree())
      throw degree_mismatch("cannot compose permutations of degree " +
                            std::to_string(degree()) + " and " +
                            std::to_string(rhs.degree()));
    Permutation res;
    res._images.resize(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i)
      res._images[i] = rhs._images[_images[i]];
    return res;
  }

  Permutation &operator*=(Permutation const &rhs) { return *this = *this * rhs; }

  Permutation pow(long long e) const
  {
    Permutation base = e < 0 ? inverse() : *this;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e)
                                 : static_cast<unsigned long long>(e);
    Permutation res(degree());
    while (n) {
      if (n & 1u)
        res *= base;
      base *= base;
      n >>= 1u;
    }
    return res;
  }

  /// x^y = y^-1 x y
  Permutation conjugate(Permutation const &by) const
  {
    return by.inverse() * *this * by;
  }

  /// Element order (lcm of cycle lengths).
  BigCount order() const
  {
    BigCount res = 1;
    std::vector<bool> seen(degree(), false);
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i])
        continue;
      std::size_t len = 0;
      for (Point x = static_cast<Point>(i); !seen[x]; x = _images[x]) {
        seen[x] = true;
        ++len;
      }
      res = boost::multiprecision::lcm(res, BigCount(len));
    }
    return res;
  }

  bool is_even() const
  {
    std::size_t transpositions = 0;
    std::vector<bool> seen(degree(), false);
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i])
        continue;
      std::size_t len = 0;
      for (Point x = static_cast<Point>(i); !seen[x]; x = _images[x]) {
        seen[x] = true;
        ++len;
      }
      transpositions += len - 1;
    }
    return transpositions % 2 == 0;
  }

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  std::vector<Point> _images;
};

/// a * b in the left-to-right convention.
inline Permutation compose(Permutation const &p, Permutation const &q)
{
  return p * q;
}

/// [x, y] = x^-1 y^-1 x y
inline Permutation commutator(Permutation const &x, Permutation const &y)
{
  return x.inverse() * y.inverse() * x * y;
}

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const noexcept
  {
    // FNV-1a over the image array
    std::uint64_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Permutation from a list of 1-based disjoint cycles.
inline Permutation from_cycles(std::size_t degree,
                               std::vector<std::vector<Point>> const &cycles)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (auto const &cycle : cycles) {
    for (Point x : cycle) {
      if (x < 1 || x > degree)
        throw parse_error("point " + std::to_string(x) + " out of range 1.." +
                          std::to_string(degree));
      if (used[x - 1])
        throw parse_error("repeated point " + std::to_string(x));
      used[x - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
  }
  return Permutation(std::move(images));
}

/**
 * Parses disjoint cycle notation with 1-based points, e.g. "(1 2 3)(4 5)".
 * Whitespace is allowed anywhere between tokens; "id" and "()" denote the
 * identity. The degree is always supplied by the caller.
 */
inline Permutation parse_cycles(std::string_view text, std::size_t degree)
{
  auto skip_ws = [&](std::size_t pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    return pos;
  };

  std::size_t pos = skip_ws(0);
  std::size_t end = text.size();
  while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;
  if (text.substr(pos, end - pos) == "id")
    return Permutation(degree);

  std::vector<std::vector<Point>> cycles;
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw parse_error("expected '(' at offset " + std::to_string(pos) +
                        " in \"" + std::string(text) + "\"");
    pos = skip_ws(pos + 1);
    std::vector<Point> cycle;
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw parse_error("unexpected character '" + std::string(1, text[pos]) +
                          "' at offset " + std::to_string(pos));
      unsigned long long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<unsigned>(text[pos] - '0');
        if (value > degree)
          throw parse_error("point out of range 1.." + std::to_string(degree) +
                            " at offset " + std::to_string(pos));
        ++pos;
      }
      if (pos < text.size() && text[pos] != ')' &&
          !std::isspace(static_cast<unsigned char>(text[pos])))
        throw parse_error("unexpected character '" + std::string(1, text[pos]) +
                          "' at offset " + std::to_string(pos));
      cycle.push_back(static_cast<Point>(value));
      pos = skip_ws(pos);
    }
    if (pos >= text.size())
      throw parse_error("unterminated cycle in \"" + std::string(text) + "\"");
    cycles.push_back(std::move(cycle));
    pos = skip_ws(pos + 1);
  }
  return from_cycles(degree, cycles);
}

/**
 * Canonical 1-based cycle notation: fixed points omitted, each cycle
 * rotated to start at its minimum, cycles ordered by that minimum.
 * The identity prints as "()".
 */
inline std::string format_cycles(Permutation const &p)
{
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i)
      continue;
    out += '(';
    for (Point x = i; !seen[x]; x = p[x]) {
      seen[x] = true;
      if (x != i)
        out += ' ';
      out += std::to_string(x + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

} // namespace wreathgen

#endif // WREATHGEN_PERMUTATION_HPP
