#ifndef CHAINSYM_PERMUTATION_HPP
#define CHAINSYM_PERMUTATION_HPP

#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace chainsym {

/// A permutation of {0, ..., m-1}, stored as its image array.
///
/// Composition follows function notation: (a * b)(x) = a(b(x)).
class Permutation
{
public:
  Permutation() = default;

  /// Validates that `images` is a bijection on [0, m).
  explicit Permutation(std::vector<int> images)
  : _images(std::move(images))
  {
    std::vector<char> seen(_images.size(), 0);
    for (int x : _images) {
      if (x < 0 || x >= static_cast<int>(_images.size()) || seen[x])
        throw PermutationError("image array is not a bijection on [0, " +
                               std::to_string(_images.size()) + ")");
      seen[x] = 1;
    }
  }

  static Permutation identity(int degree)
  {
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 0);
    Permutation p;
    p._images = std::move(im);
    return p;
  }

  int degree() const noexcept
  { return static_cast<int>(_images.size()); }

  int operator()(int x) const
  { return _images[x]; }

  const std::vector<int> &images() const noexcept
  { return _images; }

  bool is_identity() const
  {
    for (int i = 0; i < degree(); ++i)
      if (_images[i] != i)
        return false;
    return true;
  }

  Permutation inverse() const
  {
    Permutation p;
    p._images.resize(_images.size());
    for (int i = 0; i < degree(); ++i)
      p._images[_images[i]] = i;
    return p;
  }

  friend Permutation operator*(const Permutation &a, const Permutation &b)
  {
    if (a.degree() != b.degree())
      throw PermutationError("cannot compose permutations of degree " +
                             std::to_string(a.degree()) + " and " +
                             std::to_string(b.degree()));
    Permutation p;
    p._images.resize(a._images.size());
    for (int i = 0; i < a.degree(); ++i)
      p._images[i] = a._images[b._images[i]];
    return p;
  }

  /// Smallest k >= 1 with p^k = id.
  long order() const
  {
    long result = 1;
    std::vector<char> visited(_images.size(), 0);
    for (int i = 0; i < degree(); ++i) {
      if (visited[i])
        continue;
      long len = 0;
      for (int j = i; !visited[j]; j = _images[j]) {
        visited[j] = 1;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  /// 1-based image list, the I/O convention.
  std::vector<int> labels() const
  {
    std::vector<int> out(_images);
    for (int &x : out)
      ++x;
    return out;
  }

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<int> _images;
};

struct PermutationHash
{
  std::size_t operator()(const Permutation &p) const noexcept
  {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.images()) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace chainsym

#endif // CHAINSYM_PERMUTATION_HPP
