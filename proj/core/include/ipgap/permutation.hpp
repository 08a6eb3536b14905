#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ipgap {

/// Element of S_n in one-line notation (images of 1..n). Products compose
/// right to left: (a * b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws unless `images` is a bijection of 1..n.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);
  /// Inverse of rank(): lexicographic index in 0..n!-1.
  static Permutation unrank(int n, std::int64_t rank);
  /// Accepts cycle notation "(14)(23)", "(1,4)" or a one-line list
  /// "[2,1,3,4]". Within parentheses without separators each digit is a
  /// point, which limits that form to n <= 9.
  static Permutation parse(std::string_view text, int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x - 1]; }
  const std::vector<int>& images() const { return images_; }

  /// Lexicographic rank via the factorial number system.
  std::int64_t rank() const;
  Permutation inverse() const;
  /// (i j) * this: swaps the values i and j in the one-line word.
  Permutation left_transpose(int i, int j) const;
  /// Adjacent transpositions s_1..s_m (s_k = (k,k+1)), listed so that
  /// this == s_1 * s_2 * ... * s_m. Deterministic (bubble sort).
  std::vector<int> adjacent_factors() const;
  std::string to_string() const;  // one-line, "[2,1,3]"

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

std::int64_t factorial(int n);

/// All permutations of 1..n in rank order.
std::vector<Permutation> all_permutations(int n);

}  // namespace ipgap
