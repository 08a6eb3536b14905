#pragma once

// Partitions, Young diagrams and standard Young tableaux.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ipgap {

class Partition {
 public:
  Partition() = default;
  /// Parts must be positive and weakly decreasing; throws otherwise.
  explicit Partition(std::vector<int> parts);

  /// Parses "4,3^2,1" style text. Trailing zeros are dropped.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  /// Row length, 0-based row index; 0 beyond the last row.
  int row(int r) const { return r < rows() ? parts_[r] : 0; }

  Partition conjugate() const;
  /// "(3,1^2)" style, matching the exponent notation used for input.
  std::string to_string() const;
  /// Plain comma list, e.g. "3,1,1".
  std::string to_csv() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ...
std::vector<Partition> enumerate_partitions(int n);

struct Box {
  int row = 0;  // 0-based
  int col = 0;
  int content() const { return col - row; }
  friend bool operator==(const Box&, const Box&) = default;
};

class StandardTableau {
 public:
  StandardTableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }

  /// Box holding value i (1-based value).
  Box box_of(int i) const;
  /// Row-major reading word, top row first.
  std::vector<int> reading_word() const;
  /// Tableau with i and i+1 swapped; only valid if the result is standard.
  StandardTableau swapped(int i) const;
  /// Tableau of shape lambda minus the box holding n.
  StandardTableau without_largest() const;
  std::string to_string() const;  // "1 2 4/3"

  /// Dictionary order on reading words.
  friend std::strong_ordering operator<=>(const StandardTableau& a, const StandardTableau& b);
  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.rows_ == b.rows_;
  }

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<Box> position_;  // position_[i-1]
};

/// All SYT of the shape, in dictionary order. Cached per shape.
const std::vector<StandardTableau>& enumerate_syt(const Partition& shape);

/// Number of SYT (hook length formula, cross-checked in tests against
/// enumeration).
std::int64_t f_dim(const Partition& shape);

/// c^t_i, the content of the box containing i.
int content(const StandardTableau& t, int i);

/// Sum of all box contents; independent of the filling.
int content_sum(const Partition& shape);

/// Partitions obtained by removing one corner box, ordered by the row of
/// the removed box (top first).
std::vector<Partition> covers_below(const Partition& shape);

/// Corner boxes (removable), top row first.
std::vector<Box> removable_corners(const Partition& shape);

/// Largest content among removable corners.
int max_corner_content(const Partition& shape);

}  // namespace ipgap
