#include "ipgap/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace ipgap {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t r = 0; r < parts_.size(); ++r) {
    if (parts_[r] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (r > 0 && parts_[r] > parts_[r - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

namespace {

int parse_int(std::string_view token) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
    throw std::invalid_argument("bad integer in partition: '" + std::string(token) + "'");
  return value;
}

}  // namespace

Partition Partition::parse(std::string_view text) {
  while (!text.empty() && (text.front() == '(' || text.front() == ' ')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ')' || text.back() == ' ')) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty partition");

  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view token = text.substr(pos, comma - pos);
    const std::size_t caret = token.find('^');
    const int part = parse_int(token.substr(0, caret));
    const int repeat = caret == std::string_view::npos ? 1 : parse_int(token.substr(caret + 1));
    if (repeat < 0) throw std::invalid_argument("negative exponent in partition");
    parts.insert(parts.end(), repeat, part);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> out(parts_.empty() ? 0 : parts_[0], 0);
  for (int len : parts_)
    for (int c = 0; c < len; ++c) ++out[c];
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t r = 0; r < parts_.size();) {
    std::size_t run = r;
    while (run < parts_.size() && parts_[run] == parts_[r]) ++run;
    if (r > 0) os << ',';
    os << parts_[r];
    if (run - r > 1) os << '^' << (run - r);
    r = run;
  }
  os << ')';
  return os.str();
}

std::string Partition::to_csv() const {
  std::string out;
  for (std::size_t r = 0; r < parts_.size(); ++r) {
    if (r > 0) out += ',';
    out += std::to_string(parts_[r]);
  }
  return out;
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_partitions needs n >= 1");
  std::vector<Partition> out;
  std::vector<int> current;
  // Largest first part first, recursing with a cap: reverse lexicographic.
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// ---------------------------------------------------------------------------
// Tableaux

StandardTableau::StandardTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  const int n = shape_.size();
  if (static_cast<int>(rows_.size()) != shape_.rows())
    throw std::invalid_argument("tableau rows do not match shape");
  position_.assign(n, Box{-1, -1});
  for (int r = 0; r < shape_.rows(); ++r) {
    if (static_cast<int>(rows_[r].size()) != shape_.row(r))
      throw std::invalid_argument("tableau row length does not match shape");
    for (int c = 0; c < shape_.row(r); ++c) {
      const int v = rows_[r][c];
      if (v < 1 || v > n || position_[v - 1].row >= 0)
        throw std::invalid_argument("tableau must use each of 1..n exactly once");
      position_[v - 1] = {r, c};
      if (c > 0 && rows_[r][c - 1] >= v) throw std::invalid_argument("tableau rows must increase");
      if (r > 0 && rows_[r - 1][c] >= v)
        throw std::invalid_argument("tableau columns must increase");
    }
  }
}

Box StandardTableau::box_of(int i) const {
  if (i < 1 || i > size()) throw std::out_of_range("tableau entry out of range");
  return position_[i - 1];
}

std::vector<int> StandardTableau::reading_word() const {
  std::vector<int> word;
  word.reserve(size());
  for (const auto& row : rows_) word.insert(word.end(), row.begin(), row.end());
  return word;
}

StandardTableau StandardTableau::swapped(int i) const {
  auto rows = rows_;
  const Box a = box_of(i), b = box_of(i + 1);
  std::swap(rows[a.row][a.col], rows[b.row][b.col]);
  return StandardTableau(shape_, std::move(rows));
}

StandardTableau StandardTableau::without_largest() const {
  const Box last = box_of(size());
  auto parts = shape_.parts();
  auto rows = rows_;
  --parts[last.row];
  rows[last.row].pop_back();
  if (rows.back().empty()) rows.pop_back();
  return StandardTableau(Partition(std::move(parts)), std::move(rows));
}

std::string StandardTableau::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r > 0) out += '/';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c > 0) out += ' ';
      out += std::to_string(rows_[r][c]);
    }
  }
  return out;
}

std::strong_ordering operator<=>(const StandardTableau& a, const StandardTableau& b) {
  return a.reading_word() <=> b.reading_word();
}

namespace {

std::vector<StandardTableau> build_syt(const Partition& shape) {
  const int n = shape.size();
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> rows(shape.rows());
  auto rec = [&](auto&& self, int value) -> void {
    if (value > n) {
      out.emplace_back(shape, rows);
      return;
    }
    for (int r = 0; r < shape.rows(); ++r) {
      const int len = static_cast<int>(rows[r].size());
      if (len < shape.row(r) && (r == 0 || static_cast<int>(rows[r - 1].size()) > len)) {
        rows[r].push_back(value);
        self(self, value + 1);
        rows[r].pop_back();
      }
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

const std::vector<StandardTableau>& enumerate_syt(const Partition& shape) {
  static std::shared_mutex mutex;
  static std::map<Partition, std::vector<StandardTableau>> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(shape); it != cache.end()) return it->second;
  }
  auto built = build_syt(shape);
  std::unique_lock lock(mutex);
  // std::map never invalidates references on insertion.
  return cache.try_emplace(shape, std::move(built)).first->second;
}

std::int64_t f_dim(const Partition& shape) {
  // Hook length formula. long double is exact here for n up to about 20.
  const Partition conj = shape.conjugate();
  std::vector<std::int64_t> hooks;
  for (int r = 0; r < shape.rows(); ++r)
    for (int c = 0; c < shape.row(r); ++c)
      hooks.push_back((shape.row(r) - c - 1) + (conj.row(c) - r - 1) + 1);
  long double value = 1.0L;
  for (int k = 1; k <= shape.size(); ++k) value *= k;
  for (auto h : hooks) value /= static_cast<long double>(h);
  return static_cast<std::int64_t>(value + 0.5L);
}

int content(const StandardTableau& t, int i) { return t.box_of(i).content(); }

int content_sum(const Partition& shape) {
  int total = 0;
  for (int r = 0; r < shape.rows(); ++r) {
    const int len = shape.row(r);
    total += len * (len - 1) / 2 - r * len;
  }
  return total;
}

std::vector<Box> removable_corners(const Partition& shape) {
  std::vector<Box> out;
  for (int r = 0; r < shape.rows(); ++r)
    if (shape.row(r) > shape.row(r + 1)) out.push_back({r, shape.row(r) - 1});
  return out;
}

std::vector<Partition> covers_below(const Partition& shape) {
  std::vector<Partition> out;
  for (const Box& corner : removable_corners(shape)) {
    auto parts = shape.parts();
    --parts[corner.row];
    out.emplace_back(std::move(parts));
  }
  return out;
}

int max_corner_content(const Partition& shape) {
  const auto corners = removable_corners(shape);
  if (corners.empty()) throw std::invalid_argument("empty partition has no corners");
  int best = corners.front().content();
  for (const Box& b : corners) best = std::max(best, b.content());
  return best;
}

}  // namespace ipgap
