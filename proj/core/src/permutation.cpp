#include "ipgap/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace ipgap {

std::int64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("factorial argument out of range");
  std::int64_t out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 1 || x > size() || seen[x - 1])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[x - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw std::invalid_argument("invalid transposition");
  Permutation p = identity(n);
  std::swap(p.images_[i - 1], p.images_[j - 1]);
  return p;
}

Permutation Permutation::unrank(int n, std::int64_t rank) {
  if (rank < 0 || rank >= factorial(n)) throw std::out_of_range("permutation rank out of range");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> images;
  images.reserve(n);
  for (int k = n; k >= 1; --k) {
    const std::int64_t block = factorial(k - 1);
    const auto digit = static_cast<std::size_t>(rank / block);
    rank %= block;
    images.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Permutation(std::move(images));
}

std::int64_t Permutation::rank() const {
  const int n = size();
  std::int64_t out = 0;
  for (int k = 0; k < n; ++k) {
    int smaller = 0;
    for (int m = k + 1; m < n; ++m)
      if (images_[m] < images_[k]) ++smaller;
    out += smaller * factorial(n - 1 - k);
  }
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int x = 1; x <= size(); ++x) inv[images_[x - 1] - 1] = x;
  return Permutation(std::move(inv));
}

Permutation Permutation::left_transpose(int i, int j) const {
  Permutation out = *this;
  for (int& x : out.images_) {
    if (x == i) x = j;
    else if (x == j) x = i;
  }
  return out;
}

std::vector<int> Permutation::adjacent_factors() const {
  // Bubble-sorting the word: each swap at position k is a right
  // multiplication by s_k. Sorting w = this to the identity with swaps
  // s_{a_1}, ..., s_{a_m} gives this * s_{a_1} * ... * s_{a_m} = e, so
  // this = s_{a_m} * ... * s_{a_1}.
  std::vector<int> word = images_;
  std::vector<int> swaps;
  const int n = size();
  for (int pass = 0; pass < n; ++pass) {
    for (int k = 0; k + 1 < n - pass; ++k) {
      if (word[k] > word[k + 1]) {
        std::swap(word[k], word[k + 1]);
        swaps.push_back(k + 1);
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (int k = 0; k < size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(images_[k]);
  }
  return out + "]";
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> images(a.size());
  for (int x = 1; x <= a.size(); ++x) images[x - 1] = a(b(x));
  return Permutation(std::move(images));
}

namespace {

std::vector<int> parse_points(std::string_view body, bool allow_digit_run) {
  std::vector<int> points;
  const bool separated = body.find_first_of(", ") != std::string_view::npos;
  if (!separated && allow_digit_run) {
    for (char ch : body) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("bad character in permutation");
      points.push_back(ch - '0');
    }
    return points;
  }
  std::size_t pos = 0;
  while (pos < body.size()) {
    while (pos < body.size() && (body[pos] == ',' || body[pos] == ' ')) ++pos;
    std::size_t end = pos;
    while (end < body.size() && std::isdigit(static_cast<unsigned char>(body[end]))) ++end;
    if (end == pos) {
      if (pos < body.size()) throw std::invalid_argument("bad character in permutation");
      break;
    }
    points.push_back(std::stoi(std::string(body.substr(pos, end - pos))));
    pos = end;
  }
  return points;
}

}  // namespace

Permutation Permutation::parse(std::string_view text, int n) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty() || text == "()" || text == "e") return identity(n);

  if (text.front() == '[') {
    if (text.back() != ']') throw std::invalid_argument("unterminated one-line permutation");
    Permutation p(parse_points(text.substr(1, text.size() - 2), false));
    if (p.size() != n) throw std::invalid_argument("permutation size does not match n");
    return p;
  }

  // Product of cycles, composed right to left.
  Permutation result = identity(n);
  std::vector<Permutation> cycles;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw std::invalid_argument("unterminated cycle");
    const auto points = parse_points(text.substr(pos + 1, close - pos - 1), true);
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    std::vector<bool> used(n + 1, false);
    for (std::size_t k = 0; k < points.size(); ++k) {
      const int x = points[k];
      if (x < 1 || x > n || used[x]) throw std::invalid_argument("invalid point in cycle");
      used[x] = true;
      images[x - 1] = points[(k + 1) % points.size()];
    }
    cycles.emplace_back(std::move(images));
    pos = close + 1;
  }
  for (const auto& c : cycles) result = result * c;
  return result;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  do {
    out.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

}  // namespace ipgap
