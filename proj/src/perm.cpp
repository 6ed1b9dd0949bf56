#include "hnp/perm.hpp"

#include <algorithm>
#include <numeric>

namespace hnp {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) throw PreconditionError("image table is not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<Point> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), Point{0});
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  const std::size_t n = images_.size();
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = rhs.images_[images_[i]];
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<Point> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) img[images_[i]] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

int Permutation::order() const {
  const std::size_t n = images_.size();
  std::vector<bool> seen(n, false);
  long long ord = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    long long len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = images_[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return static_cast<int>(ord);
}

std::string Permutation::cycle_string() const {
  const std::size_t n = images_.size();
  std::vector<bool> seen(n, false);
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i] || images_[i] == i) continue;
    out.push_back('(');
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out.push_back(',');
      out += std::to_string(j + 1);
      first = false;
      j = images_[j];
    }
    out.push_back(')');
  }
  if (out.empty()) out = "()";
  return out;
}

std::size_t PermHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image words
  std::size_t h = 1469598103934665603ull;
  for (Point v : p.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

Permutation parse_permutation(std::string_view text, int degree) {
  if (degree < 0) throw PreconditionError("negative degree");
  Permutation result = Permutation::identity(degree);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<long> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!cycle.empty()) {
        if (text[i] != ',') throw ParseError("expected ',' between cycle points");
        ++i;
        skip_ws();
      }
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (i == start) throw ParseError("expected a point in cycle");
      long pt = std::stol(std::string(text.substr(start, i - start)));
      if (pt < 1 || pt > degree) throw ParseError("point " + std::to_string(pt) + " outside 1.." + std::to_string(degree));
      for (long q : cycle)
        if (q == pt) throw ParseError("repeated point " + std::to_string(pt) + " within one cycle");
      cycle.push_back(pt);
      skip_ws();
    }
    if (i >= text.size()) throw ParseError("unterminated cycle");
    ++i;  // ')'
    skip_ws();
    any = true;
    if (cycle.size() == 1) throw ParseError("cycle of length 1");
    if (!cycle.empty()) {
      std::vector<Point> img(static_cast<std::size_t>(degree));
      std::iota(img.begin(), img.end(), Point{0});
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        Point from = static_cast<Point>(cycle[k] - 1);
        Point to = static_cast<Point>(cycle[(k + 1) % cycle.size()] - 1);
        img[from] = to;
      }
      result = result * Permutation(std::move(img));
    }
  }
  if (!any) throw ParseError("empty permutation text");
  return result;
}

}  // namespace hnp
