#include "fprlab/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace fprlab {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point a : images_) {
    if (a >= images_.size() || seen[a]) throw InvalidArgument("image sequence is not a bijection");
    seen[a] = true;
  }
}

Permutation Permutation::from_cycle_list(std::size_t degree,
                                         const std::vector<std::vector<Point>>& cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point a = cycle[i];
      if (a >= degree) throw InvalidArgument("cycle point " + std::to_string(a + 1) + " exceeds degree");
      if (used[a]) throw InvalidArgument("point " + std::to_string(a + 1) + " repeated in cycles");
      used[a] = true;
      p.images_[a] = cycle[(i + 1) % cycle.size()];
    }
  }
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree, std::string_view text) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation", i);
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation", i);
    ++i;
    std::vector<Point> cycle;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;
      continue;
    }
    while (true) {
      skip_ws();
      std::size_t start = i;
      unsigned long long value = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        value = value * 10 + static_cast<unsigned>(text[i] - '0');
        if (value > (1ull << 31)) throw ParseError("point too large", start);
        ++i;
      }
      if (start == i) throw ParseError("expected a point number", i);
      if (value == 0 || value > degree)
        throw ParseError("point " + std::to_string(value) + " outside 1.." + std::to_string(degree), start);
      cycle.push_back(static_cast<Point>(value - 1));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      throw ParseError("expected ',' or ')' in cycle", i);
    }
    cycles.push_back(std::move(cycle));
  }
  try {
    return from_cycle_list(degree, cycles);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), 0);
  }
}

bool Permutation::is_identity() const {
  for (std::size_t a = 0; a < images_.size(); ++a)
    if (images_[a] != a) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t a = 0; a < images_.size(); ++a) r.images_[images_[a]] = static_cast<Point>(a);
  return r;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DegreeMismatch("cannot compose permutations of different degrees");
  Permutation r;
  r.images_.resize(p.degree());
  for (std::size_t a = 0; a < p.degree(); ++a) r.images_[a] = q.images_[p.images_[a]];
  return r;
}

Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }

Permutation Permutation::pow(long long exponent) const {
  const std::uint64_t ord = order();
  long long e = exponent % static_cast<long long>(ord);
  if (e < 0) e += static_cast<long long>(ord);
  // Raise each cycle independently: a^(p^e) walks e steps along its cycle.
  Permutation r(degree());
  std::vector<bool> done(degree(), false);
  std::vector<Point> cycle;
  for (Point a = 0; a < degree(); ++a) {
    if (done[a]) continue;
    cycle.clear();
    for (Point b = a; !done[b]; b = images_[b]) {
      done[b] = true;
      cycle.push_back(b);
    }
    const std::size_t len = cycle.size();
    const std::size_t shift = static_cast<std::size_t>(e) % len;
    for (std::size_t i = 0; i < len; ++i) r.images_[cycle[i]] = cycle[(i + shift) % len];
  }
  return r;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (std::size_t len : cycle_type()) {
    result = std::lcm(result, static_cast<std::uint64_t>(len));
  }
  return result;
}

std::size_t Permutation::num_fixed_points() const {
  std::size_t count = 0;
  for (std::size_t a = 0; a < images_.size(); ++a)
    if (images_[a] == a) ++count;
  return count;
}

std::size_t Permutation::num_cycles() const {
  std::vector<bool> done(degree(), false);
  std::size_t count = 0;
  for (Point a = 0; a < degree(); ++a) {
    if (done[a]) continue;
    ++count;
    for (Point b = a; !done[b]; b = images_[b]) done[b] = true;
  }
  return count;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<bool> done(degree(), false);
  std::vector<std::size_t> lengths;
  for (Point a = 0; a < degree(); ++a) {
    if (done[a]) continue;
    std::size_t len = 0;
    for (Point b = a; !done[b]; b = images_[b]) {
      done[b] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<bool> done(degree(), false);
  std::vector<std::vector<Point>> result;
  for (Point a = 0; a < degree(); ++a) {
    if (done[a] || images_[a] == a) continue;
    std::vector<Point> cycle;
    for (Point b = a; !done[b]; b = images_[b]) {
      done[b] = true;
      cycle.push_back(b);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& cycle : cs) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(cycle[i] + 1);
    }
    out += ')';
  }
  return out;
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  if (g.degree() != degree()) throw DegreeMismatch("conjugating permutation has wrong degree");
  // (a^g)^(g^-1 x g) = (a^x)^g
  Permutation r;
  r.images_.resize(degree());
  for (std::size_t a = 0; a < degree(); ++a) r.images_[g.images_[a]] = g.images_[images_[a]];
  return r;
}

std::size_t Permutation::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (Point a : images_) {
    h ^= a;
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h);
}

std::vector<Point> fixed_points(const Permutation& p) {
  std::vector<Point> result;
  for (Point a = 0; a < p.degree(); ++a)
    if (p.image(a) == a) result.push_back(a);
  return result;
}

std::vector<Permutation> parse_permutation_list(std::size_t degree, std::string_view text) {
  std::vector<Permutation> result;
  std::size_t depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const bool end = i == text.size();
    const char c = end ? ',' : text[i];
    if (c == '(') ++depth;
    if (c == ')') {
      if (depth == 0) throw ParseError("unbalanced ')'", i);
      --depth;
    }
    if (c == ',' && depth == 0) {
      std::string_view piece = text.substr(start, i - start);
      try {
        result.push_back(Permutation::from_cycles(degree, piece));
      } catch (const ParseError& e) {
        throw ParseError(std::string("in generator list: ") + e.what(), start);
      }
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced '('", text.size());
  return result;
}

}  // namespace fprlab
