// Copyright 2026 The holescan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "holescan/meshgen.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "holescan/error.h"

namespace holescan {

namespace gen {

GenSpec grid(int rows, int cols) { return {Grid{rows, cols}}; }

GenSpec punched_grid(int rows, int cols,
                     std::vector<std::pair<int, int>> removed) {
  return {PunchedGrid{rows, cols, std::move(removed)}};
}

GenSpec tetrahedron() { return {Tetrahedron{}}; }
GenSpec bowtie() { return {Bowtie{}}; }
GenSpec double_fan() { return {DoubleFan{}}; }

GenSpec random_delete(GenSpec base, double fraction, std::uint64_t seed) {
  return {RandomDelete{std::make_shared<const GenSpec>(std::move(base)),
                       fraction, seed}};
}

}  // namespace gen

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidSpec, what);
}

void check_dims(int rows, int cols) {
  if (rows < 1 || cols < 1) {
    invalid("grid dimensions must be at least 1, got " + std::to_string(rows) +
            "x" + std::to_string(cols));
  }
}

Mesh make_grid(int rows, int cols, const std::set<std::pair<int, int>>& skip) {
  const auto stride = static_cast<VertexId>(cols + 1);
  std::vector<Point3> vertices;
  vertices.reserve(static_cast<std::size_t>(rows + 1) * stride);
  for (int r = 0; r <= rows; ++r) {
    for (int c = 0; c <= cols; ++c) vertices.push_back({double(c), double(r), 0});
  }
  std::vector<Triangle> triangles;
  triangles.reserve(2 * static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (skip.count({r, c})) continue;
      const VertexId a = static_cast<VertexId>(r) * stride + static_cast<VertexId>(c);
      const VertexId b = a + 1;
      const VertexId d = a + stride + 1;
      const VertexId c2 = a + stride;
      triangles.push_back({a, b, d});
      triangles.push_back({a, d, c2});
    }
  }
  return build_mesh(std::move(vertices), std::move(triangles));
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  while (true) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

Mesh delete_random(const Mesh& base, double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    invalid("deletion fraction must lie strictly between 0 and 1");
  }
  const std::size_t n = base.triangle_count();
  const auto k = static_cast<std::size_t>(std::floor(fraction * double(n)));

  std::vector<TriangleId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + bounded(rng, n - i);
    std::swap(order[i], order[j]);
  }
  std::vector<bool> removed(n, false);
  for (std::size_t i = 0; i < k; ++i) removed[order[i]] = true;

  std::vector<Triangle> kept;
  kept.reserve(n - k);
  for (TriangleId t = 0; t < n; ++t) {
    if (!removed[t]) kept.push_back(base.triangle(t));
  }
  std::vector<Point3> vertices(base.vertices().begin(), base.vertices().end());
  return build_mesh(std::move(vertices), std::move(kept));
}

// Recursive-descent reader for the textual spec form.
class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GenSpec parse() {
    GenSpec spec = parse_spec();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return spec;
  }

 private:
  GenSpec parse_spec() {
    const std::string name = identifier();
    if (name == "tetrahedron") return gen::tetrahedron();
    if (name == "bowtie") return gen::bowtie();
    if (name == "double_fan") return gen::double_fan();
    if (name == "grid") {
      expect('(');
      const int rows = integer();
      expect(',');
      const int cols = integer();
      expect(')');
      return gen::grid(rows, cols);
    }
    if (name == "punched_grid") {
      expect('(');
      const int rows = integer();
      expect(',');
      const int cols = integer();
      expect(',');
      expect('[');
      std::vector<std::pair<int, int>> cells;
      if (!accept(']')) {
        do {
          expect('(');
          const int r = integer();
          expect(',');
          const int c = integer();
          expect(')');
          cells.emplace_back(r, c);
        } while (accept(','));
        expect(']');
      }
      expect(')');
      return gen::punched_grid(rows, cols, std::move(cells));
    }
    if (name == "random_delete") {
      expect('(');
      GenSpec base = parse_spec();
      expect(',');
      const double fraction = real();
      expect(',');
      const std::uint64_t seed = unsigned_integer();
      expect(')');
      return gen::random_delete(std::move(base), fraction, seed);
    }
    fail("unknown generator '" + name + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a generator name");
    return std::string(text_.substr(start, pos_ - start));
  }

  template <typename T>
  T number() {
    skip_space();
    T value{};
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  int integer() { return number<int>(); }
  std::uint64_t unsigned_integer() { return number<std::uint64_t>(); }
  double real() { return number<double>(); }

  [[noreturn]] void fail(const std::string& what) const {
    invalid("bad generator spec '" + std::string(text_) + "' at offset " +
            std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string format_real(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

GenSpec parse_gen_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string to_string(const GenSpec& spec) {
  struct Visitor {
    std::string operator()(const gen::Grid& g) const {
      return "grid(" + std::to_string(g.rows) + "," + std::to_string(g.cols) + ")";
    }
    std::string operator()(const gen::PunchedGrid& g) const {
      std::string s = "punched_grid(" + std::to_string(g.rows) + "," +
                      std::to_string(g.cols) + ",[";
      for (std::size_t i = 0; i < g.removed.size(); ++i) {
        if (i > 0) s += ",";
        s += "(" + std::to_string(g.removed[i].first) + "," +
             std::to_string(g.removed[i].second) + ")";
      }
      return s + "])";
    }
    std::string operator()(const gen::Tetrahedron&) const { return "tetrahedron"; }
    std::string operator()(const gen::Bowtie&) const { return "bowtie"; }
    std::string operator()(const gen::DoubleFan&) const { return "double_fan"; }
    std::string operator()(const gen::RandomDelete& d) const {
      return "random_delete(" + to_string(*d.base) + "," + format_real(d.fraction) +
             "," + std::to_string(d.seed) + ")";
    }
  };
  return std::visit(Visitor{}, spec.shape);
}

Mesh generate(const GenSpec& spec) {
  struct Visitor {
    Mesh operator()(const gen::Grid& g) const {
      check_dims(g.rows, g.cols);
      return make_grid(g.rows, g.cols, {});
    }
    Mesh operator()(const gen::PunchedGrid& g) const {
      check_dims(g.rows, g.cols);
      std::set<std::pair<int, int>> skip;
      for (const auto& cell : g.removed) {
        if (cell.first < 0 || cell.first >= g.rows || cell.second < 0 ||
            cell.second >= g.cols) {
          invalid("removed cell (" + std::to_string(cell.first) + "," +
                  std::to_string(cell.second) + ") is outside the grid");
        }
        if (!skip.insert(cell).second) {
          invalid("removed cell (" + std::to_string(cell.first) + "," +
                  std::to_string(cell.second) + ") listed twice");
        }
      }
      return make_grid(g.rows, g.cols, skip);
    }
    Mesh operator()(const gen::Tetrahedron&) const {
      return build_mesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                        {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}});
    }
    Mesh operator()(const gen::Bowtie&) const {
      return build_mesh({{0, 0, 0}, {1, -1, 0}, {1, 1, 0}, {-1, 1, 0}, {-1, -1, 0}},
                        {{0, 1, 2}, {0, 3, 4}});
    }
    Mesh operator()(const gen::DoubleFan&) const {
      return build_mesh({{0, 0, 0},
                         {1, -1, 0},
                         {1.5, 0, 0},
                         {1, 1, 0},
                         {-1, 1, 0},
                         {-1.5, 0, 0},
                         {-1, -1, 0}},
                        {{0, 1, 2}, {0, 2, 3}, {0, 4, 5}, {0, 5, 6}});
    }
    Mesh operator()(const gen::RandomDelete& d) const {
      if (!d.base) invalid("random_delete without a base mesh");
      return delete_random(generate(*d.base), d.fraction, d.seed);
    }
  };
  return std::visit(Visitor{}, spec.shape);
}

}  // namespace holescan
