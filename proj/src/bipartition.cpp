#include <algorithm>
#include <cstdint>

#include "hyperlap/error.hpp"
#include "hyperlap/hypergraph.hpp"

namespace hyperlap {

namespace {

// Row of the GF(2) system: one bit per vertex plus the right-hand side.
class BitRow {
 public:
  explicit BitRow(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  BitRow& operator^=(const BitRow& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct ReducedSystem {
  std::vector<BitRow> rows;          // reduced row echelon form, pivot rows only
  std::vector<std::size_t> pivots;   // pivot column of each row
  std::vector<std::size_t> free_vars;
  bool consistent = true;
};

ReducedSystem reduce(const UniformHypergraph& h) {
  const std::size_t n = h.n();
  const std::size_t rhs = n;
  std::vector<BitRow> rows;
  rows.reserve(h.num_edges());
  for (const auto& e : h.edges()) {
    BitRow r(n + 1);
    for (Vertex v : e) r.set(v);
    r.set(rhs);
    rows.push_back(std::move(r));
  }

  ReducedSystem out;
  std::size_t next = 0;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t col = 0; col < n && next < rows.size(); ++col) {
    auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(next), rows.end(),
                           [&](const BitRow& r) { return r.test(col); });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(next), it);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].test(col)) rows[r] ^= rows[next];
    }
    out.pivots.push_back(col);
    is_pivot[col] = true;
    ++next;
  }
  // leftover rows are all-zero on the variables; a set rhs bit means 0 = 1
  for (std::size_t r = next; r < rows.size(); ++r) {
    if (rows[r].test(rhs)) out.consistent = false;
  }
  rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(next), rows.end());
  out.rows = std::move(rows);
  for (std::size_t v = 0; v < n; ++v)
    if (!is_pivot[v]) out.free_vars.push_back(v);
  return out;
}

std::vector<bool> solve(const ReducedSystem& sys, std::size_t n, const std::vector<bool>& free_values) {
  std::vector<bool> x(n, false);
  for (std::size_t i = 0; i < sys.free_vars.size(); ++i) x[sys.free_vars[i]] = free_values[i];
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    bool value = sys.rows[r].test(n);
    for (std::size_t f : sys.free_vars)
      if (x[f] && sys.rows[r].test(f)) value = !value;
    x[sys.pivots[r]] = value;
  }
  return x;
}

Partition to_partition(const std::vector<bool>& x) {
  Partition p;
  for (std::size_t v = 0; v < x.size(); ++v) (x[v] ? p.part1 : p.part2).push_back(static_cast<Vertex>(v));
  return p;
}

}  // namespace

bool is_odd_bipartition(const UniformHypergraph& h, const Partition& p) {
  if (p.part1.empty() || p.part2.empty()) return false;
  if (p.part1.size() + p.part2.size() != h.n()) return false;
  std::vector<int> side(h.n(), -1);
  for (Vertex v : p.part1) {
    if (v >= h.n() || side[v] != -1) return false;
    side[v] = 1;
  }
  for (Vertex v : p.part2) {
    if (v >= h.n() || side[v] != -1) return false;
    side[v] = 2;
  }
  return std::all_of(h.edges().begin(), h.edges().end(), [&](const Edge& e) {
    return std::count_if(e.begin(), e.end(), [&](Vertex v) { return side[v] == 1; }) % 2 == 1;
  });
}

std::optional<Partition> odd_bipartition(const UniformHypergraph& h) {
  if (h.k() % 2 != 0) {
    throw Error(ErrorCode::OddUniformity, "odd-bipartiteness is defined for even uniformity only");
  }
  const auto sys = reduce(h);
  if (!sys.consistent) return std::nullopt;

  std::vector<bool> free_values(sys.free_vars.size(), false);
  auto p = to_partition(solve(sys, h.n(), free_values));
  if ((p.part1.empty() || p.part2.empty()) && !free_values.empty()) {
    free_values[0] = true;
    p = to_partition(solve(sys, h.n(), free_values));
  }
  if (p.part1.empty() || p.part2.empty()) return std::nullopt;
  return p;
}

}  // namespace hyperlap
