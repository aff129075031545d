#pragma once

// Contejean-Devie completion over the nonnegative integers.
//
// Nodes are explored level by level (level = coordinate sum). A node x with
// residual r = A x - b is extended by e_j only when <r, A e_j> < 0. A node
// that dominates a known minimal solution is dropped. Because every node
// already avoided the solutions known when it was created, a child x + e_j
// can only dominate a solution s with s_j == x_j + 1, so solutions are
// bucketed by (coordinate, value).

#include "factorinv/errors.hpp"
#include "factorinv/execution.hpp"
#include "factorinv/integer.hpp"
#include "scalar.hpp"

#include <cstdint>
#include <unordered_set>
#include <vector>

namespace factorinv::detail {

using Coords = std::vector<std::int64_t>;

struct CoordsHash {
  std::size_t operator()(const Coords& c) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : c) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

inline bool coords_leq(const Coords& a, const Coords& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

IntVector to_int_vector(const Coords& c);
Coords to_coords(const IntVector& v);

class StepBudget {
 public:
  StepBudget() : limit_(current_settings().max_steps) {}
  void tick() {
    if (limit_ != 0 && ++used_ > limit_)
      throw ResourceLimitExceeded("kernel completion exceeded the step cap of " + std::to_string(limit_));
  }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

template <class S>
class Completion {
 public:
  explicit Completion(const IntMatrix& matrix) : rows_(matrix.rows()), cols_(matrix.cols()) {
    columns_.resize(rows_ * cols_);
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t i = 0; i < rows_; ++i) columns_[j * rows_ + i] = from_integer<S>(matrix(i, j));
    buckets_.resize(cols_);
  }

  /// Hilbert basis of A x = 0.
  std::vector<Coords> homogeneous() {
    std::vector<Node> frontier;
    for (std::size_t j = 0; j < cols_; ++j) {
      Node n{Coords(cols_, 0), std::vector<S>(column(j), column(j) + rows_)};
      n.x[j] = 1;
      budget_.tick();
      frontier.push_back(std::move(n));
    }
    return run(std::move(frontier));
  }

  /// Minimal solutions of A x = b, pruned by the given homogeneous basis.
  std::vector<Coords> inhomogeneous(const IntVector& rhs, const std::vector<Coords>& hom_basis) {
    for (const auto& h : hom_basis) add_pruner(h);
    Node root{Coords(cols_, 0), std::vector<S>(rows_)};
    for (std::size_t i = 0; i < rows_; ++i) root.r[i] = -from_integer<S>(rhs[i]);
    std::vector<Node> frontier;
    frontier.push_back(std::move(root));
    return run(std::move(frontier));
  }

 private:
  struct Node {
    Coords x;
    std::vector<S> r;
  };

  const S* column(std::size_t j) const { return columns_.data() + j * rows_; }

  static bool is_zero(const std::vector<S>& r) {
    for (const auto& v : r)
      if (v != S(0)) return false;
    return true;
  }

  void add_pruner(const Coords& b) {
    const std::size_t idx = basis_.size();
    basis_.push_back(b);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (b[j] <= 0) continue;
      auto& by_value = buckets_[j];
      const auto v = static_cast<std::size_t>(b[j]);
      if (by_value.size() <= v) by_value.resize(v + 1);
      by_value[v].push_back(idx);
    }
  }

  bool dominated(const Coords& y, std::size_t j) const {
    const auto& by_value = buckets_[j];
    const auto v = static_cast<std::size_t>(y[j]);
    if (v >= by_value.size()) return false;
    for (std::size_t idx : by_value[v])
      if (coords_leq(basis_[idx], y)) return true;
    return false;
  }

  std::vector<Coords> run(std::vector<Node> frontier) {
    std::vector<Coords> found;
    auto harvest = [&](std::vector<Node>& level) {
      std::vector<Node> rest;
      rest.reserve(level.size());
      for (auto& n : level) {
        if (is_zero(n.r)) {
          add_pruner(n.x);
          found.push_back(std::move(n.x));
        } else {
          rest.push_back(std::move(n));
        }
      }
      level = std::move(rest);
    };
    harvest(frontier);
    while (!frontier.empty()) {
      std::vector<Node> next;
      std::unordered_set<Coords, CoordsHash> seen;
      for (const auto& node : frontier) {
        for (std::size_t j = 0; j < cols_; ++j) {
          const S* a = column(j);
          S d(0);
          for (std::size_t i = 0; i < rows_; ++i) d += node.r[i] * a[i];
          if (!(d < S(0))) continue;
          Coords y = node.x;
          ++y[j];
          if (dominated(y, j)) continue;
          if (!seen.insert(y).second) continue;
          budget_.tick();
          std::vector<S> r = node.r;
          for (std::size_t i = 0; i < rows_; ++i) r[i] += a[i];
          next.push_back(Node{std::move(y), std::move(r)});
        }
      }
      harvest(next);
      frontier = std::move(next);
    }
    return found;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<S> columns_;
  std::vector<Coords> basis_;
  // buckets_[j][v]: indices of pruners whose coordinate j equals v.
  std::vector<std::vector<std::vector<std::size_t>>> buckets_;
  StepBudget budget_;
};

/// Exact wrappers with 64-bit fast path.
std::vector<Coords> homogeneous_completion(const IntMatrix& matrix);
std::vector<Coords> inhomogeneous_completion(const IntMatrix& matrix, const IntVector& rhs,
                                             const std::vector<Coords>& hom_basis);

}  // namespace factorinv::detail
