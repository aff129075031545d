#pragma once

// Project-and-lift completion for the conformally minimal vectors of a
// lattice, optionally restricted to a sign pattern and truncated.
//
// Coordinates are lifted one at a time. Before lifting coordinate k the
// working set is complete for the projection onto coordinates 0..k-1: every
// projected lattice vector is a conformal sum of working vectors. Lifting adds
// the lattice vector whose projection is zero (if any), then closes the set
// under normal forms of sums f + g where f and g are sign compatible on the
// earlier coordinates and have opposite signs at k. Afterwards vectors that
// violate the sign rule or bound of coordinate k are dropped, which is safe
// because a conformal decomposition of an admissible vector only uses
// admissible pieces.

#include "completion.hpp"
#include "lattice.hpp"
#include "scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

namespace factorinv::detail {

struct CoordinateRule {
  bool nonnegative = true;
  std::optional<std::int64_t> upper;
};

template <class S>
class ProjectAndLift {
 public:
  ProjectAndLift(const EchelonBasis& basis, std::vector<CoordinateRule> rules)
      : n_(rules.size()), rules_(std::move(rules)) {
    for (std::size_t i = 0; i < basis.rows.size(); ++i) {
      std::vector<S> v(n_);
      for (std::size_t c = 0; c < n_; ++c) v[c] = from_integer<S>(basis.rows[i][c]);
      pivot_rows_.emplace_back(basis.pivots[i], std::move(v));
    }
  }

  std::vector<std::vector<S>> run() {
    std::size_t next_pivot = 0;
    for (std::size_t k = 0; k < n_; ++k) {
      for (auto& e : set_) extend_masks(e, k);
      if (next_pivot < pivot_rows_.size() && pivot_rows_[next_pivot].first == k) {
        const auto& row = pivot_rows_[next_pivot++].second;
        std::vector<S> neg(n_);
        for (std::size_t c = 0; c < n_; ++c) neg[c] = -row[c];
        set_.push_back(make_element(row, k));
        set_.push_back(make_element(std::move(neg), k));
      }
      if (set_.empty()) continue;
      complete(k);
      filter(k);
      minimalize(k);
    }
    std::vector<std::vector<S>> out;
    out.reserve(set_.size());
    for (auto& e : set_) out.push_back(std::move(e.v));
    return out;
  }

 private:
  struct Element {
    std::vector<S> v;
    std::uint64_t pos = 0;
    std::uint64_t neg = 0;
    S norm{0};  // l1 norm over the lifted coordinates
  };

  static S absval(const S& x) { return x < S(0) ? -x : x; }

  void extend_masks(Element& e, std::size_t k) const {
    if (k < 64) {
      if (e.v[k] > S(0)) e.pos |= std::uint64_t{1} << k;
      if (e.v[k] < S(0)) e.neg |= std::uint64_t{1} << k;
    }
    e.norm += absval(e.v[k]);
  }

  Element make_element(std::vector<S> v, std::size_t k) const {
    Element e{std::move(v)};
    for (std::size_t c = 0; c <= k; ++c) extend_masks(e, c);
    return e;
  }

  bool zero_upto(const Element& e, std::size_t k) const {
    for (std::size_t c = 0; c <= k; ++c)
      if (e.v[c] != S(0)) return false;
    return true;
  }

  // g is conformally below s on coordinates 0..k.
  bool below(const Element& g, const Element& s, std::size_t k) const {
    if ((g.pos & ~s.pos) != 0 || (g.neg & ~s.neg) != 0) return false;
    if (s.norm < g.norm) return false;
    for (std::size_t c = 0; c <= k; ++c) {
      const S& a = g.v[c];
      if (a == S(0)) continue;
      const S& b = s.v[c];
      if (a > S(0) ? (b < a) : (b > a)) return false;
    }
    return true;
  }

  bool compatible_before(const Element& f, const Element& g, std::size_t k) const {
    const std::uint64_t low = k >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
    if ((((f.pos & g.neg) | (f.neg & g.pos)) & low) != 0) return false;
    for (std::size_t c = 64; c < k; ++c)
      if ((f.v[c] > S(0) && g.v[c] < S(0)) || (f.v[c] < S(0) && g.v[c] > S(0))) return false;
    for (std::size_t c = 0; c < k; ++c)
      if (rules_[c].upper && f.v[c] + g.v[c] > S(*rules_[c].upper)) return false;
    return true;
  }

  // Reduces s by the working set; nullopt when the lifted part vanishes.
  // Each reduction leaves s conformally below its previous value, so an
  // element that is not below s never becomes so and one pass suffices.
  std::optional<Element> normal_form(std::vector<S> v, std::size_t k) {
    Element s = make_element(std::move(v), k);
    if (zero_upto(s, k)) return std::nullopt;
    for (const auto& g : set_) {
      while (below(g, s, k)) {
        for (std::size_t c = 0; c < n_; ++c) s.v[c] -= g.v[c];
        budget_.tick();
        s = make_element(std::move(s.v), k);
        if (zero_upto(s, k)) return std::nullopt;
      }
    }
    return s;
  }

  void complete(std::size_t k) {
    std::vector<std::size_t> positive, negative;
    for (std::size_t t = 0; t < set_.size(); ++t) {
      const S vk = set_[t].v[k];
      if (vk != S(0)) {
        auto& opposite = vk > S(0) ? negative : positive;
        for (std::size_t idx = 0; idx < opposite.size(); ++idx) {
          const std::size_t j = opposite[idx];
          if (!compatible_before(set_[t], set_[j], k)) continue;
          std::vector<S> sum(n_);
          for (std::size_t c = 0; c < n_; ++c) sum[c] = set_[t].v[c] + set_[j].v[c];
          auto r = normal_form(std::move(sum), k);
          if (r) set_.push_back(std::move(*r));
        }
        (vk > S(0) ? positive : negative).push_back(t);
      }
    }
  }

  void filter(std::size_t k) {
    const CoordinateRule& rule = rules_[k];
    std::erase_if(set_, [&](const Element& e) {
      if (rule.nonnegative && e.v[k] < S(0)) return true;
      if (rule.upper && e.v[k] > S(*rule.upper)) return true;
      return false;
    });
  }

  void minimalize(std::size_t k) {
    std::stable_sort(set_.begin(), set_.end(), [](const Element& a, const Element& b) { return a.norm < b.norm; });
    std::vector<Element> kept;
    for (auto& e : set_) {
      bool redundant = false;
      for (const auto& h : kept)
        if (below(h, e, k)) {
          redundant = true;
          break;
        }
      if (!redundant) kept.push_back(std::move(e));
    }
    set_ = std::move(kept);
  }

  std::size_t n_;
  std::vector<CoordinateRule> rules_;
  std::vector<std::pair<std::size_t, std::vector<S>>> pivot_rows_;
  std::vector<Element> set_;
  StepBudget budget_;
};

/// Conformally minimal nonzero vectors of ker_Z(matrix) obeying the rules,
/// one rule per column. Columns are lifted in the given order.
std::vector<IntVector> lattice_minimal_vectors(const IntMatrix& matrix, const std::vector<CoordinateRule>& rules,
                                               const std::vector<std::size_t>& order);

}  // namespace factorinv::detail
