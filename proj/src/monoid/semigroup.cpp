#include "factorinv/errors.hpp"
#include "factorinv/kernel.hpp"
#include "factorinv/monoid.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <queue>

namespace factorinv {

struct AffineSemigroup::State {
  std::size_t dimension = 0;
  std::vector<IntVector> generators;
  IntMatrix matrix;
  std::optional<Equations> equations;

  mutable std::once_flag graver_once;
  mutable std::vector<IntVector> graver;
};

AffineSemigroup::AffineSemigroup(std::shared_ptr<const State> state) : state_(std::move(state)) {}

namespace {

bool expressible(const IntVector& target, const std::vector<IntVector>& others, std::size_t dimension) {
  if (others.empty()) return false;
  const IntMatrix a = IntMatrix::from_columns(others, dimension);
  return has_nonnegative_solution(LinearSystem{a, target, {}});
}

}  // namespace

AffineSemigroup AffineSemigroup::from_generators(std::vector<IntVector> generators) {
  if (generators.empty()) throw InvalidArgument("an affine semigroup needs at least one generator");
  const std::size_t k = generators.front().size();
  if (k == 0) throw InvalidArgument("generators must have at least one coordinate");
  std::vector<IntVector> unique;
  for (auto& g : generators) {
    if (g.size() != k) throw InvalidArgument("generators have different dimensions");
    if (!g.is_nonnegative()) throw InvalidArgument("generator " + to_string(g) + " has a negative entry");
    if (g.is_zero()) throw InvalidArgument("the zero vector cannot be a generator");
    if (std::find(unique.begin(), unique.end(), g) == unique.end()) unique.push_back(std::move(g));
  }
  auto state = std::make_shared<State>();
  state->dimension = k;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    std::vector<IntVector> others;
    for (std::size_t j = 0; j < unique.size(); ++j)
      if (j != i) others.push_back(unique[j]);
    if (!expressible(unique[i], others, k)) state->generators.push_back(unique[i]);
  }
  state->matrix = IntMatrix::from_columns(state->generators, k);
  return AffineSemigroup(std::move(state));
}

AffineSemigroup AffineSemigroup::from_equations(IntMatrix matrix, std::vector<std::optional<Integer>> moduli) {
  LinearSystem::homogeneous(matrix, moduli).validate();
  if (matrix.cols() == 0) throw InvalidArgument("the system has no unknowns");
  auto state = std::make_shared<State>();
  state->dimension = matrix.cols();
  state->generators = hilbert_basis(matrix, moduli);
  if (state->generators.empty()) throw InvalidArgument("the system has only the zero solution");
  state->matrix = IntMatrix::from_columns(state->generators, state->dimension);
  state->equations = Equations{std::move(matrix), std::move(moduli)};
  return AffineSemigroup(std::move(state));
}

std::size_t AffineSemigroup::dimension() const noexcept { return state_->dimension; }
std::size_t AffineSemigroup::embedding_dimension() const noexcept { return state_->generators.size(); }
const std::vector<IntVector>& AffineSemigroup::generators() const noexcept { return state_->generators; }
const IntVector& AffineSemigroup::generator(std::size_t i) const { return state_->generators.at(i); }
const IntMatrix& AffineSemigroup::generator_matrix() const noexcept { return state_->matrix; }
bool AffineSemigroup::is_full() const noexcept { return state_->equations.has_value(); }
const std::optional<AffineSemigroup::Equations>& AffineSemigroup::equations() const noexcept {
  return state_->equations;
}

void AffineSemigroup::require_element_size(const IntVector& m) const {
  if (m.size() != dimension())
    throw InvalidArgument("element " + to_string(m) + " has " + std::to_string(m.size()) +
                          " coordinates, the semigroup lives in dimension " + std::to_string(dimension()));
}

IntVector AffineSemigroup::evaluate(const Factorization& x) const {
  if (x.size() != embedding_dimension())
    throw InvalidArgument("factorization " + to_string(x) + " does not match " +
                          std::to_string(embedding_dimension()) + " atoms");
  return state_->matrix.apply(x);
}

std::vector<Factorization> AffineSemigroup::factorizations(const IntVector& m) const {
  require_element_size(m);
  if (!m.is_nonnegative()) return {};
  return enumerate_bounded(LinearSystem{state_->matrix, m, {}});
}

bool AffineSemigroup::contains(const IntVector& m) const {
  require_element_size(m);
  if (!m.is_nonnegative()) return false;
  return has_nonnegative_solution(LinearSystem{state_->matrix, m, {}});
}

const std::vector<IntVector>& AffineSemigroup::graver() const {
  std::call_once(state_->graver_once, [&] { state_->graver = graver_basis(state_->matrix); });
  return state_->graver;
}

namespace {

constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max();

// Smallest element of <gens> in each residue class modulo n.
std::vector<std::int64_t> residue_minima(const std::vector<std::int64_t>& gens, std::int64_t n) {
  std::vector<std::int64_t> best(static_cast<std::size_t>(n), kUnreachable);
  using Entry = std::pair<std::int64_t, std::int64_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  best[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    const auto [d, r] = queue.top();
    queue.pop();
    if (d != best[static_cast<std::size_t>(r)]) continue;
    for (const auto g : gens) {
      const std::int64_t nd = d + g;
      const std::int64_t nr = (r + g) % n;
      if (nd < best[static_cast<std::size_t>(nr)]) {
        best[static_cast<std::size_t>(nr)] = nd;
        queue.emplace(nd, nr);
      }
    }
  }
  return best;
}

std::vector<std::int64_t> minimize_numerical(std::vector<std::int64_t> gens) {
  if (gens.empty()) throw InvalidArgument("a numerical semigroup needs at least one generator");
  std::int64_t g = 0;
  for (const auto v : gens) {
    if (v <= 0) throw InvalidArgument("numerical semigroup generators must be positive, got " + std::to_string(v));
    g = std::gcd(g, v);
  }
  if (g != 1) throw InvalidArgument("numerical semigroup generators must have gcd 1, got gcd " + std::to_string(g));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<std::int64_t> kept{gens.front()};
  for (std::size_t i = 1; i < gens.size(); ++i) {
    const auto minima = residue_minima(kept, kept.front());
    const std::int64_t low = minima[static_cast<std::size_t>(gens[i] % kept.front())];
    if (low == kUnreachable || gens[i] < low) kept.push_back(gens[i]);
  }
  return kept;
}

std::vector<IntVector> as_vectors(const std::vector<std::int64_t>& gens) {
  std::vector<IntVector> out;
  for (const auto g : gens) out.push_back(IntVector{Integer(g)});
  return out;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<std::int64_t> generators)
    : generators_(minimize_numerical(std::move(generators))),
      apery_(residue_minima(generators_, generators_.front())),
      affine_(AffineSemigroup::from_generators(as_vectors(generators_))) {}

bool NumericalSemigroup::contains(std::int64_t s) const {
  if (s < 0) return false;
  return s >= apery_[static_cast<std::size_t>(s % multiplicity())];
}

std::int64_t NumericalSemigroup::frobenius_number() const {
  return *std::max_element(apery_.begin(), apery_.end()) - multiplicity();
}

std::vector<Factorization> NumericalSemigroup::factorizations(std::int64_t s) const {
  if (!contains(s)) return {};
  return affine_.factorizations(IntVector{Integer(s)});
}

std::vector<std::int64_t> apery_set(const NumericalSemigroup& s, std::int64_t n) {
  if (n <= 0 || !s.contains(n))
    throw InvalidElement(std::to_string(n) + " is not a positive element of the semigroup");
  std::vector<std::int64_t> out =
      n == s.multiplicity() ? s.apery_by_residue() : residue_minima(s.generators(), n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace factorinv
