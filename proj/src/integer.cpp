#include "factorinv/integer.hpp"

#include "factorinv/errors.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

namespace factorinv {

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::optional<Integer> parse_integer(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) return std::nullopt;
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

std::int64_t to_int64(const Integer& value) {
  if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer " + value.str() + " does not fit in 64 bits");
  return value.convert_to<std::int64_t>();
}

IntVector IntVector::unit(std::size_t size, std::size_t index) {
  IntVector v(size);
  v[index] = 1;
  return v;
}

void IntVector::require_same_size(const IntVector& other) const {
  if (size() != other.size())
    throw MalformedSystem("vector length mismatch: " + std::to_string(size()) + " vs " +
                          std::to_string(other.size()));
}

IntVector& IntVector::operator+=(const IntVector& other) {
  require_same_size(other);
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

IntVector& IntVector::operator-=(const IntVector& other) {
  require_same_size(other);
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

IntVector IntVector::operator-() const {
  IntVector r(*this);
  for (auto& e : r.entries_) e = -e;
  return r;
}

std::strong_ordering operator<=>(const IntVector& lhs, const IntVector& rhs) {
  const std::size_t n = std::min(lhs.size(), rhs.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (lhs[i] < rhs[i]) return std::strong_ordering::less;
    if (rhs[i] < lhs[i]) return std::strong_ordering::greater;
  }
  return lhs.size() <=> rhs.size();
}

Integer IntVector::total() const {
  Integer s = 0;
  for (const auto& e : entries_) s += e;
  return s;
}

Integer IntVector::dot(const IntVector& other) const {
  require_same_size(other);
  Integer s = 0;
  for (std::size_t i = 0; i < size(); ++i) s += entries_[i] * other.entries_[i];
  return s;
}

bool IntVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& e) { return e == 0; });
}

bool IntVector::is_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& e) { return e >= 0; });
}

bool IntVector::leq(const IntVector& other) const {
  require_same_size(other);
  for (std::size_t i = 0; i < size(); ++i)
    if (entries_[i] > other.entries_[i]) return false;
  return true;
}

IntVector IntVector::positive_part() const {
  IntVector r(size());
  for (std::size_t i = 0; i < size(); ++i)
    if (entries_[i] > 0) r[i] = entries_[i];
  return r;
}

IntVector IntVector::negative_part() const {
  IntVector r(size());
  for (std::size_t i = 0; i < size(); ++i)
    if (entries_[i] < 0) r[i] = -entries_[i];
  return r;
}

IntVector IntVector::meet(const IntVector& other) const {
  require_same_size(other);
  IntVector r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = std::min(entries_[i], other.entries_[i]);
  return r;
}

IntVector IntVector::append(const IntVector& tail) const {
  std::vector<Integer> out(entries_);
  out.insert(out.end(), tail.begin(), tail.end());
  return IntVector(std::move(out));
}

IntVector IntVector::head(std::size_t count) const {
  if (count > size()) throw MalformedSystem("head longer than vector");
  return IntVector(std::vector<Integer>(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(count)));
}

std::string to_string(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].str();
  }
  out += ')';
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntVector& v) { return os << to_string(v); }

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& e : v) g = boost::multiprecision::gcd(g, e);
  return boost::multiprecision::abs(g);
}

IntVector normalize_up_to_sign(const IntVector& v) {
  const Integer g = content(v);
  if (g == 0) return v;
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  for (const auto& e : r) {
    if (e == 0) continue;
    if (e < 0) r = -r;
    break;
  }
  return r;
}

void sort_unique(std::vector<IntVector>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

std::vector<IntVector> minimal_elements(std::vector<IntVector> vs) {
  sort_unique(vs);
  // Sorting by total first means a dominating element always comes after
  // everything it dominates.
  std::vector<std::pair<Integer, std::size_t>> order;
  order.reserve(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) order.emplace_back(vs[i].total(), i);
  std::sort(order.begin(), order.end());
  std::vector<IntVector> kept;
  for (const auto& [total, idx] : order) {
    const IntVector& v = vs[idx];
    const bool dominated = std::any_of(kept.begin(), kept.end(), [&](const IntVector& k) { return k.leq(v); });
    if (!dominated) kept.push_back(v);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw MalformedSystem("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw MalformedSystem("column " + std::to_string(c) + " has wrong dimension");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  IntVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

IntVector IntMatrix::apply(const IntVector& x) const {
  if (x.size() != cols_)
    throw MalformedSystem("matrix has " + std::to_string(cols_) + " columns but vector has " +
                          std::to_string(x.size()) + " entries");
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Integer s = 0;
    for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * x[c];
    out[r] = s;
  }
  return out;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
  if (rows_ != other.rows_) throw MalformedSystem("hconcat row mismatch");
  IntMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
  }
  return m;
}

IntMatrix IntMatrix::negated() const {
  IntMatrix m(*this);
  for (auto& e : m.data_) e = -e;
  return m;
}

}  // namespace factorinv
