#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace polytor {

// Sparse vector with a fixed ambient dimension; entries sorted by index, zeros never stored.
template <typename Scalar>
class SparseVec {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseVec() = default;
  explicit SparseVec(std::size_t dim) : dim_(dim) {}

  static SparseVec unit(std::size_t dim, std::size_t i) {
    SparseVec v(dim);
    v.set(i, Scalar(1));
    return v;
  }

  static SparseVec from_dense(const std::vector<Scalar>& xs) {
    SparseVec v(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (xs[i] != 0) v.entries_.emplace_back(i, xs[i]);
    return v;
  }

  // Builds from an index->value map, dropping zeros.
  static SparseVec from_map(std::size_t dim, const std::map<std::size_t, Scalar>& m) {
    SparseVec v(dim);
    v.entries_.reserve(m.size());
    for (const auto& [i, x] : m) {
      if (i >= dim) throw std::out_of_range("SparseVec index out of range");
      if (x != 0) v.entries_.emplace_back(i, x);
    }
    return v;
  }

  std::size_t dim() const { return dim_; }
  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  Scalar coeff(std::size_t i) const {
    auto it = find(i);
    return it == entries_.end() || it->first != i ? Scalar(0) : it->second;
  }

  void set(std::size_t i, const Scalar& x) {
    if (i >= dim_) throw std::out_of_range("SparseVec index out of range");
    auto it = find(i);
    bool present = it != entries_.end() && it->first == i;
    if (x == 0) {
      if (present) entries_.erase(it);
    } else if (present) {
      it->second = x;
    } else {
      entries_.insert(it, Entry{i, x});
    }
  }

  std::size_t leading_index() const { return entries_.front().first; }
  const Scalar& leading_coeff() const { return entries_.front().second; }

  // this += a * other
  void axpy(const Scalar& a, const SparseVec& other) {
    check_dim(other);
    if (a == 0 || other.empty()) return;
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto p = entries_.begin();
    auto q = other.entries_.begin();
    while (p != entries_.end() || q != other.entries_.end()) {
      if (q == other.entries_.end() || (p != entries_.end() && p->first < q->first)) {
        out.push_back(std::move(*p++));
      } else if (p == entries_.end() || q->first < p->first) {
        out.emplace_back(q->first, a * q->second);
        ++q;
      } else {
        Scalar s = p->second + a * q->second;
        if (s != 0) out.emplace_back(p->first, std::move(s));
        ++p;
        ++q;
      }
    }
    entries_ = std::move(out);
  }

  void scale(const Scalar& a) {
    if (a == 0) {
      entries_.clear();
      return;
    }
    for (auto& e : entries_) e.second *= a;
  }

  SparseVec operator+(const SparseVec& o) const {
    SparseVec r = *this;
    r.axpy(Scalar(1), o);
    return r;
  }
  SparseVec operator-(const SparseVec& o) const {
    SparseVec r = *this;
    r.axpy(Scalar(-1), o);
    return r;
  }
  SparseVec operator*(const Scalar& a) const {
    SparseVec r = *this;
    r.scale(a);
    return r;
  }
  bool operator==(const SparseVec& o) const { return dim_ == o.dim_ && entries_ == o.entries_; }

  Scalar dot(const SparseVec& o) const {
    check_dim(o);
    Scalar s(0);
    auto p = entries_.begin();
    auto q = o.entries_.begin();
    while (p != entries_.end() && q != o.entries_.end()) {
      if (p->first < q->first) ++p;
      else if (q->first < p->first) ++q;
      else s += (p++)->second * (q++)->second;
    }
    return s;
  }

 private:
  typename std::vector<Entry>::iterator find(std::size_t i) {
    return std::lower_bound(entries_.begin(), entries_.end(), i,
                            [](const Entry& e, std::size_t k) { return e.first < k; });
  }
  typename std::vector<Entry>::const_iterator find(std::size_t i) const {
    return std::lower_bound(entries_.begin(), entries_.end(), i,
                            [](const Entry& e, std::size_t k) { return e.first < k; });
  }
  void check_dim(const SparseVec& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("SparseVec dimension mismatch");
  }

  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
};

template <typename Scalar>
struct SparseMat {
  std::vector<SparseVec<Scalar>> rows;
  std::size_t ncols = 0;

  SparseMat() = default;
  explicit SparseMat(std::size_t cols) : ncols(cols) {}

  static SparseMat from_dense(const std::vector<std::vector<Scalar>>& m, std::size_t cols) {
    SparseMat out(cols);
    for (const auto& r : m) {
      if (r.size() != cols) throw std::invalid_argument("ragged dense matrix");
      out.rows.push_back(SparseVec<Scalar>::from_dense(r));
    }
    return out;
  }

  std::size_t nrows() const { return rows.size(); }

  void push_row(SparseVec<Scalar> r) {
    if (r.dim() != ncols) throw std::invalid_argument("row dimension mismatch");
    rows.push_back(std::move(r));
  }

  // a * x for x of dimension ncols
  SparseVec<Scalar> apply(const SparseVec<Scalar>& x) const {
    if (x.dim() != ncols) throw std::invalid_argument("dimension mismatch in SparseMat::apply");
    std::map<std::size_t, Scalar> acc;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Scalar s = rows[i].dot(x);
      if (s != 0) acc[i] = s;
    }
    return SparseVec<Scalar>::from_map(rows.size(), acc);
  }

  bool operator==(const SparseMat& o) const { return ncols == o.ncols && rows == o.rows; }
};

// Incrementally maintained reduced row-echelon basis of a row space.
template <typename Scalar>
class EchelonBasis {
 public:
  EchelonBasis() = default;
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  // Residual of v after eliminating every pivot column.
  SparseVec<Scalar> reduce(SparseVec<Scalar> v) const {
    if (v.dim() != dim_) throw std::invalid_argument("dimension mismatch in EchelonBasis::reduce");
    // Because the stored rows are fully reduced, one pass in pivot order suffices.
    std::size_t pos = 0;
    while (pos < v.nnz()) {
      const auto& [col, x] = v.entries()[pos];
      auto it = pivot_row_.find(col);
      if (it == pivot_row_.end()) {
        ++pos;
        continue;
      }
      Scalar factor = -x;
      v.axpy(factor, rows_[it->second]);
      // the eliminated entry vanished; entries before pos are unchanged (rows have no
      // support on other pivot columns and their leading entry is col)
    }
    return v;
  }

  bool contains(const SparseVec<Scalar>& v) const { return reduce(v).empty(); }

  // Returns true when v enlarged the span.
  bool insert(const SparseVec<Scalar>& v) {
    SparseVec<Scalar> r = reduce(v);
    if (r.empty()) return false;
    std::size_t p = r.leading_index();
    r.scale(Scalar(1) / r.leading_coeff());
    for (auto& row : rows_) {
      Scalar x = row.coeff(p);
      if (x != 0) row.axpy(-x, r);
    }
    pivot_row_[p] = rows_.size();
    rows_.push_back(std::move(r));
    return true;
  }

  // Coordinates of v (assumed in the span) relative to rows(): the values of v at the pivots.
  std::vector<Scalar> coordinates(const SparseVec<Scalar>& v) const {
    std::vector<Scalar> c;
    for (const auto& row : rows()) c.push_back(v.coeff(row.leading_index()));
    return c;
  }

  // Rows sorted by pivot column: the canonical RREF.
  std::vector<SparseVec<Scalar>> rows() const {
    std::vector<SparseVec<Scalar>> out;
    out.reserve(rows_.size());
    for (const auto& [p, idx] : pivot_row_) out.push_back(rows_[idx]);
    return out;
  }

  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> out;
    for (const auto& kv : pivot_row_) out.push_back(kv.first);
    return out;
  }

  SparseMat<Scalar> matrix() const {
    SparseMat<Scalar> m(dim_);
    m.rows = rows();
    return m;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<SparseVec<Scalar>> rows_;
  std::map<std::size_t, std::size_t> pivot_row_;
};

template <typename Scalar>
struct RrefResult {
  std::size_t rank = 0;
  SparseMat<Scalar> reduced;
  std::vector<std::size_t> pivots;
};

template <typename Scalar>
RrefResult<Scalar> rref(const SparseMat<Scalar>& m) {
  EchelonBasis<Scalar> eb(m.ncols);
  for (const auto& r : m.rows) {
    if (r.dim() != m.ncols) throw std::invalid_argument("row dimension mismatch in rref");
    eb.insert(r);
  }
  return {eb.rank(), eb.matrix(), eb.pivots()};
}

// basis must already be in reduced row-echelon form.
template <typename Scalar>
bool span_contains(const SparseMat<Scalar>& basis, const SparseVec<Scalar>& v) {
  if (v.dim() != basis.ncols) throw std::invalid_argument("dimension mismatch in span_contains");
  SparseVec<Scalar> r = v;
  for (const auto& row : basis.rows) {
    if (row.empty()) continue;
    Scalar x = r.coeff(row.leading_index());
    if (x != 0) r.axpy(-x / row.leading_coeff(), row);
  }
  return r.empty();
}

// Solves a x = b exactly; free variables are set to zero. Returns nullopt when inconsistent.
template <typename Scalar>
std::optional<SparseVec<Scalar>> solve_linear(const SparseMat<Scalar>& a, const SparseVec<Scalar>& b) {
  if (b.dim() != a.nrows()) throw std::invalid_argument("dimension mismatch in solve_linear");
  const std::size_t n = a.ncols;
  EchelonBasis<Scalar> eb(n + 1);
  for (std::size_t i = 0; i < a.nrows(); ++i) {
    const auto& row = a.rows[i];
    if (row.dim() != n) throw std::invalid_argument("row dimension mismatch in solve_linear");
    SparseVec<Scalar> aug(n + 1);
    std::map<std::size_t, Scalar> m;
    for (const auto& [j, x] : row) m[j] = x;
    Scalar bi = b.coeff(i);
    if (bi != 0) m[n] = bi;
    eb.insert(SparseVec<Scalar>::from_map(n + 1, m));
  }
  std::map<std::size_t, Scalar> x;
  for (const auto& row : eb.rows()) {
    std::size_t p = row.leading_index();
    if (p == n) return std::nullopt;
    Scalar rhs = row.coeff(n);
    if (rhs != 0) x[p] = rhs;
  }
  return SparseVec<Scalar>::from_map(n, x);
}

// Coordinates with respect to an arbitrary (independent) list of vectors.
template <typename Scalar>
class CoordinateSystem {
 public:
  CoordinateSystem() = default;
  CoordinateSystem(const std::vector<SparseVec<Scalar>>& vectors, std::size_t dim)
      : dim_(dim), count_(vectors.size()), eb_(dim + vectors.size()) {
    for (std::size_t k = 0; k < vectors.size(); ++k) {
      if (vectors[k].dim() != dim) throw std::invalid_argument("dimension mismatch in CoordinateSystem");
      std::map<std::size_t, Scalar> m;
      for (const auto& [j, x] : vectors[k]) m[j] = x;
      m[dim + k] = Scalar(1);
      if (!eb_.insert(SparseVec<Scalar>::from_map(dim + count_, m)))
        throw std::invalid_argument("CoordinateSystem vectors are dependent");
    }
    for (const auto& row : eb_.rows())
      if (row.leading_index() >= dim)
        throw std::invalid_argument("CoordinateSystem vectors are dependent");
  }

  std::size_t size() const { return count_; }

  // Throws std::domain_error when v is outside the span.
  std::vector<Scalar> coordinates(const SparseVec<Scalar>& v) const {
    if (v.dim() != dim_) throw std::invalid_argument("dimension mismatch in CoordinateSystem");
    std::map<std::size_t, Scalar> m;
    for (const auto& [j, x] : v) m[j] = x;
    SparseVec<Scalar> r = eb_.reduce(SparseVec<Scalar>::from_map(dim_ + count_, m));
    std::vector<Scalar> c(count_, Scalar(0));
    for (const auto& [j, x] : r) {
      if (j < dim_) throw std::domain_error("vector outside the span");
      c[j - dim_] = -x;
    }
    return c;
  }

 private:
  std::size_t dim_ = 0;
  std::size_t count_ = 0;
  EchelonBasis<Scalar> eb_;
};

}  // namespace polytor
