#include "polytor/matrixlie.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace polytor {

std::string to_string(LieKind k) {
  switch (k) {
    case LieKind::gl: return "gl";
    case LieKind::sl: return "sl";
    case LieKind::sp: return "sp";
  }
  return "?";
}

namespace {

SparseVec<Rational> flatten(const Mat& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  SparseVec<Rational> v(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) != 0) v.set(i * n + j, m(i, j));
  return v;
}

std::string ename(int i, int j) {
  return "E" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

}  // namespace

int MatLieAlg::rank() const {
  switch (kind_) {
    case LieKind::gl: return size_;
    case LieKind::sl: return size_ - 1;
    case LieKind::sp: return size_ / 2;
  }
  return 0;
}

Weight MatLieAlg::basis_weight(std::size_t k) const {
  const Mat& b = basis_[k];
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j)
      if (i != j && b(i, j) != 0) {
        Weight g(size_, 0);
        g[i] += 1;
        g[j] -= 1;
        return restrict(g);
      }
  return Weight(rank(), 0);
}

bool MatLieAlg::contains(const Mat& m) const {
  try {
    coordinates(m);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

std::vector<Rational> MatLieAlg::coordinates(const Mat& m) const {
  if (m.rows() != size_ || m.cols() != size_) throw std::invalid_argument("matrix size mismatch");
  return coords_.coordinates(flatten(m));
}

Weight MatLieAlg::restrict(const Weight& w) const {
  if (static_cast<int>(w.size()) != size_) throw std::invalid_argument("gl weight has the wrong length");
  Weight out;
  switch (kind_) {
    case LieKind::gl:
      return w;
    case LieKind::sl:
      for (int i = 0; i + 1 < size_; ++i) out.push_back(w[i] - w[size_ - 1]);
      return out;
    case LieKind::sp: {
      const int m = size_ / 2;
      for (int i = 0; i < m; ++i) out.push_back(w[i] - w[m + i]);
      return out;
    }
  }
  return out;
}

Weight MatLieAlg::to_gl(const Weight& w) const {
  if (static_cast<int>(w.size()) != rank())
    throw std::invalid_argument("weight for " + to_string(kind_) + std::to_string(size_) + " needs " +
                                std::to_string(rank()) + " entries, got " + std::to_string(w.size()));
  Weight g = w;
  g.resize(size_, 0);
  return g;
}

bool MatLieAlg::is_dominant(const Weight& w) const {
  if (static_cast<int>(w.size()) != rank()) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) return false;
  if (kind_ != LieKind::gl && !w.empty() && w.back() < 0) return false;
  return true;
}

MatLieAlg build_algebra(LieKind kind, int size) {
  if (size < 1) throw std::invalid_argument("matrix Lie algebra needs size >= 1");
  if (kind == LieKind::sp && size % 2 != 0) throw std::invalid_argument("sp needs even size, got " + std::to_string(size));
  if (kind == LieKind::sl && size < 2) throw std::invalid_argument("sl needs size >= 2");
  MatLieAlg a;
  a.kind_ = kind;
  a.size_ = size;
  const int n = size;
  auto E = [n](int i, int j) { return unit_matrix(n, i, j); };
  auto add = [&a](Mat m, std::string name) {
    a.basis_.push_back(std::move(m));
    a.names_.push_back(std::move(name));
  };
  auto add_root = [&a](Weight root, Mat up, Mat down) {
    a.roots_.push_back(std::move(root));
    a.raising_.push_back(std::move(up));
    a.lowering_.push_back(std::move(down));
  };

  if (kind == LieKind::gl || kind == LieKind::sl) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j || kind == LieKind::gl) add(E(i, j), ename(i, j));
    if (kind == LieKind::gl) {
      for (int i = 0; i < n; ++i) a.cartan_.push_back(E(i, i));
    } else {
      for (int i = 0; i + 1 < n; ++i) {
        Mat h = E(i, i) - E(i + 1, i + 1);
        add(h, "H" + std::to_string(i + 1));
        a.cartan_.push_back(h);
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Weight g(n, 0);
        g[i] = 1;
        g[j] = -1;
        if (j == i + 1) a.simple_.push_back(a.roots_.size());
        add_root(a.restrict(g), E(i, j), E(j, i));
      }
  } else {
    const int m = n / 2;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Mat x = E(i, j) - E(j + m, i + m);
        add(x, "A" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
        if (i == j) a.cartan_.push_back(x);
      }
    for (int s = 0; s < m; ++s)
      for (int k = s; k < m; ++k) add(E(s, k + m) + E(k, s + m), "B" + std::to_string(s + 1) + "_" + std::to_string(k + 1));
    for (int s = 0; s < m; ++s)
      for (int k = s; k < m; ++k) add(E(s + m, k) + E(k + m, s), "C" + std::to_string(s + 1) + "_" + std::to_string(k + 1));
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        Weight r(m, 0);
        r[i] = 1;
        r[j] = -1;
        if (j == i + 1) a.simple_.push_back(a.roots_.size());
        add_root(r, E(i, j) - E(j + m, i + m), E(j, i) - E(i + m, j + m));
      }
    for (int s = 0; s < m; ++s)
      for (int k = s; k < m; ++k) {
        Weight r(m, 0);
        r[s] += 1;
        r[k] += 1;
        if (s == m - 1 && k == m - 1) a.simple_.push_back(a.roots_.size());
        add_root(r, E(s, k + m) + E(k, s + m), E(s + m, k) + E(k + m, s));
      }
  }
  std::vector<SparseVec<Rational>> flat;
  for (const auto& b : a.basis_) flat.push_back(flatten(b));
  a.coords_ = CoordinateSystem<Rational>(flat, static_cast<std::size_t>(n * n));
  for (const auto& x : a.basis_)
    for (const auto& y : a.basis_) a.structure_.push_back(a.coordinates(commutator(x, y)));
  return a;
}

Weight sl_from_fundamental(const Weight& a) {
  Weight w(a.size(), 0);
  int acc = 0;
  for (std::size_t j = a.size(); j-- > 0;) {
    acc += a[j];
    w[j] = acc;
  }
  return w;
}

Weight sl_to_fundamental(const Weight& w) {
  Weight a(w.size(), 0);
  for (std::size_t j = 0; j < w.size(); ++j) a[j] = w[j] - (j + 1 < w.size() ? w[j + 1] : 0);
  return a;
}

Weight dual_weight(LieKind kind, const Weight& w) {
  const std::size_t len = w.size();
  Weight out(len, 0);
  switch (kind) {
    case LieKind::gl:
      for (std::size_t i = 0; i < len; ++i) out[i] = -w[len - 1 - i];
      return out;
    case LieKind::sl: {
      // lift to (w, 0), reverse and negate, normalize the last entry back to 0
      Weight full = w;
      full.push_back(0);
      const std::size_t n = full.size();
      for (std::size_t i = 0; i < len; ++i) out[i] = full[0] - full[n - 1 - i];
      return out;
    }
    case LieKind::sp:
      return w;
  }
  return out;
}

namespace {

// The tensor product of exterior powers of the natural gl_N representation, one factor per column.
struct Ambient {
  int N = 0;
  std::vector<int> factor_size;
  std::vector<std::vector<unsigned>> masks;      // per factor size k: subsets of size k in increasing order
  std::vector<std::vector<int>> pos;             // per factor size k: mask -> position
  std::vector<std::size_t> stride;
  std::size_t dim = 1;

  Ambient(int n, const Weight& columns_from) : N(n) {
    // columns_from is a non-negative weakly decreasing gl weight
    masks.resize(n + 1);
    pos.assign(n + 1, std::vector<int>(1u << n, -1));
    for (int k = 0; k <= n; ++k) {
      for (unsigned s = 0; s < (1u << n); ++s)
        if (std::popcount(s) == k) {
          pos[k][s] = static_cast<int>(masks[k].size());
          masks[k].push_back(s);
        }
    }
    for (int k = 1; k <= n; ++k) {
      int a = columns_from[k - 1] - (k < n ? columns_from[k] : 0);
      for (int r = 0; r < a; ++r) factor_size.push_back(k);
    }
    stride.assign(factor_size.size(), 1);
    for (std::size_t f = factor_size.size(); f-- > 0;) {
      stride[f] = dim;
      dim *= masks[factor_size[f]].size();
      if (dim > 20'000'000) throw std::invalid_argument("highest weight too large for the tensor construction");
    }
  }

  std::size_t local(std::size_t idx, std::size_t f) const {
    return (idx / stride[f]) % masks[factor_size[f]].size();
  }

  Weight gl_weight(std::size_t idx) const {
    Weight w(N, 0);
    for (std::size_t f = 0; f < factor_size.size(); ++f) {
      unsigned s = masks[factor_size[f]][local(idx, f)];
      for (int i = 0; i < N; ++i)
        if (s >> i & 1u) ++w[i];
    }
    return w;
  }

  SparseVec<Rational> apply(const Mat& m, const SparseVec<Rational>& v) const {
    struct Entry {
      int i, j;
      Rational c;
    };
    std::vector<Entry> nz;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        if (m(i, j) != 0) nz.push_back({i, j, m(i, j)});
    std::map<std::size_t, Rational> acc;
    for (const auto& [idx, x] : v) {
      for (std::size_t f = 0; f < factor_size.size(); ++f) {
        const int k = factor_size[f];
        const std::size_t li = local(idx, f);
        const unsigned s = masks[k][li];
        for (const auto& e : nz) {
          if (!(s >> e.j & 1u)) continue;
          if (e.i == e.j) {
            acc[idx] += x * e.c;
            continue;
          }
          if (s >> e.i & 1u) continue;
          unsigned t = (s & ~(1u << e.j)) | (1u << e.i);
          int lo = std::min(e.i, e.j), hi = std::max(e.i, e.j);
          unsigned between = s & ~(1u << e.j) & (((1u << hi) - 1u) & ~((1u << (lo + 1)) - 1u));
          int sign = std::popcount(between) % 2 ? -1 : 1;
          std::size_t target = idx - li * stride[f] + static_cast<std::size_t>(pos[k][t]) * stride[f];
          Rational term = x * e.c;
          if (sign < 0) term = -term;
          acc[target] += term;
        }
      }
    }
    return SparseVec<Rational>::from_map(dim, acc);
  }
};

// Everything needed for Freudenthal and Weyl in a Euclidean epsilon space.
struct EpsData {
  Weight hw;
  std::vector<Weight> pos_roots;
  std::vector<int> heights;
  std::vector<Weight> simple;
  std::vector<Rational> rho;
};

EpsData eps_data(const MatLieAlg& alg, const Weight& hw) {
  EpsData d;
  const int n = alg.size();
  if (alg.kind() == LieKind::sp) {
    const int m = n / 2;
    d.hw = hw;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        Weight r(m, 0);
        r[i] = 1;
        r[j] = -1;
        d.pos_roots.push_back(r);
        d.heights.push_back(j - i);
        if (j == i + 1) d.simple.push_back(r);
      }
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        Weight r(m, 0);
        r[i] += 1;
        r[j] += 1;
        d.pos_roots.push_back(r);
        d.heights.push_back((m - 1 - i) + (m - 1 - j) + 1);
        if (i == m - 1) d.simple.push_back(r);
      }
    for (int i = 0; i < m; ++i) d.rho.push_back(Rational(m - i));
  } else {
    d.hw = alg.to_gl(hw);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Weight r(n, 0);
        r[i] = 1;
        r[j] = -1;
        d.pos_roots.push_back(r);
        d.heights.push_back(j - i);
        if (j == i + 1) d.simple.push_back(r);
      }
    for (int i = 0; i < n; ++i) d.rho.push_back(Rational(n - 1 - i));
  }
  return d;
}

Rational dot(const std::vector<Rational>& a, const Weight& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

long idot(const Weight& a, const Weight& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  return s;
}

std::vector<Rational> plus_rho(const Weight& w, const std::vector<Rational>& rho) {
  std::vector<Rational> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = rho[i] + w[i];
  return out;
}

Rational norm2(const std::vector<Rational>& v) {
  Rational s = 0;
  for (const auto& x : v) s += x * x;
  return s;
}

Weight add_scaled(const Weight& a, const Weight& b, int k) {
  Weight out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += k * b[i];
  return out;
}

}  // namespace

Mat IrrepModule::action(const Mat& m) const {
  auto c = alg_.coordinates(m);
  Mat out = zero_matrix(static_cast<int>(dim()), static_cast<int>(dim()));
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) out += rho_[k] * c[k];
  return out;
}

std::map<Weight, long> IrrepModule::weight_census() const {
  std::map<Weight, long> out;
  for (const auto& w : weights_) ++out[w];
  return out;
}

IrrepModule irrep(const MatLieAlg& alg, const Weight& hw) {
  if (!alg.is_dominant(hw))
    throw std::invalid_argument("weight is not dominant for " + to_string(alg.kind()) + std::to_string(alg.size()));
  const int n = alg.size();
  Weight g = alg.to_gl(hw);
  int shift = 0;
  if (alg.kind() == LieKind::gl && !g.empty() && g.back() < 0) {
    shift = -g.back();
    for (auto& x : g) x += shift;
  }
  Ambient amb(n, g);

  EchelonBasis<Rational> eb(amb.dim);
  std::vector<SparseVec<Rational>> queue{SparseVec<Rational>::unit(amb.dim, 0)};
  eb.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t s : alg.simple()) {
      SparseVec<Rational> w = amb.apply(alg.lowering()[s], queue[head]);
      if (!w.empty() && eb.insert(w)) queue.push_back(std::move(w));
    }
  }

  IrrepModule mod;
  mod.alg_ = alg;
  mod.highest_ = hw;
  mod.ambient_ = eb.rows();
  std::vector<std::size_t> piv;
  for (const auto& row : mod.ambient_) {
    piv.push_back(row.leading_index());
    Weight w = amb.gl_weight(row.leading_index());
    for (auto& x : w) x -= shift;
    mod.weights_.push_back(alg.restrict(w));
  }
  const int d = static_cast<int>(mod.ambient_.size());
  for (const auto& b : alg.basis()) {
    Mat r = zero_matrix(d, d);
    for (int c = 0; c < d; ++c) {
      SparseVec<Rational> y = amb.apply(b, mod.ambient_[c]);
      for (int k = 0; k < d; ++k) r(k, c) = y.coeff(piv[k]);
    }
    if (shift != 0) {
      Rational tr = b.trace();
      if (tr != 0)
        for (int k = 0; k < d; ++k) r(k, k) -= tr * shift;
    }
    mod.rho_.push_back(std::move(r));
  }
  return mod;
}

std::map<Weight, long> weight_multiplicities(const MatLieAlg& alg, const Weight& hw) {
  if (!alg.is_dominant(hw)) throw std::invalid_argument("weight is not dominant");
  EpsData e = eps_data(alg, hw);
  std::map<Weight, long> mult;
  mult[e.hw] = 1;
  const Rational top = norm2(plus_rho(e.hw, e.rho));
  std::vector<Weight> current{e.hw};
  for (int h = 1; !current.empty(); ++h) {
    std::set<Weight> cand;
    for (const auto& mu : current)
      for (const auto& a : e.simple) cand.insert(add_scaled(mu, a, -1));
    std::vector<Weight> next;
    for (const auto& nu : cand) {
      Rational num = 0;
      for (std::size_t r = 0; r < e.pos_roots.size(); ++r) {
        const auto& a = e.pos_roots[r];
        for (int k = 1; h - k * e.heights[r] >= 0; ++k) {
          Weight up = add_scaled(nu, a, k);
          auto it = mult.find(up);
          if (it == mult.end()) continue;
          num += Rational(it->second) * idot(up, a);
        }
      }
      num *= 2;
      Rational den = top - norm2(plus_rho(nu, e.rho));
      if (den == 0) {
        if (num != 0) throw std::logic_error("Freudenthal recursion hit a zero denominator");
        continue;
      }
      Rational m = num / den;
      if (!is_integer(m) || m < 0) throw std::logic_error("Freudenthal produced a non-integral multiplicity");
      if (m != 0) {
        mult[nu] = to_long(m);
        next.push_back(nu);
      }
    }
    current = std::move(next);
  }
  if (alg.kind() == LieKind::sp) return mult;
  std::map<Weight, long> out;
  for (const auto& [w, k] : mult) out[alg.restrict(w)] += k;
  return out;
}

Integer weyl_dim(const MatLieAlg& alg, const Weight& hw) {
  if (!alg.is_dominant(hw)) throw std::invalid_argument("weight is not dominant");
  EpsData e = eps_data(alg, hw);
  auto lr = plus_rho(e.hw, e.rho);
  Rational d = 1;
  for (const auto& a : e.pos_roots) d *= dot(lr, a) / dot(e.rho, a);
  if (!is_integer(d)) throw std::logic_error("Weyl dimension is not an integer");
  return boost::multiprecision::numerator(d);
}

}  // namespace polytor
