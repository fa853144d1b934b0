#include "wildram/subspace.hpp"

#include <algorithm>
#include <set>

#include "wildram/errors.hpp"

namespace wildram {

namespace {

int mod_inv(int a, int p) {
  int r = 1;
  for (int k = 0; k < p - 2; ++k) r = r * a % p;
  return r;
}

}  // namespace

Subspace::Subspace(int p, int ambient_dim) : p_(p), n_(ambient_dim) {
  if (p < 2 || ambient_dim < 0)
    throw DomainError("invalid subspace parameters");
}

Subspace Subspace::span(int p, int ambient_dim, const std::vector<Vec>& gens) {
  Subspace s(p, ambient_dim);
  for (const auto& g : gens)
    if (static_cast<int>(g.size()) != ambient_dim)
      throw DomainError("generator length does not match the ambient dimension");
  std::vector<Vec> rows;
  for (const auto& g : gens) {
    Vec v(ambient_dim);
    for (int i = 0; i < ambient_dim; ++i) v[i] = ((g[i] % p) + p) % p;
    rows.push_back(v);
  }
  s.reduce(std::move(rows));
  return s;
}

Subspace Subspace::full(int p, int ambient_dim) {
  std::vector<Vec> gens;
  for (int i = 0; i < ambient_dim; ++i) {
    Vec e(ambient_dim, 0);
    e[i] = 1;
    gens.push_back(e);
  }
  return span(p, ambient_dim, gens);
}

void Subspace::reduce(std::vector<Vec> gens) {
  rows_.clear();
  int pivot_col = 0;
  size_t done = 0;
  while (pivot_col < n_ && done < gens.size()) {
    size_t found = gens.size();
    for (size_t r = done; r < gens.size(); ++r)
      if (gens[r][pivot_col] != 0) {
        found = r;
        break;
      }
    if (found == gens.size()) {
      ++pivot_col;
      continue;
    }
    std::swap(gens[done], gens[found]);
    int inv = mod_inv(gens[done][pivot_col], p_);
    for (int c = 0; c < n_; ++c) gens[done][c] = gens[done][c] * inv % p_;
    for (size_t r = 0; r < gens.size(); ++r) {
      if (r == done) continue;
      int f = gens[r][pivot_col];
      if (f == 0) continue;
      for (int c = 0; c < n_; ++c)
        gens[r][c] = ((gens[r][c] - f * gens[done][c]) % p_ + p_) % p_;
    }
    ++done;
    ++pivot_col;
  }
  for (size_t r = 0; r < done; ++r) rows_.push_back(gens[r]);
}

bool Subspace::contains(const Vec& v) const {
  if (static_cast<int>(v.size()) != n_)
    throw DomainError("vector length does not match the ambient dimension");
  Vec w(n_);
  for (int i = 0; i < n_; ++i) w[i] = ((v[i] % p_) + p_) % p_;
  for (const auto& row : rows_) {
    int pc = 0;
    while (pc < n_ && row[pc] == 0) ++pc;
    if (pc == n_) continue;
    int f = w[pc];
    if (f == 0) continue;
    for (int c = 0; c < n_; ++c) w[c] = ((w[c] - f * row[c]) % p_ + p_) % p_;
  }
  return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& row : other.rows_)
    if (!contains(row)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (p_ != other.p_ || n_ != other.n_)
    throw DomainError("subspace mismatch in sum");
  std::vector<Vec> gens = rows_;
  gens.insert(gens.end(), other.rows_.begin(), other.rows_.end());
  return span(p_, n_, gens);
}

Subspace Subspace::annihilator() const {
  // Solution space of basis * w^T = 0: pivot coordinates are determined by
  // the free ones.
  std::vector<int> pivot_cols;
  for (const auto& row : rows_) {
    int pc = 0;
    while (pc < n_ && row[pc] == 0) ++pc;
    pivot_cols.push_back(pc);
  }
  std::vector<Vec> gens;
  for (int free = 0; free < n_; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end())
      continue;
    Vec w(n_, 0);
    w[free] = 1;
    for (size_t r = 0; r < rows_.size(); ++r)
      w[pivot_cols[r]] = ((-rows_[r][free]) % p_ + p_) % p_;
    gens.push_back(w);
  }
  return span(p_, n_, gens);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (p_ != other.p_ || n_ != other.n_)
    throw DomainError("subspace mismatch in intersection");
  return annihilator().sum(other.annihilator()).annihilator();
}

std::vector<Vec> Subspace::elements() const {
  std::vector<Vec> out;
  long total = 1;
  for (int i = 0; i < dim(); ++i) total *= p_;
  for (long idx = 0; idx < total; ++idx) {
    Vec v(n_, 0);
    long rem = idx;
    for (int r = 0; r < dim(); ++r) {
      int c = static_cast<int>(rem % p_);
      rem /= p_;
      if (c != 0)
        for (int i = 0; i < n_; ++i) v[i] = (v[i] + c * rows_[r][i]) % p_;
    }
    out.push_back(v);
  }
  return out;
}

std::vector<Vec> Subspace::line_reps() const {
  std::set<Vec> reps;
  for (const auto& v : elements()) {
    int first = 0;
    for (int x : v)
      if (x != 0) {
        first = x;
        break;
      }
    if (first == 0) continue;
    int inv = mod_inv(first, p_);
    Vec r(n_);
    for (int i = 0; i < n_; ++i) r[i] = v[i] * inv % p_;
    reps.insert(r);
  }
  return {reps.begin(), reps.end()};
}

bool Subspace::operator<(const Subspace& other) const {
  if (dim() != other.dim()) return dim() < other.dim();
  return rows_ < other.rows_;
}

std::vector<Subspace> all_subspaces(int p, int n) {
  std::set<Subspace> seen;
  seen.insert(Subspace(p, n));
  // grow spans one vector at a time until closed
  std::vector<Subspace> frontier(seen.begin(), seen.end());
  long total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  while (!frontier.empty()) {
    std::vector<Subspace> next;
    for (const auto& s : frontier) {
      for (long idx = 1; idx < total; ++idx) {
        Vec v(n);
        long rem = idx;
        for (int i = 0; i < n; ++i) {
          v[i] = static_cast<int>(rem % p);
          rem /= p;
        }
        if (s.contains(v)) continue;
        auto gens = s.basis();
        gens.push_back(v);
        Subspace bigger = Subspace::span(p, n, gens);
        if (seen.insert(bigger).second) next.push_back(bigger);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace wildram
