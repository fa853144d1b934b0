#include "wildram/tower.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "wildram/config.hpp"
#include "wildram/errors.hpp"

namespace wildram {

namespace {

std::string combo_to_string(const Vec& c) {
  std::string s = "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

}  // namespace

Tower::Tower(const FqCtx& F, std::vector<LaurentSeries> rhs, long tame_index)
    : F_(&F), rhs_(std::move(rhs)), tame_index_(tame_index) {
  for (const auto& f : rhs_) {
    if (&f.field() != F_)
      throw DomainError("tower rhs entries must live over the tower's field");
  }
  if (tame_index_ < 1) throw DomainError("tame_index must be positive");
  if (std::gcd(tame_index_, static_cast<long>(F.p())) != 1)
    throw DomainError("tame_index must be coprime to p");

  degree_ = 1;
  for (size_t i = 0; i < rhs_.size(); ++i) {
    degree_ *= F.p();
    if (degree_ > 27)
      throw DomainError("tower degree exceeds the supported envelope (p^l <= 27)");
  }

  if (!rhs_.empty()) {
    TowerValidation val = validate_tower(rhs_);
    if (!val.ok) {
      std::ostringstream msg;
      msg << "tower is not totally ramified:";
      const char* sep = " ";
      for (const auto& fail : val.failures) {
        msg << sep << "combo " << combo_to_string(fail.coeffs) << " is "
            << to_string(fail.status);
        sep = "; ";
      }
      throw DomainError(msg.str());
    }
    lines_ = std::move(val.lines);
    reduced_.reserve(rhs_.size());
    for (const auto& f : rhs_) reduced_.push_back(reduce_rhs(f));
  }
}

std::vector<long> Tower::gen_breaks() const {
  std::vector<long> out;
  out.reserve(reduced_.size());
  for (const auto& r : reduced_) out.push_back(r.break_m);
  return out;
}

bool Tower::all_breaks_one() const {
  for (const auto& r : reduced_)
    if (r.break_m != 1) return false;
  return true;
}

size_t Tower::index_of(const std::vector<int>& e) const {
  if (e.size() != rhs_.size())
    throw DomainError("exponent vector length does not match tower height");
  size_t idx = 0;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] >= p())
      throw DomainError("monomial exponent out of range");
    idx = idx * static_cast<size_t>(p()) + static_cast<size_t>(e[i]);
  }
  return idx;
}

std::vector<int> Tower::exps_of(size_t idx) const {
  std::vector<int> e(rhs_.size(), 0);
  for (size_t i = rhs_.size(); i-- > 0;) {
    e[i] = static_cast<int>(idx % static_cast<size_t>(p()));
    idx /= static_cast<size_t>(p());
  }
  if (idx != 0) throw DomainError("monomial index out of range");
  return e;
}

LaurentSeries Tower::norm_to_base(const TowerElem& z) const {
  if (!z.tower().same_as(*this))
    throw DomainError("element belongs to a different tower");
  TowerElem cur = z;
  // Eliminate variables top-down; after eliminating T_t the result lies in
  // K[T_1..T_{t-1}], so every coordinate with e_t > 0 must have vanished.
  for (int t = ell(); t >= 1; --t) {
    TowerElem prod = cur;
    for (int c = 1; c < p(); ++c) {
      Vec sigma(ell(), 0);
      sigma[t - 1] = c;
      prod = prod * cur.galois(sigma);
    }
    for (size_t idx = 0; idx < prod.dim(); ++idx) {
      if (exps_of(idx)[t - 1] == 0) continue;
      if (!prod.coord(idx).window_empty())
        throw InternalError("conjugate product failed to eliminate a tower variable");
    }
    cur = prod;
  }
  return cur.coord(0);
}

long Tower::norm_valuation(const TowerElem& z) const {
  if (z.known_zero()) throw DomainError("valuation of the zero element");
  if (z.window_all_empty())
    throw PrecisionExhausted("element has no known coefficients",
                             2 * default_window());
  return norm_to_base(z).valuation();
}

TowerElem::TowerElem(const Tower& t)
    : tw_(&t), c_(static_cast<size_t>(t.degree()), LaurentSeries::zero(t.field())) {}

TowerElem TowerElem::from_base(const Tower& t, const LaurentSeries& a) {
  if (&a.field() != &t.field())
    throw DomainError("series field does not match the tower");
  TowerElem z(t);
  z.c_[0] = a;
  return z;
}

TowerElem TowerElem::constant(const Tower& t, fq_t c) {
  return from_base(t, LaurentSeries::monomial(t.field(), c, 0));
}

TowerElem TowerElem::generator(const Tower& t, int i) {
  if (i < 0 || i >= t.ell()) throw DomainError("generator index out of range");
  TowerElem z(t);
  std::vector<int> e(static_cast<size_t>(t.ell()), 0);
  e[static_cast<size_t>(i)] = 1;
  z.c_[t.index_of(e)] = LaurentSeries::one(t.field());
  return z;
}

bool TowerElem::known_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const LaurentSeries& s) { return s.is_zero(); });
}

bool TowerElem::window_all_empty() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const LaurentSeries& s) { return s.window_empty(); });
}

void TowerElem::require_same_tower(const TowerElem& b) const {
  if (!tw_->same_as(*b.tw_))
    throw DomainError("elements belong to different towers");
}

TowerElem TowerElem::operator+(const TowerElem& b) const {
  require_same_tower(b);
  TowerElem out(*tw_);
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] + b.c_[i];
  return out;
}

TowerElem TowerElem::operator-(const TowerElem& b) const {
  require_same_tower(b);
  TowerElem out(*tw_);
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] - b.c_[i];
  return out;
}

TowerElem TowerElem::operator-() const {
  TowerElem out(*tw_);
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
  return out;
}

TowerElem TowerElem::scaled(fq_t c) const {
  TowerElem out(*tw_);
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i].scaled(c);
  return out;
}

TowerElem TowerElem::scaled_series(const LaurentSeries& a) const {
  TowerElem out(*tw_);
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * a;
  return out;
}

TowerElem TowerElem::operator*(const TowerElem& b) const {
  require_same_tower(b);
  const int p = tw_->p();
  const int l = tw_->ell();

  // Accumulate the raw product on exponent vectors with entries up to
  // 2(p-1), then rewrite T_i^e (e >= p) via T_i^p = T_i + f_i until every
  // exponent is below p. Each rewrite lowers the total degree, so the
  // worklist terminates.
  std::map<std::vector<int>, LaurentSeries> work;
  auto addin = [&](const std::vector<int>& e, const LaurentSeries& s) {
    if (s.is_zero()) return;
    auto it = work.find(e);
    if (it == work.end())
      work.emplace(e, s);
    else
      it->second = it->second + s;
  };

  for (size_t ia = 0; ia < c_.size(); ++ia) {
    if (c_[ia].is_zero()) continue;
    std::vector<int> ea = tw_->exps_of(ia);
    for (size_t ib = 0; ib < b.c_.size(); ++ib) {
      if (b.c_[ib].is_zero()) continue;
      std::vector<int> e = tw_->exps_of(ib);
      for (int i = 0; i < l; ++i) e[static_cast<size_t>(i)] += ea[static_cast<size_t>(i)];
      addin(e, c_[ia] * b.c_[ib]);
    }
  }

  TowerElem out(*tw_);
  while (!work.empty()) {
    auto it = work.begin();
    std::vector<int> e = it->first;
    LaurentSeries s = it->second;
    work.erase(it);
    if (s.is_zero()) continue;
    int hi = -1;
    for (int i = 0; i < l; ++i)
      if (e[static_cast<size_t>(i)] >= p) {
        hi = i;
        break;
      }
    if (hi < 0) {
      size_t idx = tw_->index_of(e);
      out.c_[idx] = out.c_[idx] + s;
      continue;
    }
    std::vector<int> e1 = e, e2 = e;
    e1[static_cast<size_t>(hi)] -= p - 1;
    e2[static_cast<size_t>(hi)] -= p;
    addin(e1, s);
    addin(e2, s * tw_->f(hi));
  }
  return out;
}

TowerElem TowerElem::galois(const Vec& sigma) const {
  const int p = tw_->p();
  const int l = tw_->ell();
  if (static_cast<int>(sigma.size()) != l)
    throw DomainError("group element length does not match tower height");
  const FqCtx& F = tw_->field();

  // Binomial coefficients mod p for exponents below p.
  std::vector<std::vector<int>> binom(static_cast<size_t>(p));
  for (int n = 0; n < p; ++n) {
    binom[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1, 1);
    for (int k = 1; k < n; ++k)
      binom[static_cast<size_t>(n)][static_cast<size_t>(k)] =
          (binom[static_cast<size_t>(n) - 1][static_cast<size_t>(k) - 1] +
           binom[static_cast<size_t>(n) - 1][static_cast<size_t>(k)]) %
          p;
  }

  TowerElem out(*tw_);
  for (size_t idx = 0; idx < c_.size(); ++idx) {
    if (c_[idx].is_zero()) continue;
    std::vector<int> e = tw_->exps_of(idx);
    // Expand prod_i (T_i + c_i)^{e_i} term by term.
    std::vector<std::pair<std::vector<int>, fq_t>> terms;
    terms.emplace_back(std::vector<int>(static_cast<size_t>(l), 0), fq_t{1});
    for (int i = 0; i < l; ++i) {
      int ci = ((sigma[static_cast<size_t>(i)] % p) + p) % p;
      int ei = e[static_cast<size_t>(i)];
      if (ci == 0) {
        for (auto& t : terms) t.first[static_cast<size_t>(i)] = ei;
        continue;
      }
      fq_t cf = F.from_int(ci);
      std::vector<std::pair<std::vector<int>, fq_t>> next;
      next.reserve(terms.size() * (static_cast<size_t>(ei) + 1));
      for (const auto& t : terms) {
        for (int k = 0; k <= ei; ++k) {
          fq_t coeff = F.mul(
              t.second,
              F.mul(F.from_int(binom[static_cast<size_t>(ei)][static_cast<size_t>(k)]),
                    F.pow(cf, ei - k)));
          if (coeff == 0) continue;
          auto ee = t.first;
          ee[static_cast<size_t>(i)] = k;
          next.emplace_back(std::move(ee), coeff);
        }
      }
      terms = std::move(next);
    }
    for (const auto& t : terms) {
      size_t j = tw_->index_of(t.first);
      out.c_[j] = out.c_[j] + c_[idx].scaled(t.second);
    }
  }
  return out;
}

TowerElem TowerElem::pow_int(long n) const {
  if (n < 0) return inverse().pow_int(-n);
  TowerElem acc = TowerElem::one(*tw_);
  TowerElem base = *this;
  unsigned long k = static_cast<unsigned long>(n);
  while (k) {
    if (k & 1UL) acc = acc * base;
    base = (k >>= 1UL) ? base * base : base;
  }
  return acc;
}

TowerElem TowerElem::inverse() const {
  if (known_zero()) throw DivisionByZero("inverse of the zero element");
  if (window_all_empty())
    throw PrecisionExhausted("element has no known coefficients",
                             2 * default_window());
  const int p = tw_->p();
  const int l = tw_->ell();
  // A = product of all nontrivial conjugates; then A*z = N(z) lies in K and
  // z^{-1} = A / N(z).
  TowerElem A = TowerElem::one(*tw_);
  Vec sigma(static_cast<size_t>(l), 0);
  bool first = true;
  while (true) {
    int i = l - 1;
    while (i >= 0 && sigma[static_cast<size_t>(i)] == p - 1) {
      sigma[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++sigma[static_cast<size_t>(i)];
    if (first) {
      A = galois(sigma);
      first = false;
    } else {
      A = A * galois(sigma);
    }
  }
  TowerElem Nfull = A * (*this);
  LaurentSeries N = LaurentSeries::zero(tw_->field());
  if (!Nfull.in_base(&N))
    throw InternalError("conjugate product of an element left the base field");
  return A.scaled_series(N.inverse());
}

bool TowerElem::in_base(LaurentSeries* out) const {
  for (size_t idx = 1; idx < c_.size(); ++idx)
    if (!c_[idx].window_empty()) return false;
  if (out) *out = c_[0];
  return true;
}

bool TowerElem::operator==(const TowerElem& b) const {
  require_same_tower(b);
  return c_ == b.c_;
}

bool TowerElem::agrees_with(const TowerElem& b) const {
  require_same_tower(b);
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].agrees_with(b.c_[i])) return false;
  return true;
}

std::string TowerElem::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (size_t idx = 0; idx < c_.size(); ++idx) {
    if (c_[idx].is_zero()) continue;
    std::vector<int> e = tw_->exps_of(idx);
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "T" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (any) os << " + ";
    any = true;
    std::string cs = c_[idx].to_string();
    bool needs_parens = cs.find(" + ") != std::string::npos && !mono.empty();
    if (mono.empty()) {
      os << cs;
    } else if (cs == "1") {
      os << mono;
    } else {
      os << (needs_parens ? "(" + cs + ")" : cs) << "*" << mono;
    }
  }
  if (!any) return "0";
  return os.str();
}

}  // namespace wildram
