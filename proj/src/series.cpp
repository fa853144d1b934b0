#include "wildram/series.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "wildram/config.hpp"
#include "wildram/errors.hpp"

namespace wildram {

LaurentSeries::LaurentSeries(const FqCtx& F) : F_(&F) {}

LaurentSeries::LaurentSeries(const FqCtx& F, fq_t c, long k) : F_(&F) {
  if (c != 0) {
    lead_ = k;
    c_.push_back(c);
  }
}

LaurentSeries::LaurentSeries(const FqCtx& F, const std::map<long, fq_t>& terms,
                             std::optional<long> prec)
    : F_(&F) {
  if (prec) {
    exact_ = false;
    prec_ = *prec;
  }
  if (!terms.empty()) {
    long lo = terms.begin()->first;
    long hi = terms.rbegin()->first;
    for (const auto& [k, c] : terms)
      if (c != 0 && !exact_ && k >= prec_)
        throw DomainError("term at exponent " + std::to_string(k) +
                          " is not below the stated precision " + std::to_string(prec_));
    lead_ = lo;
    c_.assign(static_cast<size_t>(hi - lo + 1), 0);
    for (const auto& [k, c] : terms) c_[static_cast<size_t>(k - lo)] = c;
  }
  normalize();
}

void LaurentSeries::normalize() {
  if (exact_) {
    prec_ = kValInf;
  } else {
    long end = lead_ + static_cast<long>(c_.size());
    if (end > prec_) c_.resize(static_cast<size_t>(std::max(0L, prec_ - lead_)));
  }
  size_t i = 0;
  while (i < c_.size() && c_[i] == 0) ++i;
  if (i > 0) {
    lead_ += static_cast<long>(i);
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(i));
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.empty()) lead_ = 0;
}

void LaurentSeries::require_same_field(const LaurentSeries& b) const {
  if (F_ != b.F_)
    throw DomainError("series arguments live over different coefficient fields");
}

long LaurentSeries::valuation() const {
  if (!c_.empty()) return lead_;
  if (exact_) return kValInf;
  throw PrecisionExhausted(
      "valuation undecidable: all coefficients below x^" + std::to_string(prec_) +
          " vanish and the series is inexact",
      2 * default_window());
}

fq_t LaurentSeries::at(long k) const {
  if (!exact_ && k >= prec_)
    throw PrecisionExhausted("coefficient of x^" + std::to_string(k) +
                                 " lies beyond the known window (prec " +
                                 std::to_string(prec_) + ")",
                             default_window() + (k - prec_ + 1));
  if (k < lead_ || k >= lead_ + static_cast<long>(c_.size())) return 0;
  return c_[static_cast<size_t>(k - lead_)];
}

std::optional<fq_t> LaurentSeries::known_at(long k) const {
  if (!exact_ && k >= prec_) return std::nullopt;
  if (k < lead_ || k >= lead_ + static_cast<long>(c_.size())) return static_cast<fq_t>(0);
  return c_[static_cast<size_t>(k - lead_)];
}

std::vector<std::pair<long, fq_t>> LaurentSeries::terms() const {
  std::vector<std::pair<long, fq_t>> out;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out.emplace_back(lead_ + static_cast<long>(i), c_[i]);
  return out;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& b) const {
  require_same_field(b);
  LaurentSeries r(*F_);
  r.exact_ = exact_ && b.exact_;
  r.prec_ = std::min(prec_, b.prec_);
  if (c_.empty() && b.c_.empty()) {
    r.normalize();
    return r;
  }
  long lo = kValInf, hi = -kValInf;
  for (const auto* s : {this, &b}) {
    if (s->c_.empty()) continue;
    lo = std::min(lo, s->lead_);
    hi = std::max(hi, s->lead_ + static_cast<long>(s->c_.size()));
  }
  r.lead_ = lo;
  r.c_.assign(static_cast<size_t>(hi - lo), 0);
  for (size_t i = 0; i < c_.size(); ++i)
    r.c_[static_cast<size_t>(lead_ - lo) + i] = c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) {
    auto& slot = r.c_[static_cast<size_t>(b.lead_ - lo) + i];
    slot = F_->add(slot, b.c_[i]);
  }
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& b) const { return *this + (-b); }

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.c_) c = F_->neg(c);
  return r;
}

LaurentSeries LaurentSeries::scaled(fq_t c) const {
  if (c == 0) return LaurentSeries(*F_);
  LaurentSeries r = *this;
  for (auto& v : r.c_) v = F_->mul(v, c);
  return r;
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& b) const {
  require_same_field(b);
  if (is_zero() || b.is_zero()) return LaurentSeries(*F_);
  LaurentSeries r(*F_);
  if (c_.empty() || b.c_.empty()) {
    // One factor is O(x^prec): only a valuation bound survives.
    long pa = c_.empty() ? prec_ : lead_;
    long pb = b.c_.empty() ? b.prec_ : b.lead_;
    r.exact_ = false;
    r.prec_ = sat_add(pa, pb);
    r.normalize();
    return r;
  }
  r.exact_ = exact_ && b.exact_;
  r.prec_ = std::min(sat_add(prec_, b.lead_), sat_add(b.prec_, lead_));
  r.lead_ = lead_ + b.lead_;
  r.c_.assign(c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      r.c_[i + j] = F_->add(r.c_[i + j], F_->mul(c_[i], b.c_[j]));
  }
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::operator/(const LaurentSeries& b) const {
  require_same_field(b);
  if (b.is_zero()) throw DivisionByZero("division by the zero series");
  if (b.c_.empty())
    throw PrecisionExhausted(
        "divisor vanishes on its known window (prec " + std::to_string(b.prec_) + ")",
        2 * default_window());
  long vb = b.lead_;
  if (is_zero()) return LaurentSeries(*F_);
  if (c_.empty()) {
    LaurentSeries r(*F_);
    r.exact_ = false;
    r.prec_ = sat_add(prec_, -vb);
    r.normalize();
    return r;
  }
  long va = lead_;
  if (b.exact_ && b.c_.size() == 1) {
    // Monomial divisor: exact shift and scale.
    LaurentSeries r = scaled(F_->inv(b.c_[0]));
    r.lead_ -= vb;
    r.prec_ = sat_add(r.prec_, -vb);
    return r;
  }
  long out_lead = va - vb;
  long out_prec;
  if (exact_ && b.exact_) {
    out_prec = out_lead + default_window();
  } else {
    out_prec = sat_add(std::min(prec_, sat_add(sat_add(va, b.prec_), -vb)), -vb);
  }
  long n = out_prec - out_lead;
  std::vector<fq_t> rem(static_cast<size_t>(n), 0);
  for (long i = 0; i < n; ++i) {
    long k = va + i;
    if (k >= lead_ && k < lead_ + static_cast<long>(c_.size()))
      rem[static_cast<size_t>(i)] = c_[static_cast<size_t>(k - lead_)];
  }
  std::vector<fq_t> bb(static_cast<size_t>(n), 0);
  for (long j = 0; j < n && j < static_cast<long>(b.c_.size()); ++j)
    bb[static_cast<size_t>(j)] = b.c_[static_cast<size_t>(j)];
  fq_t ib0 = F_->inv(bb[0]);
  LaurentSeries r(*F_);
  r.exact_ = false;
  r.prec_ = out_prec;
  r.lead_ = out_lead;
  r.c_.assign(static_cast<size_t>(n), 0);
  for (long i = 0; i < n; ++i) {
    fq_t q = F_->mul(rem[static_cast<size_t>(i)], ib0);
    r.c_[static_cast<size_t>(i)] = q;
    if (q == 0) continue;
    for (long j = 1; i + j < n && j < static_cast<long>(b.c_.size()); ++j)
      rem[static_cast<size_t>(i + j)] =
          F_->sub(rem[static_cast<size_t>(i + j)], F_->mul(q, bb[static_cast<size_t>(j)]));
  }
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::inverse() const { return one(*F_) / *this; }

LaurentSeries LaurentSeries::pow_int(long n) const {
  if (n < 0) return inverse().pow_int(-n);
  LaurentSeries acc = one(*F_);
  LaurentSeries base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    if (n >>= 1) base = base * base;
  }
  return acc;
}

LaurentSeries LaurentSeries::frobenius() const {
  int p = F_->p();
  LaurentSeries r(*F_);
  r.exact_ = exact_;
  r.prec_ = sat_mul(prec_, p);
  if (!c_.empty()) {
    r.lead_ = lead_ * p;
    r.c_.assign((c_.size() - 1) * static_cast<size_t>(p) + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
      r.c_[i * static_cast<size_t>(p)] = F_->frobenius(c_[i]);
  }
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::substitute_power(long n) const {
  if (n < 1) throw DomainError("substitute_power requires a positive exponent scale");
  LaurentSeries r(*F_);
  r.exact_ = exact_;
  r.prec_ = sat_mul(prec_, n);
  if (!c_.empty()) {
    r.lead_ = lead_ * n;
    r.c_.assign((c_.size() - 1) * static_cast<size_t>(n) + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i * static_cast<size_t>(n)] = c_[i];
  }
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::substitute(const LaurentSeries& s) const {
  require_same_field(s);
  long vs = s.valuation();
  if (vs < 1)
    throw PreconditionFailed("substitution target must have valuation >= 1, got " +
                             std::to_string(vs));
  LaurentSeries acc(*F_);
  auto ts = terms();
  LaurentSeries cur = one(*F_);
  long cur_exp = 0;
  for (const auto& [k, c] : ts) {
    cur = cur * s.pow_int(k - cur_exp);
    cur_exp = k;
    acc = acc + cur.scaled(c);
  }
  if (!exact_) acc = acc.truncated(sat_mul(prec_, vs));
  return acc;
}

LaurentSeries LaurentSeries::truncated(long new_prec) const {
  if (new_prec >= prec_) return *this;
  LaurentSeries r = *this;
  r.exact_ = false;
  r.prec_ = new_prec;
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::with_window(long window) const {
  if (window_empty()) return *this;
  return truncated(sat_add(valuation(), window));
}

bool LaurentSeries::operator==(const LaurentSeries& b) const {
  return F_ == b.F_ && lead_ == b.lead_ && c_ == b.c_ && exact_ == b.exact_ &&
         prec_ == b.prec_;
}

bool LaurentSeries::agrees_with(const LaurentSeries& b) const {
  if (F_ != b.F_) return false;
  long bound = std::min(prec_, b.prec_);
  for (const auto& [k, c] : terms())
    if (k < bound && b.at(k) != c) return false;
  for (const auto& [k, c] : b.terms())
    if (k < bound && at(k) != c) return false;
  return true;
}

std::string LaurentSeries::to_string() const {
  std::string out;
  for (const auto& [k, c] : terms()) {
    if (!out.empty()) out += " + ";
    std::string cs = F_->to_string(c);
    if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
    if (k == 0) {
      out += cs;
      continue;
    }
    std::string xs = (k == 1) ? "x" : "x^" + std::to_string(k);
    out += (c == 1) ? xs : cs + "*" + xs;
  }
  if (!exact_) {
    if (!out.empty()) out += " + ";
    out += "O(x^" + std::to_string(prec_) + ")";
  }
  return out.empty() ? "0" : out;
}

namespace {

struct SumPart {
  bool negative;
  std::string body;
};

// Splits at top-level + and -. A sign directly after '^', '*', '(' or at
// the start binds to the factor instead (exponents, leading minus).
std::vector<SumPart> split_sum(const std::string& s) {
  std::vector<SumPart> parts;
  std::string cur;
  bool neg = false;
  int depth = 0;
  char prev = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') {
      if (--depth < 0) throw ParseError("unbalanced ')' in series literal");
    }
    if (depth == 0 && (ch == '+' || ch == '-') && prev != '^' && prev != '*' &&
        prev != '(' && prev != 0) {
      parts.push_back({neg, cur});
      cur.clear();
      neg = (ch == '-');
      prev = 0;
      continue;
    }
    if (prev == 0 && (ch == '+' || ch == '-') && cur.empty()) {
      // sign opening the very first term
      neg = (ch == '-');
      prev = ch;
      continue;
    }
    cur += ch;
    prev = ch;
  }
  if (depth != 0) throw ParseError("unbalanced '(' in series literal");
  parts.push_back({neg, cur});
  return parts;
}

std::vector<std::string> split_factors(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == '*' && depth == 0) {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    cur += ch;
  }
  out.push_back(cur);
  return out;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

long parse_long(const std::string& s) {
  std::string body = s;
  bool neg = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    neg = body[0] == '-';
    body.erase(0, 1);
  }
  if (!all_digits(body)) throw ParseError("expected an integer, got '" + s + "'");
  long v = std::strtol(body.c_str(), nullptr, 10);
  return neg ? -v : v;
}

// One summand: accumulated coefficient and x-exponent. allow_x is false
// inside parenthesized residue-field coefficients.
std::pair<fq_t, long> parse_term(const FqCtx& F, const std::string& term, bool allow_x);

fq_t parse_scalar(const FqCtx& F, const std::string& s) {
  fq_t acc = 0;
  for (const auto& part : split_sum(s)) {
    auto [c, k] = parse_term(F, part.body, false);
    if (k != 0) throw ParseError("'x' is not allowed inside a coefficient");
    acc = F.add(acc, part.negative ? F.neg(c) : c);
  }
  return acc;
}

std::pair<fq_t, long> parse_term(const FqCtx& F, const std::string& term, bool allow_x) {
  if (term.empty()) throw ParseError("empty term in series literal");
  fq_t coeff = 1;
  long exp = 0;
  for (const auto& f : split_factors(term)) {
    if (f.empty()) throw ParseError("empty factor in term '" + term + "'");
    if (f[0] == 'x') {
      if (!allow_x) throw ParseError("'x' is not allowed inside a coefficient");
      if (f == "x") {
        exp += 1;
      } else if (f.size() > 2 && f[1] == '^') {
        exp += parse_long(f.substr(2));
      } else {
        throw ParseError("malformed power of x: '" + f + "'");
      }
    } else if (all_digits(f)) {
      long v = std::strtol(f.c_str(), nullptr, 10);
      if (v >= F.p())
        throw ParseError("coefficient " + f + " is not reduced modulo p = " +
                         std::to_string(F.p()));
      coeff = F.mul(coeff, F.from_int(v));
    } else if (f[0] == 'g') {
      if (F.e() == 1)
        throw ParseError("residue generator 'g' is undefined over a prime field");
      fq_t g = F.from_coeffs({0, 1});
      if (f == "g") {
        coeff = F.mul(coeff, g);
      } else if (f.size() > 2 && f[1] == '^' && all_digits(f.substr(2))) {
        coeff = F.mul(coeff, F.pow(g, parse_long(f.substr(2))));
      } else {
        throw ParseError("malformed power of g: '" + f + "'");
      }
    } else if (f.front() == '(' && f.back() == ')') {
      coeff = F.mul(coeff, parse_scalar(F, f.substr(1, f.size() - 2)));
    } else {
      throw ParseError("unrecognized factor '" + f + "'");
    }
  }
  return {coeff, exp};
}

}  // namespace

LaurentSeries parse_series(const FqCtx& F, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty series literal");

  std::map<long, fq_t> terms;
  std::optional<long> prec;
  for (const auto& part : split_sum(s)) {
    const std::string& body = part.body;
    if (body.size() > 2 && body.compare(0, 2, "O(") == 0 && body.back() == ')') {
      std::string inner = body.substr(2, body.size() - 3);
      long k;
      if (inner == "x") {
        k = 1;
      } else if (inner.size() > 2 && inner[0] == 'x' && inner[1] == '^') {
        k = parse_long(inner.substr(2));
      } else {
        throw ParseError("malformed precision marker '" + body + "'");
      }
      prec = prec ? std::min(*prec, k) : k;
      continue;
    }
    auto [c, k] = parse_term(F, body, true);
    if (part.negative) c = F.neg(c);
    auto& slot = terms[k];
    slot = F.add(slot, c);
  }
  if (prec) {
    for (const auto& [k, c] : terms)
      if (c != 0 && k >= *prec)
        throw ParseError("term at x^" + std::to_string(k) +
                         " conflicts with the precision marker O(x^" +
                         std::to_string(*prec) + ")");
  }
  return LaurentSeries(F, terms, prec);
}

}  // namespace wildram
