#include "ctoda/exact_scalar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ctoda {

double to_double(const Rat& r) { return r.convert_to<double>(); }

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::pair<Int, Int> squarefree_split(Int n) {
  if (n <= 0) throw EngineError("squarefree_split: argument must be positive");
  Int s = 1, m = 1;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) s *= p;
    if (e % 2) m *= p;
  }
  m *= n;  // leftover prime
  return {s, m};
}

std::pair<Rat, std::uint32_t> RadicalTower::adjoin_sqrt(const Rat& d) {
  if (d <= 0) throw EngineError("adjoin_sqrt: radicand must be positive, got " + rat_to_string(d));
  const Int p = numerator(d), q = denominator(d);
  auto [s, m] = squarefree_split(p * q);
  Rat coeff(s, q);
  if (m == 1) return {coeff, 0u};

  // sqrt(m) may already be expressible: look for a subset S of radicands with
  // m * prod(S) a perfect square, in which case sqrt(m) = t / prod_j sqrt(d_j).
  const std::size_t k = radicands_.size();
  for (std::uint32_t sub = 0; sub < (1u << k); ++sub) {
    Int prod = m;
    for (std::size_t j = 0; j < k; ++j)
      if (sub & (1u << j)) prod *= radicands_[j];
    auto [t, rest] = squarefree_split(prod);
    if (rest == 1) {
      Rat c = coeff * Rat(t);
      for (std::size_t j = 0; j < k; ++j)
        if (sub & (1u << j)) c /= Rat(radicands_[j]);
      return {c, sub << 1};
    }
  }
  if (radicands_.size() >= 30) throw EngineError("adjoin_sqrt: tower capacity exceeded");
  radicands_.push_back(m);
  return {coeff, 1u << radicands_.size()};  // bit index size()-1 -> mask bit size()
}

double RadicalTower::radical_value(std::size_t j) const {
  return std::sqrt(radicands_.at(j).convert_to<double>());
}

ExactScalar::ExactScalar(const Rat& v) {
  if (v != 0) terms_.push_back({0u, v});
}

ExactScalar::ExactScalar(std::shared_ptr<const RadicalTower> tower, std::vector<Term> terms)
    : tower_(std::move(tower)), terms_(std::move(terms)) {
  normalize();
}

ExactScalar ExactScalar::i() {
  ExactScalar r;
  r.terms_.push_back({kMonoI, Rat(1)});
  return r;
}

ExactScalar ExactScalar::monomial(std::shared_ptr<const RadicalTower> tower, std::uint32_t mask,
                                  const Rat& coeff) {
  ExactScalar r;
  r.tower_ = std::move(tower);
  if (coeff != 0) r.terms_.push_back({mask, coeff});
  r.normalize();
  return r;
}

void ExactScalar::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(t);
  }
  std::erase_if(out, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(out);
  bool uses_radical = false;
  for (auto& t : terms_)
    if (t.first > kMonoI) uses_radical = true;
  if (!uses_radical) tower_.reset();
}

const RadicalTower& ExactScalar::tower_ref() const {
  if (!tower_) throw EngineError("ExactScalar: missing radical tower");
  return *tower_;
}

bool ExactScalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0u);
}

Rat ExactScalar::as_rational() const {
  if (terms_.empty()) return Rat(0);
  if (is_rational()) return terms_[0].second;
  throw EngineError("ExactScalar: value is not rational: " + str());
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

static std::shared_ptr<const RadicalTower> merge_towers(
    const std::shared_ptr<const RadicalTower>& a, const std::shared_ptr<const RadicalTower>& b) {
  if (!a) return b;
  if (!b) return a;
  if (a != b) throw EngineError("ExactScalar: operands belong to different radical towers");
  return a;
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
  ExactScalar r;
  r.tower_ = merge_towers(tower_, o.tower_);
  r.terms_ = terms_;
  r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
  r.normalize();
  return r;
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const { return *this + (-o); }

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
  ExactScalar r;
  r.tower_ = merge_towers(tower_, o.tower_);
  r.terms_.reserve(terms_.size() * o.terms_.size());
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Rat c = ca * cb;
      const std::uint32_t common = ma & mb;
      if (common & kMonoI) c = -c;  // i * i = -1
      if (common >> 1) {
        const auto& rad = r.tower_ ? r.tower_->radicands()
                                   : throw EngineError("ExactScalar: radical product without tower");
        for (std::size_t j = 0; j < rad.size(); ++j)
          if (common & (1u << (j + 1))) c *= Rat(rad[j]);
      }
      r.terms_.push_back({ma ^ mb, c});
    }
  }
  r.normalize();
  return r;
}

ExactScalar ExactScalar::conj() const {
  ExactScalar r = *this;
  for (auto& t : r.terms_)
    if (t.first & kMonoI) t.second = -t.second;
  return r;
}

ExactScalar ExactScalar::real_part() const {
  ExactScalar r;
  r.tower_ = tower_;
  for (const auto& t : terms_)
    if (!(t.first & kMonoI)) r.terms_.push_back(t);
  r.normalize();
  return r;
}

ExactScalar ExactScalar::imag_part() const {
  ExactScalar r;
  r.tower_ = tower_;
  for (const auto& t : terms_)
    if (t.first & kMonoI) r.terms_.push_back({t.first ^ kMonoI, t.second});
  r.normalize();
  return r;
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw EngineError("ExactScalar: division by zero");
  if (is_rational()) return ExactScalar(Rat(1) / terms_[0].second);

  // Split off the highest monomial bit b: z = A + B*mu with A, B in the
  // subfield avoiding mu, then 1/z = (A - B*mu) / (A^2 - mu^2 B^2).
  std::uint32_t used = 0;
  for (const auto& t : terms_) used |= t.first;
  std::uint32_t b = 1u << (31 - __builtin_clz(used));
  ExactScalar A, B;
  A.tower_ = tower_;
  B.tower_ = tower_;
  for (const auto& t : terms_) {
    if (t.first & b)
      B.terms_.push_back({t.first ^ b, t.second});
    else
      A.terms_.push_back(t);
  }
  A.normalize();
  B.normalize();
  ExactScalar mu_sq;
  if (b == kMonoI)
    mu_sq = ExactScalar(Rat(-1));
  else
    mu_sq = ExactScalar(Rat(tower_ref().radicands()[__builtin_ctz(b) - 1]));
  ExactScalar norm = A * A - mu_sq * B * B;  // in the subfield
  ExactScalar mu = monomial(tower_, b, Rat(1));
  return (A - B * mu) * norm.inverse();
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const { return *this * o.inverse(); }

std::complex<double> ExactScalar::to_complex() const {
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [m, c] : terms_) {
    std::complex<double> v(to_double(c), 0.0);
    if (m & kMonoI) v *= std::complex<double>(0.0, 1.0);
    for (std::uint32_t j = 0; (m >> (j + 1)) != 0; ++j)
      if (m & (1u << (j + 1))) v *= tower_ref().radical_value(j);
    acc += v;
  }
  return acc;
}

std::string ExactScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    const Rat a = (!first && c < 0) ? Rat(-c) : c;
    first = false;
    std::string mono;
    if (m & kMonoI) mono += "i";
    for (std::uint32_t j = 0; (m >> (j + 1)) != 0; ++j)
      if (m & (1u << (j + 1))) {
        if (!mono.empty()) mono += "*";
        mono += "sqrt(" + tower_ref().radicands()[j].str() + ")";
      }
    if (mono.empty())
      os << a;
    else if (a == 1)
      os << mono;
    else if (a == -1)
      os << "-" << mono;
    else
      os << "(" << a << ")*" << mono;
  }
  return os.str();
}

}  // namespace ctoda
