#include "tsilab/sparse_vector.hpp"

#include <algorithm>

#include "tsilab/errors.hpp"
#include "tsilab/index_sets.hpp"

namespace tsilab {

namespace {
const Rational kZero(0);
}

SparseVector::SparseVector(std::initializer_list<Term> terms) {
  *this = from_terms(std::vector<Term>(terms));
}

SparseVector SparseVector::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  SparseVector out;
  for (auto& [index, value] : terms) {
    if (index < 1)
      raise(Errc::invalid_argument, "vector indices are 1-based positive");
    if (!out.terms_.empty() && out.terms_.back().first == index) {
      out.terms_.back().second += value;
    } else {
      out.terms_.emplace_back(index, std::move(value));
    }
  }
  std::erase_if(out.terms_, [](const Term& t) { return t.second == 0; });
  return out;
}

SparseVector SparseVector::unit(int index) {
  return from_terms({{index, Rational(1)}});
}

SparseVector SparseVector::ones(int lo, int hi) {
  std::vector<Term> terms;
  for (int i = lo; i <= hi; ++i) terms.emplace_back(i, Rational(1));
  return from_terms(std::move(terms));
}

IndexSet SparseVector::support() const {
  std::vector<int> indices;
  indices.reserve(terms_.size());
  for (const auto& [index, value] : terms_) indices.push_back(index);
  return IndexSet::of(std::move(indices));
}

int SparseVector::min_index() const {
  if (terms_.empty()) raise(Errc::invalid_argument, "zero vector has no support");
  return terms_.front().first;
}

int SparseVector::max_index() const {
  if (terms_.empty()) raise(Errc::invalid_argument, "zero vector has no support");
  return terms_.back().first;
}

const Rational& SparseVector::coeff(int index) const {
  const auto it = std::lower_bound(
      terms_.begin(), terms_.end(), index,
      [](const Term& t, int i) { return t.first < i; });
  if (it != terms_.end() && it->first == index) return it->second;
  return kZero;
}

SparseVector SparseVector::restricted(const IndexSet& set) const {
  SparseVector out;
  for (const auto& term : terms_) {
    if (set.contains(term.first)) out.terms_.push_back(term);
  }
  return out;
}

SparseVector SparseVector::restricted(int lo, int hi) const {
  SparseVector out;
  for (const auto& term : terms_) {
    if (term.first >= lo && term.first <= hi) out.terms_.push_back(term);
  }
  return out;
}

SparseVector SparseVector::scaled(const Rational& factor) const {
  if (factor == 0) return {};
  SparseVector out;
  out.terms_.reserve(terms_.size());
  for (const auto& [index, value] : terms_)
    out.terms_.emplace_back(index, value * factor);
  return out;
}

SparseVector SparseVector::plus(const SparseVector& other) const {
  SparseVector out;
  out.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() ||
        (a != terms_.end() && a->first < b->first)) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      out.terms_.push_back(*b++);
    } else {
      Rational sum = a->second + b->second;
      if (sum != 0) out.terms_.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  return out;
}

SparseVector SparseVector::minus(const SparseVector& other) const {
  return plus(other.scaled(Rational(-1)));
}

SparseVector SparseVector::abs() const {
  SparseVector out;
  out.terms_.reserve(terms_.size());
  for (const auto& [index, value] : terms_)
    out.terms_.emplace_back(index, tsilab::abs(value));
  return out;
}

SparseVector SparseVector::with_sign_flipped(int index) const {
  SparseVector out = *this;
  for (auto& [i, value] : out.terms_) {
    if (i == index) value = -value;
  }
  return out;
}

SparseVector SparseVector::without_index(int index) const {
  SparseVector out = *this;
  std::erase_if(out.terms_, [&](const Term& t) { return t.first == index; });
  return out;
}

Rational SparseVector::sup_norm() const {
  Rational best(0);
  for (const auto& [index, value] : terms_) {
    Rational a = tsilab::abs(value);
    if (a > best) best = std::move(a);
  }
  return best;
}

Rational SparseVector::l1_norm() const {
  Rational total(0);
  for (const auto& [index, value] : terms_) total += tsilab::abs(value);
  return total;
}

Rational SparseVector::dot(const SparseVector& other) const {
  Rational total(0);
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      total += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return total;
}

bool SparseVector::operator<(const SparseVector& other) const {
  return terms_ < other.terms_;
}

}  // namespace tsilab
