#include "tsilab/index_sets.hpp"

#include <algorithm>

#include "tsilab/errors.hpp"

namespace tsilab {

IndexSet::IndexSet(std::initializer_list<int> elements) {
  *this = of(std::vector<int>(elements));
}

IndexSet IndexSet::of(std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  if (!elements.empty() && elements.front() < 1)
    raise(Errc::invalid_argument, "index sets hold positive integers");
  IndexSet out;
  out.elements_ = std::move(elements);
  return out;
}

IndexSet IndexSet::interval(int lo, int hi) {
  std::vector<int> elements;
  for (int i = lo; i <= hi; ++i) elements.push_back(i);
  return of(std::move(elements));
}

int IndexSet::min() const {
  if (empty()) raise(Errc::invalid_argument, "empty index set has no min");
  return elements_.front();
}

int IndexSet::max() const {
  if (empty()) raise(Errc::invalid_argument, "empty index set has no max");
  return elements_.back();
}

bool IndexSet::contains(int value) const {
  return std::binary_search(elements_.begin(), elements_.end(), value);
}

AdmissibleFamily::AdmissibleFamily(std::vector<IndexSet> parts)
    : parts_(std::move(parts)) {
  if (parts_.empty())
    raise(Errc::invalid_argument, "admissible family needs at least one part");
  for (const auto& part : parts_) {
    if (part.empty())
      raise(Errc::invalid_argument, "admissible family parts are nonempty");
  }
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    if (parts_[i].max() >= parts_[i + 1].min())
      raise(Errc::invalid_argument,
            "admissible family parts must be successive (max E_i < min E_i+1)");
  }
  if (k() > parts_.front().min())
    raise(Errc::invalid_argument,
          "admissible family violates {k} <= E_1 (k <= min E_1)");
}

void for_each_admissible_interval_family(const IndexSet& support,
                                         int min_parts,
                                         const FamilyVisitor& visit) {
  if (support.empty())
    raise(Errc::invalid_argument, "interval enumerator needs a nonempty support");
  if (min_parts < 1) raise(Errc::invalid_argument, "min_parts must be >= 1");
  const auto& s = support.elements();
  const int r = static_cast<int>(s.size());

  std::vector<IndexSet> parts;
  // Parts are hulls of support runs, so each same-intersections class is
  // emitted exactly once, through its most permissive representative.
  std::function<void(int, int, int)> place =
      [&](int k_total, int remaining, int min_pos) {
        if (remaining == 0) {
          visit(AdmissibleFamily(parts));
          return;
        }
        for (int f = min_pos; f + remaining <= r; ++f) {
          if (parts.empty() && s[f] < k_total) continue;
          for (int g = f; g + remaining <= r; ++g) {
            parts.push_back(IndexSet::interval(s[f], s[g]));
            place(k_total, remaining - 1, g + 1);
            parts.pop_back();
          }
        }
      };
  for (int k = min_parts; k <= r; ++k) place(k, k, 0);
}

std::vector<AdmissibleFamily> enumerate_admissible_intervals(
    const IndexSet& support, int min_parts) {
  std::vector<AdmissibleFamily> out;
  for_each_admissible_interval_family(
      support, min_parts, [&](const AdmissibleFamily& f) { out.push_back(f); });
  return out;
}

void for_each_admissible_subset_family(const IndexSet& support, int min_parts,
                                       const FamilyVisitor& visit,
                                       int oracle_bound) {
  if (min_parts < 1) raise(Errc::invalid_argument, "min_parts must be >= 1");
  const auto& s = support.elements();
  const int r = static_cast<int>(s.size());
  if (r > oracle_bound)
    raise(Errc::oracle_bound_exceeded,
          "subset enumerator is limited to supports of size <= " +
              std::to_string(oracle_bound));

  std::vector<IndexSet> parts;
  std::vector<int> chosen;  // values of the part under construction

  std::function<void(int, int, int)> place;
  // Builds one part: close it, or append a later support point. The deeper
  // place() call reuses the chosen buffer, so it is saved across the call.
  std::function<void(int, int, int)> extend =
      [&](int k_total, int remaining, int next_pos) {
        parts.push_back(IndexSet::of(chosen));
        const std::vector<int> saved = chosen;
        place(k_total, remaining - 1, next_pos);
        chosen = saved;
        parts.pop_back();
        for (int g = next_pos; g < r; ++g) {
          chosen.push_back(s[g]);
          extend(k_total, remaining, g + 1);
          chosen.pop_back();
        }
      };
  place = [&](int k_total, int remaining, int min_pos) {
    if (remaining == 0) {
      visit(AdmissibleFamily(parts));
      return;
    }
    for (int f = min_pos; f < r; ++f) {
      if (parts.empty() && s[f] < k_total) continue;
      chosen.assign(1, s[f]);
      extend(k_total, remaining, f + 1);
    }
  };
  for (int k = min_parts; k <= r; ++k) place(k, k, 0);
}

std::vector<AdmissibleFamily> enumerate_admissible_subsets(
    const IndexSet& support, int min_parts, int oracle_bound) {
  std::vector<AdmissibleFamily> out;
  for_each_admissible_subset_family(
      support, min_parts, [&](const AdmissibleFamily& f) { out.push_back(f); },
      oracle_bound);
  return out;
}

}  // namespace tsilab
