// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "submod/checkers.h"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <unordered_set>
#include <vector>

#include "submod/errors.h"
#include "submod/random.h"

namespace submod {
namespace {

double Tolerance(std::initializer_list<double> values) {
  double scale = 1.0;
  for (double v : values) scale = std::max(scale, std::abs(v));
  return kViolationTolerance * scale;
}

void RequireExhaustiveSize(const SetFunction& f, std::size_t limit,
                           Property property) {
  if (f.size() > limit) {
    throw CapabilityError(
        "exhaustive " + PropertyName(property) + " check supports n <= " +
        std::to_string(limit) + " but the ground set has n = " +
        std::to_string(f.size()) + "; use sampled mode instead");
  }
}

// f evaluated on every subset, indexed by membership mask.
std::vector<double> ValueTable(const SetFunction& f) {
  const std::size_t n = f.size();
  std::vector<double> table(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = f.Evaluate(Subset::FromMask(n, mask));
  }
  return table;
}

Subset RandomSubset(std::size_t n, Rng& rng) {
  Subset s(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (rng.Bit()) s.Insert(j);
  }
  return s;
}

std::vector<std::size_t> Complement(const Subset& s) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < s.universe_size(); ++j) {
    if (!s.Contains(j)) out.push_back(j);
  }
  return out;
}

// Keeps the largest violation seen; ties keep the earliest.
class WitnessTracker {
 public:
  void Offer(double magnitude, auto&& make_witness) {
    if (!best_ || magnitude > best_->magnitude) {
      best_ = make_witness();
      best_->magnitude = magnitude;
    }
  }

  PropertyReport Finish(Property property, std::uint64_t pairs) {
    PropertyReport report;
    report.property = property;
    report.pairs_checked = pairs;
    report.holds = !best_.has_value();
    report.witness = std::move(best_);
    return report;
  }

 private:
  std::optional<Witness> best_;
};

// Returns the violation amount, or a non-positive number when the
// comparison holds within tolerance.
double MonotoneViolation(double base, double extended) {
  const double drop = base - extended;
  return drop > Tolerance({base, extended}) ? drop : 0.0;
}

double DerivativeViolation(double f_a, double f_av, double f_b, double f_bv) {
  const double gain_a = f_av - f_a;
  const double gain_b = f_bv - f_b;
  const double excess = gain_b - gain_a;
  return excess > Tolerance({f_a, f_av, f_b, f_bv}) ? excess : 0.0;
}

double IntersectionViolation(double f_meet, double f_join, double f_a,
                             double f_b) {
  const double excess = (f_meet + f_join) - (f_a + f_b);
  return excess > Tolerance({f_meet, f_join, f_a, f_b}) ? excess : 0.0;
}

PropertyReport MonotoneExhaustive(const SetFunction& f) {
  RequireExhaustiveSize(f, kMaxExhaustiveMonotone, Property::kMonotone);
  const std::size_t n = f.size();
  const std::vector<double> table = ValueTable(f);
  WitnessTracker tracker;
  std::uint64_t pairs = 0;
  for (std::uint64_t a = 0; a < table.size(); ++a) {
    for (std::size_t v = 0; v < n; ++v) {
      const std::uint64_t bit = 1ULL << v;
      if (a & bit) continue;
      ++pairs;
      const double violation = MonotoneViolation(table[a], table[a | bit]);
      if (violation > 0.0) {
        tracker.Offer(violation, [&] {
          return Witness{.a = Subset::FromMask(n, a),
                         .b = std::nullopt,
                         .element = v,
                         .lhs = table[a],
                         .rhs = table[a | bit]};
        });
      }
    }
  }
  return tracker.Finish(Property::kMonotone, pairs);
}

PropertyReport MonotoneSampled(const SetFunction& f,
                               const CheckOptions& options) {
  const std::size_t n = f.size();
  Rng rng(options.seed);
  WitnessTracker tracker;
  for (std::uint64_t draw = 0; draw < options.budget; ++draw) {
    Subset a = RandomSubset(n, rng);
    std::vector<std::size_t> outside = Complement(a);
    while (outside.empty()) {
      a = RandomSubset(n, rng);
      outside = Complement(a);
    }
    const std::size_t v = outside[rng.Below(outside.size())];
    const double base = f.Evaluate(a);
    const double extended = f.Evaluate(a.With(v));
    const double violation = MonotoneViolation(base, extended);
    if (violation > 0.0) {
      tracker.Offer(violation, [&] {
        return Witness{.a = a,
                       .b = std::nullopt,
                       .element = v,
                       .lhs = base,
                       .rhs = extended};
      });
    }
  }
  return tracker.Finish(Property::kMonotone, options.budget);
}

PropertyReport DerivativeExhaustive(const SetFunction& f) {
  RequireExhaustiveSize(f, kMaxExhaustiveDerivative,
                        Property::kSubmodularDerivative);
  const std::size_t n = f.size();
  const std::vector<double> table = ValueTable(f);
  WitnessTracker tracker;
  std::uint64_t pairs = 0;

  // digit 0: outside B, 1: in B only, 2: in A (hence in B).
  std::vector<int> digits(n, 0);
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  while (true) {
    for (std::size_t v = 0; v < n; ++v) {
      const std::uint64_t bit = 1ULL << v;
      if (b & bit) continue;
      ++pairs;
      const double violation =
          DerivativeViolation(table[a], table[a | bit], table[b], table[b | bit]);
      if (violation > 0.0) {
        tracker.Offer(violation, [&] {
          return Witness{.a = Subset::FromMask(n, a),
                         .b = Subset::FromMask(n, b),
                         .element = v,
                         .lhs = table[a | bit] - table[a],
                         .rhs = table[b | bit] - table[b]};
        });
      }
    }
    // Odometer increment over the ternary digits.
    std::size_t pos = 0;
    while (pos < n && digits[pos] == 2) {
      digits[pos] = 0;
      a &= ~(1ULL << pos);
      b &= ~(1ULL << pos);
      ++pos;
    }
    if (pos == n) break;
    ++digits[pos];
    b |= 1ULL << pos;
    if (digits[pos] == 2) a |= 1ULL << pos;
  }
  return tracker.Finish(Property::kSubmodularDerivative, pairs);
}

PropertyReport DerivativeSampled(const SetFunction& f,
                                 const CheckOptions& options) {
  const std::size_t n = f.size();
  Rng rng(options.seed);
  WitnessTracker tracker;
  for (std::uint64_t draw = 0; draw < options.budget; ++draw) {
    Subset b = RandomSubset(n, rng);
    std::vector<std::size_t> outside = Complement(b);
    while (outside.empty()) {
      b = RandomSubset(n, rng);
      outside = Complement(b);
    }
    Subset a(n);
    b.ForEach([&](std::size_t j) {
      if (rng.Bit()) a.Insert(j);
    });
    const std::size_t v = outside[rng.Below(outside.size())];
    const double f_a = f.Evaluate(a);
    const double f_av = f.Evaluate(a.With(v));
    const double f_b = f.Evaluate(b);
    const double f_bv = f.Evaluate(b.With(v));
    const double violation = DerivativeViolation(f_a, f_av, f_b, f_bv);
    if (violation > 0.0) {
      tracker.Offer(violation, [&] {
        return Witness{.a = a,
                       .b = b,
                       .element = v,
                       .lhs = f_av - f_a,
                       .rhs = f_bv - f_b};
      });
    }
  }
  return tracker.Finish(Property::kSubmodularDerivative, options.budget);
}

PropertyReport IntersectionExhaustive(const SetFunction& f) {
  RequireExhaustiveSize(f, kMaxExhaustiveIntersection,
                        Property::kSubmodularIntersection);
  const std::size_t n = f.size();
  const std::vector<double> table = ValueTable(f);
  WitnessTracker tracker;
  std::uint64_t pairs = 0;
  for (std::uint64_t a = 0; a < table.size(); ++a) {
    for (std::uint64_t b = a; b < table.size(); ++b) {
      ++pairs;
      const double violation =
          IntersectionViolation(table[a & b], table[a | b], table[a], table[b]);
      if (violation > 0.0) {
        tracker.Offer(violation, [&] {
          return Witness{.a = Subset::FromMask(n, a),
                         .b = Subset::FromMask(n, b),
                         .element = std::nullopt,
                         .lhs = table[a & b] + table[a | b],
                         .rhs = table[a] + table[b]};
        });
      }
    }
  }
  return tracker.Finish(Property::kSubmodularIntersection, pairs);
}

PropertyReport IntersectionSampled(const SetFunction& f,
                                   const CheckOptions& options) {
  const std::size_t n = f.size();
  Rng rng(options.seed);
  WitnessTracker tracker;
  for (std::uint64_t draw = 0; draw < options.budget; ++draw) {
    const Subset a = RandomSubset(n, rng);
    const Subset b = RandomSubset(n, rng);
    const double f_meet = f.Evaluate(a.Intersection(b));
    const double f_join = f.Evaluate(a.Union(b));
    const double f_a = f.Evaluate(a);
    const double f_b = f.Evaluate(b);
    const double violation = IntersectionViolation(f_meet, f_join, f_a, f_b);
    if (violation > 0.0) {
      tracker.Offer(violation, [&] {
        return Witness{.a = a,
                       .b = b,
                       .element = std::nullopt,
                       .lhs = f_meet + f_join,
                       .rhs = f_a + f_b};
      });
    }
  }
  return tracker.Finish(Property::kSubmodularIntersection, options.budget);
}

}  // namespace

std::string PropertyName(Property property) {
  switch (property) {
    case Property::kMonotone:
      return "monotone";
    case Property::kSubmodularDerivative:
      return "submodular-derivative";
    case Property::kSubmodularIntersection:
      return "submodular-intersection";
  }
  return "unknown";
}

PropertyReport CheckMonotone(const SetFunction& f,
                             const CheckOptions& options) {
  return options.mode == CheckMode::kExhaustive ? MonotoneExhaustive(f)
                                                : MonotoneSampled(f, options);
}

PropertyReport CheckSubmodularDerivative(const SetFunction& f,
                                         const CheckOptions& options) {
  return options.mode == CheckMode::kExhaustive
             ? DerivativeExhaustive(f)
             : DerivativeSampled(f, options);
}

PropertyReport CheckSubmodularIntersection(const SetFunction& f,
                                           const CheckOptions& options) {
  return options.mode == CheckMode::kExhaustive
             ? IntersectionExhaustive(f)
             : IntersectionSampled(f, options);
}

PropertyReport CheckProperty(const SetFunction& f, Property property,
                             const CheckOptions& options) {
  switch (property) {
    case Property::kMonotone:
      return CheckMonotone(f, options);
    case Property::kSubmodularDerivative:
      return CheckSubmodularDerivative(f, options);
    case Property::kSubmodularIntersection:
      return CheckSubmodularIntersection(f, options);
  }
  throw DomainError("unknown property");
}

bool WitnessReproduces(const SetFunction& f, Property property,
                       const Witness& witness) {
  switch (property) {
    case Property::kMonotone: {
      if (!witness.element) return false;
      return MonotoneViolation(f.Evaluate(witness.a),
                               f.Evaluate(witness.a.With(*witness.element))) >
             0.0;
    }
    case Property::kSubmodularDerivative: {
      if (!witness.b || !witness.element) return false;
      const std::size_t v = *witness.element;
      if (!witness.a.IsSubsetOf(*witness.b) || witness.b->Contains(v)) {
        return false;
      }
      return DerivativeViolation(f.Evaluate(witness.a),
                                 f.Evaluate(witness.a.With(v)),
                                 f.Evaluate(*witness.b),
                                 f.Evaluate(witness.b->With(v))) > 0.0;
    }
    case Property::kSubmodularIntersection: {
      if (!witness.b) return false;
      const Subset& a = witness.a;
      const Subset& b = *witness.b;
      return IntersectionViolation(f.Evaluate(a.Intersection(b)),
                                   f.Evaluate(a.Union(b)), f.Evaluate(a),
                                   f.Evaluate(b)) > 0.0;
    }
  }
  return false;
}

TelescopingResult CheckTelescoping(const SetFunction& f, const Subset& base,
                                   std::span<const std::size_t> sequence) {
  std::unordered_set<std::size_t> seen;
  for (std::size_t h : sequence) {
    if (!seen.insert(h).second) {
      throw DomainError("element " + std::to_string(h) +
                        " appears more than once in the sequence");
    }
  }
  TelescopingResult result;
  Subset current = base;
  const double base_value = f.Evaluate(base);
  double previous = base_value;
  double sum = 0.0;
  result.scale = std::max(1.0, std::abs(base_value));
  for (std::size_t h : sequence) {
    if (base.Contains(h)) {
      result.dropped.push_back(h);
      continue;
    }
    current.Insert(h);
    const double next = f.Evaluate(current);
    sum += next - previous;
    previous = next;
    result.scale = std::max(result.scale, std::abs(next));
  }
  const double whole = f.Evaluate(current);
  result.residual = std::abs(whole - base_value - sum);
  return result;
}

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    // c * (n - i) / (i + 1) is exact at every stage.
    c = c * (n - i) / (i + 1);
    if (c > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(c);
}

OracleResult BruteForceOpt(const SetFunction& f, std::size_t k,
                           std::uint64_t cap) {
  const std::size_t n = f.size();
  if (k < 1 || k > n) {
    throw DomainError("k = " + std::to_string(k) +
                      " must lie in [1, n] for n = " + std::to_string(n));
  }
  const std::uint64_t total = Binomial(n, k);
  if (total > cap) {
    throw CapabilityError("brute force would evaluate C(" + std::to_string(n) +
                          ", " + std::to_string(k) + ") = " +
                          std::to_string(total) + " subsets, above the cap of " +
                          std::to_string(cap));
  }

  CountingFunction counted(f);
  std::vector<std::size_t> tuple(k);
  for (std::size_t i = 0; i < k; ++i) tuple[i] = i;

  OracleResult result;
  bool have_best = false;
  while (true) {
    const Subset candidate = Subset::FromIndices(n, tuple);
    const double value = counted.Evaluate(candidate);
    if (!have_best || value > result.best_value) {
      result.best_set = candidate;
      result.best_value = value;
      have_best = true;
    }
    // Advance to the next ascending tuple in lexicographic order.
    std::size_t i = k;
    while (i > 0 && tuple[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++tuple[i - 1];
    for (std::size_t j = i; j < k; ++j) tuple[j] = tuple[j - 1] + 1;
  }
  result.sets_evaluated = counted.count();
  return result;
}

}  // namespace submod
