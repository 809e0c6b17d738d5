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

#include "submod/c_api.h"

#include <algorithm>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "submod/checkers.h"
#include "submod/errors.h"
#include "submod/instance_io.h"
#include "submod/solvers.h"

struct submod_function {
  submod::Instance instance;
  std::vector<std::string> labels;
};

struct submod_result {
  submod::SolveResult result;
};

struct submod_report {
  submod::PropertyReport report;
};

struct submod_oracle {
  submod::OracleResult oracle;
};

namespace {

thread_local std::string last_error;

submod_status_t Fail(submod_status_t status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs `body`, translating library exceptions into status codes.
template <typename Fn>
submod_status_t Guard(Fn&& body) {
  try {
    body();
    return SUBMOD_OK;
  } catch (const submod::CapabilityError& e) {
    return Fail(SUBMOD_ERR_CAPABILITY, e.what());
  } catch (const submod::ParseError& e) {
    return Fail(SUBMOD_ERR_PARSE, e.what());
  } catch (const submod::DomainError& e) {
    return Fail(SUBMOD_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(SUBMOD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(SUBMOD_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(SUBMOD_ERR_INTERNAL, "unknown error");
  }
}

#define SUBMOD_REQUIRE(cond, message) \
  if (!(cond)) return Fail(SUBMOD_ERR_ARGUMENT, message)

submod_function* Wrap(submod::Instance instance) {
  auto* f = new submod_function{std::move(instance), {}};
  const auto& ground = f->instance.function->ground_set();
  for (std::size_t j = 0; j < ground.size(); ++j) {
    f->labels.push_back(ground.Label(j));
  }
  return f;
}

submod::Subset MakeSubset(const submod_function* f, const size_t* members,
                          size_t count) {
  const std::size_t n = f->instance.function->size();
  if (count == 0) return submod::Subset(n);
  return submod::Subset::FromIndices(n, std::span<const size_t>(members, count));
}

submod::InstanceKind ToKind(submod_kind_t kind) {
  switch (kind) {
    case SUBMOD_KIND_FACILITY:
      return submod::InstanceKind::kFacility;
    case SUBMOD_KIND_MODULAR:
      return submod::InstanceKind::kModular;
    case SUBMOD_KIND_SQUARED:
      return submod::InstanceKind::kSquaredModular;
    case SUBMOD_KIND_INFER:
      break;
  }
  throw submod::DomainError("unsupported instance kind");
}

submod_kind_t FromKind(submod::InstanceKind kind) {
  switch (kind) {
    case submod::InstanceKind::kFacility:
      return SUBMOD_KIND_FACILITY;
    case submod::InstanceKind::kModular:
      return SUBMOD_KIND_MODULAR;
    case submod::InstanceKind::kSquaredModular:
      return SUBMOD_KIND_SQUARED;
  }
  return SUBMOD_KIND_FACILITY;
}

void CopyMembers(const submod::Subset& s, size_t* members, size_t capacity) {
  const auto list = s.Members();
  if (capacity < list.size()) {
    throw submod::DomainError("buffer holds " + std::to_string(capacity) +
                              " elements but " + std::to_string(list.size()) +
                              " are needed");
  }
  std::copy(list.begin(), list.end(), members);
}

}  // namespace

extern "C" {

const char* submod_last_error(void) { return last_error.c_str(); }

const char* submod_status_string(submod_status_t status) {
  switch (status) {
    case SUBMOD_OK:
      return "ok";
    case SUBMOD_ERR_ARGUMENT:
      return "argument error";
    case SUBMOD_ERR_DOMAIN:
      return "domain error";
    case SUBMOD_ERR_PARSE:
      return "parse error";
    case SUBMOD_ERR_CAPABILITY:
      return "capability error";
    case SUBMOD_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

submod_status_t submod_function_load(const char* path, submod_kind_t kind,
                                     int has_header, submod_function_t* out) {
  SUBMOD_REQUIRE(path != nullptr && out != nullptr, "null argument");
  return Guard([&] {
    const submod::InstanceKind resolved = kind == SUBMOD_KIND_INFER
                                              ? submod::InferInstanceKind(path)
                                              : ToKind(kind);
    *out = Wrap(submod::LoadInstance(path, resolved, has_header != 0));
  });
}

submod_status_t submod_facility_create(const double* entries, size_t rows,
                                       size_t cols, submod_function_t* out) {
  SUBMOD_REQUIRE(out != nullptr, "null output handle");
  SUBMOD_REQUIRE(entries != nullptr || rows * cols == 0, "null entries");
  return Guard([&] {
    std::vector<double> data(entries, entries + rows * cols);
    *out = Wrap(submod::MakeFacilityInstance(
        submod::FacilityMatrix(rows, cols, std::move(data))));
  });
}

submod_status_t submod_weights_create(submod_kind_t kind,
                                      const double* weights, size_t n,
                                      submod_function_t* out) {
  SUBMOD_REQUIRE(out != nullptr, "null output handle");
  SUBMOD_REQUIRE(weights != nullptr || n == 0, "null weights");
  SUBMOD_REQUIRE(kind == SUBMOD_KIND_MODULAR || kind == SUBMOD_KIND_SQUARED,
                 "weights instances must be modular or squared");
  return Guard([&] {
    *out = Wrap(submod::MakeWeightsInstance(
        ToKind(kind), std::vector<double>(weights, weights + n)));
  });
}

void submod_function_destroy(submod_function_t f) { delete f; }

submod_status_t submod_function_info(submod_function_t f,
                                     submod_instance_info_t* out) {
  SUBMOD_REQUIRE(f != nullptr && out != nullptr, "null argument");
  out->kind = FromKind(f->instance.kind);
  out->rows = f->instance.rows;
  out->cols = f->instance.cols;
  out->checksum = f->instance.checksum;
  return SUBMOD_OK;
}

submod_status_t submod_function_label(submod_function_t f, size_t element,
                                      const char** out, int* has_labels) {
  SUBMOD_REQUIRE(f != nullptr && out != nullptr, "null argument");
  if (element >= f->labels.size()) {
    return Fail(SUBMOD_ERR_DOMAIN, "element index " + std::to_string(element) +
                                       " out of range for ground set of size " +
                                       std::to_string(f->labels.size()));
  }
  *out = f->labels[element].c_str();
  if (has_labels != nullptr) {
    *has_labels = f->instance.function->ground_set().has_labels() ? 1 : 0;
  }
  return SUBMOD_OK;
}

submod_status_t submod_evaluate(submod_function_t f, const size_t* members,
                                size_t count, double* value) {
  SUBMOD_REQUIRE(f != nullptr && value != nullptr, "null argument");
  SUBMOD_REQUIRE(members != nullptr || count == 0, "null member list");
  return Guard([&] {
    *value = f->instance.function->Evaluate(MakeSubset(f, members, count));
  });
}

submod_status_t submod_marginal_gain(submod_function_t f,
                                     const size_t* members, size_t count,
                                     size_t element, double* gain) {
  SUBMOD_REQUIRE(f != nullptr && gain != nullptr, "null argument");
  SUBMOD_REQUIRE(members != nullptr || count == 0, "null member list");
  return Guard([&] {
    *gain = submod::MarginalGain(*f->instance.function,
                                 MakeSubset(f, members, count), element);
  });
}

submod_status_t submod_sample_size(size_t n, size_t k, double epsilon,
                                   size_t* out) {
  SUBMOD_REQUIRE(out != nullptr, "null argument");
  return Guard([&] { *out = submod::SampleSize(n, k, epsilon); });
}

submod_status_t submod_solve(submod_function_t f,
                             const submod_solve_options_t* options,
                             submod_result_t* out) {
  SUBMOD_REQUIRE(f != nullptr && options != nullptr && out != nullptr,
                 "null argument");
  const bool stochastic = options->algorithm == SUBMOD_ALGO_STOCHASTIC;
  SUBMOD_REQUIRE(options->algorithm == SUBMOD_ALGO_GREEDY ||
                     options->algorithm == SUBMOD_ALGO_LAZY || stochastic,
                 "unknown algorithm");
  if (stochastic) {
    SUBMOD_REQUIRE((options->epsilon != 0.0) != (options->sample_size != 0),
                   "stochastic greedy needs exactly one of epsilon or "
                   "sample_size");
  }
  return Guard([&] {
    const submod::SetFunction& fn = *f->instance.function;
    submod::SolveResult result;
    switch (options->algorithm) {
      case SUBMOD_ALGO_GREEDY:
        result = submod::Greedy(fn, options->k);
        break;
      case SUBMOD_ALGO_LAZY:
        result = submod::LazyGreedy(fn, options->k);
        break;
      case SUBMOD_ALGO_STOCHASTIC: {
        const auto config =
            options->sample_size != 0
                ? submod::StochasticConfig::FromSampleSize(
                      options->sample_size, options->seed, options->stream)
                : submod::StochasticConfig::FromEpsilon(
                      options->epsilon, options->seed, options->stream);
        result = submod::StochasticGreedy(fn, options->k, config);
        break;
      }
    }
    *out = new submod_result{std::move(result)};
  });
}

void submod_result_destroy(submod_result_t r) { delete r; }

size_t submod_result_k(submod_result_t r) { return r ? r->result.k : 0; }

double submod_result_objective(submod_result_t r) {
  return r ? r->result.objective() : 0.0;
}

uint64_t submod_result_evaluations(submod_result_t r) {
  return r ? r->result.evaluations : 0;
}

size_t submod_result_sample_size(submod_result_t r) {
  return r && r->result.sample_size ? *r->result.sample_size : 0;
}

submod_status_t submod_result_step(submod_result_t r, size_t index,
                                   submod_step_t* out) {
  SUBMOD_REQUIRE(r != nullptr && out != nullptr, "null argument");
  SUBMOD_REQUIRE(index < r->result.trace.size(), "step index out of range");
  const auto& step = r->result.trace[index];
  *out = submod_step_t{step.step, step.element, step.gain, step.objective};
  return SUBMOD_OK;
}

submod_status_t submod_oracle_run(submod_function_t f, size_t k, uint64_t cap,
                                  submod_oracle_t* out) {
  SUBMOD_REQUIRE(f != nullptr && out != nullptr, "null argument");
  return Guard([&] {
    *out = new submod_oracle{submod::BruteForceOpt(
        *f->instance.function, k, cap == 0 ? submod::kDefaultOracleCap : cap)};
  });
}

void submod_oracle_destroy(submod_oracle_t o) { delete o; }

double submod_oracle_value(submod_oracle_t o) {
  return o ? o->oracle.best_value : 0.0;
}

uint64_t submod_oracle_sets_evaluated(submod_oracle_t o) {
  return o ? o->oracle.sets_evaluated : 0;
}

submod_status_t submod_oracle_best_set(submod_oracle_t o, size_t* members,
                                       size_t capacity) {
  SUBMOD_REQUIRE(o != nullptr && members != nullptr, "null argument");
  SUBMOD_REQUIRE(capacity >= o->oracle.best_set.size(), "buffer too small");
  return Guard([&] { CopyMembers(o->oracle.best_set, members, capacity); });
}

submod_status_t submod_gap_diagnostic(submod_result_t r, submod_oracle_t o,
                                      double* deltas, double* ratios,
                                      int* ratio_defined,
                                      int* contraction_holds) {
  SUBMOD_REQUIRE(r != nullptr && o != nullptr && deltas != nullptr &&
                     ratios != nullptr && ratio_defined != nullptr &&
                     contraction_holds != nullptr,
                 "null argument");
  return Guard([&] {
    const auto gap = submod::ComputeGapDiagnostic(r->result, o->oracle);
    std::copy(gap.deltas.begin(), gap.deltas.end(), deltas);
    for (std::size_t l = 0; l < gap.ratios.size(); ++l) {
      ratio_defined[l] = gap.ratios[l].has_value() ? 1 : 0;
      ratios[l] = gap.ratios[l].value_or(0.0);
    }
    *contraction_holds = gap.contraction_holds ? 1 : 0;
  });
}

submod_status_t submod_check(submod_function_t f, submod_property_t property,
                             submod_mode_t mode, uint64_t budget,
                             uint64_t seed, submod_report_t* out) {
  SUBMOD_REQUIRE(f != nullptr && out != nullptr, "null argument");
  SUBMOD_REQUIRE(property >= SUBMOD_PROP_MONOTONE &&
                     property <= SUBMOD_PROP_SUBMODULAR_INTERSECTION,
                 "unknown property");
  SUBMOD_REQUIRE(mode == SUBMOD_MODE_EXHAUSTIVE || mode == SUBMOD_MODE_SAMPLED,
                 "unknown mode");
  return Guard([&] {
    submod::CheckOptions options;
    options.mode = mode == SUBMOD_MODE_EXHAUSTIVE
                       ? submod::CheckMode::kExhaustive
                       : submod::CheckMode::kSampled;
    options.budget = budget;
    options.seed = seed;
    *out = new submod_report{submod::CheckProperty(
        *f->instance.function, static_cast<submod::Property>(property),
        options)};
  });
}

void submod_report_destroy(submod_report_t rep) { delete rep; }

int submod_report_holds(submod_report_t rep) {
  return rep && rep->report.holds ? 1 : 0;
}

uint64_t submod_report_pairs_checked(submod_report_t rep) {
  return rep ? rep->report.pairs_checked : 0;
}

int submod_report_has_witness(submod_report_t rep) {
  return rep && rep->report.witness ? 1 : 0;
}

submod_status_t submod_report_witness(submod_report_t rep,
                                      submod_witness_info_t* out) {
  SUBMOD_REQUIRE(rep != nullptr && out != nullptr, "null argument");
  SUBMOD_REQUIRE(rep->report.witness.has_value(), "report has no witness");
  const auto& w = *rep->report.witness;
  out->a_size = w.a.size();
  out->has_b = w.b ? 1 : 0;
  out->b_size = w.b ? w.b->size() : 0;
  out->has_element = w.element ? 1 : 0;
  out->element = w.element.value_or(0);
  out->lhs = w.lhs;
  out->rhs = w.rhs;
  out->magnitude = w.magnitude;
  return SUBMOD_OK;
}

submod_status_t submod_report_witness_set(submod_report_t rep, int which,
                                          size_t* members, size_t capacity) {
  SUBMOD_REQUIRE(rep != nullptr, "null argument");
  SUBMOD_REQUIRE(rep->report.witness.has_value(), "report has no witness");
  const auto& w = *rep->report.witness;
  SUBMOD_REQUIRE(which == 0 || (which == 1 && w.b.has_value()),
                 "requested witness set is not present");
  const submod::Subset& s = which == 0 ? w.a : *w.b;
  SUBMOD_REQUIRE(members != nullptr || s.empty(), "null member buffer");
  return Guard([&] {
    if (!s.empty()) CopyMembers(s, members, capacity);
  });
}

submod_status_t submod_report_reproduces(submod_report_t rep,
                                         submod_function_t f,
                                         int* reproduces) {
  SUBMOD_REQUIRE(rep != nullptr && f != nullptr && reproduces != nullptr,
                 "null argument");
  SUBMOD_REQUIRE(rep->report.witness.has_value(), "report has no witness");
  return Guard([&] {
    *reproduces = submod::WitnessReproduces(*f->instance.function,
                                            rep->report.property,
                                            *rep->report.witness)
                      ? 1
                      : 0;
  });
}

submod_status_t submod_telescoping_residual(submod_function_t f,
                                            const size_t* base,
                                            size_t base_count,
                                            const size_t* sequence,
                                            size_t sequence_count,
                                            double* residual, double* scale) {
  SUBMOD_REQUIRE(f != nullptr && residual != nullptr, "null argument");
  SUBMOD_REQUIRE(base != nullptr || base_count == 0, "null base set");
  SUBMOD_REQUIRE(sequence != nullptr || sequence_count == 0, "null sequence");
  return Guard([&] {
    const auto result = submod::CheckTelescoping(
        *f->instance.function, MakeSubset(f, base, base_count),
        std::span<const size_t>(sequence, sequence_count));
    *residual = result.residual;
    if (scale != nullptr) *scale = result.scale;
  });
}

}  // extern "C"
