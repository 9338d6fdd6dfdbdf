// Copyright 2026 The hgcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hgc/distance.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>

#include "hgc/errors.hpp"

namespace hgc {

namespace {

constexpr char kLetterOrder[3] = {'X', 'Z', 'Y'};

using Predicate = std::function<bool(const PauliOperator&)>;

bool next_combination(std::vector<std::size_t>& subset, std::size_t n) {
  const std::size_t w = subset.size();
  std::size_t i = w;
  while (i-- > 0) {
    if (subset[i] < n - w + i) {
      ++subset[i];
      for (std::size_t j = i + 1; j < w; ++j) subset[j] = subset[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::uint64_t power_of_three(std::size_t w) {
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < w; ++i) p *= 3;
  return p;
}

struct Hit {
  std::uint64_t rank;
  PauliOperator op;
};

// Scans subsets whose rank is congruent to stride_offset modulo stride.
// visit gets (candidate, rank within weight) and returns true to stop.
template <typename Visit, typename Abort>
void scan_weight(std::size_t n, std::size_t w, std::uint64_t stride_offset, std::uint64_t stride, Visit&& visit,
                 Abort&& abort) {
  if (w == 0 || w > n) return;
  const std::uint64_t letters = power_of_three(w);
  std::vector<std::size_t> subset(w);
  std::iota(subset.begin(), subset.end(), std::size_t{0});
  PauliOperator candidate(n);
  std::vector<std::uint8_t> digits(w);
  std::uint64_t subset_rank = 0;
  do {
    if (subset_rank % stride == stride_offset) {
      if (abort(subset_rank * letters)) return;
      std::fill(digits.begin(), digits.end(), 0);
      for (std::uint64_t l = 0; l < letters; ++l) {
        for (std::size_t i = 0; i < w; ++i) candidate.set_letter(subset[i], kLetterOrder[digits[i]]);
        if (visit(candidate, subset_rank * letters + l)) return;
        for (std::size_t i = w; i-- > 0;) {
          if (++digits[i] < 3) break;
          digits[i] = 0;
        }
      }
      for (std::size_t q : subset) candidate.set_letter(q, 'I');
    }
    ++subset_rank;
  } while (next_combination(subset, n));
}

std::optional<Hit> search_weight(std::size_t n, std::size_t w, unsigned workers, const Predicate& predicate) {
  workers = std::max(1U, workers);
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  std::vector<std::optional<Hit>> hits(workers);

  auto run = [&](unsigned t) {
    scan_weight(
        n, w, t, workers,
        [&](const PauliOperator& candidate, std::uint64_t rank) {
          if (!predicate(candidate)) return false;
          hits[t] = Hit{rank, candidate};
          std::uint64_t current = best.load();
          while (rank < current && !best.compare_exchange_weak(current, rank)) {
          }
          return true;
        },
        [&](std::uint64_t first_rank) { return first_rank > best.load(); });
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) threads.emplace_back(run, t);
    for (auto& th : threads) th.join();
  }

  std::optional<Hit> result;
  for (auto& hit : hits) {
    if (hit && (!result || hit->rank < result->rank)) result = std::move(hit);
  }
  return result;
}

DistanceResult search_distance(std::size_t n, int max_weight, const SearchOptions& options, DistanceMethod method,
                               const Predicate& predicate) {
  if (max_weight < 1 || static_cast<std::size_t>(max_weight) > n) {
    throw std::invalid_argument("max weight must lie in 1.." + std::to_string(n));
  }
  std::uint64_t examined_before = 0;
  for (std::size_t w = 1; w <= static_cast<std::size_t>(max_weight); ++w) {
    if (auto hit = search_weight(n, w, options.workers, predicate)) {
      DistanceResult result;
      result.d = static_cast<int>(w);
      result.method = method;
      result.witness = std::move(hit->op);
      result.checked_up_to = static_cast<int>(w);
      result.errors_examined = examined_before + hit->rank + 1;
      return result;
    }
    examined_before += pauli_count_of_weight(n, w);
  }
  throw NoViolationFound(max_weight);
}

}  // namespace

std::string to_string(DistanceMethod method) {
  switch (method) {
    case DistanceMethod::kKnillLaflamme: return "kl";
    case DistanceMethod::kSymplectic: return "symplectic";
    case DistanceMethod::kBoth: return "both";
  }
  return "unknown";
}

DistanceMethod parse_distance_method(const std::string& text) {
  if (text == "kl") return DistanceMethod::kKnillLaflamme;
  if (text == "symplectic") return DistanceMethod::kSymplectic;
  if (text == "both") return DistanceMethod::kBoth;
  throw std::invalid_argument("unknown distance method '" + text + "'");
}

std::uint64_t pauli_count_of_weight(std::size_t n, std::size_t w) {
  if (w > n) return 0;
  std::uint64_t binom = 1;
  for (std::size_t i = 0; i < w; ++i) binom = binom * (n - i) / (i + 1);
  return binom * power_of_three(w);
}

void for_each_pauli_of_weight(std::size_t n, std::size_t w, const std::function<bool(const PauliOperator&)>& visit) {
  if (w == 0) {
    visit(PauliOperator(n));
    return;
  }
  scan_weight(
      n, w, 0, 1, [&](const PauliOperator& p, std::uint64_t) { return !visit(p); },
      [](std::uint64_t) { return false; });
}

KnillLaflammeTester::KnillLaflammeTester(const StabilizerCode& code, const MemoryBudget& budget)
    : num_qubits_(code.num_qubits()), basis_(logical_basis<double>(code, budget)) {
  supports_.reserve(basis_.size());
  for (const auto& state : basis_) {
    std::vector<std::uint64_t> support;
    for (Eigen::Index b = 0; b < state.size(); ++b) {
      if (state(b) != std::complex<double>(0.0, 0.0)) support.push_back(static_cast<std::uint64_t>(b));
    }
    supports_.push_back(std::move(support));
  }
}

Eigen::MatrixXcd KnillLaflammeTester::matrix(const PauliOperator& error) const {
  if (error.num_qubits() != num_qubits_) throw QubitCountMismatch("error and code differ in qubit count");
  const BasisAction action(error);
  const auto dim = static_cast<Eigen::Index>(basis_.size());
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    const auto& ket = basis_[static_cast<std::size_t>(j)];
    for (Eigen::Index i = 0; i < dim; ++i) {
      const auto& bra = basis_[static_cast<std::size_t>(i)];
      std::complex<double> sum = 0;
      for (std::uint64_t b : supports_[static_cast<std::size_t>(j)]) {
        const auto target = static_cast<Eigen::Index>(action.target(b));
        sum += std::conj(bra(target)) * i_power<double>(action.phase_exponent(b)) * ket(static_cast<Eigen::Index>(b));
      }
      m(i, j) = sum;
    }
  }
  return m;
}

bool is_knill_laflamme_violation(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return false;
  const std::complex<double> c = m.trace() / static_cast<double>(m.rows());
  const Eigen::MatrixXcd residual = m - c * Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  return residual.cwiseAbs().maxCoeff() > kKnillLaflammeTolerance;
}

bool KnillLaflammeTester::violates(const PauliOperator& error) const { return is_knill_laflamme_violation(matrix(error)); }

KlCheck kl_violates(const StabilizerCode& code, const PauliOperator& error, const MemoryBudget& budget) {
  const KnillLaflammeTester tester(code, budget);
  KlCheck check;
  check.matrix = tester.matrix(error);
  check.violates = is_knill_laflamme_violation(check.matrix);
  return check;
}

DistanceResult kl_distance(const StabilizerCode& code, int max_weight, const SearchOptions& options) {
  if (code.logical_count() == 0) throw MissingLogicalPairs("code " + code.name() + " encodes no logical qubits");
  const KnillLaflammeTester tester(code, options.budget);
  return search_distance(code.num_qubits(), max_weight, options, DistanceMethod::kKnillLaflamme,
                         [&](const PauliOperator& e) { return tester.violates(e); });
}

DistanceResult symplectic_distance(const StabilizerCode& code, int max_weight, const SearchOptions& options) {
  const auto& gens = code.generators();
  return search_distance(code.num_qubits(), max_weight, options, DistanceMethod::kSymplectic,
                         [&](const PauliOperator& p) {
                           for (const PauliOperator& g : gens) {
                             if (!commutes(p, g)) return false;
                           }
                           return !code.in_span(p);
                         });
}

DistanceResult cross_validate_distance(const StabilizerCode& code, int max_weight, const SearchOptions& options) {
  std::optional<DistanceResult> kl;
  std::optional<DistanceResult> symplectic;
  try {
    kl = kl_distance(code, max_weight, options);
  } catch (const NoViolationFound&) {
  }
  try {
    symplectic = symplectic_distance(code, max_weight, options);
  } catch (const NoViolationFound&) {
  }
  if (!kl && !symplectic) throw NoViolationFound(max_weight);
  auto describe = [](const std::optional<DistanceResult>& r) {
    return r ? "d=" + std::to_string(r->d) + " witness " + format_pauli(r->witness) : std::string("no witness");
  };
  if (!kl || !symplectic || kl->d != symplectic->d) {
    throw MethodDisagreement("code " + code.name() + ": Knill-Laflamme gives " + describe(kl) + ", symplectic gives " +
                             describe(symplectic));
  }
  DistanceResult agreed = *symplectic;
  agreed.method = DistanceMethod::kBoth;
  return agreed;
}

}  // namespace hgc
