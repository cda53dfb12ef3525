// Copyright 2026 The Urysohn Toolkit Authors
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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "../support/generators.hpp"
#include "../support/reference.hpp"
#include "urysohn/completion.hpp"
#include "urysohn/extension.hpp"
#include "urysohn/independence.hpp"
#include "urysohn/indiscernibles.hpp"
#include "urysohn/io.hpp"
#include "urysohn/oracle.hpp"
#include "urysohn/stationarity.hpp"

namespace {

using namespace urysohn;
using namespace urysohn::testing;

constexpr std::uint64_t kSeed = 20260419;
constexpr std::size_t kCorpusSpaces = 200;
constexpr std::size_t kRoleSamples = 24;
constexpr std::int64_t kGrid = 24;

// A failed check: the message plus the instance, for replay.
struct Failure {
  std::string message;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string show(const FiniteMetricSpace& s) {
  return write_space_document(to_document(s));
}

std::string show(const PointSet& set, const FiniteMetricSpace& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    out += (i ? "," : "") + s.label(set[i]);
  }
  return out + "}";
}

std::string tally(std::size_t checked, std::size_t negative,
                  const char* what) {
  return std::to_string(checked) + " checked, " + std::to_string(negative) +
         " " + what;
}

std::string show(const std::vector<Dist>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += (i ? " " : "") + v[i].to_string();
  }
  return out + "]";
}

const std::vector<FiniteMetricSpace>& corpus() {
  static const std::vector<FiniteMetricSpace> spaces = [] {
    Rng rng(kSeed);
    std::vector<FiniteMetricSpace> out;
    for (std::size_t i = 0; i < kCorpusSpaces; ++i) {
      const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
      out.push_back(random_space(rng, n, rng.uniform(1, 12)));
    }
    return out;
  }();
  return spaces;
}

// Points of `s` other than b1 and b2.
PointSet others(const FiniteMetricSpace& s, std::size_t b1, std::size_t b2) {
  PointSet out;
  for (std::size_t p = 0; p < s.size(); ++p) {
    if (p != b1 && p != b2) out.push_back(p);
  }
  return out;
}

std::string sop_witness_family() {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 6; ++n, ++checked) {
    SequenceTemplate t = sopn_witness(n);
    const std::string tag = "sopn_witness(" + std::to_string(n) + ")";
    expect(validate_template(t).valid, tag + " is not a valid template");
    expect(!is_n_cyclic(t, n).cyclic, tag + " is " + std::to_string(n) + "-cyclic");
    expect(is_n_cyclic(t, n + 1).cyclic,
           tag + " is not " + std::to_string(n + 1) + "-cyclic");
  }
  return std::to_string(checked) + " witnesses";
}

std::string cyclicity_equivalence() {
  Rng rng(kSeed + 2);
  std::size_t checked = 0, negative = 0;
  for (std::size_t trial = 0; trial < 500; ++trial) {
    const auto k = static_cast<std::size_t>(rng.uniform(1, 4));
    SequenceTemplate t = random_template(rng, k, 12);
    for (std::size_t n = 2; n <= 4; ++n) {
      const bool fast = is_n_cyclic(t, n).cyclic;
      const bool slow = cyclicity_oracle(t, n).cyclic;
      const bool amalgam = is_consistent(amalgam_space(t, n)).consistent;
      expect(fast == slow && slow == amalgam,
             "n = " + std::to_string(n) + ": matrix " + std::to_string(fast) +
                 ", enumeration " + std::to_string(slow) + ", amalgam " +
                 std::to_string(amalgam) + " on\n" + write_template(t));
      ++checked;
      negative += fast ? 0 : 1;
    }
  }
  return tally(checked, negative, "not cyclic");
}

std::string tp2_construction() {
  const std::size_t R = 4, K = 4;
  std::size_t pairs = 0, transversals = 0;
  FiniteMetricSpace a = tp2_array(R, K);
  expect(a.size() == R * K, "tp2_array(4,4) has the wrong size");
  for (std::size_t row = 0; row < R; ++row) {
    for (std::size_t i = 0; i < K; ++i) {
      for (std::size_t j = i + 1; j < K; ++j) {
        const std::pair<std::size_t, std::size_t> cells[2] = {{row, i}, {row, j}};
        expect(!is_consistent(tp2_query(R, K, cells)).consistent,
               "row " + std::to_string(row) + " pair is satisfiable");
        ++pairs;
      }
    }
  }
  // Every transversal: one cell per row.
  std::vector<std::size_t> sigma(R, 0);
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t r = 0; r < R; ++r) cells.emplace_back(r, sigma[r]);
    expect(is_consistent(tp2_query(R, K, cells)).consistent,
           "a transversal is unsatisfiable");
    ++transversals;
    std::size_t pos = R;
    while (pos > 0 && ++sigma[pos - 1] == K) sigma[--pos] = 0;
    if (pos == 0) break;
  }
  return std::to_string(pairs) + " row pairs, " +
         std::to_string(transversals) + " transversals";
}

std::string gamma_interval_sweep() {
  std::size_t checked = 0;
  for (const FiniteMetricSpace& s : corpus()) {
    for (std::size_t b1 = 0; b1 < s.size(); ++b1) {
      for (std::size_t b2 = b1; b2 < s.size(); ++b2) {
        const PointSet rest = others(s, b1, b2);
        for (std::uint64_t mask = 0; mask < (1U << rest.size()); ++mask) {
          const PointSet C = subset(rest, mask);
          std::vector<Dist> swept = interval_oracle(s, b1, b2, C, kGrid);
          std::vector<Dist> formula =
              gamma_interval(s, b1, b2, C).grid_points(kGrid);
          expect(swept == formula,
                 "b1=" + s.label(b1) + " b2=" + s.label(b2) + " C=" +
                     show(C, s) + ": sweep " + show(swept) + " formula " +
                     show(formula) + " on\n" + show(s));
          ++checked;
        }
      }
    }
  }
  return std::to_string(checked) + " (b1,b2,C) sweeps";
}

std::string dividing_equivalence() {
  Rng rng(kSeed + 5);
  std::size_t checked = 0, divides = 0, role_checks = 0;
  for (const FiniteMetricSpace& s : corpus()) {
    for (std::size_t b1 = 0; b1 < s.size(); ++b1) {
      for (std::size_t b2 = b1; b2 < s.size(); ++b2) {
        const PointSet rest = others(s, b1, b2);
        for (std::uint64_t mask = 0; mask < (1U << rest.size()); ++mask) {
          const PointSet C = subset(rest, mask);
          for (std::size_t a = 0; a < s.size(); ++a) {
            const bool formula = divides_pair(s, a, b1, b2, C);
            const bool oracle = divides_oracle(s, a, b1, b2, C);
            expect(formula == oracle,
                   "a=" + s.label(a) + " b1=" + s.label(b1) + " b2=" +
                       s.label(b2) + " C=" + show(C, s) + ": formula " +
                       std::to_string(formula) + " oracle " +
                       std::to_string(oracle) + " on\n" + show(s));
            ++checked;
            divides += formula ? 1 : 0;
          }
        }
      }
    }
    // Equality form against the pairwise form on disjoint role patterns
    // and on random overlapping ones.
    const PointSet all = all_points(s.size());
    std::uint64_t patterns = 1;
    for (std::size_t i = 0; i < s.size(); ++i) patterns *= 4;
    auto compare = [&](const PointSet& A, const PointSet& B, const PointSet& C) {
      expect(independent(s, A, B, C).independent ==
                 independent_pairwise(s, A, B, C),
             "A=" + show(A, s) + " B=" + show(B, s) + " C=" + show(C, s) +
                 ": equality and pairwise forms disagree on\n" + show(s));
      ++role_checks;
    };
    for (std::uint64_t code = 0; code < patterns; ++code) {
      PointSet A, B, C;
      std::uint64_t c = code;
      for (std::size_t p = 0; p < s.size(); ++p, c /= 4) {
        if (c % 4 == 1) A.push_back(p);
        if (c % 4 == 2) B.push_back(p);
        if (c % 4 == 3) C.push_back(p);
      }
      compare(A, B, C);
    }
    for (std::size_t t = 0; t < kRoleSamples; ++t) {
      compare(random_subset(rng, all, 0.5), random_subset(rng, all, 0.5),
              random_subset(rng, all, 0.5));
    }
  }
  return tally(checked, divides, "dividing") + ", " +
         std::to_string(role_checks) + " (A,B,C) role sets";
}

std::string forkprops_inequalities() {
  std::size_t checked = 0;
  for (const FiniteMetricSpace& s : corpus()) {
    const PointSet all = all_points(s.size());
    for (std::uint64_t mask = 0; mask < (1U << s.size()); ++mask) {
      const PointSet C = subset(all, mask);
      for (std::size_t b1 = 0; b1 < s.size(); ++b1) {
        for (std::size_t b2 = 0; b2 < s.size(); ++b2) {
          for (std::size_t b3 = 0; b3 < s.size(); ++b3) {
            const std::string where = "(" + s.label(b1) + "," + s.label(b2) +
                                      "," + s.label(b3) + ") C=" + show(C, s);
            expect(d_max(s, b1, b2, C) <=
                       truncated_add(d_max(s, b1, b3, C),
                                     dstar_min(s, b2, b3, C)),
                   "d_max inequality fails at " + where + " on\n" + show(s));
            expect(d_min(s, b1, b2, C) <=
                       truncated_add(d_min(s, b1, b3, C), d_min(s, b2, b3, C)),
                   "d_min inequality fails at " + where + " on\n" + show(s));
            ++checked;
          }
        }
      }
    }
  }
  return std::to_string(checked) + " triples with C";
}

std::string one_point_extension() {
  Rng rng(kSeed + 7);
  std::size_t instances = 0, sweeps = 0;
  for (const FiniteMetricSpace& s : corpus()) {
    const PointSet all = all_points(s.size());
    for (std::size_t t = 0; t < kRoleSamples; ++t) {
      PointSet A = random_subset(rng, all, 0.4);
      PointSet B = random_subset(rng, all, 0.5);
      PointSet C = random_subset(rng, B, 0.5);
      if (!independent(s, A, B, C).independent) continue;
      for (std::size_t b_star = 0; b_star < s.size(); ++b_star) {
        ExtensionProblem prob(s, A, B, C, b_star);
        const std::string where = "A=" + show(A, s) + " B=" + show(B, s) +
                                  " C=" + show(C, s) + " b*=" +
                                  s.label(b_star) + " on\n" + show(s);
        Extension ext = extend_all(prob);
        expect(!find_triangle_violation(ext.space.table().matrix()),
               "extend_all is not a metric: " + where);
        PointSet B_star(ext.space.size() - A.size());
        for (std::size_t p = 0; p < B_star.size(); ++p) B_star[p] = p;
        PointSet C_new;
        for (std::size_t c : C) {
          C_new.push_back(ext.space.index(s.label(c)));
        }
        expect(independent(ext.space, ext.copies, B_star, C_new).independent,
               "extend_all copies are dependent: " + where);
        ++instances;
        for (std::size_t a : A) {
          std::vector<Dist> swept = extension_oracle(prob, a, kGrid);
          std::vector<Dist> formula =
              admissible_gammas(a, prob).grid_points(kGrid);
          expect(swept == formula, "a=" + s.label(a) + ": sweep " +
                                       show(swept) + " formula " +
                                       show(formula) + " " + where);
          ++sweeps;
        }
      }
    }
  }
  return std::to_string(instances) + " extensions, " + std::to_string(sweeps) +
         " gamma sweeps";
}

std::string bounds_degenerate() {
  std::size_t checked = 0;
  for (const FiniteMetricSpace& s : corpus()) {
    const PointSet all = all_points(s.size());
    for (std::uint64_t mask = 0; mask < (1U << s.size()); ++mask) {
      const PointSet C = subset(all, mask);
      for (std::size_t b_star = 0; b_star < s.size(); ++b_star) {
        ExtensionProblem prob(s, {}, C, C, b_star);
        for (std::size_t a = 0; a < s.size(); ++a) {
          const std::string where = "a=" + s.label(a) + " b*=" +
                                    s.label(b_star) + " C=" + show(C, s);
          expect(upper_U(a, prob) == d_max(s, a, b_star, C),
                 "U differs from d_max at " + where + " on\n" + show(s));
          expect(lower_L(a, prob) == dstar_min(s, a, b_star, C),
                 "L differs from d*_min at " + where + " on\n" + show(s));
          ++checked;
        }
      }
    }
  }
  return std::to_string(checked) + " (a,b*,C) instances";
}

std::string stationarity() {
  std::size_t checked = 0, stationary_count = 0;
  for (const FiniteMetricSpace& s : corpus()) {
    const PointSet all = all_points(s.size());
    const std::uint64_t full = 1U << s.size();
    for (std::uint64_t cmask = 0; cmask < full; ++cmask) {
      const PointSet C = subset(all, cmask);
      for (std::size_t a = 0; a < s.size(); ++a) {
        const std::size_t tuple[1] = {a};
        const bool stationary = is_stationary(s, tuple, C);
        const bool closed_form = d_max(s, a, a, C).is_zero();
        bool unique_everywhere = true;
        for (std::uint64_t bmask = 0; bmask < full; ++bmask) {
          if ((bmask & cmask) != cmask) continue;
          unique_everywhere = unique_everywhere &&
                              unique_extension_to(s, tuple, C, subset(all, bmask));
        }
        expect(stationary == closed_form && closed_form == unique_everywhere,
               "a=" + s.label(a) + " C=" + show(C, s) + ": stationary " +
                   std::to_string(stationary) + ", d_max(a,a/C)=0 " +
                   std::to_string(closed_form) + ", unique to every B " +
                   std::to_string(unique_everywhere) + " on\n" + show(s));
        ++checked;
        stationary_count += stationary ? 1 : 0;
      }
    }
  }
  return tally(checked, stationary_count, "stationary");
}

std::string completion_soundness() {
  Rng rng(kSeed + 10);
  std::size_t inconsistent = 0;
  for (std::size_t trial = 0; trial < kCorpusSpaces; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
    const std::int64_t q = rng.uniform(1, 12);
    PartialSemimetric p =
        random_partial(rng, n, q, static_cast<double>(rng.uniform(2, 10)) / 10);
    const std::string where =
        " on\n" + write_space_document(to_document(p));
    FiniteMetricSpace done = path_completion(p);
    expect(!find_triangle_violation(done.table().matrix()),
           "completion breaks a triangle" + where);
    SquareMatrix<Dist> reference = simple_path_minimum(p);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        expect(done(i, j) == reference(i, j),
               "completion differs from the path minimum at (" + p.label(i) +
                   "," + p.label(j) + ")" + where);
      }
    }
    bool transitive = true;
    for (std::size_t m = 1; m < std::max<std::size_t>(n, 2); ++m) {
      transitive = transitive && check_m_transitive(p, m).consistent;
    }
    const bool consistent = is_consistent(p).consistent;
    inconsistent += consistent ? 0 : 1;
    expect(consistent == transitive,
           "is_consistent " + std::to_string(consistent) +
               " but m-transitivity " + std::to_string(transitive) + where);
    if (consistent) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (p.defined(i, j)) {
            expect(done(i, j) == p(i, j), "completion moves a defined pair" + where);
          }
        }
      }
    }
  }
  return tally(kCorpusSpaces, inconsistent, "inconsistent");
}

struct Criterion {
  int id;
  const char* name;
  std::string (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "SOP witness family", sop_witness_family},
      {2, "cyclicity oracle equivalence", cyclicity_equivalence},
      {3, "TP_2 construction", tp2_construction},
      {4, "Gamma-interval sweep", gamma_interval_sweep},
      {5, "dividing equivalence", dividing_equivalence},
      {6, "d_max/d_min triangle inequalities", forkprops_inequalities},
      {7, "one-point extension", one_point_extension},
      {8, "U/L degeneration", bounds_degenerate},
      {9, "stationarity", stationarity},
      {10, "completion soundness", completion_soundness},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail, summary;
    try {
      summary = c.run();
    } catch (const Failure& f) {
      detail = f.message;
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    std::printf("%s %2d %-34s %7.2f s  %s\n", detail.empty() ? "PASS" : "FAIL",
                c.id, c.name, secs, summary.c_str());
    if (!detail.empty()) {
      std::printf("     %s\n", detail.c_str());
      ++failed;
    }
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
