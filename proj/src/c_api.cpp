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

#include "urysohn/urysohn.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "json.hpp"
#include "urysohn/completion.hpp"
#include "urysohn/error.hpp"
#include "urysohn/extension.hpp"
#include "urysohn/independence.hpp"
#include "urysohn/indiscernibles.hpp"
#include "urysohn/io.hpp"
#include "urysohn/oracle.hpp"
#include "urysohn/stationarity.hpp"

using nlohmann::json;
namespace u = urysohn;

struct ury_space {
  u::FiniteMetricSpace space;
  u::Roles roles;
  // Backing arrays for ury_roles.
  std::vector<const char*> A, B, C;
};

struct ury_partial {
  u::PartialSemimetric p;
  u::Roles roles;
};

struct ury_template {
  u::SequenceTemplate t;
};

namespace {

thread_local std::string last_error;

template <typename F>
ury_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return URY_OK;
  } catch (const u::Error& e) {
    last_error = e.what();
    return static_cast<ury_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  }
  return URY_ERR_INTERNAL;
}

void require(const void* p, const char* name) {
  if (!p) throw u::ArgumentError(std::string(name) + " is NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ury_space* wrap(u::FiniteMetricSpace space, u::Roles roles = {}) {
  auto* h = new ury_space{std::move(space), std::move(roles), {}, {}, {}};
  auto fill = [](const auto& role, std::vector<const char*>& out) {
    if (role) {
      for (const auto& l : *role) out.push_back(l.c_str());
    }
  };
  fill(h->roles.A, h->A);
  fill(h->roles.B, h->B);
  fill(h->roles.C, h->C);
  return h;
}

std::size_t point(const u::FiniteMetricSpace& s, const char* label) {
  require(label, "label");
  return s.index(label);
}

u::PointSet points(const u::FiniteMetricSpace& s, const char* const* labels,
                   std::size_t n) {
  if (n) require(labels, "label array");
  u::PointSet out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(point(s, labels[i]));
  return out;
}

u::ExtensionProblem problem(const u::FiniteMetricSpace& s,
                            const ury_problem* prob) {
  require(prob, "problem");
  return u::ExtensionProblem(s, points(s, prob->A, prob->A_len),
                             points(s, prob->B, prob->B_len),
                             points(s, prob->C, prob->C_len),
                             point(s, prob->b_star));
}

json grid_json(const std::vector<u::Dist>& grid) {
  json out = json::array();
  for (const auto& g : grid) out.push_back(g.to_string());
  return out;
}

}  // namespace

extern "C" {

const char* ury_version(void) { return "0.1.0"; }

const char* ury_last_error(void) { return last_error.c_str(); }

void ury_string_free(char* s) { std::free(s); }

ury_status ury_space_parse(const char* document, ury_space** out) {
  return guard([&] {
    require(document, "document");
    require(out, "out");
    u::SpaceDocument doc = u::parse_space_document(document);
    u::FiniteMetricSpace space = u::to_space(doc);
    *out = wrap(std::move(space), std::move(doc.roles));
  });
}

void ury_space_free(ury_space* space) { delete space; }

ury_status ury_space_write(const ury_space* space, char** out) {
  return guard([&] {
    require(space, "space");
    require(out, "out");
    *out = dup(u::write_space_document(u::to_document(space->space, space->roles)));
  });
}

size_t ury_space_size(const ury_space* space) {
  return space ? space->space.size() : 0;
}

const char* ury_space_label(const ury_space* space, size_t i) {
  if (!space || i >= space->space.size()) return nullptr;
  return space->space.label(i).c_str();
}

ury_status ury_space_roles(const ury_space* space, ury_roles* out) {
  return guard([&] {
    require(space, "space");
    require(out, "out");
    auto view = [](const auto& role, const std::vector<const char*>& v) {
      return ury_labels{v.data(), v.size(), role ? 1 : 0};
    };
    out->A = view(space->roles.A, space->A);
    out->B = view(space->roles.B, space->B);
    out->C = view(space->roles.C, space->C);
    out->b_star = space->roles.b_star ? space->roles.b_star->c_str() : nullptr;
  });
}

ury_status ury_space_distance(const ury_space* space, const char* a,
                              const char* b, char** out) {
  return guard([&] {
    require(space, "space");
    require(out, "out");
    *out = dup(space->space(point(space->space, a), point(space->space, b))
                   .to_string());
  });
}

ury_status ury_table_check(const char* document, int* valid, char** violation) {
  return guard([&] {
    require(document, "document");
    require(valid, "valid");
    u::SpaceCandidate c =
        u::make_candidate(u::to_table(u::parse_space_document(document)));
    *valid = c.valid() ? 1 : 0;
    if (violation) {
      *violation = nullptr;
      if (!c.valid()) {
        const auto& v = *c.violation;
        *violation = dup(json{c.table.label(v.x), c.table.label(v.y),
                              c.table.label(v.z)}
                             .dump());
      }
    }
  });
}

ury_status ury_partial_parse(const char* document, ury_partial** out) {
  return guard([&] {
    require(document, "document");
    require(out, "out");
    u::SpaceDocument doc = u::parse_space_document(document);
    u::PartialSemimetric p = u::to_partial(doc);
    *out = new ury_partial{std::move(p), std::move(doc.roles)};
  });
}

void ury_partial_free(ury_partial* p) { delete p; }

ury_status ury_partial_write(const ury_partial* p, char** out) {
  return guard([&] {
    require(p, "partial");
    require(out, "out");
    *out = dup(u::write_space_document(u::to_document(p->p, p->roles)));
  });
}

ury_status ury_complete(const ury_partial* p, ury_space** out) {
  return guard([&] {
    require(p, "partial");
    require(out, "out");
    *out = wrap(u::path_completion(p->p), p->roles);
  });
}

ury_status ury_consistent(const ury_partial* p, int* consistent,
                          char** witness) {
  return guard([&] {
    require(p, "partial");
    require(consistent, "consistent");
    u::ConsistencyResult r = u::is_consistent(p->p);
    *consistent = r.consistent ? 1 : 0;
    if (witness) {
      *witness = nullptr;
      if (!r.consistent) {
        json seq = json::array();
        for (std::size_t i : r.witness) seq.push_back(p->p.label(i));
        *witness = dup(seq.dump());
      }
    }
  });
}

ury_status ury_d_max(const ury_space* space, const char* b1, const char* b2,
                     const char* const* C, size_t C_len, char** out) {
  return guard([&] {
    require(space, "space");
    require(out, "out");
    const auto& s = space->space;
    *out = dup(u::d_max(s, point(s, b1), point(s, b2), points(s, C, C_len))
                   .to_string());
  });
}

ury_status ury_d_min(const ury_space* space, const char* b1, const char* b2,
                     const char* const* C, size_t C_len, char** out) {
  return guard([&] {
    require(space, "space");
    require(out, "out");
    const auto& s = space->space;
    *out = dup(u::d_min(s, point(s, b1), point(s, b2), points(s, C, C_len))
                   .to_string());
  });
}

ury_status ury_gamma_interval(const ury_space* space, const char* b1,
                              const char* b2, const char* const* C,
                              size_t C_len, char** lo, char** hi) {
  return guard([&] {
    require(space, "space");
    require(lo, "lo");
    require(hi, "hi");
    const auto& s = space->space;
    u::Interval g =
        u::gamma_interval(s, point(s, b1), point(s, b2), points(s, C, C_len));
    *lo = dup(g.lo().to_string());
    *hi = dup(g.hi().to_string());
  });
}

ury_status ury_divides_pair(const ury_space* space, const char* a,
                            const char* b1, const char* b2,
                            const char* const* C, size_t C_len, int* divides) {
  return guard([&] {
    require(space, "space");
    require(divides, "divides");
    const auto& s = space->space;
    *divides = u::divides_pair(s, point(s, a), point(s, b1), point(s, b2),
                               points(s, C, C_len))
                   ? 1
                   : 0;
  });
}

ury_status ury_independent(const ury_space* space, const char* const* A,
                           size_t A_len, const char* const* B, size_t B_len,
                           const char* const* C, size_t C_len,
                           int* independent, char** certificate) {
  return guard([&] {
    require(space, "space");
    require(independent, "independent");
    const auto& s = space->space;
    u::IndependenceResult r = u::independent(s, points(s, A, A_len),
                                             points(s, B, B_len),
                                             points(s, C, C_len));
    *independent = r.independent ? 1 : 0;
    if (certificate) {
      *certificate =
          r.certificate ? dup(u::write_certificate(*r.certificate, s)) : nullptr;
    }
  });
}

ury_status ury_extension_bounds(const ury_space* space, const ury_problem* prob,
                                const char* a, char** lower, char** upper) {
  return guard([&] {
    require(space, "space");
    require(lower, "lower");
    require(upper, "upper");
    u::ExtensionProblem pr = problem(space->space, prob);
    const std::size_t pa = point(space->space, a);
    *lower = dup(u::lower_L(pa, pr).to_string());
    *upper = dup(u::upper_U(pa, pr).to_string());
  });
}

ury_status ury_admissible_gammas(const ury_space* space,
                                 const ury_problem* prob, const char* a,
                                 char** lo, char** hi) {
  return guard([&] {
    require(space, "space");
    require(lo, "lo");
    require(hi, "hi");
    u::ExtensionProblem pr = problem(space->space, prob);
    u::Interval g = u::admissible_gammas(point(space->space, a), pr);
    *lo = dup(g.lo().to_string());
    *hi = dup(g.hi().to_string());
  });
}

ury_status ury_extend_one(const ury_space* space, const ury_problem* prob,
                          const char* a, const char* gamma, ury_space** out) {
  return guard([&] {
    require(space, "space");
    require(gamma, "gamma");
    require(out, "out");
    u::ExtensionProblem pr = problem(space->space, prob);
    *out = wrap(u::extend_one(point(space->space, a), u::Dist::parse(gamma), pr));
  });
}

ury_status ury_extend_all(const ury_space* space, const ury_problem* prob,
                          ury_space** out, char** gammas) {
  return guard([&] {
    require(space, "space");
    require(out, "out");
    u::ExtensionProblem pr = problem(space->space, prob);
    u::Extension ext = u::extend_all(pr);
    json list = json::array();
    for (std::size_t i = 0; i < pr.A().size(); ++i) {
      list.push_back({{"point", space->space.label(pr.A()[i])},
                      {"copy", ext.space.label(ext.copies[i])},
                      {"gamma", ext.gammas[i].to_string()}});
    }
    if (gammas) *gammas = dup(list.dump());
    *out = wrap(std::move(ext.space));
  });
}

ury_status ury_template_parse(const char* document, ury_template** out) {
  return guard([&] {
    require(document, "document");
    require(out, "out");
    *out = new ury_template{u::parse_template(document)};
  });
}

void ury_template_free(ury_template* t) { delete t; }

ury_status ury_template_write(const ury_template* t, char** out) {
  return guard([&] {
    require(t, "template");
    require(out, "out");
    *out = dup(u::write_template(t->t));
  });
}

ury_status ury_template_validate(const ury_template* t, int* valid,
                                 char** reason) {
  return guard([&] {
    require(t, "template");
    require(valid, "valid");
    u::TemplateCheck c = u::validate_template(t->t);
    *valid = c.valid ? 1 : 0;
    if (reason) *reason = c.valid ? nullptr : dup(c.reason);
  });
}

ury_status ury_is_n_cyclic(const ury_template* t, size_t n, int* cyclic,
                           char** violating_cycle) {
  return guard([&] {
    require(t, "template");
    require(cyclic, "cyclic");
    u::CyclicityResult r = u::is_n_cyclic(t->t, n);
    *cyclic = r.cyclic ? 1 : 0;
    if (violating_cycle) {
      *violating_cycle = nullptr;
      if (!r.cyclic) {
        json idx = json::array();
        for (std::size_t i : r.violating_cycle) idx.push_back(i + 1);
        *violating_cycle = dup(idx.dump());
      }
    }
  });
}

ury_status ury_sopn_witness(size_t n, ury_template** out) {
  return guard([&] {
    require(out, "out");
    *out = new ury_template{u::sopn_witness(n)};
  });
}

ury_status ury_tp2_array(size_t rows, size_t cols, ury_space** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(u::tp2_array(rows, cols));
  });
}

ury_status ury_is_stationary(const ury_space* space, const char* const* a,
                             size_t a_len, const char* const* C, size_t C_len,
                             int* stationary) {
  return guard([&] {
    require(space, "space");
    require(stationary, "stationary");
    const auto& s = space->space;
    *stationary =
        u::is_stationary(s, points(s, a, a_len), points(s, C, C_len)) ? 1 : 0;
  });
}

ury_status ury_unique_extension_to(const ury_space* space,
                                   const char* const* a, size_t a_len,
                                   const char* const* C, size_t C_len,
                                   const char* const* B, size_t B_len,
                                   int* unique) {
  return guard([&] {
    require(space, "space");
    require(unique, "unique");
    const auto& s = space->space;
    *unique = u::unique_extension_to(s, points(s, a, a_len),
                                     points(s, C, C_len), points(s, B, B_len))
                  ? 1
                  : 0;
  });
}

ury_status ury_divides_oracle(const ury_space* space, const char* a,
                              const char* b1, const char* b2,
                              const char* const* C, size_t C_len,
                              int* divides) {
  return guard([&] {
    require(space, "space");
    require(divides, "divides");
    const auto& s = space->space;
    *divides = u::divides_oracle(s, point(s, a), point(s, b1), point(s, b2),
                                 points(s, C, C_len))
                   ? 1
                   : 0;
  });
}

ury_status ury_interval_oracle(const ury_space* space, const char* b1,
                               const char* b2, const char* const* C,
                               size_t C_len, int64_t q, char** grid) {
  return guard([&] {
    require(space, "space");
    require(grid, "grid");
    const auto& s = space->space;
    *grid = dup(grid_json(u::interval_oracle(s, point(s, b1), point(s, b2),
                                             points(s, C, C_len), q))
                    .dump());
  });
}

ury_status ury_extension_oracle(const ury_space* space,
                                const ury_problem* prob, const char* a,
                                int64_t q, char** grid) {
  return guard([&] {
    require(space, "space");
    require(grid, "grid");
    u::ExtensionProblem pr = problem(space->space, prob);
    *grid = dup(grid_json(u::extension_oracle(pr, point(space->space, a), q))
                    .dump());
  });
}

}  // extern "C"
