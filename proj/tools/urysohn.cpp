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

// Command-line front end over the C interface. Reads one document from
// --input (default stdin), writes one document to --output (default stdout).
//
// Exit codes: 0 computed, 1 negative verdict under --strict, 2 input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "urysohn/urysohn.h"

using json = nlohmann::ordered_json;

namespace {

const char* status_name(ury_status s) {
  switch (s) {
    case URY_OK: return "ok";
    case URY_ERR_PARSE: return "parse";
    case URY_ERR_LOOKUP: return "lookup";
    case URY_ERR_INVARIANT: return "invariant";
    case URY_ERR_PRECONDITION: return "precondition";
    case URY_ERR_ARGUMENT: return "argument";
    case URY_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

struct Failure {
  std::string status;
  std::string message;
};

void check(ury_status s) {
  if (s != URY_OK) throw Failure{status_name(s), ury_last_error()};
}

// Owning wrappers for C handles and strings.
struct SpaceDeleter {
  void operator()(ury_space* s) const { ury_space_free(s); }
};
struct PartialDeleter {
  void operator()(ury_partial* p) const { ury_partial_free(p); }
};
struct TemplateDeleter {
  void operator()(ury_template* t) const { ury_template_free(t); }
};
using Space = std::unique_ptr<ury_space, SpaceDeleter>;
using Partial = std::unique_ptr<ury_partial, PartialDeleter>;
using Template = std::unique_ptr<ury_template, TemplateDeleter>;

class CString {
 public:
  CString() = default;
  CString(const CString&) = delete;
  CString& operator=(const CString&) = delete;
  ~CString() { ury_string_free(p_); }
  char** out() { return &p_; }
  bool null() const { return p_ == nullptr; }
  std::string str() const { return p_ ? p_ : ""; }
  json parsed() const { return p_ ? json::parse(p_) : json(nullptr); }

 private:
  char* p_ = nullptr;
};

Space parse_space(const std::string& doc) {
  ury_space* s = nullptr;
  check(ury_space_parse(doc.c_str(), &s));
  return Space(s);
}

Partial parse_partial(const std::string& doc) {
  ury_partial* p = nullptr;
  check(ury_partial_parse(doc.c_str(), &p));
  return Partial(p);
}

Template parse_template(const std::string& doc) {
  ury_template* t = nullptr;
  check(ury_template_parse(doc.c_str(), &t));
  return Template(t);
}

std::string write(const ury_space* s) {
  CString out;
  check(ury_space_write(s, out.out()));
  return out.str();
}

// Adds fields to a canonical document without disturbing its layout.
std::string with_fields(std::string doc, const json& extra) {
  const std::size_t close = doc.rfind('}');
  std::string tail;
  for (const auto& [key, value] : extra.items()) {
    tail += ",\n  " + json(key).dump() + ": " + value.dump();
  }
  std::size_t end = close;
  while (end > 0 && doc[end - 1] == '\n') --end;
  return doc.substr(0, end) + tail + "\n}\n";
}

// Label list given on the command line ("a,b,c"; "" is the empty set) or
// taken from the document's roles.
struct LabelSet {
  std::vector<std::string> owned;
  std::vector<const char*> ptrs;

  const char* const* data() const { return ptrs.data(); }
  std::size_t size() const { return ptrs.size(); }
  json as_json() const { return json(owned); }
};

LabelSet label_set(const std::optional<std::string>& flag,
                   const ury_labels& role, const char* name) {
  LabelSet out;
  if (flag) {
    std::stringstream ss(*flag);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) out.owned.push_back(item);
    }
  } else if (role.present) {
    out.owned.assign(role.items, role.items + role.len);
  } else {
    throw Failure{"argument", std::string("no ") + name +
                                  " given: pass --" + name +
                                  " or add roles." + name + " to the document"};
  }
  for (const auto& s : out.owned) out.ptrs.push_back(s.c_str());
  return out;
}

std::string need(const std::optional<std::string>& v, const char* name) {
  if (!v) throw Failure{"argument", std::string("missing --") + name};
  return *v;
}

struct Options {
  std::string input;
  std::string output;
  bool strict = false;
  std::optional<std::string> a, b1, b2, b_star, gamma;
  std::optional<std::string> A, B, C;
  std::size_t n = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::int64_t q = 24;
};

struct Outcome {
  std::string document;
  bool negative = false;
};

ury_roles roles_of(const ury_space* s) {
  ury_roles r{};
  check(ury_space_roles(s, &r));
  return r;
}

struct Problem {
  LabelSet A, B, C;
  std::string b_star;
  ury_problem view{};
};

std::unique_ptr<Problem> problem_of(const ury_space* s, const Options& o) {
  ury_roles r = roles_of(s);
  auto p = std::make_unique<Problem>();
  p->A = label_set(o.A, r.A, "A");
  p->B = label_set(o.B, r.B, "B");
  p->C = label_set(o.C, r.C, "C");
  if (o.b_star) {
    p->b_star = *o.b_star;
  } else if (r.b_star) {
    p->b_star = r.b_star;
  } else {
    throw Failure{"argument",
                  "no b_star given: pass --b-star or add roles.b_star"};
  }
  p->view = ury_problem{p->A.data(), p->A.size(), p->B.data(), p->B.size(),
                        p->C.data(), p->C.size(), p->b_star.c_str()};
  return p;
}

// One top-level field per line, values compact.
std::string dump(const json& j) {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : j.items()) {
    out += (first ? "\n  " : ",\n  ") + json(key).dump() + ": " + value.dump();
    first = false;
  }
  return out + "\n}\n";
}

Outcome run_check(const std::string& in) {
  int valid = 0;
  CString violation;
  check(ury_table_check(in.c_str(), &valid, violation.out()));
  return {dump({{"valid", valid == 1}, {"violation", violation.parsed()},
                {"input", json::parse(in)}}),
          valid != 1};
}

Outcome run_complete(const std::string& in) {
  Partial p = parse_partial(in);
  ury_space* s = nullptr;
  check(ury_complete(p.get(), &s));
  Space done(s);
  return {write(done.get())};
}

Outcome run_consistent(const std::string& in) {
  Partial p = parse_partial(in);
  int ok = 0;
  CString witness;
  check(ury_consistent(p.get(), &ok, witness.out()));
  return {dump({{"consistent", ok == 1}, {"witness", witness.parsed()},
                {"input", json::parse(in)}}),
          ok != 1};
}

Outcome run_scalar(const std::string& in, const Options& o, bool maximum) {
  Space s = parse_space(in);
  LabelSet C = label_set(o.C, roles_of(s.get()).C, "C");
  const std::string b1 = need(o.b1, "b1"), b2 = need(o.b2, "b2");
  CString v;
  check((maximum ? ury_d_max : ury_d_min)(s.get(), b1.c_str(), b2.c_str(),
                                          C.data(), C.size(), v.out()));
  return {dump({{"b1", b1}, {"b2", b2}, {"C", C.as_json()},
                {maximum ? "d_max" : "d_min", v.str()}})};
}

Outcome run_gamma(const std::string& in, const Options& o) {
  Space s = parse_space(in);
  LabelSet C = label_set(o.C, roles_of(s.get()).C, "C");
  const std::string b1 = need(o.b1, "b1"), b2 = need(o.b2, "b2");
  CString lo, hi;
  check(ury_gamma_interval(s.get(), b1.c_str(), b2.c_str(), C.data(), C.size(),
                           lo.out(), hi.out()));
  return {dump({{"b1", b1}, {"b2", b2}, {"C", C.as_json()},
                {"interval", {lo.str(), hi.str()}}})};
}

Outcome run_divides(const std::string& in, const Options& o) {
  Space s = parse_space(in);
  ury_roles r = roles_of(s.get());
  LabelSet C = label_set(o.C, r.C, "C");
  if (o.a) {
    const std::string b1 = need(o.b1, "b1"), b2 = need(o.b2, "b2");
    int divides = 0;
    check(ury_divides_pair(s.get(), o.a->c_str(), b1.c_str(), b2.c_str(),
                           C.data(), C.size(), &divides));
    return {dump({{"a", *o.a}, {"b1", b1}, {"b2", b2}, {"C", C.as_json()},
                  {"divides", divides == 1}, {"input", json::parse(in)}}),
            divides == 1};
  }
  LabelSet A = label_set(o.A, r.A, "A");
  LabelSet B = label_set(o.B, r.B, "B");
  int ind = 0;
  CString cert;
  check(ury_independent(s.get(), A.data(), A.size(), B.data(), B.size(),
                        C.data(), C.size(), &ind, cert.out()));
  return {dump({{"A", A.as_json()}, {"B", B.as_json()}, {"C", C.as_json()},
                {"independent", ind == 1}, {"certificate", cert.parsed()},
                {"input", json::parse(in)}}),
          ind != 1};
}

Outcome run_extend(const std::string& in, const Options& o) {
  Space s = parse_space(in);
  auto p = problem_of(s.get(), o);
  ury_space* out = nullptr;
  if (o.gamma) {
    const std::string a = need(o.a, "a");
    check(ury_extend_one(s.get(), &p->view, a.c_str(), o.gamma->c_str(), &out));
    Space ext(out);
    const char* copy = ury_space_label(ext.get(), ury_space_size(ext.get()) - 1);
    json g = json::array({{{"point", a}, {"copy", copy}, {"gamma", *o.gamma}}});
    return {with_fields(write(ext.get()), {{"gammas", g}})};
  }
  CString gammas;
  check(ury_extend_all(s.get(), &p->view, &out, gammas.out()));
  Space ext(out);
  return {with_fields(write(ext.get()), {{"gammas", gammas.parsed()}})};
}

Outcome run_cyclic(const std::string& in, const Options& o) {
  Template t = parse_template(in);
  int cyclic = 0;
  CString cycle;
  check(ury_is_n_cyclic(t.get(), o.n, &cyclic, cycle.out()));
  return {dump({{"n", o.n}, {"cyclic", cyclic == 1},
                {"violating_cycle", cycle.parsed()},
                {"input", json::parse(in)}}),
          cyclic != 1};
}

Outcome run_sopn(const Options& o) {
  ury_template* t = nullptr;
  check(ury_sopn_witness(o.n, &t));
  Template owned(t);
  CString doc;
  check(ury_template_write(owned.get(), doc.out()));
  return {doc.str()};
}

Outcome run_tp2(const Options& o) {
  ury_space* s = nullptr;
  check(ury_tp2_array(o.rows, o.cols, &s));
  Space owned(s);
  return {write(owned.get())};
}

Outcome run_stationary(const std::string& in, const Options& o) {
  Space s = parse_space(in);
  ury_roles r = roles_of(s.get());
  LabelSet A = label_set(o.A, r.A, "A");
  LabelSet C = label_set(o.C, r.C, "C");
  int st = 0;
  check(ury_is_stationary(s.get(), A.data(), A.size(), C.data(), C.size(), &st));
  return {dump({{"a", A.as_json()}, {"C", C.as_json()}, {"stationary", st == 1},
                {"input", json::parse(in)}}),
          st != 1};
}

Outcome run_unique(const std::string& in, const Options& o) {
  Space s = parse_space(in);
  ury_roles r = roles_of(s.get());
  LabelSet A = label_set(o.A, r.A, "A");
  LabelSet B = label_set(o.B, r.B, "B");
  LabelSet C = label_set(o.C, r.C, "C");
  int unique = 0;
  check(ury_unique_extension_to(s.get(), A.data(), A.size(), C.data(), C.size(),
                                B.data(), B.size(), &unique));
  return {dump({{"a", A.as_json()}, {"B", B.as_json()}, {"C", C.as_json()},
                {"unique", unique == 1}, {"input", json::parse(in)}}),
          unique != 1};
}

Outcome run_oracle_divides(const std::string& in, const Options& o) {
  Space s = parse_space(in);
  LabelSet C = label_set(o.C, roles_of(s.get()).C, "C");
  const std::string a = need(o.a, "a"), b1 = need(o.b1, "b1"),
                    b2 = need(o.b2, "b2");
  int divides = 0;
  check(ury_divides_oracle(s.get(), a.c_str(), b1.c_str(), b2.c_str(),
                           C.data(), C.size(), &divides));
  return {dump({{"a", a}, {"b1", b1}, {"b2", b2}, {"C", C.as_json()},
                {"divides", divides == 1}, {"input", json::parse(in)}}),
          divides == 1};
}

Outcome run_oracle_interval(const std::string& in, const Options& o) {
  Space s = parse_space(in);
  LabelSet C = label_set(o.C, roles_of(s.get()).C, "C");
  const std::string b1 = need(o.b1, "b1"), b2 = need(o.b2, "b2");
  CString grid;
  check(ury_interval_oracle(s.get(), b1.c_str(), b2.c_str(), C.data(), C.size(),
                            o.q, grid.out()));
  return {dump({{"b1", b1}, {"b2", b2}, {"C", C.as_json()}, {"q", o.q},
                {"accepted", grid.parsed()}})};
}

Outcome run_oracle_extension(const std::string& in, const Options& o) {
  Space s = parse_space(in);
  auto p = problem_of(s.get(), o);
  const std::string a = need(o.a, "a");
  CString grid;
  check(ury_extension_oracle(s.get(), &p->view, a.c_str(), o.q, grid.out()));
  return {dump({{"a", a}, {"b_star", p->b_star}, {"q", o.q},
                {"accepted", grid.parsed()}})};
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw Failure{"argument", "cannot open '" + path + "'"};
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_output(const std::string& path, const std::string& doc) {
  if (path.empty() || path == "-") {
    std::cout << doc;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Failure{"argument", "cannot write '" + path + "'"};
  out << doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact model-theoretic queries on finite subspaces of the "
               "Urysohn sphere"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--input,-i", o.input, "Input document (default stdin)");
  app.add_option("--output,-o", o.output, "Output document (default stdout)");
  app.add_flag("--strict", o.strict, "Exit 1 on a negative verdict");

  auto points = [&o](CLI::App* cmd, bool a, bool pair) {
    if (a) cmd->add_option("--a", o.a, "Point a");
    if (pair) {
      cmd->add_option("--b1", o.b1, "Point b1");
      cmd->add_option("--b2", o.b2, "Point b2");
    }
  };
  auto sets = [&o](CLI::App* cmd, bool A, bool B, bool C) {
    if (A) cmd->add_option("--A", o.A, "Comma-separated set A (else roles.A)");
    if (B) cmd->add_option("--B", o.B, "Comma-separated set B (else roles.B)");
    if (C) cmd->add_option("--C", o.C, "Comma-separated set C (else roles.C)");
  };

  std::string input;
  std::function<Outcome()> action;
  auto on = [&](CLI::App* cmd, std::function<Outcome()> f) {
    cmd->callback([&action, f] { action = f; });
  };

  on(app.add_subcommand("check", "Validate the triangle inequality"),
     [&] { return run_check(input); });
  on(app.add_subcommand("complete", "Shortest-path completion of a partial space"),
     [&] { return run_complete(input); });
  on(app.add_subcommand("consistent", "Is a partial space extendable to a metric"),
     [&] { return run_consistent(input); });

  auto* dmax = app.add_subcommand("dmax", "d_max(b1, b2 / C)");
  points(dmax, false, true);
  sets(dmax, false, false, true);
  on(dmax, [&] { return run_scalar(input, o, true); });
  auto* dmin = app.add_subcommand("dmin", "d_min(b1, b2 / C)");
  points(dmin, false, true);
  sets(dmin, false, false, true);
  on(dmin, [&] { return run_scalar(input, o, false); });
  auto* gamma = app.add_subcommand("gamma", "Gamma interval of (b1, b2) over C");
  points(gamma, false, true);
  sets(gamma, false, false, true);
  on(gamma, [&] { return run_gamma(input, o); });

  auto* divides = app.add_subcommand(
      "divides", "Dividing for one point and pair (--a) or independence of A, B over C");
  points(divides, true, true);
  sets(divides, true, true, true);
  on(divides, [&] { return run_divides(input, o); });

  auto* extend = app.add_subcommand("extend", "Extend tp(A/B) by b_star");
  points(extend, true, false);
  sets(extend, true, true, true);
  extend->add_option("--b-star", o.b_star, "New point b_star (else roles.b_star)");
  extend->add_option("--gamma", o.gamma, "Extend only --a with d(a', b_star) = gamma");
  on(extend, [&] { return run_extend(input, o); });

  auto* cyclic = app.add_subcommand("cyclic", "n-cyclicity of a template");
  cyclic->add_option("--n", o.n, "Cycle length")->required();
  on(cyclic, [&] { return run_cyclic(input, o); });

  auto* witness = app.add_subcommand("witness", "Witness generators");
  witness->require_subcommand(1);
  auto* sopn = witness->add_subcommand("sopn", "Template that is not n-cyclic");
  sopn->add_option("--n", o.n, "n")->required();
  on(sopn, [&] { return run_sopn(o); });
  auto* tp2 = witness->add_subcommand("tp2", "TP_2 array");
  tp2->add_option("--rows", o.rows, "Rows")->required();
  tp2->add_option("--cols", o.cols, "Columns")->required();
  on(tp2, [&] { return run_tp2(o); });

  auto* stationary = app.add_subcommand("stationary", "Is tp(A/C) stationary");
  sets(stationary, true, false, true);
  on(stationary, [&] { return run_stationary(input, o); });
  auto* unique = app.add_subcommand("unique-ext", "Does tp(A/C) extend uniquely to B");
  sets(unique, true, true, true);
  on(unique, [&] { return run_unique(input, o); });

  auto* oracle = app.add_subcommand("oracle", "Brute-force replays");
  oracle->require_subcommand(1);
  auto* od = oracle->add_subcommand("divides", "Dividing by amalgamation");
  points(od, true, true);
  sets(od, false, false, true);
  on(od, [&] { return run_oracle_divides(input, o); });
  auto* oi = oracle->add_subcommand("interval", "Gamma interval by grid sweep");
  points(oi, false, true);
  sets(oi, false, false, true);
  oi->add_option("--q", o.q, "Grid denominator");
  on(oi, [&] { return run_oracle_interval(input, o); });
  auto* oe = oracle->add_subcommand("extension", "Admissible gammas by grid sweep");
  points(oe, true, false);
  sets(oe, true, true, true);
  oe->add_option("--b-star", o.b_star, "New point b_star (else roles.b_star)");
  oe->add_option("--q", o.q, "Grid denominator");
  on(oe, [&] { return run_oracle_extension(input, o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const bool needs_input = !sopn->parsed() && !tp2->parsed();
    if (needs_input) input = read_input(o.input);
    Outcome out = action();
    write_output(o.output, out.document);
    return (o.strict && out.negative) ? 1 : 0;
  } catch (const Failure& f) {
    std::cerr << json{{"error", {{"status", f.status}, {"message", f.message}}}}
                     .dump()
              << "\n";
  } catch (const json::exception& e) {
    std::cerr << json{{"error", {{"status", "parse"}, {"message", e.what()}}}}
                     .dump()
              << "\n";
  }
  return 2;
}
