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

#include "urysohn/io.hpp"

#include <set>
#include <sstream>

#include "json.hpp"

#include "urysohn/error.hpp"

namespace urysohn {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": expected a string");
  return v.get<std::string>();
}

Dist as_dist(const json& v, const std::string& where) {
  std::string s = as_string(v, where);
  try {
    return Dist::parse(s);
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

std::vector<std::string> as_labels(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(as_string(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

void check_known(const PointLabels& points, const std::string& label,
                 const std::string& where) {
  if (!points.contains(label)) {
    throw LookupError(where + ": unknown point '" + label + "'");
  }
}

std::string quote(const std::string& s) { return json(s).dump(); }

std::string label_list(const std::vector<std::string>& labels) {
  std::string out = "[";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ", ";
    out += quote(labels[i]);
  }
  return out + "]";
}

}  // namespace

SpaceDocument parse_space_document(std::string_view text) {
  json root = parse_json(text);
  if (!root.is_object()) throw ParseError("document: expected an object");
  SpaceDocument doc;
  doc.points = as_labels(require(root, "points", "document"), "points");
  PointLabels points;
  try {
    points = PointLabels(doc.points);
  } catch (const InvariantError& e) {
    throw ParseError(std::string("points: ") + e.what());
  }

  const json& dist = require(root, "distances", "document");
  if (!dist.is_array()) throw ParseError("distances: expected an array");
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const std::string where = "distances[" + std::to_string(i) + "]";
    const json& t = dist[i];
    if (!t.is_array() || t.size() != 3) {
      throw ParseError(where + ": expected [label, label, \"p/q\"]");
    }
    DistanceEntry e{as_string(t[0], where + "[0]"),
                    as_string(t[1], where + "[1]"),
                    as_dist(t[2], where + "[2]")};
    check_known(points, e.a, where + "[0]");
    check_known(points, e.b, where + "[1]");
    doc.distances.push_back(std::move(e));
  }

  if (auto it = root.find("roles"); it != root.end()) {
    const json& roles = *it;
    if (!roles.is_object()) throw ParseError("roles: expected an object");
    for (const auto& [key, value] : roles.items()) {
      const std::string where = "roles." + key;
      if (key == "b_star") {
        doc.roles.b_star = as_string(value, where);
        check_known(points, *doc.roles.b_star, where);
        continue;
      }
      std::optional<std::vector<std::string>>* slot =
          key == "A" ? &doc.roles.A
          : key == "B" ? &doc.roles.B
          : key == "C" ? &doc.roles.C
                       : nullptr;
      if (!slot) throw ParseError(where + ": unknown role");
      *slot = as_labels(value, where);
      for (std::size_t i = 0; i < (*slot)->size(); ++i) {
        check_known(points, (**slot)[i], where + "[" + std::to_string(i) + "]");
      }
    }
  }
  return doc;
}

std::string write_space_document(const SpaceDocument& doc) {
  std::ostringstream out;
  out << "{\n  \"points\": " << label_list(doc.points) << ",\n";
  out << "  \"distances\": [";
  for (std::size_t i = 0; i < doc.distances.size(); ++i) {
    const DistanceEntry& e = doc.distances[i];
    out << (i ? ",\n" : "\n") << "    [" << quote(e.a) << ", " << quote(e.b)
        << ", " << quote(e.d.to_string()) << "]";
  }
  out << (doc.distances.empty() ? "]" : "\n  ]");
  if (!doc.roles.empty()) {
    std::vector<std::string> parts;
    const Roles& r = doc.roles;
    if (r.A) parts.push_back("\"A\": " + label_list(*r.A));
    if (r.B) parts.push_back("\"B\": " + label_list(*r.B));
    if (r.C) parts.push_back("\"C\": " + label_list(*r.C));
    if (r.b_star) parts.push_back("\"b_star\": " + quote(*r.b_star));
    out << ",\n  \"roles\": {";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      out << (i ? ", " : "") << parts[i];
    }
    out << "}";
  }
  out << "\n}\n";
  return out.str();
}

PartialSemimetric to_partial(const SpaceDocument& doc) {
  PartialSemimetric p{PointLabels(doc.points)};
  for (std::size_t i = 0; i < doc.distances.size(); ++i) {
    const DistanceEntry& e = doc.distances[i];
    try {
      p.define(e.a, e.b, e.d);
    } catch (const InvariantError& err) {
      throw InvariantError("distances[" + std::to_string(i) + "]: " +
                           err.what());
    }
  }
  return p;
}

DistanceTable to_table(const SpaceDocument& doc) {
  PartialSemimetric p = to_partial(doc);
  const std::size_t n = p.size();
  SquareMatrix<Dist> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!p.defined(i, j)) {
        throw InvariantError("distances: missing pair (" + p.label(i) + ", " +
                             p.label(j) + ")");
      }
      d(i, j) = p(i, j);
      d(j, i) = p(i, j);
    }
  }
  return DistanceTable(p.points(), std::move(d));
}

FiniteMetricSpace to_space(const SpaceDocument& doc) {
  return FiniteMetricSpace(to_table(doc));
}

SpaceDocument to_document(const DistanceTable& table, Roles roles) {
  SpaceDocument doc{table.points().all(), {}, std::move(roles)};
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = i + 1; j < table.size(); ++j) {
      doc.distances.push_back({table.label(i), table.label(j), table(i, j)});
    }
  }
  return doc;
}

SpaceDocument to_document(const FiniteMetricSpace& space, Roles roles) {
  return to_document(space.table(), std::move(roles));
}

SpaceDocument to_document(const PartialSemimetric& p, Roles roles) {
  SpaceDocument doc{p.points().all(), {}, std::move(roles)};
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p.defined(i, j)) doc.distances.push_back({p.label(i), p.label(j), p(i, j)});
    }
  }
  return doc;
}

namespace {

SquareMatrix<Dist> parse_matrix(const json& m, std::size_t k,
                                const std::string& name) {
  if (!m.is_array() || m.size() != k) {
    throw ParseError(name + ": expected " + std::to_string(k) + " rows");
  }
  SquareMatrix<Dist> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::string row = name + "[" + std::to_string(i) + "]";
    if (!m[i].is_array() || m[i].size() != k) {
      throw ParseError(row + ": expected " + std::to_string(k) + " entries");
    }
    for (std::size_t j = 0; j < k; ++j) {
      out(i, j) = as_dist(m[i][j], row + "[" + std::to_string(j) + "]");
    }
  }
  return out;
}

void write_matrix(std::ostringstream& out, const SquareMatrix<Dist>& m) {
  out << "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << (i ? ",\n    [" : "\n    [");
    for (std::size_t j = 0; j < m.size(); ++j) {
      out << (j ? ", " : "") << quote(m(i, j).to_string());
    }
    out << "]";
  }
  out << "\n  ]";
}

}  // namespace

SequenceTemplate parse_template(std::string_view text) {
  json root = parse_json(text);
  if (!root.is_object()) throw ParseError("template: expected an object");
  const json& k = require(root, "k", "template");
  if (!k.is_number_unsigned() || k.get<std::size_t>() == 0) {
    throw ParseError("k: expected a positive integer");
  }
  const std::size_t n = k.get<std::size_t>();
  return SequenceTemplate{parse_matrix(require(root, "delta", "template"), n, "delta"),
                          parse_matrix(require(root, "eps", "template"), n, "eps")};
}

std::string write_template(const SequenceTemplate& t) {
  std::ostringstream out;
  out << "{\n  \"k\": " << t.k() << ",\n  \"delta\": ";
  write_matrix(out, t.delta);
  out << ",\n  \"eps\": ";
  write_matrix(out, t.eps);
  out << "\n}\n";
  return out.str();
}

std::string write_certificate(const IndependenceCertificate& cert,
                              const FiniteMetricSpace& space) {
  json j = {{"pair", {space.label(cert.b1), space.label(cert.b2)}},
            {"equation", std::string(to_string(cert.equation))},
            {"lhs", cert.lhs.to_string()},
            {"rhs", cert.rhs.to_string()}};
  return j.dump();
}

}  // namespace urysohn
