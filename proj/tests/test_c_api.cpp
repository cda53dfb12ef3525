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

#include <gtest/gtest.h>

#include <memory>
#include <string>

#include "urysohn/urysohn.h"

namespace {

// Takes ownership of a library string.
std::string take(char* s) {
  if (!s) return "<null>";
  std::string out(s);
  ury_string_free(s);
  return out;
}

struct SpaceDeleter {
  void operator()(ury_space* s) const { ury_space_free(s); }
};
using Space = std::unique_ptr<ury_space, SpaceDeleter>;

const char* const kDoc =
    R"({"points": ["b1", "b2", "c", "a"],
        "distances": [["b1","b2","3/5"], ["b1","c","2/5"], ["b2","c","1/2"],
                      ["a","b1","3/10"], ["a","b2","3/10"], ["a","c","2/5"]],
        "roles": {"A": ["a"], "B": ["b1", "b2"], "C": ["c"]}})";

Space parse(const char* doc) {
  ury_space* s = nullptr;
  EXPECT_EQ(ury_space_parse(doc, &s), URY_OK) << ury_last_error();
  return Space(s);
}

const char* const kC[] = {"c"};

TEST(CApi, SpaceBasics) {
  EXPECT_STRNE(ury_version(), "");
  Space s = parse(kDoc);
  ASSERT_TRUE(s);
  EXPECT_EQ(ury_space_size(s.get()), 4U);
  EXPECT_STREQ(ury_space_label(s.get(), 3), "a");
  EXPECT_EQ(ury_space_label(s.get(), 4), nullptr);
  char* d = nullptr;
  ASSERT_EQ(ury_space_distance(s.get(), "b2", "b1", &d), URY_OK);
  EXPECT_EQ(take(d), "3/5");

  ury_roles roles{};
  ASSERT_EQ(ury_space_roles(s.get(), &roles), URY_OK);
  EXPECT_TRUE(roles.A.present);
  ASSERT_EQ(roles.B.len, 2U);
  EXPECT_STREQ(roles.B.items[1], "b2");
  EXPECT_EQ(roles.b_star, nullptr);

  char* text = nullptr;
  ASSERT_EQ(ury_space_write(s.get(), &text), URY_OK);
  Space again = parse(take(text).c_str());
  EXPECT_EQ(ury_space_size(again.get()), 4U);
}

TEST(CApi, StatusCodesAndLastError) {
  ury_space* s = nullptr;
  EXPECT_EQ(ury_space_parse("{", &s), URY_ERR_PARSE);
  EXPECT_EQ(s, nullptr);
  EXPECT_STRNE(ury_last_error(), "");
  EXPECT_EQ(ury_space_parse(R"({"points":["a","b","c"],"distances":[["a","b","1/10"],["b","c","1/10"],["a","c","1"]]})",
                            &s),
            URY_ERR_INVARIANT);
  EXPECT_EQ(ury_space_parse(nullptr, &s), URY_ERR_ARGUMENT);
  Space ok = parse(kDoc);
  char* out = nullptr;
  EXPECT_EQ(ury_d_max(ok.get(), "b1", "zz", kC, 1, &out), URY_ERR_LOOKUP);
  EXPECT_NE(std::string(ury_last_error()).find("zz"), std::string::npos);
  ury_template* t = nullptr;
  EXPECT_EQ(ury_sopn_witness(0, &t), URY_ERR_ARGUMENT);
}

TEST(CApi, TableCheck) {
  int valid = 1;
  char* violation = nullptr;
  ASSERT_EQ(ury_table_check(R"({"points":["x","y","z"],"distances":[["x","y","0"],["y","z","1"],["x","z","2/3"]]})",
                            &valid, &violation),
            URY_OK);
  EXPECT_EQ(valid, 0);
  EXPECT_EQ(take(violation), R"(["y","x","z"])");
}

TEST(CApi, CompletionAndConsistency) {
  ury_partial* p = nullptr;
  ASSERT_EQ(ury_partial_parse(R"({"points":["x","y","z"],"distances":[["x","y","0"],["y","z","1/2"],["x","z","1"]]})",
                              &p),
            URY_OK);
  int consistent = 1;
  char* witness = nullptr;
  ASSERT_EQ(ury_consistent(p, &consistent, &witness), URY_OK);
  EXPECT_EQ(consistent, 0);
  EXPECT_EQ(take(witness), R"(["x","y","z"])");
  ury_partial_free(p);

  ASSERT_EQ(ury_partial_parse(R"({"points":["x","y","z"],"distances":[["x","y","1/5"],["y","z","1/2"]]})",
                              &p),
            URY_OK);
  ury_space* done = nullptr;
  ASSERT_EQ(ury_complete(p, &done), URY_OK);
  Space s(done);
  char* d = nullptr;
  ASSERT_EQ(ury_space_distance(s.get(), "x", "z", &d), URY_OK);
  EXPECT_EQ(take(d), "7/10");
  ury_partial_free(p);
}

TEST(CApi, Independence) {
  Space s = parse(kDoc);
  char *lo = nullptr, *hi = nullptr, *out = nullptr;
  ASSERT_EQ(ury_d_max(s.get(), "b1", "b2", kC, 1, &out), URY_OK);
  EXPECT_EQ(take(out), "9/10");
  ASSERT_EQ(ury_d_min(s.get(), "b1", "b2", nullptr, 0, &out), URY_OK);
  EXPECT_EQ(take(out), "1/5");
  ASSERT_EQ(ury_gamma_interval(s.get(), "b1", "b2", kC, 1, &lo, &hi), URY_OK);
  EXPECT_EQ(take(lo), "1/5");
  EXPECT_EQ(take(hi), "9/10");

  int divides = 0;
  ASSERT_EQ(ury_divides_pair(s.get(), "a", "b1", "b2", kC, 1, &divides), URY_OK);
  EXPECT_EQ(divides, 1);
  ASSERT_EQ(ury_divides_oracle(s.get(), "a", "b1", "b2", kC, 1, &divides), URY_OK);
  EXPECT_EQ(divides, 1);

  const char* A[] = {"a"};
  const char* B[] = {"b1", "b2"};
  int indep = 1;
  char* cert = nullptr;
  ASSERT_EQ(ury_independent(s.get(), A, 1, B, 2, kC, 1, &indep, &cert), URY_OK);
  EXPECT_EQ(indep, 0);
  EXPECT_EQ(take(cert),
            R"({"equation":"d_max","lhs":"3/5","pair":["b1","b2"],"rhs":"9/10"})");

  char* grid = nullptr;
  ASSERT_EQ(ury_interval_oracle(s.get(), "b1", "b2", kC, 1, 5, &grid), URY_OK);
  EXPECT_EQ(take(grid), R"(["1/5","2/5","3/5","4/5"])");
}

TEST(CApi, Extension) {
  Space s = parse(
      R"({"points":["a","b","s"],"distances":[["a","b","1/2"],["b","s","3/5"],["a","s","1/2"]]})");
  const char* A[] = {"a"};
  const char* B[] = {"b"};
  ury_problem prob{A, 1, B, 1, nullptr, 0, "s"};
  char *lo = nullptr, *hi = nullptr;
  ASSERT_EQ(ury_extension_bounds(s.get(), &prob, "a", &lo, &hi), URY_OK);
  EXPECT_EQ(take(lo), "1/2");
  EXPECT_EQ(take(hi), "7/10");
  ASSERT_EQ(ury_admissible_gammas(s.get(), &prob, "a", &lo, &hi), URY_OK);
  EXPECT_EQ(take(lo), "1/2");
  EXPECT_EQ(take(hi), "7/10");

  ury_space* one = nullptr;
  ASSERT_EQ(ury_extend_one(s.get(), &prob, "a", "3/5", &one), URY_OK);
  Space ext(one);
  char* d = nullptr;
  ASSERT_EQ(ury_space_distance(ext.get(), "a'", "s", &d), URY_OK);
  EXPECT_EQ(take(d), "3/5");
  EXPECT_EQ(ury_extend_one(s.get(), &prob, "a", "71/100", &one),
            URY_ERR_PRECONDITION);

  ury_space* all = nullptr;
  char* gammas = nullptr;
  ASSERT_EQ(ury_extend_all(s.get(), &prob, &all, &gammas), URY_OK);
  Space ext_all(all);
  EXPECT_EQ(take(gammas), R"([{"copy":"a'","gamma":"7/10","point":"a"}])");

  char* grid = nullptr;
  ASSERT_EQ(ury_extension_oracle(s.get(), &prob, "a", 10, &grid), URY_OK);
  EXPECT_EQ(take(grid), R"(["1/2","3/5","7/10"])");
}

TEST(CApi, Templates) {
  ury_template* t = nullptr;
  ASSERT_EQ(ury_sopn_witness(3, &t), URY_OK);
  int valid = 0, cyclic = 1;
  char* reason = nullptr;
  ASSERT_EQ(ury_template_validate(t, &valid, &reason), URY_OK);
  EXPECT_EQ(valid, 1);
  EXPECT_EQ(reason, nullptr);
  char* cycle = nullptr;
  ASSERT_EQ(ury_is_n_cyclic(t, 3, &cyclic, &cycle), URY_OK);
  EXPECT_EQ(cyclic, 0);
  EXPECT_EQ(take(cycle), "[3,2,1]");
  ASSERT_EQ(ury_is_n_cyclic(t, 4, &cyclic, &cycle), URY_OK);
  EXPECT_EQ(cyclic, 1);
  EXPECT_EQ(cycle, nullptr);

  char* text = nullptr;
  ASSERT_EQ(ury_template_write(t, &text), URY_OK);
  ury_template* back = nullptr;
  ASSERT_EQ(ury_template_parse(take(text).c_str(), &back), URY_OK);
  ury_template_free(back);
  ury_template_free(t);

  ury_space* arr = nullptr;
  ASSERT_EQ(ury_tp2_array(2, 3, &arr), URY_OK);
  Space a(arr);
  EXPECT_EQ(ury_space_size(a.get()), 6U);
}

TEST(CApi, Stationarity) {
  Space s = parse(kDoc);
  const char* a[] = {"a"};
  const char* c[] = {"c"};
  const char* B[] = {"c", "b1"};
  int flag = 1;
  ASSERT_EQ(ury_is_stationary(s.get(), a, 1, c, 1, &flag), URY_OK);
  EXPECT_EQ(flag, 0);
  ASSERT_EQ(ury_is_stationary(s.get(), c, 1, c, 1, &flag), URY_OK);
  EXPECT_EQ(flag, 1);
  ASSERT_EQ(ury_unique_extension_to(s.get(), a, 1, c, 1, c, 1, &flag), URY_OK);
  EXPECT_EQ(flag, 1);
  ASSERT_EQ(ury_unique_extension_to(s.get(), a, 1, c, 1, B, 2, &flag), URY_OK);
  EXPECT_EQ(flag, 0);
  EXPECT_EQ(ury_unique_extension_to(s.get(), a, 1, B, 2, c, 1, &flag),
            URY_ERR_PRECONDITION);
}

}  // namespace
