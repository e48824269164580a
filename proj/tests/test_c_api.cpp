#include "quasipf/quasipf.h"

#include <string>

#include <gtest/gtest.h>

namespace {

const char* kSystem =
    R"({"ring":"rational","rows":2,"cols":2,"entries":[["0","2"],["-2","0"]],"rhs":["3","4"]})";

TEST(CApi, SolveBothRoutes) {
  qpf_system* sys = nullptr;
  ASSERT_EQ(qpf_system_load(kSystem, &sys), QPF_OK);
  EXPECT_EQ(qpf_system_size(sys), 2);
  qpf_result* r = nullptr;
  ASSERT_EQ(qpf_system_solve(sys, "both", &r), QPF_OK);
  EXPECT_EQ(std::string(qpf_result_text(r)), "x = (-2, 3/2)\n");
  EXPECT_NE(std::string(qpf_result_json(r)).find("\"methods_agree\": true"), std::string::npos);
  EXPECT_EQ(qpf_result_passed(r), 1);
  qpf_result_free(r);
  EXPECT_EQ(qpf_system_solve(sys, "cholesky", &r), QPF_BAD_INPUT);
  EXPECT_NE(std::string(qpf_last_error()).find("method"), std::string::npos);
  qpf_system_free(sys);
}

TEST(CApi, LoadErrors) {
  qpf_system* sys = nullptr;
  EXPECT_EQ(qpf_system_load("{", &sys), QPF_BAD_INPUT);
  EXPECT_EQ(qpf_system_load(nullptr, &sys), QPF_BAD_INPUT);
  EXPECT_EQ(qpf_system_load(
                R"({"ring":"rational","rows":2,"cols":2,"entries":[["0","0"],["0","0"]],"rhs":["1","1"]})", &sys),
            QPF_OK);
  qpf_result* r = nullptr;
  EXPECT_EQ(qpf_system_solve(sys, "qpf", &r), QPF_SINGULAR);
  qpf_system_free(sys);
  EXPECT_EQ(qpf_system_size(nullptr), 0);
  qpf_system_free(nullptr);
  qpf_result_free(nullptr);
  EXPECT_STREQ(qpf_result_text(nullptr), "");
}

TEST(CApi, Pfaffians) {
  qpf_result* r = nullptr;
  ASSERT_EQ(qpf_pfaffian(R"({"ring":"rational","rows":4,"cols":4,"entries":[["0","1","2","3"],["-1","0","4","5"],["-2","-4","0","6"],["-3","-5","-6","0"]]})",
                         &r),
            QPF_OK);
  EXPECT_EQ(std::string(qpf_result_text(r)), "8\n");
  qpf_result_free(r);
  ASSERT_EQ(qpf_pfaffian(
                R"({"ring":"rational","body":[1,2],"boxed":["c1","b"],"oracle":{"entries":[["0","2"],["-2","0"]],"rhs":["3","4"]}})",
                &r),
            QPF_OK);
  EXPECT_EQ(std::string(qpf_result_text(r)), "-2\n");
  qpf_result_free(r);
  EXPECT_EQ(qpf_pfaffian(R"({"ring":"quaternion","rows":2,"cols":2,"entries":[[[0,0,0,0],[1,0,0,0]],[[-1,0,0,0],[0,0,0,0]]]})", &r),
            QPF_TAG_MISMATCH);
}

TEST(CApi, VerifyIsDeterministic) {
  qpf_config cfg;
  qpf_config_init(&cfg);
  EXPECT_EQ(cfg.seed, 7u);
  cfg.n = 1;
  cfg.instances = 1;
  qpf_result* a = nullptr;
  qpf_result* b = nullptr;
  ASSERT_EQ(qpf_verify(&cfg, "classical", &a), QPF_OK);
  ASSERT_EQ(qpf_verify(&cfg, "classical", &b), QPF_OK);
  EXPECT_EQ(std::string(qpf_result_json(a)), std::string(qpf_result_json(b)));
  EXPECT_EQ(qpf_result_passed(a), 1);
  qpf_result_free(a);
  qpf_result_free(b);
  EXPECT_EQ(qpf_verify(&cfg, "nonsense", &a), QPF_BAD_INPUT);
  cfg.ring = "octonion";
  EXPECT_EQ(qpf_verify(&cfg, "classical", &a), QPF_BAD_INPUT);
}

TEST(CApi, SuiteNames) {
  ASSERT_GT(qpf_suite_count(), 0);
  for (int i = 0; i < qpf_suite_count(); ++i) EXPECT_NE(qpf_suite_name(i), nullptr);
  EXPECT_EQ(qpf_suite_name(-1), nullptr);
  EXPECT_EQ(qpf_suite_name(qpf_suite_count()), nullptr);
  EXPECT_STREQ(qpf_status_string(QPF_SINGULAR), qpf_status_string(QPF_SINGULAR));
}

}  // namespace
