#include "json_io.hpp"

#include <optional>

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace qpf {
namespace {

namespace jio = json_io;
using test::rat;

std::optional<ErrorCode> code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

TEST(JsonIo, Elements) {
  EXPECT_EQ(jio::rational(jio::parse("\"-3/6\"")), Rational(-1, 2));
  EXPECT_EQ(jio::rational(jio::parse("7")), Rational(7));
  EXPECT_EQ(jio::element(jio::parse("[1,\"1/2\",0,-1]"), test::kQuaternion),
            RingElem(Quaternion{1, Rational(1, 2), 0, -1}));
  EXPECT_EQ(jio::element(jio::parse("[[1,2],[3,4]]"), test::kBlock2), test::block2(1, 2, 3, 4));
  EXPECT_EQ(code_of([] { jio::element(jio::parse("[1,2,3]"), test::kQuaternion); }), ErrorCode::BadInput);
  EXPECT_EQ(code_of([] { jio::element(jio::parse("[[1,2,3]]"), test::kBlock2); }), ErrorCode::BadInput);
  EXPECT_EQ(code_of([] { jio::rational(jio::parse("\"1/0\"")); }), ErrorCode::BadInput);
  EXPECT_EQ(code_of([] { jio::parse("{"); }), ErrorCode::BadInput);
}

TEST(JsonIo, RoundTrip) {
  InstanceGenerator g(3);
  for (const auto& spec : test::all_rings()) {
    const RingElem e = g.element(spec);
    EXPECT_EQ(jio::element(jio::encode(e), spec), e);
    const Matrix<RingElem> m = g.skew_matrix(spec, 3);
    nlohmann::json j = jio::encode(m);
    EXPECT_TRUE(test::same(jio::matrix(j), m));
  }
}

TEST(JsonIo, RingSpec) {
  EXPECT_EQ(jio::ring_spec(jio::parse(R"({"ring":"block"})")).block_dim, 2);
  EXPECT_EQ(jio::ring_spec(jio::parse(R"({"ring":"block","block_dim":3})")).block_dim, 3);
  EXPECT_EQ(code_of([] { jio::ring_spec(jio::parse(R"({"ring":"octonion"})")); }), ErrorCode::BadInput);
}

TEST(JsonIo, System) {
  const SkewSystem sys = jio::system(jio::parse(
      R"({"ring":"rational","rows":2,"cols":2,"entries":[["0","2"],["-2","0"]],"rhs":["3","4"]})"));
  EXPECT_EQ(sys.size(), 2);
  EXPECT_EQ(sys.b[1], rat(4));
  EXPECT_EQ(code_of([] {
              jio::system(jio::parse(
                  R"({"ring":"rational","rows":2,"cols":2,"entries":[["0","2"],["2","0"]],"rhs":["3","4"]})"));
            }),
            ErrorCode::BadInput);
  EXPECT_EQ(code_of([] {
              jio::system(jio::parse(R"({"ring":"rational","rows":2,"cols":2,"entries":[["0","2"],["-2","0"]]})"));
            }),
            ErrorCode::BadInput);
}

TEST(JsonIo, Measure) {
  const MomentState s = jio::measure(jio::parse(
      R"({"nodes":["1/2","2"],"weights":[[[1,0],[0,1]],[[2,1],[1,3]]],"snapshot":["1","3/2"],"ring":"block","block_dim":2})"));
  EXPECT_EQ(s.node_count(), 2);
  EXPECT_TRUE(test::Same(s.phi(0), test::block2(1, 0, 0, 1) +
                                       RingElem::scalar(test::kBlock2, Rational(3, 2)) * test::block2(2, 1, 1, 3)));
  EXPECT_EQ(code_of([] {
              jio::measure(jio::parse(R"({"nodes":["1","1"],"weights":["1","1"],"snapshot":["1","1"],"ring":"rational"})"));
            }),
            ErrorCode::BadInput);
}

TEST(JsonIo, QpfRequest) {
  const auto req = jio::qpf_request(jio::parse(
      R"({"ring":"rational","body":[1,2],"boxed":["c1","b"],"oracle":{"entries":[["0","2"],["-2","0"]],"rhs":["3","4"],"c_row":"unit"}})"));
  ASSERT_EQ(req.body.size(), 2u);
  EXPECT_EQ(req.body[1], Label::body(2));
  EXPECT_EQ(req.p, Label::c(1));
  EXPECT_EQ(req.q, Label::b());
  EXPECT_EQ(req.c_row, CRow::Unit);
  EXPECT_EQ(req.rhs.size(), 2u);
  EXPECT_EQ(code_of([] {
              jio::qpf_request(jio::parse(R"({"ring":"rational","body":[1],"boxed":["zz",1],"oracle":{"entries":[["0"]]}})"));
            }),
            ErrorCode::BadInput);
}

}  // namespace
}  // namespace qpf
