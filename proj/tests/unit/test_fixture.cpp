#include <gtest/gtest.h>

#include "common.hpp"
#include "skewnet/fixture.hpp"

using namespace skewnet;
using nlohmann::json;
using skewnet::testing::smooth_net;

TEST(Fixture, RoundTrip) {
  const ANet& net = smooth_net();
  const auto text = fixture_text(net);
  const ANet back = net_from_json(json::parse(text));
  EXPECT_EQ(fixture_text(back), text);
  EXPECT_EQ(back.matrices(), net.matrices());
  EXPECT_EQ(text.back(), '\n');
}

TEST(Fixture, FingerprintIsStable) {
  EXPECT_EQ(fingerprint(smooth_net()), fingerprint(random_regular_net(1, 3, 5, 6).net));
  EXPECT_NE(fingerprint(smooth_net(1)), fingerprint(smooth_net(2)));
  EXPECT_EQ(fingerprint(smooth_net()).size(), 64u);
}

TEST(Fixture, Sha256KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Fixture, FiniteFieldAndRationalEntries) {
  const Field F = Field::of_order(9);
  std::vector<ExactMatrix> mats;
  for (int i = 0; i < 2; ++i) {
    ExactMatrix m(F, 4, 4);
    m(0, 1) = F.element_at(3 + i);
    m(1, 0) = -m(0, 1);
    m(2, 3) = F.one();
    m(3, 2) = -F.one();
    mats.push_back(m);
  }
  const ANet net(F, mats);
  EXPECT_EQ(net_from_json(net_to_json(net)).matrices(), net.matrices());
  const Field Q = Field::rationals();
  const ANet q(Q, {skew_from_upper(Q, 2, {1}).scaled(Q.from_rational(mpq_class(1, 2)))});
  EXPECT_EQ(net_to_json(q)["matrices"][0][0], "1/2");
  EXPECT_EQ(net_from_json(net_to_json(q)).matrices(), q.matrices());
}

TEST(Fixture, MalformedInputs) {
  auto good = json::parse(fixture_text(smooth_net()));
  auto bad = good;
  bad.erase("two_m");
  EXPECT_THROW(net_from_json(bad), InputError);
  bad = good;
  bad["field"] = "RR";
  EXPECT_THROW(net_from_json(bad), InputError);
  bad = good;
  bad["matrices"][0].erase(0);
  EXPECT_THROW(net_from_json(bad), InputError);
  bad = good;
  bad["matrices"][0][0] = "abc";
  EXPECT_THROW(net_from_json(bad), InputError);
  bad = good;
  bad["two_m"] = 5;
  EXPECT_THROW(net_from_json(bad), InputError);
  bad = good;
  bad["n"] = 4;
  EXPECT_THROW(net_from_json(bad), InputError);
  EXPECT_THROW(net_from_json(json::array()), InputError);
  EXPECT_THROW(read_fixture("/nonexistent/fixture.json"), InputError);
}
