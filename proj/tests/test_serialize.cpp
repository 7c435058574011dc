#include <gtest/gtest.h>

#include <limits>

#include "origami/serialize.hpp"

using namespace origami;

namespace {

TEST(Json, NonFiniteIsNull) {
  EXPECT_TRUE(real_json(std::numeric_limits<double>::infinity()).is_null());
  EXPECT_TRUE(real_json(std::nan("")).is_null());
  EXPECT_TRUE(std::isnan(real_from(json(nullptr))));
  EXPECT_EQ(real_from(json(1.5)), 1.5);
  EXPECT_THROW(real_from(json("x")), precondition_error);
}

TEST(Json, MatrixRoundTrip) {
  const MoebiusMap m(complex(1.25, -0.5), complex(0.1, 0.2), complex(-0.3, 0.7), complex(2.0, 0.0));
  const auto back = matrix_from(json::parse(matrix_json(m).dump()));
  EXPECT_LT(projective_distance(back, m), 1e-15);
  EXPECT_THROW(matrix_from(json::array({1, 2, 3})), precondition_error);
}

TEST(Json, CircleAndKind) {
  const Circle c{complex(0.3, -1.0), 0.25, Interior::complement};
  const auto back = circle_from(circle_json(c));
  EXPECT_EQ(back.center, c.center);
  EXPECT_EQ(back.radius, c.radius);
  EXPECT_EQ(back.interior, c.interior);
  EXPECT_EQ(kind_from(kind_json(GroupKind::case_a(6))), GroupKind::case_a(6));
  EXPECT_EQ(kind_from(kind_json(GroupKind::case_b())), GroupKind::case_b());
  EXPECT_THROW(kind_from(json{{"case", "c"}}), precondition_error);
}

TEST(Json, GroupRoundTripRecertifies) {
  for (const auto& g : {build_case_a(3), build_case_a(4), build_case_b()}) {
    const auto text = group_json(g).dump();
    const auto back = group_from(json::parse(text));
    EXPECT_EQ(back.kind, g.kind);
    EXPECT_TRUE(back.certificate.verdict);
    EXPECT_TRUE(projectively_equal(back.T, g.T, 1e-14));
    EXPECT_EQ(back.certificate.orbit.size(), g.certificate.orbit.size());
    EXPECT_EQ(group_json(back)["certificate"]["orbit_size"], g.certificate.orbit.size());
  }
}

TEST(Json, TamperedGroupRejected) {
  const auto g = build_case_a(3);
  auto j = group_json(g);
  j["matrices"]["A"] = matrix_json(g.B);
  EXPECT_THROW(group_from(j), precondition_error);

  j = group_json(g);
  j["pairing"]["first"]["radius"] = 5.0;
  EXPECT_THROW(group_from(j), error);

  j = group_json(g);
  j.erase("pairing");
  EXPECT_THROW(group_from(j), precondition_error);
}

TEST(Json, ReportFields) {
  const auto g = build_case_a(3);
  const auto rep = realize_subgroup(g, subgroup_words_odd(3), {2, kDefaultMaxCosets, kDefaultTolerance});
  const auto j = report_json(rep, g.presentation);
  EXPECT_EQ(j["index"], 6);
  EXPECT_EQ(j["normal"], true);
  EXPECT_EQ(j["quotient_tag"], "dihedral(3)");
  EXPECT_EQ(j["genus"], 3);
  EXPECT_TRUE(j["hurwitz_equality"].is_boolean());
  EXPECT_EQ(j["freeness_depth_checked"], 2);
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["generator_matrices"].size(), rep.generator_words.size());
}

TEST(Json, HomsCount) {
  const auto p = presentation_case_a(3);
  const auto target = dihedral_group(3);
  const auto homs = enumerate_homs(p, target);
  const auto j = homs_json(homs, p, target);
  EXPECT_EQ(j["count"], homs.size());
  EXPECT_EQ(j["target"], "D3");
  EXPECT_EQ(j["homomorphisms"][0]["images"]["B"], 0);
}

}  // namespace
