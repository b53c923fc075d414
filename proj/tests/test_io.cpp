#include <gtest/gtest.h>

#include "edp/generators.hpp"
#include "edp/io.hpp"

using namespace edp;

TEST(ParseDemand, Minimal) {
  const DemandGraph d = parse_demand("edp 1\nn 2\ne a1 b1 1\n");
  EXPECT_EQ(d.n(), 2);
  EXPECT_EQ(d.num_edges(), 1);
  EXPECT_EQ(d.multiplicity(a(1), b(1)), 1);
}

TEST(ParseDemand, CommentsAndBlankLines) {
  const DemandGraph d = parse_demand("# header\nedp 1\n\nn 3   # three\ne a1 a2 2\n\te b3 b1 1\n");
  EXPECT_EQ(d.num_edges(), 3);
  EXPECT_EQ(d.multiplicity(a(2), a(1)), 2);
}

TEST(ParseDemand, Errors) {
  EXPECT_THROW(parse_demand("edp 1\nn 2\ne a1 a1 1\n"), InvalidInput);
  EXPECT_THROW(parse_demand("edp 1\nn 2\ne a5 b1 1\n"), InvalidInput);
  EXPECT_THROW(parse_demand("edp 1\nn 2\ne a1 b1 0\n"), InvalidInput);
  EXPECT_THROW(parse_demand("edp 1\nn 2\ne a1 b1 1\ne b1 a1 1\n"), InvalidInput);
  EXPECT_THROW(parse_demand("edp 2\nn 2\n"), InvalidInput);
  EXPECT_THROW(parse_demand("n 2\n"), InvalidInput);
  EXPECT_THROW(parse_demand("edp 1\n"), InvalidInput);
  EXPECT_THROW(parse_demand("edp 1\nn 0\n"), InvalidInput);
  EXPECT_THROW(parse_demand("edp 1\nn 2\ne a1 c1 1\n"), InvalidInput);
  EXPECT_THROW(parse_demand("edp 1\nn 2\nx a1 b1 1\n"), InvalidInput);
}

TEST(ParseDemand, ErrorCarriesLine) {
  try {
    parse_demand("edp 1\nn 2\ne a1 b1 1\ne a1 a1 1\n");
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_EQ(e.line(), 4);
  }
}

TEST(ParseDemand, RoundTrip) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const DemandGraph d = generate({7, Model::Bundles, 12, 5, seed});
    const DemandGraph back = parse_demand(to_text(d));
    EXPECT_EQ(to_text(back), to_text(d));
    EXPECT_EQ(back.num_edges(), d.num_edges());
  }
}

TEST(ParseRealization, RoundTripAndErrors) {
  Realization r;
  r.paths[1] = {a(1), b(2), a(2), b(1)};
  r.paths[4] = {a(3), b(3)};
  const std::string text = to_text(r);
  EXPECT_EQ(text, "path 1 a1 b2 a2 b1\npath 4 a3 b3\n");
  const Realization back = parse_realization(text, 3);
  EXPECT_EQ(back.paths, r.paths);
  EXPECT_THROW(parse_realization("path 1 a1\n", 3), InvalidInput);
  EXPECT_THROW(parse_realization("path 1 a1 b9\n", 3), InvalidInput);
  EXPECT_THROW(parse_realization("path 1 a1 b1\npath 1 a2 b2\n", 3), InvalidInput);
  EXPECT_THROW(parse_realization("path 0 a1 b1\n", 3), InvalidInput);
}

TEST(Generate, Deterministic) {
  for (Model m : {Model::Uniform, Model::Bundles, Model::Matching, Model::Regular}) {
    const GenParams p{16, m, m == Model::Regular ? std::nullopt : std::optional<int>(12), 3, 99};
    EXPECT_EQ(to_text(generate(p)), to_text(generate(p))) << to_string(m);
  }
  EXPECT_NE(to_text(generate({16, Model::Uniform, 12, 3, 1})), to_text(generate({16, Model::Uniform, 12, 3, 2})));
}

TEST(Generate, ModelsRespectParameters) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const DemandGraph u = generate({20, Model::Uniform, 30, 4, seed});
    EXPECT_EQ(u.num_edges(), 30);
    EXPECT_LE(u.max_degree(), 4);
    const DemandGraph reg = generate({20, Model::Regular, std::nullopt, 3, seed});
    for (int s = 0; s < 40; ++s) EXPECT_EQ(reg.degree(from_slot(s, 20)), 3);
    const DemandGraph m = generate({20, Model::Matching, std::nullopt, std::nullopt, seed});
    EXPECT_EQ(m.num_edges(), 20);
    EXPECT_EQ(m.max_degree(), 1);
    const DemandGraph bu = generate({20, Model::Bundles, 25, 6, seed});
    EXPECT_EQ(bu.num_edges(), 25);
    EXPECT_LE(bu.max_degree(), 6);
  }
  const DemandGraph x = generate({5, Model::ExtremalBundle, {}, {}, 1});
  EXPECT_EQ(x.multiplicity(a(1), a(2)), 4);
  EXPECT_EQ(x.multiplicity(b(1), b(2)), 4);
  EXPECT_EQ(x.num_edges(), 8);
}

TEST(Generate, ParseModel) {
  EXPECT_EQ(parse_model("extremal-bundle"), Model::ExtremalBundle);
  EXPECT_FALSE(parse_model("nope"));
}
