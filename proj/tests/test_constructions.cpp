#include <gtest/gtest.h>

#include "endgraph/degree.hpp"
#include "endgraph/error.hpp"
#include "endgraph/exhausting.hpp"
#include "endgraph/families.hpp"
#include "endgraph/proof_steps.hpp"

using namespace endgraph;

namespace {

std::vector<std::vector<std::string>> tag_rows(Level n, std::initializer_list<const char*> prefixes) {
  std::vector<std::vector<std::string>> sets;
  for (Level i = 0; i <= n; ++i) {
    std::vector<std::string> s;
    for (const char* pre : prefixes) s.push_back(pre + std::to_string(i));
    sets.push_back(std::move(s));
  }
  return sets;
}

bool witness_escapes(const LevelledDigraph& g, const EndDescriptor& end, const ExhaustingSequence& seq,
                     const ExhaustingVerdict& v) {
  if (!v.witness || check_ray_witness(g, *v.witness)) return false;
  if (!is_end_consistent(g, end, *v.witness)) return false;
  if (!v.index) return true;
  const auto& cur = seq.sets[*v.index];
  const auto& next = seq.sets[*v.index + 1];
  bool meets = false;
  for (Vertex x : v.witness->path) {
    if (std::binary_search(next.begin(), next.end(), x)) return false;
    meets = meets || std::binary_search(cur.begin(), cur.end(), x);
  }
  return meets;
}

}  // namespace

TEST(Exhausting, Example52PairsPass) {
  const auto p = example52();
  const auto g = truncate(p, 40);
  const auto seq = sequence_from_tags(g, tag_rows(40, {"a", "b"}));
  const auto v = verify_exhausting(g, p.end("omega"), seq);
  EXPECT_TRUE(v.pass) << v.reason;
  EXPECT_GT(v.checked_steps, 10u);
  EXPECT_EQ(seq.liminf_size(), 2u);
}

TEST(Exhausting, Example52SinglesFailWithDetour) {
  const auto p = example52();
  const auto g = truncate(p, 40);
  const auto seq = sequence_from_tags(g, tag_rows(40, {"b"}));
  const auto v = verify_exhausting(g, p.end("omega"), seq);
  ASSERT_FALSE(v.pass);
  ASSERT_TRUE(v.index.has_value());
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_TRUE(witness_escapes(g, p.end("omega"), seq, v));
  // the detour runs through the bottom-left corner
  const auto tags = g.path_tags(v.witness->path);
  EXPECT_NE(std::find(tags.begin(), tags.end(), "c0"), tags.end());
}

TEST(Exhausting, LevelCutsPassOnKRays) {
  const auto p = krays(3);
  const auto g = truncate(p, 20);
  ExhaustingSequence seq;
  for (Level l = 0; l <= 20; ++l) {
    std::vector<Vertex> vs;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (g.level(v) == l) vs.push_back(v);
    }
    seq.sets.push_back(make_set(std::move(vs)));
  }
  EXPECT_TRUE(verify_exhausting(g, p.end("omega"), seq).pass);
}

TEST(Exhausting, CoverageFailure) {
  const auto p = krays(2);
  const auto g = truncate(p, 20);
  const auto& end = p.end("omega");
  // only the canonical ray: the other ray never meets a set
  ExhaustingSequence seq;
  for (Vertex v : canonical_ray(g, end)) seq.sets.push_back({v});
  const auto v = verify_exhausting(g, end, seq);
  ASSERT_FALSE(v.pass);
  EXPECT_TRUE(witness_escapes(g, end, seq, v));
}

TEST(Exhausting, TagsRoundTripAndTruncation) {
  const auto g = truncate(example52(), 5);
  const auto seq = sequence_from_tags(g, tag_rows(9, {"a", "b", "zz"}));
  EXPECT_EQ(seq.sets.size(), 6u);
  const auto tags = sequence_tags(g, seq);
  EXPECT_EQ(sequence_from_tags(g, tags).sets, seq.sets);
}

TEST(Diagonal, OneAndTwoRays) {
  const auto p = krays(2);
  const auto g = truncate(p, 10);
  const auto ws = in_degree_witnesses(g, p.end("omega"), 5);
  ASSERT_EQ(ws.paths.size(), 2u);
  const auto one = diagonal_exhausting_sequence(g, {ws.paths[0]});
  EXPECT_EQ(one.sets.size(), ws.paths[0].size());
  for (std::size_t i = 0; i < one.sets.size(); ++i) EXPECT_EQ(one.sets[i].size(), i + 1);

  const auto two = diagonal_exhausting_sequence(g, ws.paths);
  EXPECT_EQ(two.sets.front().size(), 1u);
  EXPECT_EQ(two.sets[1].size(), 3u);
  for (std::size_t i = 0; i + 1 < two.sets.size(); ++i) {
    EXPECT_TRUE(std::includes(two.sets[i + 1].begin(), two.sets[i + 1].end(), two.sets[i].begin(),
                              two.sets[i].end()));
  }
  EXPECT_EQ(two.sets.back().size(), ws.paths[0].size() + ws.paths[1].size());
}

TEST(Diagonal, RejectsBadFamilies) {
  const auto g = truncate(krays(1), 5);
  EXPECT_THROW(diagonal_exhausting_sequence(g, {}), PreconditionError);
  const Path r{g.at("r0_0"), g.at("r0_1")};
  EXPECT_THROW(diagonal_exhausting_sequence(g, {r, r}), PreconditionError);
}

TEST(Graded, SingleRay) {
  const auto p = single_ray();
  const auto g = truncate(p, 20);
  const auto gs = graded_sequence(g, p.end("omega"), {}, 1);
  ASSERT_FALSE(gs.contradiction_flow);
  ASSERT_GT(gs.sequence.sets.size(), 5u);
  for (const auto& s : gs.sequence.sets) EXPECT_EQ(s.size(), 1u);
  EXPECT_TRUE(verify_exhausting(g, p.end("omega"), gs.sequence).pass);
}

TEST(Graded, Example52WithCorner) {
  const auto p = example52();
  const auto g = truncate(p, 20);
  const std::vector<Vertex> S{g.at("c0")};
  const auto gs = graded_sequence(g, p.end("omega"), S, 1);
  ASSERT_FALSE(gs.contradiction_flow);
  for (const auto& s : gs.sequence.sets) {
    EXPECT_EQ(s.size(), 1u);
    for (Vertex v : s) EXPECT_NE(v, g.at("c0"));
  }
}

TEST(Graded, ContradictionWhenDTooSmall) {
  const auto p = krays(3);
  const auto g = truncate(p, 20);
  const auto gs = graded_sequence(g, p.end("omega"), {}, 2);
  ASSERT_TRUE(gs.contradiction_flow.has_value());
  EXPECT_EQ(*gs.contradiction_flow, 3u);
  EXPECT_TRUE(gs.sequence.sets.empty());
  EXPECT_THROW(graded_sequence(g, p.end("omega"), {}, 4), PreconditionError);
}

TEST(Graded, SetsHaveSizeD) {
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto p = krays(k);
    const auto g = truncate(p, 16);
    const auto gs = graded_sequence(g, p.end("omega"), {}, k);
    ASSERT_FALSE(gs.contradiction_flow);
    for (const auto& s : gs.sequence.sets) EXPECT_EQ(s.size(), k);
  }
}

TEST(StableCore, KeepsCommonVertices) {
  ExhaustingSequence seq;
  seq.sets = {{1, 2, 3}, {2, 3, 4}, {2, 3, 5}, {2, 6}};
  EXPECT_EQ(stable_core(seq, 3), (VertexSet{2, 3}));
  EXPECT_EQ(stable_core(seq, 4), (VertexSet{2}));
  EXPECT_TRUE(stable_core(seq, 0).empty());
  EXPECT_EQ(stable_core(seq, 99), (VertexSet{2}));
}

TEST(StableCore, Example52PairsHaveNone) {
  const auto g = truncate(example52(), 12);
  const auto seq = sequence_from_tags(g, tag_rows(12, {"b", "a"}));
  EXPECT_TRUE(stable_core(seq, 5).empty());
}

TEST(Partition, Formula) {
  ExhaustingSequence u1;
  u1.sets = {{10}, {11}};
  ExhaustingSequence u2;
  u2.sets = {{20}, {21}, {22}};
  const std::vector<Vertex> S{1};
  const auto seq = sequence_from_partition(S, {u1, u2});
  ASSERT_EQ(seq.sets.size(), 3u);
  EXPECT_EQ(seq.sets[0], (VertexSet{1, 10, 20}));
  EXPECT_EQ(seq.sets[2], (VertexSet{1, 10, 22}));
  EXPECT_THROW(sequence_from_partition(S, {}), PreconditionError);
  EXPECT_THROW(sequence_from_partition(S, {ExhaustingSequence{}}), PreconditionError);
}

TEST(DeltaMinus, Example52) {
  const auto p = example52();
  const auto g = truncate(p, 20);
  EXPECT_EQ(omega_minus(p, g, "omega", 5), std::vector<std::string>{"eta"});
  const auto dm = delta_minus(p, g, "omega", 5);
  EXPECT_EQ(dm.value, (Estimate{2, false}));
  EXPECT_EQ(dm.plan.A, std::vector<std::string>{"eta"});
  EXPECT_EQ(dm.plan.B, std::vector<std::string>{"omega"});
  EXPECT_EQ(g.path_tags(dm.plan.S), std::vector<std::string>{"c0"});
  EXPECT_FALSE(check_plan(p, "omega", {"eta"}, dm.plan));
}

TEST(DeltaMinus, PlanChecks) {
  const auto p = example52();
  EXPECT_TRUE(check_plan(p, "omega", {"eta"}, {{"eta", "omega"}, {}, {}}));
  EXPECT_TRUE(check_plan(p, "omega", {"eta"}, {{}, {"omega"}, {}}));
  EXPECT_TRUE(check_plan(p, "omega", {"eta"}, {{}, {"omega", "eta"}, {}}));
  EXPECT_FALSE(check_plan(p, "omega", {"eta"}, {{}, {"eta", "omega"}, {}}));
}

TEST(DeltaMinus, SmallerEndsClosure) {
  const auto p = example52();
  EXPECT_EQ(smaller_ends(p, "omega"), std::vector<std::string>{"eta"});
  EXPECT_TRUE(smaller_ends(p, "eta").empty());
}

TEST(DeltaMinus, AlternativePartitionSequence) {
  const auto p = example52();
  const auto g = truncate(p, 20);
  const PartitionPlan plan{{}, {"eta", "omega"}, {}};
  const auto seq = partition_sequence(p, g, plan, 5);
  EXPECT_EQ(seq.liminf_size(), 2u);
  EXPECT_TRUE(verify_exhausting(g, p.end("omega"), seq).pass);
}

TEST(CombinedDegree, Example52) {
  const auto p = example52();
  for (Level d : {12, 20, 28}) {
    const auto g = truncate(p, d);
    const auto r = combined_in_degree(p, g, "omega", 5);
    EXPECT_EQ(r.d_minus, (Estimate{1, false})) << d;
    EXPECT_TRUE(r.dominators.empty());
    ASSERT_TRUE(r.delta_cap);
    EXPECT_EQ(*r.delta_cap, (Estimate{2, false}));
    EXPECT_EQ(g.path_tags(r.delta_separator), std::vector<std::string>{"c0"});
    EXPECT_EQ(r.delta_small, (Estimate{2, false}));
    ASSERT_TRUE(r.K_upper);
    EXPECT_EQ(r.K_upper->value, 2u);
    EXPECT_EQ(r.K_schema, "ray cross-sections");
  }
}

TEST(CombinedDegree, CuratedFamiliesAreEqual) {
  std::vector<std::pair<std::string, Presentation>> cases;
  for (std::size_t k = 1; k <= 4; ++k) cases.emplace_back("krays" + std::to_string(k), krays(k));
  for (std::size_t k = 1; k <= 2; ++k) {
    for (std::size_t m = 1; m <= 2; ++m) cases.emplace_back("mdom", krays(k, m));
  }
  for (const auto& [name, p] : cases) {
    const auto g = truncate(p, 20);
    const auto r = combined_in_degree(p, g, "omega", 5);
    ASSERT_TRUE(r.delta_cap && r.K_upper) << name;
    EXPECT_EQ(r.delta_small, *r.delta_cap) << name;
    EXPECT_EQ(r.delta_small, *r.K_upper) << name;
    EXPECT_EQ(r.delta_small.value, r.d_minus.value + r.dominators.size()) << name;
  }
}

TEST(CombinedDegree, ChainInequalityOnAllFamilies) {
  for (const auto& name : family_names()) {
    const auto p = family_by_name(name);
    for (Level d : {10, 20}) {
      const auto g = truncate(p, d);
      const auto r = combined_in_degree(p, g, "omega", 5);
      if (r.delta_small.capped || !r.delta_cap || r.delta_cap->capped || !r.K_upper) continue;
      EXPECT_LE(r.delta_small.value, r.delta_cap->value) << name << " " << d;
      EXPECT_LE(r.delta_cap->value, r.K_upper->value) << name << " " << d;
    }
  }
}

TEST(CombinedDegree, SchemaFailuresCarryWitnesses) {
  const auto p = krays(3);
  const auto g = truncate(p, 20);
  const auto r = combined_in_degree(p, g, "omega", 5);
  for (const auto& s : r.schemas) {
    if (!s.verdict.pass) EXPECT_TRUE(witness_escapes(g, p.end("omega"), s.sequence, s.verdict)) << s.name;
  }
}

TEST(RayFamily, HalfgridGrowsToFive) {
  const auto p = halfgrid();
  const auto g = truncate(p, 40);
  const auto R = canonical_ray(g, p.end("omega"));
  RayFamilyState s;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto fresh = fresh_rays(g, R, s, n);
    ASSERT_EQ(fresh.size(), n);
    auto next = extend_ray_family(g, s, fresh, R);
    ASSERT_EQ(next.size(), n);
    EXPECT_FALSE(check_ray_family(g, next, R));
    if (n > 1) EXPECT_FALSE(check_extension(s, next));
    for (const auto& r : next.rays) EXPECT_TRUE(is_end_consistent(g, p.end("omega"), {r, RayKind::ray}));
    s = std::move(next);
  }
}

TEST(RayFamily, BaseCase) {
  const auto p = single_ray();
  const auto g = truncate(p, 10);
  const auto R = canonical_ray(g, p.end("omega"));
  const auto s = extend_ray_family(g, {}, {R}, R);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_FALSE(check_ray_family(g, s, R));
  EXPECT_EQ(s.connectors.size(), 1u);
}

TEST(RayFamily, FreshMeetingAPrefixIsRejected) {
  const auto p = halfgrid();
  const auto g = truncate(p, 30);
  const auto R = canonical_ray(g, p.end("omega"));
  const auto s = extend_ray_family(g, {}, fresh_rays(g, R, {}, 1), R);
  auto fresh = fresh_rays(g, R, s, 2);
  fresh[0] = s.rays[0];
  EXPECT_THROW(extend_ray_family(g, s, fresh, R), PreconditionError);
  EXPECT_THROW(extend_ray_family(g, s, {fresh[1]}, R), PreconditionError);
}

TEST(RayFamily, ExtensionCheckCatchesShrink) {
  RayFamilyState a;
  a.rays = {{1, 2, 3}};
  a.checkpoints = {1};
  a.connectors = {{}};
  RayFamilyState b;
  b.rays = {{1, 2, 3}, {4}};
  b.checkpoints = {1, 0};
  b.connectors = {{}, {}};
  EXPECT_TRUE(check_extension(a, b));
  b.checkpoints = {2, 0};
  EXPECT_FALSE(check_extension(a, b));
}

TEST(DoubleRays, LadderThree) {
  const auto p = ladder(6);
  const auto g = truncate(p, 40);
  std::vector<Path> rays;
  std::vector<Path> anti;
  for (int j = 0; j < 6; ++j) {
    Path r;
    for (Level l = 0; l <= 40; ++l) r.push_back(g.at("l" + std::to_string(j) + "_" + std::to_string(l)));
    if (j % 2 == 0) rays.push_back(r);
    else anti.emplace_back(r.rbegin(), r.rend());
  }
  const auto ps = double_rays(g, rays, anti);
  EXPECT_EQ(ps.size(), 3u);
  EXPECT_FALSE(check_double_rays(g, ps, rays, anti));
}

TEST(DoubleRays, OneRayOneAntiRay) {
  const auto p = ladder(2);
  const auto g = truncate(p, 12);
  const auto [rays, anti] = disjoint_ray_antiray_witnesses(g, p.end("omega"), 1);
  const auto ps = double_rays(g, rays, anti);
  EXPECT_EQ(ps.size(), 1u);
  EXPECT_FALSE(check_double_rays(g, ps, rays, anti));
}

TEST(DoubleRays, IntersectingInputsRejected) {
  const auto p = ladder(2);
  const auto g = truncate(p, 12);
  const auto [rays, anti] = disjoint_ray_antiray_witnesses(g, p.end("omega"), 1);
  EXPECT_THROW(double_rays(g, rays, rays), PreconditionError);
  EXPECT_THROW(double_rays(g, {}, {}), PreconditionError);
}

TEST(DoubleRays, CounterexampleIsInfeasible) {
  const auto p = counterexample();
  for (Level d : {20, 30, 40}) {
    const auto g = truncate(p, d);
    EXPECT_THROW(disjoint_ray_antiray_witnesses(g, p.end("omega"), 1), InfeasibleError) << d;
  }
}
