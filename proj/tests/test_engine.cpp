#include "support/helpers.hpp"
#include "support/mock_broken.hpp"

using namespace exactcat;
using namespace exactcat::engine;
using namespace exactcat::testing;

namespace {

const FinVectQ V;
const LatticeZ L;
const MonoPairsQ M;
const MockBroken Mock;

/// The broken mock with rules that claim every (co)kernel is semi-stable.
class LyingMock : public MockBroken {
 public:
  [[nodiscard]] std::optional<std::string> semistable_cokernel_rule(const Mor&) const { return "instance-rule"; }
  [[nodiscard]] std::optional<std::string> semistable_kernel_rule(const Mor&) const { return "instance-rule"; }
};

ProbeConfig config(std::size_t samples, std::uint64_t seed = 42) {
  ProbeConfig cfg;
  cfg.samples = samples;
  cfg.seed = seed;
  return cfg;
}

FinVectQ::Mor vq(std::size_t dom, std::size_t cod, const RatMatrix& m) { return V.make({dom}, {cod}, m); }

}  // namespace

TEST(KernelCokernelPair, Examples) {
  const FinVectQ::Object x{2};
  EXPECT_TRUE(is_kernel_cokernel_pair(V, identity(V, x), zero_morphism(V, x, V.zero_object())));
  EXPECT_TRUE(is_kernel_cokernel_pair(V, vq(1, 2, Q({{1}, {-1}})), vq(2, 1, Q({{1, 1}}))));
  const LatticeZ::Object z{1};
  EXPECT_FALSE(is_kernel_cokernel_pair(L, zero_morphism(L, L.zero_object(), z), L.make(z, z, Z({{2}}))));
  EXPECT_THROW(is_kernel_cokernel_pair(V, vq(1, 2, Q({{1}, {0}})), vq(2, 1, Q({{1, 1}}))), PreconditionViolated);
}

TEST(DecideSemistableCokernel, Examples) {
  EXPECT_EQ(decide_semistable_cokernel(L, identity(L, LatticeZ::Object{2})).reason, "iso");
  const auto bp = biproduct(L, {1}, {2});
  const auto v = decide_semistable_cokernel(L, bp.proj_left);
  EXPECT_TRUE(v.is_yes());
  EXPECT_EQ(v.reason, "retraction");
  EXPECT_THROW(decide_semistable_cokernel(L, L.make({1}, {1}, Z({{2}}))), NotACokernel);
  // Surjections onto free lattices split, so the splitting answers first.
  EXPECT_EQ(decide_semistable_cokernel(L, L.make({2}, {1}, Z({{2, 3}}))).reason, "retraction");
  EXPECT_EQ(decide_semistable_cokernel(V, vq(2, 1, Q({{1, 1}}))).reason, "retraction");
}

TEST(DecideSemistableKernel, Examples) {
  EXPECT_EQ(decide_semistable_kernel(M, identity(M, MonoPairsQ::object(1, Q({{1}})))).reason, "iso");
  const auto bp = biproduct(L, {2}, {1});
  EXPECT_EQ(decide_semistable_kernel(L, bp.inj_left).reason, "coretraction");
  EXPECT_THROW(decide_semistable_kernel(L, L.make({1}, {1}, Z({{2}}))), NotAKernel);
}

TEST(Probe, AbelianInstanceStaysUnknown) {
  const auto v = probe_semistable_cokernel(V, vq(2, 1, Q({{1, 1}})), config(100));
  EXPECT_TRUE(v.is_unknown());
  EXPECT_EQ(v.budget, 100u);
  EXPECT_EQ(probe_semistable_cokernel(V, identity(V, FinVectQ::Object{2}), config(7)).budget, 7u);
  const auto k = probe_semistable_kernel(V, vq(1, 2, Q({{1}, {0}})), config(100));
  EXPECT_TRUE(k.is_unknown());
  EXPECT_EQ(k.budget, 100u);
  EXPECT_EQ(probe_semistable_kernel(V, identity(V, FinVectQ::Object{1}), config(5)).budget, 5u);
  EXPECT_THROW(probe_semistable_cokernel(L, L.make({1}, {1}, Z({{2}})), config(3)), NotACokernel);
}

TEST(Probe, MockFailureIsSelfCertifying) {
  const auto g = Mock.make({3}, {2}, Q({{1, 0, 0}, {0, 1, 0}}));
  const auto v = decide_semistable_cokernel(Mock, g, config(100));
  ASSERT_TRUE(v.is_no());
  EXPECT_EQ(v.reason, "PullbackNotCokernel");
  EXPECT_EQ(v.witness["kind"], "pullback");
  EXPECT_TRUE(recheck_witness(Mock, v.witness));
  // The same square is fine in the honest instance.
  EXPECT_FALSE(recheck_witness(V, [&] {
    json w = v.witness;
    for (const char* k : {"g", "t", "p_Y", "p_T"}) w[k]["category"] = "FinVectQ";
    return w;
  }()));
}

TEST(Probe, WitnessIsMinimized) {
  const auto g = Mock.make({3}, {2}, Q({{1, 0, 0}, {0, 1, 0}}));
  const auto v = probe_semistable_cokernel(Mock, g, config(100));
  ASSERT_TRUE(v.is_no());
  // P = dim 3 + dim T - 2 must reach 4, so T needs dimension 3 and t can be zero.
  const auto t = morphism_from_json(Mock, v.witness["t"]);
  EXPECT_EQ(t.dom.dim, 3u);
  EXPECT_TRUE(is_zero<MockBroken>(t));
}

TEST(InMaximalExact, Examples) {
  const auto bp = biproduct(V, {1}, {2});
  EXPECT_TRUE(in_maximal_exact(V, bp.inj_left, bp.proj_right).is_yes());
  EXPECT_TRUE(in_maximal_exact(V, vq(1, 2, Q({{1}, {-1}})), vq(2, 1, Q({{1, 1}}))).is_yes());
  const LatticeZ::Object z{1};
  const auto v = in_maximal_exact(L, zero_morphism(L, L.zero_object(), z), zero_morphism(L, z, L.zero_object()));
  EXPECT_TRUE(v.is_no());
  EXPECT_EQ(v.reason, "NotKernelCokernelPair");
  const auto lbp = biproduct(L, {2}, {1});
  EXPECT_TRUE(in_maximal_exact(L, lbp.inj_left, lbp.proj_right).is_yes());
}

TEST(InMaximalExact, InvariantUnderConjugation) {
  const SamplerConfig scfg;
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng(8, i);
    const auto p = sample_exact_pair(L, rng, scfg);
    const auto a = L.sample_automorphism(p.f.cod, rng, scfg);
    const auto f2 = compose(L, p.f, a);
    const auto g2 = compose(L, L.inverse(a), p.g);
    EXPECT_EQ(in_maximal_exact(L, p.f, p.g).outcome, in_maximal_exact(L, f2, g2).outcome);
  }
}

TEST(SplitExact, Examples) {
  const auto bp = biproduct(V, {2}, {1});
  EXPECT_TRUE(is_split_exact(V, bp.inj_left, bp.proj_right));
  EXPECT_TRUE(is_split_exact(V, vq(1, 2, Q({{1}, {-1}})), vq(2, 1, Q({{1, 1}}))));
  const FinVectQ::Object x{1};
  EXPECT_FALSE(is_split_exact(V, zero_morphism(V, x, x), zero_morphism(V, x, x)));
}

TEST(AxiomSuite, AbelianControl) {
  const auto r = axiom_suite(V, config(100));
  EXPECT_EQ(r.cases, 100u);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.unknown, 0u);
}

TEST(AxiomSuite, ZeroSamplesIsVacuous) {
  const auto r = axiom_suite(V, config(0));
  EXPECT_EQ(r.cases, 0u);
  EXPECT_TRUE(r.clean());
}

TEST(AxiomSuite, RealInstancesWithRules) {
  for (const auto& r : {axiom_suite(L, config(70)), axiom_suite(M, config(70))}) {
    EXPECT_TRUE(r.violations.empty()) << r.category;
    EXPECT_EQ(r.unknown, 0u) << r.category;
  }
}

TEST(AxiomSuite, MockProducesViolations) {
  const auto r = axiom_suite(Mock, config(100));
  ASSERT_FALSE(r.violations.empty());
  bool certified = false;
  for (const auto& v : r.violations)
    if (v.diagram.contains("verdict") && v.diagram["verdict"].contains("witness"))
      certified = certified || recheck_witness(Mock, v.diagram["verdict"]["witness"]);
  EXPECT_TRUE(certified);
}

TEST(CompositionSuite, AbelianControlAndMock) {
  EXPECT_TRUE(kelly_suite(V, config(100)).violations.empty());
  const auto r = kelly_suite(Mock, config(200));
  const bool has_c = std::any_of(r.violations.begin(), r.violations.end(), [](const Violation& v) { return v.kind == "(c)"; });
  EXPECT_TRUE(has_c);
}

TEST(CompositionSuite, CompositeWithIdentityIsConsistent) {
  const auto g = vq(2, 1, Q({{1, 2}}));
  const auto h = compose(V, identity(V, g.dom), g);
  EXPECT_EQ(decide_semistable_cokernel(V, h).outcome, decide_semistable_cokernel(V, g).outcome);
}

TEST(DiagramSuite, HoldsInRealInstances) {
  EXPECT_TRUE(theorem_diagram_suite(V, config(50)).violations.empty());
  EXPECT_TRUE(theorem_diagram_suite(L, config(50)).violations.empty());
  EXPECT_TRUE(theorem_diagram_suite(M, config(30)).violations.empty());
}

TEST(DiagramSuite, DegenerateSecondPair) {
  // With g' = id the kernel of g' o g is the kernel of g, alpha is zero
  // and the kernel square is trivially a pullback.
  const auto p = exact_pair_from(V, vq(3, 2, Q({{1, 1, 0}, {0, 1, 1}})));
  const auto kd = kernel(V, p.g);
  EXPECT_TRUE(is_pullback_square(V, p.g, zero_morphism(V, V.zero_object(), p.g.cod), kd.inclusion,
                                 zero_morphism(V, kd.obj, V.zero_object())));
}

TEST(TransportSuite, HoldsInRealInstances) {
  EXPECT_TRUE(transport_suite(V, config(50)).clean());
  EXPECT_TRUE(transport_suite(L, config(50)).clean());
  EXPECT_TRUE(transport_suite(M, config(50)).clean());
}

TEST(UniversalSuite, HoldsInRealInstances) {
  EXPECT_TRUE(universal_suite(V, config(100)).clean());
  EXPECT_TRUE(universal_suite(L, config(100)).clean());
  EXPECT_TRUE(universal_suite(M, config(100)).clean());
}

TEST(StructureProbe, Examples) {
  const auto v = structure_probe(V, config(100));
  EXPECT_TRUE(v.clean());
  EXPECT_TRUE(v.witnesses.empty());

  const auto l = structure_probe(L, config(100));
  EXPECT_TRUE(l.clean());
  ASSERT_EQ(l.witnesses.size(), 1u);
  const auto w = morphism_from_json(L, l.witnesses[0]["f"]);
  EXPECT_EQ(w.dom.rank, 1u);
  EXPECT_EQ(abs(w.matrix(0, 0)), 2);

  const auto m = structure_probe(M, config(100));
  EXPECT_TRUE(m.clean());
  ASSERT_EQ(m.witnesses.size(), 1u);
  const auto mw = morphism_from_json(M, m.witnesses[0]["f"]);
  EXPECT_EQ(mw.dom, MonoPairsQ::object(1, RatMatrix(1, 0)));
  EXPECT_EQ(mw.cod, MonoPairsQ::object(1, Q({{1}})));
}

TEST(MaximalitySuite, SplitPairsNeverRefuted) {
  for (const auto& r : {maximality_suite(V, config(100)), maximality_suite(L, config(100)), maximality_suite(M, config(100))})
    EXPECT_TRUE(r.clean()) << r.category;
  EXPECT_EQ(maximality_suite(V, config(100)).yes, 100u);
}

TEST(CoherenceSuite, HonestRulesAgreeWithProbes) {
  EXPECT_FALSE(coherence_suite(L, config(50)).aborted);
  EXPECT_FALSE(coherence_suite(M, config(50)).aborted);
}

TEST(CoherenceSuite, LyingRuleAborts) {
  const LyingMock liar;
  const auto r = coherence_suite(liar, config(100));
  ASSERT_TRUE(r.aborted);
  EXPECT_EQ(*r.aborted, "RuleContradiction");
  EXPECT_NE(render_json(r).find("RuleContradiction"), std::string::npos);
}

TEST(HypothesisSwitch, ProbeOnlyStillDecides) {
  // Every kernel-cokernel pair of MonoPairsQ splits, so without the rule
  // the retraction shortcut still answers.
  const MonoPairsQ probe_only(false);
  const auto r = axiom_suite(probe_only, config(70));
  EXPECT_TRUE(r.violations.empty());
  const auto g = probe_only.make(MonoPairsQ::object(2, Q({{1}, {0}})), MonoPairsQ::object(1, Q({{1}})), Q({{1, 1}}));
  EXPECT_NE(decide_semistable_cokernel(probe_only, g).reason, "instance-rule");
}

TEST(Report, TextRendering) {
  Report empty;
  empty.suite = "axioms";
  empty.category = "FinVectQ";
  EXPECT_NE(render_text(empty).find("0 cases, 0 violations"), std::string::npos);

  const auto r = axiom_suite(Mock, config(100));
  ASSERT_FALSE(r.violations.empty());
  Report one = r;
  for (const auto& v : r.violations)
    if (v.diagram.contains("verdict") && v.diagram["verdict"].contains("witness")) {
      one.violations = {v};
      break;
    }
  const std::string text = render_text(one);
  for (const char* name : {"g:", "t:", "p_Y:", "p_T:"}) EXPECT_NE(text.find(name), std::string::npos) << name;
}

TEST(Report, JsonIsByteStable) {
  const auto a = render_json(kelly_suite(L, config(60, 9)));
  const auto b = render_json(kelly_suite(L, config(60, 9)));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, render_json(kelly_suite(L, config(60, 10))));
}

TEST(Report, IndependentOfThreadCount) {
  ProbeConfig one = config(80, 5);
  ProbeConfig many = one;
  many.threads = 4;
  EXPECT_EQ(render_json(axiom_suite(Mock, one)), render_json(axiom_suite(Mock, many)));
  EXPECT_EQ(render_json(theorem_diagram_suite(L, one)), render_json(theorem_diagram_suite(L, many)));
}
