#include "support/helpers.hpp"

using namespace exactcat;
using namespace exactcat::testing;

namespace {

const FinVectQ V;
const LatticeZ L;
const MonoPairsQ M;

FinVectQ::Mor vq(std::size_t dom, std::size_t cod, const RatMatrix& m) { return V.make({dom}, {cod}, m); }
LatticeZ::Mor lz(std::size_t dom, std::size_t cod, const IntMatrix& m) { return L.make({dom}, {cod}, m); }

}  // namespace

TEST(Compose, Examples) {
  const auto f = vq(2, 1, Q({{1, 1}}));
  EXPECT_EQ(compose(V, identity(V, f.dom), f), f);
  EXPECT_EQ(compose(V, f, vq(1, 1, Q({{2}}))).matrix, Q({{2, 2}}));
  EXPECT_EQ(compose(L, lz(1, 1, Z({{2}})), lz(1, 1, Z({{3}}))).matrix, Z({{6}}));
  EXPECT_THROW(compose(V, f, f), DomainMismatch);
}

TEST(Biproduct, Identities) {
  const auto bp = biproduct(V, {1}, {2});
  EXPECT_EQ(bp.obj.dim, 3u);
  EXPECT_EQ(compose(V, bp.inj_left, bp.proj_left), identity(V, FinVectQ::Object{1}));
  EXPECT_TRUE(is_zero<FinVectQ>(compose(V, bp.inj_left, bp.proj_right)));
  EXPECT_EQ(add(V, compose(V, bp.proj_left, bp.inj_left), compose(V, bp.proj_right, bp.inj_right)),
            identity(V, bp.obj));
  EXPECT_EQ(biproduct(L, {2}, {2}).obj.rank, 4u);
}

TEST(Biproduct, MonoPairs) {
  const auto a = MonoPairsQ::object(1, RatMatrix(1, 0));
  const auto b = MonoPairsQ::object(1, Q({{1}}));
  const auto bp = biproduct(M, a, b);
  EXPECT_EQ(bp.obj.dim, 2u);
  EXPECT_EQ(bp.obj.sub, Q({{0}, {1}}));
}

TEST(Kernel, Examples) {
  const auto kd = kernel(V, vq(2, 1, Q({{1, 1}})));
  EXPECT_EQ(kd.obj.dim, 1u);
  EXPECT_EQ(kd.inclusion.matrix, Q({{1}, {-1}}));
  EXPECT_TRUE(is_zero_object(V, kernel(V, identity(V, FinVectQ::Object{3})).obj));
  EXPECT_TRUE(is_zero_object(L, kernel(L, lz(1, 1, Z({{2}}))).obj));
}

TEST(Cokernel, Examples) {
  const auto cd = cokernel(V, vq(1, 2, Q({{1}, {2}})));
  EXPECT_EQ(cd.obj.dim, 1u);
  EXPECT_EQ(cd.projection.matrix, Q({{2, -1}}));
  EXPECT_TRUE(is_zero_object(V, cokernel(V, vq(2, 1, Q({{1, 3}}))).obj));
  EXPECT_EQ(cokernel(L, lz(1, 1, Z({{2}}))).obj.rank, 0u);
}

TEST(FactorThroughKernel, Examples) {
  const auto kd = kernel(V, vq(2, 1, Q({{1, 1}})));
  EXPECT_EQ(factor_through_kernel(V, kd, kd.inclusion), identity(V, kd.obj));
  EXPECT_EQ(factor_through_kernel(V, kd, vq(1, 2, Q({{2}, {-2}}))).matrix, Q({{2}}));
  EXPECT_THROW(factor_through_kernel(V, kd, vq(1, 2, Q({{1}, {0}}))), PreconditionViolated);
}

TEST(FactorThroughCokernel, Examples) {
  const auto cd = cokernel(V, vq(1, 2, Q({{1}, {2}})));
  EXPECT_EQ(factor_through_cokernel(V, cd, cd.projection), identity(V, cd.obj));
  EXPECT_EQ(factor_through_cokernel(V, cd, vq(2, 1, Q({{4, -2}}))).matrix, Q({{2}}));
  EXPECT_THROW(factor_through_cokernel(V, cd, vq(2, 1, Q({{1, 0}}))), PreconditionViolated);
}

TEST(Pullback, Examples) {
  const auto iso = vq(1, 1, Q({{5}}));
  const auto t = vq(2, 1, Q({{1, 2}}));
  const auto sq_iso = pullback(V, iso, t);
  EXPECT_EQ(sq_iso.obj.dim, 2u);
  EXPECT_TRUE(V.is_iso(sq_iso.p_T));

  const auto sq = pullback(V, vq(2, 1, Q({{1, 1}})), identity(V, FinVectQ::Object{1}));
  EXPECT_EQ(sq.obj.dim, 2u);
  EXPECT_EQ(compose(V, sq.p_Y, sq.g), sq.p_T);

  const auto zsq = pullback(L, lz(1, 1, Z({{2}})), lz(1, 1, Z({{3}})));
  EXPECT_EQ(zsq.obj.rank, 1u);
  EXPECT_EQ(zsq.inclusion.inclusion.matrix, Z({{3}, {2}}));
  EXPECT_EQ(zsq.p_Y.matrix, Z({{3}}));
  EXPECT_EQ(zsq.p_T.matrix, Z({{2}}));

  EXPECT_THROW(pullback(V, t, vq(1, 2, Q({{1}, {1}}))), DomainMismatch);
}

TEST(Pushout, Examples) {
  const auto iso = vq(1, 1, Q({{-1}}));
  const auto sq_iso = pushout(V, iso, vq(1, 2, Q({{1}, {1}})));
  EXPECT_TRUE(V.is_iso(sq_iso.s_T));

  const auto sq = pushout(V, vq(1, 2, Q({{1}, {0}})), identity(V, FinVectQ::Object{1}));
  EXPECT_EQ(sq.obj.dim, 2u);

  const auto zsq = pushout(L, lz(1, 2, Z({{1}, {0}})), lz(1, 1, Z({{2}})));
  EXPECT_EQ(zsq.obj.rank, 2u);
  EXPECT_TRUE(is_kernel_morphism(L, zsq.s_T));
  EXPECT_EQ(compose(L, zsq.f, zsq.s_Y), compose(L, zsq.t, zsq.s_T));
}

TEST(PullbackMediate, Examples) {
  const auto sq = pullback(V, vq(2, 1, Q({{1, 1}})), identity(V, FinVectQ::Object{1}));
  EXPECT_EQ(pullback_mediate(V, sq, sq.p_Y, sq.p_T), identity(V, sq.obj));
  EXPECT_TRUE(is_zero<FinVectQ>(
      pullback_mediate(V, sq, zero_morphism(V, {3}, {2}), zero_morphism(V, {3}, {1}))));
  const auto ly = vq(1, 2, Q({{1}, {0}}));
  const auto lt = compose(V, ly, sq.g);
  const auto m = pullback_mediate(V, sq, ly, lt);
  EXPECT_EQ(compose(V, m, sq.p_Y), ly);
  EXPECT_EQ(compose(V, m, sq.p_T), lt);
  EXPECT_THROW(pullback_mediate(V, sq, ly, vq(1, 1, Q({{7}}))), PreconditionViolated);
}

TEST(PushoutMediate, Examples) {
  const auto sq = pushout(V, vq(1, 2, Q({{1}, {0}})), identity(V, FinVectQ::Object{1}));
  EXPECT_EQ(pushout_mediate(V, sq, sq.s_Y, sq.s_T), identity(V, sq.obj));
  EXPECT_TRUE(is_zero<FinVectQ>(
      pushout_mediate(V, sq, zero_morphism(V, {2}, {3}), zero_morphism(V, {1}, {3}))));
  const auto ly = vq(2, 1, Q({{3, 1}}));
  const auto lt = compose(V, sq.f, ly);
  const auto m = pushout_mediate(V, sq, ly, lt);
  EXPECT_EQ(compose(V, sq.s_Y, m), ly);
  EXPECT_EQ(compose(V, sq.s_T, m), lt);
}

TEST(Strict, Examples) {
  const auto id = identity(V, FinVectQ::Object{2});
  EXPECT_EQ(induced_strict_map(V, id).fbar, id);
  const auto two = lz(1, 1, Z({{2}}));
  const auto sf = induced_strict_map(L, two);
  EXPECT_EQ(sf.fbar.matrix, Z({{2}}));
  EXPECT_FALSE(L.is_iso(sf.fbar));
  EXPECT_TRUE(V.is_iso(induced_strict_map(V, vq(2, 1, Q({{1, 1}}))).fbar));
}

TEST(Classify, Examples) {
  const auto p = classify(V, identity(V, FinVectQ::Object{2}));
  EXPECT_TRUE(p.mono && p.epi && p.iso && p.is_kernel && p.is_cokernel && p.strict);

  const auto z = classify(L, lz(1, 1, Z({{2}})));
  EXPECT_TRUE(z.mono);
  EXPECT_TRUE(z.epi);
  EXPECT_FALSE(z.iso);
  EXPECT_FALSE(z.is_kernel);
  EXPECT_FALSE(z.is_cokernel);
  EXPECT_FALSE(z.strict);

  const auto f = M.make(MonoPairsQ::object(1, RatMatrix(1, 0)), MonoPairsQ::object(1, Q({{1}})), Q({{1}}));
  const auto m = classify(M, f);
  EXPECT_TRUE(m.mono);
  EXPECT_TRUE(m.epi);
  EXPECT_FALSE(m.iso);
  EXPECT_FALSE(m.strict);
}

TEST(Classify, ProfileImplications) {
  auto check = [](const MorphismProfile& p) {
    if (p.iso) {
      EXPECT_TRUE(p.mono && p.epi && p.is_kernel && p.is_cokernel && p.strict);
    }
    if (p.strict) {
      EXPECT_EQ(p.is_kernel, p.mono);
      EXPECT_EQ(p.is_cokernel, p.epi);
    }
  };
  const SamplerConfig cfg;
  for (std::size_t i = 0; i < 200; ++i) {
    Rng rng(1, i);
    check(classify(V, V.sample_morphism(V.sample_object(rng, cfg), V.sample_object(rng, cfg), rng, cfg)));
    check(classify(L, L.sample_morphism(L.sample_object(rng, cfg), L.sample_object(rng, cfg), rng, cfg)));
    check(classify(M, M.sample_morphism(M.sample_object(rng, cfg), M.sample_object(rng, cfg), rng, cfg)));
  }
}

TEST(KernelTransport, Examples) {
  const auto iso = vq(1, 1, Q({{3}}));
  const auto kt = kernel_transport(V, iso, vq(2, 1, Q({{1, 1}})));
  EXPECT_TRUE(is_zero_object(V, kt.kernel_of_g.obj));
  EXPECT_TRUE(is_zero_object(V, kernel(V, kt.square.p_T).obj));

  const auto g = vq(2, 1, Q({{1, 1}}));
  const auto kt2 = kernel_transport(V, g, zero_morphism(V, {1}, {1}));
  EXPECT_EQ(kt2.square.obj.dim, 2u);
  EXPECT_TRUE(is_kernel_of(V, kt2.j, kt2.square.p_T));
  EXPECT_EQ(compose(V, kt2.j, kt2.square.p_Y), kt2.kernel_of_g.inclusion);

  const auto kt3 = kernel_transport(L, lz(1, 1, Z({{2}})), lz(1, 1, Z({{3}})));
  EXPECT_EQ(kt3.j.dom.rank, 0u);
  EXPECT_TRUE(is_mono(L, kt3.square.p_T));
}

TEST(CokernelTransport, Examples) {
  const auto iso = vq(1, 1, Q({{3}}));
  const auto ct = cokernel_transport(V, iso, vq(1, 2, Q({{1}, {1}})));
  EXPECT_TRUE(is_zero_object(V, ct.cokernel_of_f.obj));
  EXPECT_TRUE(V.is_iso(ct.square.s_T));

  const auto f = vq(1, 2, Q({{1}, {2}}));
  const auto ct2 = cokernel_transport(V, f, zero_morphism(V, {1}, {1}));
  EXPECT_TRUE(is_cokernel_of(V, ct2.c, ct2.square.s_T));
  EXPECT_EQ(compose(V, ct2.square.s_Y, ct2.c), ct2.cokernel_of_f.projection);

  const auto ct3 = cokernel_transport(L, lz(1, 2, Z({{1}, {0}})), lz(1, 1, Z({{2}})));
  EXPECT_TRUE(is_zero<LatticeZ>(compose(L, ct3.square.s_T, ct3.c)));
  EXPECT_TRUE(is_cokernel_of(L, ct3.c, ct3.square.s_T));
}

TEST(Serialize, RoundTrip) {
  const auto f = vq(2, 1, Q({{1, mpq_class(1, 2)}}));
  EXPECT_EQ(morphism_from_json(V, morphism_to_json(V, f)), f);
  const auto g = lz(1, 2, Z({{3}, {-4}}));
  EXPECT_EQ(morphism_from_json(L, morphism_to_json(L, g)), g);
  const auto h = M.make(MonoPairsQ::object(2, Q({{1}, {1}})), MonoPairsQ::object(1, Q({{1}})), Q({{1, 2}}));
  EXPECT_EQ(morphism_from_json(M, morphism_to_json(M, h)), h);
}

TEST(Serialize, ErrorsNameTheField) {
  auto message = [](auto&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  const auto bad_rows = json::parse(R"({"category":"FinVectQ","dom":{"dim":2},"cod":{"dim":1},"matrix":[[1,1],[0,0]]})");
  EXPECT_NE(message([&] { morphism_from_json(V, bad_rows); }).find("matrix"), std::string::npos);
  const auto bad_dom = json::parse(R"({"dom":{"dim":-1},"cod":{"dim":1},"matrix":[[1]]})");
  EXPECT_NE(message([&] { morphism_from_json(V, bad_dom); }).find("dom"), std::string::npos);
  const auto wrong_cat = json::parse(R"({"category":"LatticeZ","dom":{"dim":1},"cod":{"dim":1},"matrix":[[1]]})");
  EXPECT_NE(message([&] { morphism_from_json(V, wrong_cat); }).find("category"), std::string::npos);
  const auto fractional = json::parse(R"({"dom":{"rank":1},"cod":{"rank":1},"matrix":[["1/2"]]})");
  EXPECT_NE(message([&] { morphism_from_json(L, fractional); }).find("matrix"), std::string::npos);
  const auto violates = json::parse(R"({"dom":{"dim":1,"sub":[[1]]},"cod":{"dim":1,"sub":[[]]},"matrix":[[1]]})");
  EXPECT_THROW(morphism_from_json(M, violates), Error);
}
