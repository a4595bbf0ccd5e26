#include <cmath>
#include <memory>
#include <vector>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "gaplab/error.hpp"
#include "gaplab/lanczos.hpp"
#include "gaplab/netgen.hpp"
#include "gaplab/pagerank.hpp"
#include "gaplab/spectral.hpp"

using namespace gaplab;

namespace {

SimpleDigraph dangling_pair() {
  const std::vector<Edge> edges{{0, 1}};
  return SimpleDigraph::from_edges(2, edges);
}

SimpleDigraph random_graph(std::uint64_t seed, std::size_t n) {
  Rng rng(seed);
  switch (seed % 3) {
    case 0: return generate_graph(PaParams{}, n, rng);
    case 1: return generate_graph(CopyParams{}, n, rng);
    default: return generate_graph(AlphaPaParams{0.415, 0.0851, 0.0128}, n, rng);
  }
}

ErrorKind failure_kind(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected gaplab::Error";
  return ErrorKind::io;
}

}  // namespace

TEST(SolverMode, ParseAndResolve) {
  EXPECT_EQ(parse_solver_mode("dense"), SolverMode::dense);
  EXPECT_EQ(parse_solver_mode("iterative"), SolverMode::iterative);
  EXPECT_EQ(parse_solver_mode("auto"), SolverMode::automatic);
  EXPECT_EQ(resolve(SolverMode::automatic, 1024), SolverMode::dense);
  EXPECT_EQ(resolve(SolverMode::automatic, 1025), SolverMode::iterative);
  EXPECT_EQ(resolve(SolverMode::iterative, 4), SolverMode::iterative);
  EXPECT_EQ(failure_kind([] { parse_solver_mode("magic"); }), ErrorKind::invalid_parameter);
}

TEST(Lanczos, DiagonalOperator) {
  const std::size_t n = 300;
  auto apply = [](std::span<const double> v, std::span<double> out) {
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = (1.0 + static_cast<double>(i)) * v[i];
  };
  const auto r = lowest_eigenpairs(n, apply, {});
  ASSERT_EQ(r.values.size(), 2u);
  EXPECT_NEAR(r.values[0], 1.0, 1e-9);
  EXPECT_NEAR(r.values[1], 2.0, 1e-9);
  EXPECT_NEAR(std::abs(r.vectors(0, 0)), 1.0, 1e-8);
  for (double res : r.residuals) EXPECT_LE(res, 1e-10);
}

TEST(Lanczos, SmallDenseMatchesEigen) {
  const std::size_t n = 5;
  Eigen::MatrixXd a(n, n);
  Rng rng(3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) a(i, j) = a(j, i) = rng.uniform();
  auto apply = [&](std::span<const double> v, std::span<double> out) {
    Eigen::Map<Eigen::VectorXd>(out.data(), n) = a * Eigen::Map<const Eigen::VectorXd>(v.data(), n);
  };
  const auto r = lowest_eigenpairs(n, apply, {});
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  EXPECT_NEAR(r.values[0], es.eigenvalues()(0), 1e-10);
  EXPECT_NEAR(r.values[1], es.eigenvalues()(1), 1e-10);
}

TEST(CompleteReference, SpectrumIsProjector) {
  for (std::size_t n : {2u, 5u, 40u}) {
    const auto op = h_of(complete_reference(n));
    const Eigen::MatrixXd h = op.dense();
    const Eigen::MatrixXd expected =
        Eigen::MatrixXd::Identity(n, n) - Eigen::MatrixXd::Constant(n, n, 1.0 / n);
    EXPECT_TRUE(h.isApprox(expected, 1e-14));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    EXPECT_NEAR(es.eigenvalues()(0), 0.0, 1e-12);
    for (Eigen::Index i = 1; i < es.eigenvalues().size(); ++i)
      EXPECT_NEAR(es.eigenvalues()(i), 1.0, 1e-12);
    for (auto mode : {SolverMode::dense, SolverMode::iterative}) {
      const auto pair = two_lowest(op, mode);
      EXPECT_NEAR(pair.lambda0, 0.0, 1e-10);
      EXPECT_NEAR(pair.lambda1, 1.0, 1e-10);
    }
    const auto ground = ground_state(op, SolverMode::dense);
    for (double x : ground.vector) EXPECT_NEAR(x, 1.0 / std::sqrt(static_cast<double>(n)), 1e-12);
  }
}

TEST(Hamiltonian, SingleNodeIsZero) {
  const auto op = h_of(google_matrix(SimpleDigraph::from_edges(1, {})));
  EXPECT_NEAR(op.dense()(0, 0), 0.0, 1e-15);
  EXPECT_EQ(failure_kind([&] { two_lowest(op); }), ErrorKind::degenerate_dimension);
}

TEST(Hamiltonian, DanglingPairGroundState) {
  const auto google = google_matrix(dangling_pair());
  const auto op = h_of(google);
  const auto g = ground_state(op, SolverMode::dense);
  EXPECT_NEAR(g.energy, 0.0, 1e-12);
  const double norm = std::hypot(1.0, 1.85);
  EXPECT_NEAR(g.vector[0], 1.0 / norm, 1e-12);
  EXPECT_NEAR(g.vector[1], 1.85 / norm, 1e-12);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense_h(google));
  EXPECT_NEAR(gap(google, complete_reference(2), 1.0),
              es.eigenvalues()(1) - es.eigenvalues()(0), 1e-12);
}

TEST(Hamiltonian, InterpolationEndpointsAndRange) {
  const auto google = google_matrix(random_graph(1, 30));
  const auto ref = complete_reference(30);
  EXPECT_TRUE(H_of(google, ref, 0.0).dense().isApprox(dense_h(ref), 1e-14));
  EXPECT_TRUE(H_of(google, ref, 1.0).dense().isApprox(dense_h(google), 1e-14));
  EXPECT_EQ(failure_kind([&] { H_of(google, ref, 1.5); }), ErrorKind::invalid_parameter);
  EXPECT_EQ(failure_kind([&] { H_of(google, ref, -0.1); }), ErrorKind::invalid_parameter);
  EXPECT_EQ(failure_kind([&] { H_of(google, complete_reference(31), 0.5); }),
            ErrorKind::dimension_mismatch);
}

TEST(Hamiltonian, SymmetricPsdAndStructuredApplyMatchesDense) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const std::size_t n = 20 + 15 * seed;
    auto target = std::make_shared<const GoogleMatrix>(google_matrix(random_graph(seed, n)));
    auto ref = std::make_shared<const GoogleMatrix>(complete_reference(n));
    for (double s : {0.0, 0.3, 0.77, 1.0}) {
      const HamiltonianOperator op(target, ref, s);
      const Eigen::MatrixXd h = op.dense();
      EXPECT_LT((h - h.transpose()).cwiseAbs().maxCoeff(), 1e-12);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
      EXPECT_GE(es.eigenvalues()(0), kPsdFloor);
      Rng rng(seed + 100);
      Eigen::VectorXd v(n);
      for (std::size_t i = 0; i < n; ++i) v(i) = rng.uniform() - 0.5;
      std::vector<double> out(n);
      op.apply({v.data(), n}, out);
      const Eigen::VectorXd ref_out = h * v;
      for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(out[i], ref_out(i), 1e-12);
    }
  }
}

TEST(TwoLowest, IterativeMatchesDense) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::size_t n = 16 + 10 * seed;
    const auto target = google_matrix(random_graph(seed, n));
    const auto ref = complete_reference(n);
    for (double s : {0.25, 0.6, 0.95, 1.0}) {
      const auto op = H_of(target, ref, s);
      const auto dense = two_lowest(op, SolverMode::dense);
      const auto iter = two_lowest(op, SolverMode::iterative, 1e-10);
      EXPECT_EQ(iter.mode, SolverMode::iterative);
      EXPECT_NEAR(dense.lambda0, iter.lambda0, 1e-8) << "seed " << seed << " s " << s;
      EXPECT_NEAR(dense.lambda1, iter.lambda1, 1e-8) << "seed " << seed << " s " << s;
      EXPECT_LE(iter.residual, 1e-10);
    }
  }
}

TEST(PageRankGroundState, OverlapAndAnnihilation) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto google = google_matrix(random_graph(seed, 20 + 3 * seed));
    const auto op = h_of(google);
    const auto ground = ground_state(op, SolverMode::dense);
    EXPECT_LT(ground.energy, 1e-10);
    const auto rank = pagerank_power(google);
    double norm = 0.0, dot = 0.0;
    for (double x : rank.values) norm += x * x;
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < rank.values.size(); ++i) dot += ground.vector[i] * rank.values[i] / norm;
    EXPECT_GT(dot, 1.0 - 1e-8);
  }
}

TEST(Gap, AtZeroIsOne) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto google = google_matrix(random_graph(seed, 50));
    EXPECT_NEAR(gap(google, complete_reference(50), 0.0), 1.0, 1e-10);
  }
}

TEST(Gap, AllDanglingIsFlat) {
  const auto google = google_matrix(SimpleDigraph::from_edges(6, {}));
  for (double s : {0.0, 0.5, 1.0}) EXPECT_NEAR(gap(google, complete_reference(6), s), 1.0, 1e-12);
  const auto r = min_gap(google);
  EXPECT_NEAR(r.delta, 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(r.s_star, 1.0);
}

TEST(MinGap, ConsistentWithTrace) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto google = google_matrix(random_graph(seed, 40));
    const auto r = min_gap(google);
    ASSERT_GE(r.evaluations.size(), 21u);
    bool saw_zero = false, saw_one = false;
    for (const auto& p : r.evaluations) {
      EXPECT_LE(r.delta, p.delta);
      saw_zero = saw_zero || p.s == 0.0;
      saw_one = saw_one || p.s == 1.0;
      EXPECT_GE(p.lambda0, 0.0);
      EXPECT_GE(p.lambda1, p.lambda0);
    }
    EXPECT_TRUE(saw_zero && saw_one);
    EXPECT_GE(r.delta, 0.0);
    EXPECT_LE(r.delta, 1.0 + 1e-10);
    EXPECT_GE(r.s_star, 0.0);
    EXPECT_LE(r.s_star, 1.0);
    EXPECT_NEAR(r.lambda1 - r.lambda0, r.delta, 1e-12);
  }
}

TEST(MinGap, Deterministic) {
  const auto google = google_matrix(random_graph(4, 64));
  const auto a = min_gap(google);
  const auto b = min_gap(google);
  EXPECT_EQ(a.delta, b.delta);
  EXPECT_EQ(a.s_star, b.s_star);
  EXPECT_EQ(a.evaluations.size(), b.evaluations.size());
}

TEST(MinGap, BoundaryMinimumStaysNearOne) {
  int boundary_cases = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto google = google_matrix(random_graph(seed, 48));
    const auto r = min_gap(google);
    const GapProbe* best = &r.evaluations.front();
    for (std::size_t i = 0; i < 21; ++i)
      if (r.evaluations[i].delta <= best->delta) best = &r.evaluations[i];
    if (best->s == 1.0) {
      ++boundary_cases;
      EXPECT_GE(r.s_star, 0.99);
    }
  }
  EXPECT_GT(boundary_cases, 0);
}

TEST(MinGap, DenseAndIterativeAgree) {
  const auto google = google_matrix(random_graph(2, 60));
  GapOptions dense_opts, iter_opts;
  dense_opts.mode = SolverMode::dense;
  iter_opts.mode = SolverMode::iterative;
  const auto a = min_gap(google, dense_opts);
  const auto b = min_gap(google, iter_opts);
  EXPECT_NEAR(a.delta, b.delta, 1e-8);
  EXPECT_EQ(b.mode, SolverMode::iterative);
}

TEST(MinGap, RejectsSingleNode) {
  const auto google = google_matrix(SimpleDigraph::from_edges(1, {}));
  EXPECT_EQ(failure_kind([&] { min_gap(google); }), ErrorKind::degenerate_dimension);
}
