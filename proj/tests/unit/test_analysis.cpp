#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "gaplab/analysis.hpp"
#include "gaplab/error.hpp"
#include "gaplab/netgen.hpp"

using namespace gaplab;

namespace {

DegreeCounts counts_of(std::initializer_list<std::pair<const std::int64_t, std::int64_t>> init) {
  DegreeCounts c;
  c.counts = init;
  for (const auto& [k, v] : c.counts) c.total_observations += v;
  return c;
}

std::vector<ScalingPoint> sample(auto&& f) {
  std::vector<ScalingPoint> pts;
  for (double n : {64.0, 128.0, 256.0, 512.0, 1024.0, 2048.0, 4096.0, 8192.0})
    pts.push_back({n, f(n)});
  return pts;
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

double mass(const BinnedDistribution& b) {
  double total = 0.0;
  for (const auto& bin : b.bins) total += bin.mean_probability * static_cast<double>(bin.degree_span);
  return total;
}

}  // namespace

TEST(DegreeCounts, Examples) {
  const std::vector<Edge> cycle{{0, 1}, {1, 0}};
  std::vector<SimpleDigraph> graphs{SimpleDigraph::from_edges(2, cycle)};
  const auto in = degree_counts(graphs, Direction::in);
  EXPECT_EQ(in.counts, (std::map<std::int64_t, std::int64_t>{{1, 2}}));

  const std::vector<Edge> dangling{{0, 1}};
  graphs = {SimpleDigraph::from_edges(2, dangling)};
  const auto out = degree_counts(graphs, Direction::out);
  EXPECT_EQ(out.counts, (std::map<std::int64_t, std::int64_t>{{0, 1}, {1, 1}}));
  EXPECT_EQ(out.total_observations, 2);

  const auto total = degree_counts(graphs, Direction::total);
  EXPECT_EQ(total.counts, (std::map<std::int64_t, std::int64_t>{{1, 2}}));

  EXPECT_EQ(failure_kind([] { degree_counts({}, Direction::in); }), ErrorKind::empty_input);
}

TEST(DegreeCounts, MultigraphCountsMultiplicityWithoutLoops) {
  MultiDigraph g(2);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.add_edge(1, 1);
  DegreeCounts c;
  c.direction = Direction::out;
  c.add(g);
  EXPECT_EQ(c.counts, (std::map<std::int64_t, std::int64_t>{{0, 1}, {2, 1}}));
  EXPECT_DOUBLE_EQ(c.mean_degree(), 1.0);
}

TEST(AdaptiveBin, Examples) {
  const auto two = adaptive_bin(counts_of({{1, 500}, {2, 500}}), 200);
  ASSERT_EQ(two.bins.size(), 2u);
  EXPECT_DOUBLE_EQ(two.bins[0].mean_probability, 0.5);
  EXPECT_DOUBLE_EQ(two.bins[1].mean_probability, 0.5);

  const auto pooled = adaptive_bin(counts_of({{1, 150}, {2, 150}}), 200);
  ASSERT_EQ(pooled.bins.size(), 1u);
  EXPECT_DOUBLE_EQ(pooled.bins[0].mean_degree, 1.5);
  EXPECT_DOUBLE_EQ(pooled.bins[0].mean_probability, 0.5);
  EXPECT_EQ(pooled.bins[0].degree_span, 2);

  const auto lone = adaptive_bin(counts_of({{1, 199}}), 200);
  ASSERT_EQ(lone.bins.size(), 1u);
  EXPECT_EQ(lone.bins[0].samples, 199);
  EXPECT_DOUBLE_EQ(lone.bins[0].mean_probability, 1.0);

  EXPECT_EQ(failure_kind([] { adaptive_bin(counts_of({{1, 5}}), 0); }),
            ErrorKind::invalid_parameter);
}

TEST(AdaptiveBin, ConservesMassAndThreshold) {
  std::vector<SimpleDigraph> graphs;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    graphs.push_back(generate_graph(CopyParams{}, 2000, rng));
  }
  for (auto dir : {Direction::in, Direction::out, Direction::total}) {
    const auto counts = degree_counts(graphs, dir);
    for (std::int64_t s_t : {1, 50, 200, 1000}) {
      const auto b = adaptive_bin(counts, s_t);
      EXPECT_NEAR(mass(b), 1.0, 1e-12);
      std::int64_t samples = 0;
      for (std::size_t i = 0; i < b.bins.size(); ++i) {
        samples += b.bins[i].samples;
        if (i + 1 < b.bins.size()) {
          EXPECT_GE(b.bins[i].samples, s_t);
          EXPECT_LT(b.bins[i].mean_degree, b.bins[i + 1].mean_degree);
        }
      }
      EXPECT_EQ(samples, counts.total_observations);
    }
  }
}

TEST(Fits, SemilogRecoversPublishedCoefficients) {
  for (auto [a, b] : {std::pair{10.1, -48.8}, {72.2, -363.0}, {730.0, -5300.0}}) {
    const auto f = fit_semilog(sample([&](double n) { return a * std::log(n) + b; }));
    EXPECT_NEAR(f.a, a, 1e-9 * std::abs(a));
    EXPECT_NEAR(f.b, b, 1e-9 * std::abs(b));
    EXPECT_NEAR(f.residual, 0.0, 1e-9);
  }
  const auto flat = fit_semilog(sample([](double) { return 4.0; }));
  EXPECT_NEAR(flat.a, 0.0, 1e-12);
  EXPECT_NEAR(flat.b, 4.0, 1e-12);
}

TEST(Fits, PowerlawRecoversPublishedCoefficients) {
  for (auto [a, b] : {std::pair{1.7, 0.4}, {8.0, 0.4}, {0.2, 0.97}}) {
    const auto f = fit_powerlaw(sample([&](double n) { return a * std::pow(n, b); }));
    EXPECT_NEAR(f.a, a, 1e-9 * a);
    EXPECT_NEAR(f.b, b, 1e-9);
  }
  const auto flat = fit_powerlaw(sample([](double) { return 3.0; }));
  EXPECT_NEAR(flat.a, 3.0, 1e-12);
  EXPECT_NEAR(flat.b, 0.0, 1e-12);
}

TEST(Fits, PolylogRecoversPublishedCoefficients) {
  for (auto [a, b] : {std::pair{0.18, 2.5}, {0.56, 2.9}, {3e-5, 8.0}}) {
    const auto f = fit_polylog(sample([&](double n) { return a * std::pow(std::log(n), b); }));
    EXPECT_NEAR(f.a, a, 1e-9 * a);
    EXPECT_NEAR(f.b, b, 1e-9);
  }
  const auto linear = fit_polylog(sample([](double n) { return 2.0 * std::log(n); }));
  EXPECT_NEAR(linear.b, 1.0, 1e-12);
}

TEST(Fits, InvariantUnderReordering) {
  auto pts = sample([](double n) { return 3.0 * std::pow(n, 0.5) + std::sin(n); });
  const auto f1 = fit_powerlaw(pts);
  std::reverse(pts.begin(), pts.end());
  std::swap(pts[1], pts[4]);
  const auto f2 = fit_powerlaw(pts);
  EXPECT_NEAR(f1.a, f2.a, 1e-12);
  EXPECT_NEAR(f1.b, f2.b, 1e-12);
  EXPECT_NEAR(f1.residual, f2.residual, 1e-12);
  EXPECT_GT(f1.residual, 0.0);
}

TEST(Fits, DomainErrors) {
  const std::vector<ScalingPoint> same_n{{10, 1}, {10, 2}};
  EXPECT_EQ(failure_kind([&] { fit_semilog(same_n); }), ErrorKind::invalid_parameter);
  const std::vector<ScalingPoint> one{{10, 1}};
  EXPECT_EQ(failure_kind([&] { fit_semilog(one); }), ErrorKind::invalid_parameter);
  const std::vector<ScalingPoint> negative{{10, 1}, {20, -1}};
  EXPECT_EQ(failure_kind([&] { fit_powerlaw(negative); }), ErrorKind::undefined_domain);
  const std::vector<ScalingPoint> small_n{{2, 1}, {20, 2}};
  EXPECT_EQ(failure_kind([&] { fit_polylog(small_n); }), ErrorKind::undefined_domain);
}

TEST(Fits, EvaluateMatchesForm) {
  const FitResult semilog{FitForm::semilog, 2.0, 1.0, 0.0, 0};
  EXPECT_DOUBLE_EQ(semilog.evaluate(std::exp(1.0)), 3.0);
  const FitResult power{FitForm::powerlaw, 2.0, 0.5, 0.0, 0};
  EXPECT_DOUBLE_EQ(power.evaluate(16.0), 8.0);
  EXPECT_EQ(parse_fit_form("polylog"), FitForm::polylog);
}

TEST(TailExponent, ExactPowerLaw) {
  DegreeCounts c;
  for (std::int64_t k = 1; k <= 3000; ++k) {
    const auto count = static_cast<std::int64_t>(std::llround(1e10 * std::pow(static_cast<double>(k), -3.0)));
    if (count > 0) c.counts[k] = count;
  }
  for (const auto& [k, v] : c.counts) c.total_observations += v;
  const auto binned = adaptive_bin(c, 200);
  EXPECT_NEAR(tail_exponent(binned, 2.0), 3.0, 0.05);
  EXPECT_NEAR(tail_exponent(binned), 3.0, 0.05);
}

TEST(TailExponent, TooFewBins) {
  const auto binned = adaptive_bin(counts_of({{1, 500}, {2, 500}}), 200);
  EXPECT_EQ(failure_kind([&] { tail_exponent(binned, 1.0); }), ErrorKind::empty_input);
}

TEST(Histogram, Examples) {
  const std::vector<double> single{3.5};
  const auto h1 = value_histogram(single, 1.0);
  EXPECT_EQ(h1.counts, (std::vector<std::int64_t>{1}));

  const std::vector<double> values{1, 1, 2, 2};
  const auto h2 = value_histogram(values, 1.0);
  EXPECT_DOUBLE_EQ(h2.origin, 1.0);
  EXPECT_EQ(h2.counts, (std::vector<std::int64_t>{2, 2}));

  EXPECT_EQ(failure_kind([&] { value_histogram(values, 0.0); }), ErrorKind::invalid_parameter);
  EXPECT_EQ(failure_kind([] { value_histogram({}, 1.0); }), ErrorKind::empty_input);
}

TEST(Histogram, FreedmanDiaconisWidth) {
  std::vector<double> v;
  for (int i = 0; i < 1000; ++i) v.push_back(i);
  const double w = freedman_diaconis_width(v);
  EXPECT_NEAR(w, 2.0 * 499.5 / 10.0, 2.0);
  const std::vector<double> flat{5, 5, 5};
  EXPECT_DOUBLE_EQ(freedman_diaconis_width(flat), 1.0);
}

TEST(Csv, BinnedAndFitsRoundTrip) {
  const auto binned = adaptive_bin(counts_of({{1, 500}, {2, 120}, {3, 90}, {7, 333}}), 200);
  std::stringstream bs;
  write_binned_csv(bs, binned);
  EXPECT_EQ(bs.str().substr(0, bs.str().find('\n')), "degree,probability,samples,span");
  const auto back = read_binned_csv(bs);
  ASSERT_EQ(back.bins.size(), binned.bins.size());
  for (std::size_t i = 0; i < back.bins.size(); ++i) {
    EXPECT_EQ(back.bins[i].mean_degree, binned.bins[i].mean_degree);
    EXPECT_EQ(back.bins[i].mean_probability, binned.bins[i].mean_probability);
    EXPECT_EQ(back.bins[i].samples, binned.bins[i].samples);
    EXPECT_EQ(back.bins[i].degree_span, binned.bins[i].degree_span);
  }

  const std::vector<FitResult> fits{{FitForm::semilog, 72.2, -363.0, 0.125, 4},
                                    {FitForm::powerlaw, 1.0 / 3.0, 0.4, 0.0, 4},
                                    {FitForm::polylog, 3e-5, 8.0, 1e-17, 4}};
  std::stringstream fs;
  write_fits_csv(fs, fits);
  EXPECT_EQ(fs.str().substr(0, fs.str().find('\n')), "form,a,b,residual,points");
  const auto fits_back = read_fits_csv(fs);
  ASSERT_EQ(fits_back.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(fits_back[i].form, fits[i].form);
    EXPECT_EQ(fits_back[i].a, fits[i].a);
    EXPECT_EQ(fits_back[i].b, fits[i].b);
    EXPECT_EQ(fits_back[i].residual, fits[i].residual);
    EXPECT_EQ(fits_back[i].points_used, fits[i].points_used);
  }

  std::stringstream empty;
  write_fits_csv(empty, {});
  EXPECT_EQ(empty.str(), "form,a,b,residual,points\n");
}
