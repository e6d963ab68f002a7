#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "trdmo/bench/problem.hpp"
#include "trdmo/metrics/metrics.hpp"
#include "trdmo/transfer/ipg.hpp"

using namespace trdmo;
using bench::DecisionVector;
using bench::ObjectiveVector;

namespace {

// 2-d identity problem: F(x, t) = x. Used to make the inner objective an
// exact squared distance in decision space.
class IdentityToy final : public bench::DynamicProblem {
 public:
  IdentityToy()
      : DynamicProblem("toy_identity", 2, 2,
                       bench::Bounds{{0.0, 0.0}, {1.0, 1.0}},
                       bench::DmopType::kTypeI) {}

 protected:
  void eval_impl(const double* x, double, double* f) const override {
    f[0] = x[0];
    f[1] = x[1];
  }
  std::vector<ObjectiveVector> pof_impl(double, int k) const override {
    std::vector<ObjectiveVector> out;
    for (int i = 0; i < k; ++i) {
      const double s = static_cast<double>(i) / (k - 1);
      out.push_back(ObjectiveVector{s, 1.0 - s});
    }
    return out;
  }
};

// identity latent map over a 2-point linear-kernel bank
tca::TcaModel identity_model() {
  tca::TcaModel model;
  model.bank = {ObjectiveVector{1.0, 0.0}, ObjectiveVector{0.0, 1.0}};
  model.kernel = tca::KernelSpec{tca::KernelKind::kLinear, 1.0};
  model.latent_dim = 2;
  model.mu = 0.5;
  model.source_count = 1;
  model.target_count = 1;
  model.w = Eigen::MatrixXd::Identity(2, 2);
  model.eigenvalues = {1.0, 1.0};
  return model;
}

ipg::IpgConfig small_cfg(int pop) {
  ipg::IpgConfig cfg;
  cfg.source_samples = 40;
  cfg.target_samples = 40;
  cfg.latent_dim = 8;
  cfg.inner_budget = 120;
  cfg.target_pop_size = pop;
  return cfg;
}

}  // namespace

TEST_CASE("config validation") {
  ipg::IpgConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.latent_dim = 500;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = ipg::IpgConfig{};
  cfg.inner_budget = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = ipg::IpgConfig{};
  cfg.source_samples = 1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("latent targets mirror the POF, in order") {
  const auto model = identity_model();
  std::vector<ObjectiveVector> pof = {ObjectiveVector{0.1, 0.9},
                                      ObjectiveVector{0.5, 0.5},
                                      ObjectiveVector{0.9, 0.1}};
  const auto targets = ipg::build_latent_targets(model, pof);
  CHECK(targets.targets.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(targets.targets[i].size() == 2);
    // identity model: latent image == the point itself
    CHECK(targets.targets[i][0] == doctest::Approx(pof[i][0]));
    CHECK(targets.targets[i][1] == doctest::Approx(pof[i][1]));
  }
}

TEST_CASE("inner minimize keeps an already-optimal start") {
  const IdentityToy toy;
  const auto model = identity_model();
  const tca::TcaMapper mapper(model);
  const DecisionVector opt{0.3, 0.7};
  const auto latent = tca::tca_map(model, toy.evaluate(opt, 0.0));

  util::Rng rng(5);
  double g = -1.0;
  const auto result =
      ipg::inner_minimize(toy, 0.0, mapper, latent.data(), latent.size(), 60,
                          rng, &opt, nullptr, &g);
  CHECK(result == opt);
  CHECK(g == 0.0);
}

TEST_CASE("inner minimize is elitist in the budget") {
  const IdentityToy toy;
  const auto model = identity_model();
  const tca::TcaMapper mapper(model);
  const auto latent = tca::tca_map(model, ObjectiveVector{0.42, 0.17});

  double prev_g = 1e300;
  for (int budget : {1, 4, 9, 20, 50, 150, 400}) {
    util::Rng rng(99);  // same stream: the search path is prefix-identical
    double g = -1.0;
    ipg::inner_minimize(toy, 0.0, mapper, latent.data(), latent.size(),
                        budget, rng, nullptr, nullptr, &g);
    CHECK(g <= prev_g);
    prev_g = g;
  }
}

TEST_CASE("inner minimize matches dense grid search on the toy") {
  const IdentityToy toy;
  const auto model = identity_model();
  const tca::TcaMapper mapper(model);
  util::Rng master(2024);
  for (int trial = 0; trial < 5; ++trial) {
    util::Rng rng = master.spawn(trial);
    const ObjectiveVector goal{rng.uniform(), rng.uniform()};
    const auto latent = tca::tca_map(model, goal);

    // exhaustive grid, step 1e-3
    double grid_best = 1e300;
    for (int a = 0; a <= 1000; ++a) {
      for (int b = 0; b <= 1000; ++b) {
        const double d0 = a * 1e-3 - goal[0];
        const double d1 = b * 1e-3 - goal[1];
        grid_best = std::min(grid_best, d0 * d0 + d1 * d1);
      }
    }
    double g = -1.0;
    util::Rng search_rng = master.spawn(1000 + trial);
    ipg::inner_minimize(toy, 0.0, mapper, latent.data(), latent.size(), 2500,
                        search_rng, nullptr, nullptr, &g);
    CHECK(std::abs(g - grid_best) <= 1e-4);
  }
}

TEST_CASE("tr_ipg population contract") {
  const auto& fda4 = bench::problem_by_name("FDA4");
  const auto pof = fda4.true_pof(0.1, 60);

  // |POF| < N: transfers plus uniform fill
  auto cfg = small_cfg(100);
  cfg.inner_budget = 30;
  bench::EvalCounter counter;
  const auto pop = ipg::tr_ipg(fda4, 0.1, 0.2, pof, cfg, 7, &counter);
  CHECK(pop.size() == 100);
  for (const auto& x : pop) {
    CHECK(x.size() == 12);
    for (std::size_t j = 0; j < x.size(); ++j) {
      CHECK(x[j] >= 0.0);
      CHECK(x[j] <= 1.0);
    }
  }

  // evaluation budget accounting by environment
  CHECK(counter.at(0.1) == cfg.source_samples);
  CHECK(counter.at(0.2) <=
        cfg.target_samples + 60 * static_cast<long long>(cfg.inner_budget));
  CHECK(counter.total == counter.at(0.1) + counter.at(0.2));

  // |POF| >= N: exactly N, no fill
  auto cfg_small = small_cfg(40);
  cfg_small.inner_budget = 10;
  const auto pop2 = ipg::tr_ipg(fda4, 0.1, 0.2, pof, cfg_small, 7);
  CHECK(pop2.size() == 40);

  // POF larger than the transfer cap gets subsampled
  auto cfg_cap = small_cfg(20);
  cfg_cap.max_transfer_points = 25;
  cfg_cap.inner_budget = 5;
  bench::EvalCounter capped;
  const auto pop3 =
      ipg::tr_ipg(fda4, 0.1, 0.2, fda4.true_pof(0.1, 200), cfg_cap, 7, &capped);
  CHECK(pop3.size() == 20);
  CHECK(capped.at(0.2) <= cfg_cap.target_samples + 25 * 5);

  CHECK_THROWS_AS(ipg::tr_ipg(fda4, 0.1, 0.2, {}, cfg, 7),
                  std::invalid_argument);
}

TEST_CASE("tr_ipg is reproducible from the seed") {
  const auto& he7 = bench::problem_by_name("HE7");
  const auto pof = he7.true_pof(0.0, 30);
  auto cfg = small_cfg(50);
  cfg.inner_budget = 40;
  const auto a = ipg::tr_ipg(he7, 0.0, 0.1, pof, cfg, 123);
  const auto b = ipg::tr_ipg(he7, 0.0, 0.1, pof, cfg, 123);
  CHECK(a == b);
  const auto c = ipg::tr_ipg(he7, 0.0, 0.1, pof, cfg, 124);
  CHECK(a != c);
}

TEST_CASE("transfer seeding beats uniform seeding on FDA4") {
  const auto& fda4 = bench::problem_by_name("FDA4");
  const double t_prev = 0.1, t_next = 0.2;
  const auto pof_prev = fda4.true_pof(t_prev, 50);
  const auto reference = fda4.true_pof(t_next, 400);

  auto cfg = small_cfg(50);
  cfg.inner_budget = 150;

  int wins = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto transfer_pop =
        ipg::tr_ipg(fda4, t_prev, t_next, pof_prev, cfg, seed);
    util::Rng rng(seed);
    const auto random_pop = bench::sample_decision_space(fda4, 50, rng);

    auto front_of = [&](const std::vector<DecisionVector>& pop) {
      std::vector<ObjectiveVector> objs;
      for (const auto& x : pop) objs.push_back(fda4.evaluate(x, t_next));
      return objs;
    };
    const double igd_transfer = metrics::igd(reference, front_of(transfer_pop));
    const double igd_random = metrics::igd(reference, front_of(random_pop));
    if (igd_transfer < igd_random) ++wins;
  }
  CHECK(wins >= 4);
}

TEST_CASE("debug payload") {
  const auto& fda4 = bench::problem_by_name("FDA4");
  const auto pof = fda4.true_pof(0.0, 10);
  auto cfg = small_cfg(10);
  cfg.inner_budget = 5;
  ipg::IpgDebug debug;
  ipg::tr_ipg(fda4, 0.0, 0.1, pof, cfg, 3, nullptr, &debug);
  CHECK(debug.source_bank.size() == 40);
  CHECK(debug.target_bank.size() == 40);
  CHECK(debug.targets.targets.size() == 10);
  CHECK(debug.final_g.size() == 10);
  CHECK(debug.model.w.rows() == 80);
  CHECK(debug.model.w.cols() == 8);
}
