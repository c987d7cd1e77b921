// Copyright 2026 The orthodice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>

#include "internal.hpp"
#include "orthodice/cards.hpp"
#include "orthodice/goe.hpp"
#include "orthodice/gravity.hpp"
#include "orthodice/shotnoise.hpp"
#include "orthodice/stats.hpp"
#include "orthodice/stc.hpp"

using namespace orthodice;
using namespace orthodice::capi;

namespace {

SupportPair support_arg(const char* m, const char* n) {
  SupportPair s(arg_integer(m, "m"), arg_integer(n, "n"));
  s.validate();
  return s;
}

Json die_class_json(const SupportPair& s, const od_options& o) {
  const DiceClass cls = classify(s);
  Json j = Json::object();
  j["m"] = integer(s.m, o);
  j["n"] = integer(s.n, o);
  j["variant"] = variant_name(cls.variant);
  j["degenerate"] = cls.degenerate;
  return j;
}

Json suit_row(const char* quantity, const cards::SuitStats& st) {
  return Json::array({quantity, rational(st.mean), rational(st.variance),
                      rational(st.covariance), st.correlation});
}

void require_replicates(std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "need at least 2 replicates");
}

}  // namespace

extern "C" {

od_status od_sim_estimate(const od_options* opts, const char* model,
                          const char* const* functionals, size_t n_functionals,
                          uint64_t replicates, uint64_t seed, od_result** out) {
  return run(out, [&] {
    const od_options& o = resolve(opts);
    if (model == nullptr) throw Error(ErrorCode::InvalidArgument, "model is NULL");
    if (n_functionals == 0 || functionals == nullptr) {
      throw Error(ErrorCode::InvalidArgument, "need at least one functional");
    }
    require_replicates(replicates);
    const MeasureModel mm = parse_model(model);
    std::vector<Functional> fs;
    for (std::size_t i = 0; i < n_functionals; ++i) {
      if (functionals[i] == nullptr) {
        throw Error(ErrorCode::InvalidArgument, "functional is NULL");
      }
      fs.push_back(parse_functional(functionals[i]));
    }
    const EstimateSummary sum =
        estimate_functionals(mm, fs, replicates, seed, engine(o));
    Output res;
    res.payload["model"] = model;
    res.payload["replicates"] = replicates;
    res.payload["seed"] = seed;
    res.payload["count_mean"] = mm.count.mean();
    res.payload["count_variance"] = mm.count.variance();
    Json est = table({"functional", "mean", "mean_se", "variance", "variance_se"});
    for (std::size_t i = 0; i < fs.size(); ++i) {
      est["rows"].push_back(Json::array(
          {sum.names[i], sum.means[i].point_estimate, sum.means[i].std_error,
           sum.variances[i].point_estimate, sum.variances[i].std_error}));
    }
    Json cov = table({"first", "second", "covariance", "covariance_se"});
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t j = i + 1; j < fs.size(); ++j) {
        const auto& r = sum.covariances[i][j];
        cov["rows"].push_back(
            Json::array({sum.names[i], sum.names[j], r.point_estimate, r.std_error}));
      }
    }
    res.payload["tables"]["estimates"] = std::move(est);
    res.payload["tables"]["covariances"] = std::move(cov);
    set_tables(res.payload, "estimates");
    return res;
  });
}

od_status od_cards_table(const od_options* opts, const char* m, const char* n,
                         od_result** out) {
  return run(out, [&] {
    const od_options& o = resolve(opts);
    const auto t = cards::covariance_table(support_arg(m, n));
    Output res;
    res.payload["die"] = die_class_json(t.die, o);
    res.payload["c"] = rational(t.moments.c);
    res.payload["delta_sq"] = rational(t.moments.delta_sq);
    Json tab = table({"quantity", "mean", "variance", "covariance", "correlation"});
    tab["rows"].push_back(suit_row("count", t.counts));
    tab["rows"].push_back(suit_row("points", t.points));
    res.payload["tables"]["suits"] = std::move(tab);
    set_tables(res.payload, "suits");
    return res;
  });
}

od_status od_cards_partition(const od_options*, unsigned hand,
                             const unsigned* counts, size_t n_counts,
                             od_result** out) {
  return run(out, [&] {
    if (n_counts > 0 && counts == nullptr) {
      throw Error(ErrorCode::InvalidArgument, "counts is NULL");
    }
    std::vector<unsigned> c(counts, counts + n_counts);
    const auto probs = cards::partition_pmf(hand, c);
    Output res;
    res.payload["hand"] = hand;
    res.payload["counts"] = c;
    res.payload["without_replacement"] = rational(probs.without_replacement);
    res.payload["with_replacement"] = rational(probs.with_replacement);
    return res;
  });
}

od_status od_cards_game(const od_options* opts, const char* m, const char* n,
                        uint64_t rounds, uint64_t seed, od_result** out) {
  return run(out, [&] {
    const od_options& o = resolve(opts);
    const SupportPair die = support_arg(m, n);
    const auto g = cards::simulate_game(die, rounds, seed, engine(o));
    const auto analytic = cards::covariance_table(die);
    Output res;
    res.payload["die"] = die_class_json(die, o);
    res.payload["rounds"] = rounds;
    res.payload["seed"] = seed;
    res.payload["recommended"] = cards::strategy_name(g.recommended);
    res.payload["indicator_rate"] = g.indicator_rate;
    res.payload["indicator_covariance"] = report(g.indicator_covariance);
    res.payload["count_covariance"] = report(g.count_covariance);
    res.payload["count_covariance_exact"] = rational(analytic.counts.covariance);
    res.payload["points_covariance"] = report(g.points_covariance);
    res.payload["points_covariance_exact"] = rational(analytic.points.covariance);
    Json acc = table({"strategy", "accuracy", "std_error"});
    acc["rows"].push_back(Json::array({"copy", g.copy_accuracy.point_estimate,
                                       g.copy_accuracy.std_error}));
    acc["rows"].push_back(Json::array({"anticopy", g.anticopy_accuracy.point_estimate,
                                       g.anticopy_accuracy.std_error}));
    acc["rows"].push_back(Json::array({"coin", g.coin_accuracy.point_estimate,
                                       g.coin_accuracy.std_error}));
    Json sc = table({"round", "count_spades", "count_diamonds", "points_spades",
                     "points_diamonds"});
    for (std::size_t r = 0; r < g.scatter.size(); ++r) {
      const auto& s = g.scatter[r];
      sc["rows"].push_back(Json::array({r, s[0], s[1], s[2], s[3]}));
    }
    res.payload["tables"]["accuracy"] = std::move(acc);
    res.payload["tables"]["scatter"] = std::move(sc);
    set_tables(res.payload, "accuracy");
    return res;
  });
}

od_status od_goe_summary(const od_options* opts, const double* r_grid,
                         size_t n_r, uint64_t seed, od_result** out) {
  return run(out, [&] {
    const od_options& o = resolve(opts);
    std::vector<double> grid =
        r_grid == nullptr ? goe::default_r_grid() : std::vector<double>(r_grid, r_grid + n_r);
    if (grid.empty()) throw Error(ErrorCode::InvalidArgument, "empty r grid");
    const auto rows = goe::summary(grid, o.samples, seed, engine(o));
    Output res;
    res.payload["samples"] = o.samples;
    res.payload["method"] = o.samples == 0 ? "quadrature" : "monte-carlo";
    res.payload["seed"] = seed;
    if (o.samples > 0) {
      const auto ens = goe::ensemble_moments(o.samples, seed, engine(o));
      Json e = Json::object();
      e["nu_f"] = ens.nu_f;
      e["nu_f_se"] = ens.se_f;
      e["nu_f2"] = ens.nu_f2;
      e["nu_f2_se"] = ens.se_f2;
      e["nu_f_exact"] = std::sqrt(2.0 * std::numbers::pi);
      e["nu_f2_exact"] = 8.0;
      res.payload["ensemble"] = std::move(e);
    }
    Json t = table({"r", "a_r", "nu_f", "nu_f_se", "nu_f2", "nu_f2_se",
                    "var_ratio_orthogonal", "var_ratio_dirac", "cov_ratio_dirac"});
    for (const auto& r : rows) {
      t["rows"].push_back(Json::array({r.r, r.a_r, r.moments.nu_f, r.moments.se_f,
                                       r.moments.nu_f2, r.moments.se_f2,
                                       r.var_ratio_orthogonal, r.var_ratio_dirac,
                                       r.cov_ratio_dirac}));
    }
    res.payload["tables"]["summary"] = std::move(t);
    set_tables(res.payload, "summary");
    return res;
  });
}

od_status od_goe_wigner(const od_options* opts, uint64_t n, uint64_t seed,
                        od_result** out) {
  return run(out, [&] {
    const od_options& o = resolve(opts);
    const auto ys = goe::wigner_sample(seed, n, engine(o));
    double s1 = 0.0, s2 = 0.0, s4 = 0.0;
    for (double y : ys) {
      s1 += y;
      s2 += y * y;
      s4 += y * y * y * y;
    }
    const double dn = static_cast<double>(n);
    const double mean = s1 / dn;
    const double second = s2 / dn;
    Output res;
    res.payload["n"] = n;
    res.payload["seed"] = seed;
    res.payload["mean"] = mean;
    res.payload["mean_exact"] = std::sqrt(2.0 * std::numbers::pi);
    res.payload["second_moment"] = second;
    res.payload["second_moment_exact"] = 8.0;
    if (n >= 2) {
      res.payload["mean_se"] = std::sqrt(std::max(0.0, (s2 - dn * mean * mean) / (dn - 1)) / dn);
      res.payload["second_moment_se"] =
          std::sqrt(std::max(0.0, (s4 - dn * second * second) / (dn - 1)) / dn);
      const auto ks = stats::ks_test(ys, goe::wigner_cdf);
      res.payload["ks_statistic"] = ks.statistic;
      res.payload["ks_p_value"] = ks.p_value;
    }
    Json t = table({"i", "gap"});
    for (std::size_t i = 0; i < ys.size(); ++i) t["rows"].push_back(Json::array({i, ys[i]}));
    res.payload["tables"]["samples"] = std::move(t);
    set_tables(res.payload, "samples");
    return res;
  });
}

od_status od_shotnoise(const od_options* opts, double horizon, double amplitude,
                       double decay, const char* die_index, size_t grid_points,
                       uint64_t replicates, uint64_t seed, od_result** out) {
  return run(out, [&] {
    const od_options& o = resolve(opts);
    const OrthogonalDie die = die_from_index(arg_integer(die_index, "die index"));
    const shotnoise::ShotNoiseModel model{horizon, die.support(), amplitude, decay};
    model.validate();
    const auto grid = shotnoise::uniform_grid(horizon, grid_points);
    const auto sim = shotnoise::simulate(model, grid, replicates, seed, engine(o));
    Output res;
    res.payload["die"] = die_class_json(die.support(), o);
    res.payload["T"] = horizon;
    res.payload["amplitude"] = amplitude;
    res.payload["decay"] = decay;
    res.payload["replicates"] = replicates;
    res.payload["seed"] = seed;
    res.payload["reference_time"] = sim.reference_time;
    res.payload["max_ou_residual"] = sim.max_ou_residual;
    res.payload["ou_tolerance"] = sim.ou_tolerance;
    Json t = table({"t", "mean_closed", "mean", "mean_se", "var_closed", "var",
                    "var_se", "cov_closed", "cov", "cov_se"});
    for (std::size_t j = 0; j < sim.grid.size(); ++j) {
      t["rows"].push_back(Json::array(
          {sim.grid[j], sim.closed[j].mean, sim.mean[j].point_estimate,
           sim.mean[j].std_error, sim.closed[j].variance,
           sim.variance[j].point_estimate, sim.variance[j].std_error,
           sim.closed[j].covariance, sim.covariance[j].point_estimate,
           sim.covariance[j].std_error}));
    }
    std::vector<std::string> cols{"t"};
    for (std::size_t p = 0; p < sim.sample_paths.size(); ++p) {
      cols.push_back("path_" + std::to_string(p));
    }
    Json paths = table(cols);
    for (std::size_t j = 0; j < sim.grid.size(); ++j) {
      Json row = Json::array({sim.grid[j]});
      for (const auto& p : sim.sample_paths) row.push_back(p[j]);
      paths["rows"].push_back(std::move(row));
    }
    res.payload["tables"]["moments"] = std::move(t);
    res.payload["tables"]["paths"] = std::move(paths);
    set_tables(res.payload, "moments");
    return res;
  });
}

void od_gravity_params_init(od_gravity_params* p) {
  if (p == nullptr) return;
  *p = od_gravity_params{};
  p->density = OD_DENSITY_GAUSSIAN;
  p->scale = 1.0;
  p->scale_height = 0.3;
  p->r_max = 15.0;
  p->z_max = 2.0;
  p->mass_mean = 4.0;
  p->mass_variance = 4.0;
  p->gravitational_constant = 1.0;
  p->soften_inside = 1;
  p->softening = 0.0;
  p->z[0] = 3.0;
  p->w[1] = 3.0;
}

}  // extern "C"

namespace {

Json vec(const gravity::Vec3& v) { return Json::array({v[0], v[1], v[2]}); }

Json gravity_json(const gravity::GravityModel& model, const SupportPair& die,
                  const gravity::Vec3& z, const gravity::Vec3& w,
                  std::uint64_t replicates, std::uint64_t seed,
                  const od_options& o) {
  const auto est = gravity::estimate(model, die, z, w, replicates, seed, engine(o));
  Json j = Json::object();
  j["die"] = die_class_json(die, o);
  j["density"] = model.density.describe();
  j["mass_mean"] = model.mass_mean;
  j["mass_variance"] = model.mass_variance;
  j["G"] = model.gravitational_constant;
  j["z"] = vec(z);
  j["w"] = vec(w);
  j["estimator"] = est.estimator;
  j["softening"] = est.softening;
  Json t = table({"quantity", "estimate", "std_error", "reference"});
  t["rows"].push_back(Json::array({"mean_z", est.mean_z.point_estimate,
                                   est.mean_z.std_error, est.reference.mean_z}));
  t["rows"].push_back(Json::array({"var_z", est.var_z.point_estimate,
                                   est.var_z.std_error, est.reference.var_z}));
  t["rows"].push_back(Json::array({"cov_wz", est.cov_wz.point_estimate,
                                   est.cov_wz.std_error, est.reference.cov_wz}));
  j["replicates"] = replicates;
  j["seed"] = seed;
  j["tables"]["potential"] = std::move(t);
  set_tables(j, "potential");
  return j;
}

}  // namespace

extern "C" {

od_status od_gravity(const od_options* opts, const od_gravity_params* params,
                     const char* m, const char* n, uint64_t replicates,
                     uint64_t seed, od_result** out) {
  return run(out, [&] {
    const od_options& o = resolve(opts);
    od_gravity_params p;
    od_gravity_params_init(&p);
    if (params != nullptr) p = *params;
    require_replicates(replicates);
    gravity::GravityModel model;
    const gravity::Vec3 center{p.center[0], p.center[1], p.center[2]};
    switch (p.density) {
      case OD_DENSITY_GAUSSIAN:
        model.density = gravity::Density::gaussian(center, p.scale);
        break;
      case OD_DENSITY_BALL:
        model.density = gravity::Density::uniform_ball(center, p.scale);
        break;
      case OD_DENSITY_DISK:
        model.density = gravity::Density::exponential_disk(p.scale, p.scale_height,
                                                           p.r_max, p.z_max);
        break;
      default:
        throw Error(ErrorCode::InvalidArgument, "unknown density kind");
    }
    model.mass_mean = p.mass_mean;
    model.mass_variance = p.mass_variance;
    model.gravitational_constant = p.gravitational_constant;
    model.soften_inside = p.soften_inside != 0;
    if (p.softening > 0.0) model.softening = p.softening;
    Output res;
    res.payload = gravity_json(model, support_arg(m, n), {p.z[0], p.z[1], p.z[2]},
                               {p.w[0], p.w[1], p.w[2]}, replicates, seed, o);
    return res;
  });
}

od_status od_gravity_milky_way(const od_options* opts, uint64_t replicates,
                               uint64_t seed, od_result** out) {
  return run(out, [&] {
    const od_options& o = resolve(opts);
    require_replicates(replicates);
    const auto preset = gravity::milky_way();
    Output res;
    res.payload = gravity_json(preset.model, preset.die.support(), preset.z,
                               preset.w, replicates, seed, o);
    Json d = Json::object();
    d["k"] = integer(preset.die.k, o);
    d["m"] = integer(preset.die.m, o);
    d["n"] = integer(preset.die.n, o);
    d["c"] = integer(preset.die.c, o);
    d["sides"] = integer(preset.die.sides, o);
    d["sides_prime"] = preset.die.sides_prime.value_or(false);
    d["sides_prime_rank"] = preset.sides_prime_rank;
    res.payload["preset"] = "milkyway";
    res.payload["milky_way_die"] = std::move(d);
    res.payload["mass_scale"] = integer(preset.mass_scale, o);
    return res;
  });
}

}  // extern "C"
