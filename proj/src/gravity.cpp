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

#include "orthodice/gravity.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <numbers>
#include <sstream>

#include "orthodice/error.hpp"
#include "orthodice/law.hpp"

namespace orthodice::gravity {
namespace {

constexpr double kGaussianReach = 8.0;  // support of a Gaussian, in sigmas
constexpr int kAngular = 64;

// Gauss-Legendre nodes mapped to [lo, hi], weights summing to hi - lo.
template <unsigned N = 30>
std::vector<std::pair<double, double>> legendre(double lo, double hi) {
  using Rule = boost::math::quadrature::gauss<double, N>;
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  std::vector<std::pair<double, double>> out;
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.emplace_back(mid + half * x[i], half * w[i]);
    if (x[i] != 0.0) out.emplace_back(mid - half * x[i], half * w[i]);
  }
  return out;
}

double norm(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

Vec3 minus(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

// [lo, hi] split into equal panels, each with a 10-point rule.
std::vector<std::pair<double, double>> panels(double lo, double hi, int count) {
  std::vector<std::pair<double, double>> out;
  const double width = (hi - lo) / count;
  for (int i = 0; i < count; ++i) {
    const auto rule = legendre<10>(lo + i * width, lo + (i + 1) * width);
    out.insert(out.end(), rule.begin(), rule.end());
  }
  return out;
}

// Rays meet a thin disk at grazing angles, so the polar mesh is graded
// towards the plane mu = cos(theta) = 0.
const std::vector<std::pair<double, double>>& polar_rule() {
  static const auto rule = [] {
    const double cuts[] = {0.0, 0.015, 0.03, 0.06, 0.12, 0.25, 0.5, 1.0};
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i + 1 < std::size(cuts); ++i) {
      for (double sign : {1.0, -1.0}) {
        for (const auto& [mu, w] : legendre<10>(cuts[i], cuts[i + 1])) {
          out.emplace_back(sign * mu, w);
        }
      }
    }
    return out;
  }();
  return rule;
}

// The r >= 0 where a r^2 + 2 b r + c <= 0, as [r0, r1]; false when empty.
bool quadratic_interval(double a, double b, double c, double& r0, double& r1) {
  if (a <= 0.0) {
    if (c > 0.0) return false;
    r0 = 0.0;
    r1 = std::numeric_limits<double>::infinity();
    return true;
  }
  const double disc = b * b - a * c;
  if (disc <= 0.0) return false;
  const double root = std::sqrt(disc);
  r0 = std::max(0.0, (-b - root) / a);
  r1 = (-b + root) / a;
  return r1 > r0;
}

void normalize(std::vector<std::pair<Vec3, double>>& nodes) {
  double total = 0.0;
  for (const auto& n : nodes) total += n.second;
  for (auto& n : nodes) n.second /= total;
}

}  // namespace

Density Density::gaussian(Vec3 center, double sigma) {
  if (!(sigma > 0.0)) throw Error(ErrorCode::InvalidArgument, "sigma must be positive");
  Density d;
  d.kind_ = Kind::Gaussian;
  d.center_ = center;
  d.p1_ = sigma;
  return d;
}

Density Density::uniform_ball(Vec3 center, double radius) {
  if (!(radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
  Density d;
  d.kind_ = Kind::Ball;
  d.center_ = center;
  d.p1_ = radius;
  return d;
}

Density Density::exponential_disk(double scale_length, double scale_height,
                                  double r_max, double z_max) {
  if (!(scale_length > 0.0 && scale_height > 0.0 && r_max > 0.0 && z_max > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "disk parameters must be positive");
  }
  Density d;
  d.kind_ = Kind::Disk;
  d.p1_ = scale_length;
  d.p2_ = scale_height;
  d.p3_ = r_max;
  d.p4_ = z_max;
  return d;
}

PointSampler Density::sampler() const {
  const Density self = *this;
  switch (kind_) {
    case Kind::Gaussian:
      return [self](StreamRng& rng) {
        Point p;
        for (int i = 0; i < 3; ++i) p.x[i] = self.center_[i] + self.p1_ * rng.normal();
        return p;
      };
    case Kind::Ball:
      return [self](StreamRng& rng) {
        double v[3];
        double len = 0.0;
        do {
          for (double& c : v) c = rng.normal();
          len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        } while (len == 0.0);
        const double radius = self.p1_ * std::cbrt(rng.uniform());
        Point p;
        for (int i = 0; i < 3; ++i) p.x[i] = self.center_[i] + radius * v[i] / len;
        return p;
      };
    case Kind::Disk:
      return [self](StreamRng& rng) {
        // R ~ Gamma(2, h) and |z| ~ Exp(h_z), both truncated by rejection.
        double radius = 0.0;
        do {
          radius = self.p1_ * (rng.exponential() + rng.exponential());
        } while (radius > self.p3_);
        double height = 0.0;
        do {
          height = self.p2_ * rng.exponential();
        } while (height > self.p4_);
        if (rng.uniform() < 0.5) height = -height;
        const double phi = 2.0 * std::numbers::pi * rng.uniform();
        Point p;
        p.x = {radius * std::cos(phi), radius * std::sin(phi), height};
        return p;
      };
  }
  throw Error(ErrorCode::InvalidArgument, "unknown density");
}

std::vector<std::pair<Vec3, double>> Density::quadrature_nodes() const {
  std::vector<std::pair<Vec3, double>> nodes;
  const double two_pi = 2.0 * std::numbers::pi;
  switch (kind_) {
    case Kind::Gaussian: {
      const double reach = kGaussianReach * p1_;
      const auto rule = legendre(-reach, reach);
      for (const auto& [x, wx] : rule) {
        for (const auto& [y, wy] : rule) {
          for (const auto& [z, wz] : rule) {
            const double q = (x * x + y * y + z * z) / (2.0 * p1_ * p1_);
            nodes.push_back({{center_[0] + x, center_[1] + y, center_[2] + z},
                             wx * wy * wz * std::exp(-q)});
          }
        }
      }
      break;
    }
    case Kind::Ball: {
      for (const auto& [r, wr] : legendre(0.0, p1_)) {
        for (const auto& [ct, wt] : legendre(-1.0, 1.0)) {
          const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
          for (int k = 0; k < kAngular; ++k) {
            const double phi = two_pi * (k + 0.5) / kAngular;
            nodes.push_back({{center_[0] + r * st * std::cos(phi),
                              center_[1] + r * st * std::sin(phi),
                              center_[2] + r * ct},
                             wr * r * r * wt});
          }
        }
      }
      break;
    }
    case Kind::Disk: {
      const auto heights = legendre(0.0, p4_);
      for (const auto& [r, wr] : legendre(0.0, p3_)) {
        for (const auto& [h, wh] : heights) {
          const double weight = wr * r * std::exp(-r / p1_) * wh * std::exp(-h / p2_);
          for (int k = 0; k < kAngular; ++k) {
            const double phi = two_pi * (k + 0.5) / kAngular;
            for (double sign : {1.0, -1.0}) {
              nodes.push_back(
                  {{r * std::cos(phi), r * std::sin(phi), sign * h}, weight});
            }
          }
        }
      }
      break;
    }
  }
  normalize(nodes);
  return nodes;
}

void Density::for_each_node_around(
    const Vec3& origin,
    const std::function<void(const Vec3&, double, double)>& visit) const {
  constexpr int kAzimuth = 96;
  constexpr int kRadialPanels = 16;
  const double pi = std::numbers::pi;
  const Vec3 d = minus(origin, center_);

  double norm_const = 0.0;
  switch (kind_) {
    case Kind::Gaussian:
      norm_const = std::pow(2.0 * pi * p1_ * p1_, -1.5);
      break;
    case Kind::Ball:
      norm_const = 3.0 / (4.0 * pi * p1_ * p1_ * p1_);
      break;
    case Kind::Disk: {
      const double x = p3_ / p1_;
      const double radial = 2.0 * pi * p1_ * p1_ * (1.0 - std::exp(-x) * (1.0 + x));
      const double vertical = 2.0 * p2_ * -std::expm1(-p4_ / p2_);
      norm_const = 1.0 / (radial * vertical);
      break;
    }
  }
  auto rho = [&](const Vec3& x) {
    switch (kind_) {
      case Kind::Gaussian: {
        const Vec3 y = minus(x, center_);
        return norm_const * std::exp(-(y[0] * y[0] + y[1] * y[1] + y[2] * y[2]) /
                                     (2.0 * p1_ * p1_));
      }
      case Kind::Ball:
        return norm_const;
      case Kind::Disk:
        return norm_const * std::exp(-std::hypot(x[0], x[1]) / p1_ - std::abs(x[2]) / p2_);
    }
    return 0.0;
  };

  for (const auto& [mu, w_mu] : polar_rule()) {
    const double sin_t = std::sqrt(std::max(0.0, 1.0 - mu * mu));
    for (int k = 0; k < kAzimuth; ++k) {
      const double phi = 2.0 * pi * (k + 0.5) / kAzimuth;
      const Vec3 u{sin_t * std::cos(phi), sin_t * std::sin(phi), mu};
      const double w_dir = w_mu * 2.0 * pi / kAzimuth;

      // Where the ray origin + r u runs inside the support.
      double r0 = 0.0, r1 = 0.0;
      std::vector<double> cuts;
      switch (kind_) {
        case Kind::Gaussian:
          r1 = norm(d) + (kGaussianReach + 2.0) * p1_;
          break;
        case Kind::Ball: {
          const double b = u[0] * d[0] + u[1] * d[1] + u[2] * d[2];
          if (!quadratic_interval(1.0, b, norm(d) * norm(d) - p1_ * p1_, r0, r1)) continue;
          break;
        }
        case Kind::Disk: {
          const double a = u[0] * u[0] + u[1] * u[1];
          const double b = u[0] * origin[0] + u[1] * origin[1];
          const double c = origin[0] * origin[0] + origin[1] * origin[1] - p3_ * p3_;
          if (!quadratic_interval(a, b, c, r0, r1)) continue;
          if (u[2] != 0.0) {
            double lo = (-p4_ - origin[2]) / u[2];
            double hi = (p4_ - origin[2]) / u[2];
            if (lo > hi) std::swap(lo, hi);
            r0 = std::max(r0, lo);
            r1 = std::min(r1, hi);
            // |z| has a kink where the ray crosses the plane.
            const double plane = -origin[2] / u[2];
            if (plane > r0 && plane < r1) cuts.push_back(plane);
          } else if (std::abs(origin[2]) > p4_) {
            continue;
          }
          if (!(r1 > r0)) continue;
          break;
        }
      }
      cuts.insert(cuts.begin(), r0);
      cuts.push_back(r1);
      for (std::size_t seg = 0; seg + 1 < cuts.size(); ++seg) {
        for (const auto& [r, w_r] : panels(cuts[seg], cuts[seg + 1], kRadialPanels)) {
          const Vec3 x{origin[0] + r * u[0], origin[1] + r * u[1], origin[2] + r * u[2]};
          visit(x, r, rho(x) * r * r * w_r * w_dir);
        }
      }
    }
  }
}

bool Density::contains(const Vec3& z) const {
  switch (kind_) {
    case Kind::Gaussian:
      return norm(minus(z, center_)) <= kGaussianReach * p1_;
    case Kind::Ball:
      return norm(minus(z, center_)) <= p1_;
    case Kind::Disk:
      return std::hypot(z[0], z[1]) <= p3_ && std::abs(z[2]) <= p4_;
  }
  return true;
}

double Density::diameter() const {
  switch (kind_) {
    case Kind::Gaussian: return 2.0 * kGaussianReach * p1_;
    case Kind::Ball: return 2.0 * p1_;
    case Kind::Disk: return 2.0 * std::hypot(p3_, p4_);
  }
  return 0.0;
}

std::string Density::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Gaussian:
      os << "gaussian(center=(" << center_[0] << "," << center_[1] << ","
         << center_[2] << "), sigma=" << p1_ << ")";
      break;
    case Kind::Ball:
      os << "uniform_ball(center=(" << center_[0] << "," << center_[1] << ","
         << center_[2] << "), radius=" << p1_ << ")";
      break;
    case Kind::Disk:
      os << "exponential_disk(scale_length=" << p1_ << ", scale_height=" << p2_
         << ", r_max=" << p3_ << ", z_max=" << p4_ << ")";
      break;
  }
  return os.str();
}

namespace {

struct Geometry {
  double eps_z = 0.0;
  double eps_w = 0.0;
};

Geometry geometry(const GravityModel& model, const Vec3& z, const Vec3& w) {
  if (!(model.mass_mean > 0.0) || !(model.mass_variance > 0.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "mass mean and variance must be positive");
  }
  const double eps = model.softening.value_or(1e-3 * model.density.diameter());
  if (model.softening && !(eps > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "softening must be positive");
  }
  Geometry g;
  for (const auto& [point, slot] : {std::pair{z, &g.eps_z}, std::pair{w, &g.eps_w}}) {
    if (!model.density.contains(point)) continue;
    if (!model.soften_inside) {
      throw Error(ErrorCode::SingularEvaluationPoint,
                  "evaluation point lies inside the mass support");
    }
    *slot = eps;
  }
  return g;
}

double inv_distance(const Vec3& x, const Vec3& z, double eps) {
  const Vec3 d = minus(x, z);
  return 1.0 / std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2] + eps * eps);
}

// Sample mean and covariance of rows, plus the delta-method standard error of
// a function with the given gradient.
double delta_se(const std::vector<std::vector<double>>& cols,
                const std::vector<double>& gradient) {
  const std::size_t k = cols.size();
  const double n = static_cast<double>(cols[0].size());
  std::vector<double> mean(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (double v : cols[i]) mean[i] += v;
    mean[i] /= n;
  }
  double var = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (gradient[i] == 0.0 || gradient[j] == 0.0) continue;
      double s = 0.0;
      for (std::size_t r = 0; r < cols[i].size(); ++r) {
        s += (cols[i][r] - mean[i]) * (cols[j][r] - mean[j]);
      }
      var += gradient[i] * gradient[j] * s / (n - 1);
    }
  }
  return std::sqrt(std::max(0.0, var) / n);
}

}  // namespace

namespace {

// Integrals of rho against 1/a, 1/a^2 and 1/(a (a + b)), where a and b are
// the softened distances to `self` and `other`. The last one is the part of
// 1/(a b) = 1/(a (a + b)) + 1/(b (a + b)) that is singular at `self`.
struct PointIntegrals {
  double inv = 0.0;
  double inv_sq = 0.0;
  double split = 0.0;
};

PointIntegrals point_integrals(const Density& density, const Vec3& self, double eps_self,
                               const Vec3& other, double eps_other) {
  PointIntegrals out;
  auto add = [&](const Vec3& x, double weight) {
    const double a = 1.0 / inv_distance(x, self, eps_self);
    const double b = 1.0 / inv_distance(x, other, eps_other);
    out.inv += weight / a;
    out.inv_sq += weight / (a * a);
    out.split += weight / (a * (a + b));
  };
  if (density.contains(self)) {
    density.for_each_node_around(self, [&](const Vec3& x, double, double w) { add(x, w); });
  } else {
    for (const auto& [x, w] : density.quadrature_nodes()) add(x, w);
  }
  return out;
}

}  // namespace

Reference reference_values(const GravityModel& model, const SupportPair& die,
                           const Vec3& z, const Vec3& w) {
  die.validate();
  const Geometry g = geometry(model, z, w);
  const auto at_z = point_integrals(model.density, z, g.eps_z, w, g.eps_w);
  const auto at_w = point_integrals(model.density, w, g.eps_w, z, g.eps_z);
  const double G = model.gravitational_constant;
  const double b = model.mass_mean;
  const double second = model.mass_variance + b * b;
  const FunctionalStats<double> fs{G * b * at_z.inv, G * b * at_w.inv,
                                   G * G * second * (at_z.split + at_w.split),
                                   G * G * second * at_z.inv_sq};
  const auto st = mixed_binomial_stats(MomentSummary::of(die), fs);
  return {st.mean, st.variance, st.covariance};
}

GravityEstimate estimate(const GravityModel& model, const SupportPair& die,
                         const Vec3& z, const Vec3& w,
                         std::uint64_t n_replicates, std::uint64_t seed,
                         const EngineOptions& options) {
  if (n_replicates < 2) {
    throw Error(ErrorCode::InvalidArgument, "need at least 2 replicates");
  }
  die.validate();
  const Geometry g = geometry(model, z, w);
  const double G = model.gravitational_constant;
  GravityEstimate out;
  out.reference = reference_values(model, die, z, w);
  out.softening = std::max(g.eps_z, g.eps_w);

  auto f_at = [G](const Vec3& target, double eps) {
    return [G, target, eps](const Point& p) {
      return G * p.mark * inv_distance(p.x, target, eps);
    };
  };
  const auto fz = f_at(z, g.eps_z);
  const auto fw = f_at(w, g.eps_w);
  const MomentSummary ms = MomentSummary::of(die);
  const double c = to_double(ms.c);

  if (c <= kMaxSimulatedMean) {
    out.estimator = "stc";
    const MeasureModel stc{CountLaw::uniform(die), model.density.sampler(),
                           marks::lognormal(model.mass_mean, model.mass_variance),
                           {}, 1.0};
    const std::vector<Functional> fs{{"Z_z", fz, {}}, {"Z_w", fw, {}}};
    const ReplicateTable table = run_replicates(stc, fs, n_replicates, seed, options);
    const auto col_z = table.column(0);
    const auto col_w = table.column(1);
    out.mean_z = mean_report(col_z, seed);
    out.var_z = variance_report(col_z, seed);
    out.cov_wz = covariance_report(col_w, col_z, seed);
    return out;
  }

  // Campbell route: E Z = c nu f, Var = c nu f^2 + (delta^2 - c)(nu f)^2, with
  // nu f, nu f^2, nu(f_z f_w) estimated from single marked points.
  out.estimator = "campbell";
  const MeasureModel single{CountLaw::uniform(SupportPair(1, 1)),
                            model.density.sampler(),
                            marks::lognormal(model.mass_mean, model.mass_variance),
                            {}, 1.0};
  std::vector<double> vz(n_replicates), vw(n_replicates), vzz(n_replicates),
      vzw(n_replicates);
  parallel_for_replicates(n_replicates, options.threads, [&](std::uint64_t r) {
    const Realization real = sample_realization(single, seed, r);
    const Point& p = real.points.front();
    vz[r] = fz(p);
    vw[r] = fw(p);
    vzz[r] = vz[r] * vz[r];
    vzw[r] = vz[r] * vw[r];
  });
  auto avg = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  const double m_z = avg(vz), m_w = avg(vw), m_zz = avg(vzz), m_zw = avg(vzw);
  const double excess = to_double(ms.delta_sq) - c;
  const std::vector<std::vector<double>> cols{vz, vw, vzz, vzw};
  auto report = [&](double value, std::vector<double> gradient) {
    return EstimateReport{value, delta_se(cols, gradient), n_replicates, seed};
  };
  out.mean_z = report(c * m_z, {c, 0.0, 0.0, 0.0});
  out.var_z = report(c * m_zz + excess * m_z * m_z,
                     {2.0 * excess * m_z, 0.0, c, 0.0});
  out.cov_wz = report(c * m_zw + excess * m_z * m_w,
                      {excess * m_w, excess * m_z, 0.0, c});
  return out;
}

MilkyWayPreset milky_way() {
  MilkyWayPreset preset;
  preset.die = first_die_with_mean_at_least(Integer(250) * Integer(1'000'000'000));
  preset.model.mass_mean = 4.0;
  preset.model.mass_variance = 4.0;
  preset.mass_scale = Integer(4) * preset.die.c;
  preset.die.sides_prime = mpz_probab_prime_p(preset.die.sides.get_mpz_t(), 30) > 0;
  if (preset.die.sides.fits_uint_p()) {
    preset.sides_prime_rank =
        prime_rank(static_cast<std::uint32_t>(preset.die.sides.get_ui())).value_or(0);
  }
  // kpc: scale length 3, scale height 0.3, truncated at 15 and 2. z is the
  // solar position, w the antipodal point across the centre.
  preset.model.density = Density::exponential_disk(3.0, 0.3, 15.0, 2.0);
  preset.z = {8.2, 0.0, 0.02};
  preset.w = {-8.2, 0.0, 0.02};
  return preset;
}

}  // namespace orthodice::gravity
