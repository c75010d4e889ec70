#pragma once

// Randomized ensemble sweeps: draw instances, evaluate every applicable
// inequality, aggregate slack statistics per inequality.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "numrad/bounds.hpp"
#include "numrad/extremal.hpp"
#include "numrad/random.hpp"

namespace numrad {

enum class Ensemble { Disk, Segment, Ginibre, Nilpotent };

inline std::optional<Ensemble> parse_ensemble(std::string_view s) {
  if (s == "disk") return Ensemble::Disk;
  if (s == "segment") return Ensemble::Segment;
  if (s == "ginibre") return Ensemble::Ginibre;
  if (s == "nilpotent") return Ensemble::Nilpotent;
  return std::nullopt;
}

inline std::string_view to_string(Ensemble e) {
  switch (e) {
    case Ensemble::Disk: return "disk";
    case Ensemble::Segment: return "segment";
    case Ensemble::Ginibre: return "ginibre";
    case Ensemble::Nilpotent: return "nilpotent";
  }
  return "?";
}

// disk: T from gen_disk_instance(lambda, r); segment: A from
// gen_segment_instance(m, M). ginibre and nilpotent draw unit-norm matrices
// and certify them with the tight disk (lambda, ||T - lambda I|| + 1e-9).
struct SweepConfig {
  Ensemble ensemble = Ensemble::Disk;
  std::size_t n = 4;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  Complex lambda{1.0, 0.0};
  double r = 0.5;
  double m = 1.0;
  double M = 4.0;

  std::string defect() const {
    if (n < 1) return "n must be at least 1";
    if (trials < 1) return "trials must be at least 1";
    if ((ensemble == Ensemble::Nilpotent) && n < 2) return "nilpotent ensemble needs n >= 2";
    if (ensemble == Ensemble::Disk) {
      if (lambda == Complex{}) return "lambda must be nonzero";
      if (!(r > 0.0)) return "r must be positive";
    }
    if (ensemble == Ensemble::Ginibre || ensemble == Ensemble::Nilpotent) {
      if (lambda == Complex{}) return "lambda must be nonzero";
    }
    if (ensemble == Ensemble::Segment && !(m > 0.0 && M >= m)) return "requires M >= m > 0";
    return {};
  }
};

struct InequalityStats {
  InequalityId id;
  std::size_t reports = 0;
  std::size_t hypothesis_failures = 0;
  std::size_t violations = 0;
  double min_slack = std::numeric_limits<double>::quiet_NaN();
  double median_slack = std::numeric_limits<double>::quiet_NaN();
};

struct SweepSummary {
  SweepConfig config;
  std::vector<InequalityStats> stats;
  // Nilpotent ensemble only: max | w(T) - ||T||/2 | over all trials.
  std::optional<double> half_norm_deviation;

  bool sound() const {
    return std::none_of(stats.begin(), stats.end(), [](const auto& s) { return s.violations > 0; });
  }
};

namespace detail {

inline std::vector<InequalityReport> sweep_trial(const SweepConfig& cfg, std::uint64_t trial_seed,
                                                 double& half_norm_dev) {
  switch (cfg.ensemble) {
    case Ensemble::Disk: {
      const auto inst = gen_disk_instance(cfg.lambda, cfg.r, cfg.n, trial_seed);
      const Certificate c = inst.cert;
      return verify_all(inst.t, std::span(&c, 1));
    }
    case Ensemble::Segment: {
      const auto inst = gen_segment_instance(cfg.m, cfg.M, cfg.n, trial_seed);
      const Certificate c = inst.sector;
      return verify_all(inst.a, std::span(&c, 1));
    }
    case Ensemble::Ginibre:
    case Ensemble::Nilpotent: {
      Rng rng(trial_seed);
      Matrix t = cfg.ensemble == Ensemble::Ginibre ? ginibre(cfg.n, rng) : random_nilpotent(cfg.n, rng);
      if (cfg.ensemble == Ensemble::Ginibre) t = Complex(1.0 / operator_norm(t)) * t;
      const Certificate c =
          DiskCertificate{cfg.lambda, operator_norm(shift(t, cfg.lambda)) + kHypothesisTol, std::nullopt};
      auto reports = verify_all(t, std::span(&c, 1));
      if (cfg.ensemble == Ensemble::Nilpotent && !reports.empty())
        half_norm_dev = std::max(half_norm_dev, std::abs(reports.front().w - 0.5 * reports.front().norm));
      return reports;
    }
  }
  return {};
}

}  // namespace detail

/// Trial i uses derive_seed(seed, i); the summary depends only on the config.
inline SweepSummary run_sweep(const SweepConfig& cfg) {
  if (auto d = cfg.defect(); !d.empty()) throw std::invalid_argument(d);
  std::map<InequalityId, std::vector<double>> passing;
  std::map<InequalityId, InequalityStats> stats;
  double half_norm_dev = 0.0;
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    for (const auto& r : detail::sweep_trial(cfg, derive_seed(cfg.seed, i), half_norm_dev)) {
      auto& s = stats.try_emplace(r.inequality_id, InequalityStats{r.inequality_id}).first->second;
      ++s.reports;
      if (!r.hypothesis_ok) {
        ++s.hypothesis_failures;
        continue;
      }
      if (r.violated()) ++s.violations;
      passing[r.inequality_id].push_back(r.slack);
    }
  }
  SweepSummary out{cfg, {}, std::nullopt};
  for (auto& [id, s] : stats) {
    auto& slacks = passing[id];
    if (!slacks.empty()) {
      std::sort(slacks.begin(), slacks.end());
      s.min_slack = slacks.front();
      const std::size_t mid = slacks.size() / 2;
      s.median_slack = slacks.size() % 2 ? slacks[mid] : 0.5 * (slacks[mid - 1] + slacks[mid]);
    }
    out.stats.push_back(s);
  }
  if (cfg.ensemble == Ensemble::Nilpotent) out.half_norm_deviation = half_norm_dev;
  return out;
}

inline nlohmann::json sweep_to_json(const SweepSummary& s) {
  auto real_or_null = [](double x) -> nlohmann::json {
    return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
  };
  nlohmann::json per = nlohmann::json::array();
  for (const auto& st : s.stats) {
    per.push_back({
        {"inequality_id", std::string(to_string(st.id))},
        {"reports", st.reports},
        {"hypothesis_failures", st.hypothesis_failures},
        {"violations", st.violations},
        {"min_slack", real_or_null(st.min_slack)},
        {"median_slack", real_or_null(st.median_slack)},
    });
  }
  const auto& c = s.config;
  nlohmann::json out = {
      {"ensemble", std::string(to_string(c.ensemble))},
      {"n", c.n},
      {"trials", c.trials},
      {"seed", c.seed},
      {"sound", s.sound()},
      {"inequalities", std::move(per)},
  };
  if (c.ensemble == Ensemble::Segment) {
    out["m"] = c.m;
    out["M"] = c.M;
  } else {
    out["lambda"] = {c.lambda.real(), c.lambda.imag()};
    if (c.ensemble == Ensemble::Disk) out["r"] = c.r;
  }
  if (s.half_norm_deviation) out["half_norm_deviation"] = *s.half_norm_deviation;
  return out;
}

}  // namespace numrad
