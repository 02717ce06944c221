#include <omp.h>

#include <boost/algorithm/string.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "gista/app/commands.hpp"
#include "gista/app/csv.hpp"
#include "gista/errors.hpp"
#include "run_output.hpp"

namespace fs = std::filesystem;

namespace gista::app {

namespace {

constexpr std::size_t kMaxGridPoints = 10000;

PointOutcome guarded(const PointFn& fn, std::size_t i) {
  try {
    return fn(i);
  } catch (const std::exception& e) {
    PointOutcome o;
    o.status = PointOutcome::Status::error;
    o.message = e.what();
    return o;
  }
}

const char* status_name(PointOutcome::Status s) {
  switch (s) {
    case PointOutcome::Status::ok:
      return "ok";
    case PointOutcome::Status::diverged:
      return "diverged";
    default:
      return "error";
  }
}

std::string point_dir(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "point_%04zu", i);
  return buf;
}

}  // namespace

std::size_t SweepGrid::size() const {
  std::size_t n = 1;
  for (const auto& a : axes) n *= a.values.size();
  return n;
}

std::vector<std::string> SweepGrid::coordinates(std::size_t i) const {
  std::vector<std::string> out(axes.size());
  for (std::size_t j = axes.size(); j-- > 0;) {
    const std::size_t m = axes[j].values.size();
    out[j] = axes[j].values[i % m];
    i /= m;
  }
  return out;
}

ptree SweepGrid::point(std::size_t i) const {
  ptree t = base;
  const auto coords = coordinates(i);
  for (std::size_t j = 0; j < axes.size(); ++j) {
    auto it = t.find(axes[j].section);
    ptree& sec = it == t.not_found() ? t.push_back({axes[j].section, ptree()})->second
                                     : it->second;
    auto kit = sec.find(axes[j].key);
    if (kit == sec.not_found()) {
      sec.push_back({axes[j].key, ptree(coords[j])});
    } else {
      kit->second.put_value(coords[j]);
    }
  }
  return t;
}

SweepGrid parse_sweep(const ptree& tree) {
  SweepGrid g;
  g.base = tree;
  auto it = g.base.find("sweep");
  if (it == g.base.not_found()) return g;
  for (const auto& [k, v] : it->second) {
    const auto dot = k.rfind('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == k.size()) {
      throw ConfigError("[sweep] key '" + k + "' must look like section.key");
    }
    SweepAxis a{k.substr(0, dot), k.substr(dot + 1), {}};
    if (a.section == "sim" && a.key == "plant") {
      throw ConfigError("[sweep] cannot vary the plant kind");
    }
    std::vector<std::string> parts;
    boost::split(parts, v.data(), boost::is_any_of(","));
    for (auto& p : parts) {
      boost::trim(p);
      if (p.empty()) throw ConfigError("[sweep] " + k + ": empty grid value");
      a.values.push_back(p);
    }
    g.axes.push_back(std::move(a));
  }
  g.base.erase(g.base.to_iterator(it));
  if (g.size() > kMaxGridPoints) {
    throw ConfigError("sweep grid has " + std::to_string(g.size()) + " points (limit 10000)");
  }
  return g;
}

std::vector<PointOutcome> sweep_serial(std::size_t n, const PointFn& fn) {
  std::vector<PointOutcome> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = guarded(fn, i);
  return out;
}

std::vector<PointOutcome> sweep_parallel(std::size_t n, int jobs, const PointFn& fn) {
  std::vector<PointOutcome> out(n);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long long i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = guarded(fn, static_cast<std::size_t>(i));
  }
  return out;
}

namespace {

PointOutcome outcome(const ExperimentLog& log, const ConvergenceSummary& s) {
  PointOutcome o;
  if (log.divergence) {
    o.status = PointOutcome::Status::diverged;
    o.message = log.divergence->message;
  } else {
    o.status = PointOutcome::Status::ok;
  }
  if (!s.iterations.empty()) o.final = s.iterations.back();
  return o;
}

}  // namespace

PointOutcome evaluate_point(const SimConfig& cfg) {
  const ExperimentLog log = run_experiment(cfg);
  return outcome(log, summarize(log));
}

int cmd_sweep(const SweepOptions& opt, std::ostream& err) {
  SweepGrid grid;
  std::vector<SimConfig> configs;
  try {
    grid = parse_sweep(read_ini(opt.config_path));
    for (std::size_t i = 0; i < grid.size(); ++i) {
      configs.push_back(apply_overrides(parse_config(grid.point(i)), opt.overrides));
    }
  } catch (const ConfigError& e) {
    err << "gista: config error: " << e.what() << '\n';
    return kConfigError;
  }

  const fs::path out(opt.out_dir);
  try {
    fs::create_directories(out);
  } catch (const std::exception& e) {
    err << "gista: cannot create " << opt.out_dir << ": " << e.what() << '\n';
    return kConfigError;
  }

  const PointFn fn = [&](std::size_t i) {
    const auto t0 = std::chrono::steady_clock::now();
    const ExperimentLog log = run_experiment(configs[i]);
    const ConvergenceSummary s = summarize(log);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_run(out / point_dir(i), log, s, opt.config_path, secs);
    return outcome(log, s);
  };
  const auto results =
      opt.jobs == 1 ? sweep_serial(configs.size(), fn) : sweep_parallel(configs.size(), opt.jobs, fn);

  std::ofstream csv(out / "sweep.csv", std::ios::binary | std::ios::trunc);
  csv << "point";
  for (const auto& a : grid.axes) csv << ',' << a.section << '.' << a.key;
  csv << ",status";
  const auto cols = summary_columns(configs.front());
  for (const auto& c : cols) csv << ",final_" << c;
  csv << '\n';
  bool failed = false;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const PointOutcome& r = results[i];
    csv << point_dir(i);
    for (const auto& c : grid.coordinates(i)) csv << ',' << c;
    csv << ',' << status_name(r.status);
    if (r.status == PointOutcome::Status::ok && r.final) {
      for (double v : summary_row(*r.final)) csv << ',' << format_double(v);
    } else {
      for (std::size_t j = 0; j < cols.size(); ++j) csv << ',';
      failed = true;
      err << "gista: " << point_dir(i) << " " << status_name(r.status) << ": " << r.message
          << '\n';
    }
    csv << '\n';
  }
  if (!csv) {
    err << "gista: cannot write sweep.csv\n";
    return kConfigError;
  }
  return failed ? kSweepFailure : kOk;
}

}  // namespace gista::app
