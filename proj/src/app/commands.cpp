#include "gista/app/commands.hpp"

#include <chrono>
#include <filesystem>
#include <ostream>

#include "gista/app/csv.hpp"
#include "gista/errors.hpp"
#include "manifest.hpp"
#include "run_output.hpp"

namespace fs = std::filesystem;

namespace gista::app {

namespace {

std::string iter_name(std::size_t i) { return "iter_" + std::to_string(i) + ".csv"; }

void write_summary_csv(const fs::path& path, const SimConfig& cfg,
                       const ConvergenceSummary& summary) {
  const auto header = summary_columns(cfg);
  std::vector<std::vector<double>> cols(header.size());
  for (const auto& it : summary.iterations) {
    const auto row = summary_row(it);
    for (std::size_t j = 0; j < row.size(); ++j) cols[j].push_back(row[j]);
  }
  std::vector<std::span<const double>> spans(cols.begin(), cols.end());
  write_csv(path.string(), header, spans);
}

std::vector<double> column_or_throw(const CsvTable& t, const std::string& name,
                                    const std::string& file) {
  if (!t.has(name)) throw std::runtime_error(file + " lacks column " + name);
  return t.column(name);
}

}  // namespace

void write_run(const fs::path& out_dir, const ExperimentLog& log,
               const ConvergenceSummary& summary, const std::string& config_path,
               double duration_s) {
  fs::create_directories(out_dir);
  ManifestInfo info;
  info.config_path = config_path;
  info.out_dir = out_dir.string();
  for (const auto& it : log.iterations) {
    info.files.push_back(iter_name(it.iteration));
    write_iteration_csv((out_dir / info.files.back()).string(), it);
  }
  write_summary_csv(out_dir / "summary.csv", log.config, summary);
  info.files.emplace_back("summary.csv");
  info.duration_s = duration_s;
  info.config_echo = to_ini(log.config);
  info.divergence = log.divergence ? &*log.divergence : nullptr;
  write_manifest(out_dir / "manifest.json", info);
}

int cmd_run(const RunOptions& opt, std::ostream& err) {
  SimConfig cfg;
  try {
    cfg = apply_overrides(load_config(opt.config_path), opt.overrides);
  } catch (const ConfigError& e) {
    err << "gista: config error: " << e.what() << '\n';
    return kConfigError;
  }

  const auto t0 = std::chrono::steady_clock::now();
  const ExperimentLog log = run_experiment(cfg);
  const ConvergenceSummary summary = summarize(log);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  try {
    write_run(opt.out_dir, log, summary, opt.config_path, secs);
  } catch (const std::exception& e) {
    err << "gista: cannot write outputs: " << e.what() << '\n';
    return kConfigError;
  }

  if (log.divergence) {
    err << "gista: diverged at iteration " << log.divergence->iteration << ", sample "
        << log.divergence->sample << ": " << log.divergence->message << '\n';
    return kDiverged;
  }
  return kOk;
}

int cmd_plotdata(const std::string& out_dir, std::ostream& err) {
  const fs::path dir(out_dir);
  try {
    if (!fs::is_regular_file(dir / "summary.csv") || !fs::is_regular_file(dir / iter_name(1))) {
      throw std::runtime_error("no completed run in " + out_dir);
    }
    const CsvTable summary = read_csv((dir / "summary.csv").string());
    const std::size_t n_iter = summary.rows();
    if (n_iter == 0) throw std::runtime_error("summary.csv has no iterations");
    for (std::size_t i = 1; i <= n_iter; ++i) {
      if (!fs::is_regular_file(dir / iter_name(i))) {
        throw std::runtime_error("missing " + iter_name(i));
      }
    }
    const std::string last_name = iter_name(n_iter);
    const CsvTable last = read_csv((dir / last_name).string());
    const IterationLog log = read_iteration_csv((dir / last_name).string(), n_iter);
    const bool gantry = last.has("y_x1") && last.has("y_x2") && last.has("y_y");
    const std::size_t n = log.size();

    if (gantry) {
      std::vector<double> x(n), y(n), ed(n), ex(n), ey(n);
      for (std::size_t k = 0; k < n; ++k) {
        const double y1 = log.axes[0].y[k], y2 = log.axes[1].y[k], yy = log.axes[2].y[k];
        x[k] = (y1 + y2) / 2.0;
        y[k] = yy;
        ed[k] = trajectory_error(x[k], y[k]);
        const TrackingErrors te = tracking_errors(y1, y2, yy, log.r[k]);
        ex[k] = te.e_x;
        ey[k] = te.e_y;
      }
      write_csv((dir / "fig_trajectory.csv").string(), {"t", "x", "y", "e_d"},
                {log.t, x, y, ed});
      write_csv((dir / "fig_tracking.csv").string(), {"t", "r", "e_x", "e_y"},
                {log.t, log.r, ex, ey});
    } else {
      const AxisTrace& a = log.axes.front();
      write_csv((dir / "fig_trajectory.csv").string(), {"t", "r", "y_" + a.name, "e_" + a.name},
                {log.t, log.r, a.y, a.e});
      write_csv((dir / "fig_tracking.csv").string(), {"t", "r", "e_" + a.name},
                {log.t, log.r, a.e});
    }

    std::vector<std::string> h{"t"};
    std::vector<std::span<const double>> c{log.t};
    for (const auto& a : log.axes) {
      h.push_back("s_" + a.name);
      c.emplace_back(a.s);
      h.push_back("u_" + a.name);
      c.emplace_back(a.u);
    }
    write_csv((dir / "fig_sliding.csv").string(), h, c);

    auto pick = [&](const std::vector<std::string>& prefixes, const std::string& file,
                    bool exact) {
      std::vector<std::string> header{"iteration"};
      std::vector<std::vector<double>> cols{column_or_throw(summary, "iteration", "summary.csv")};
      for (const auto& name : summary.header) {
        for (const auto& p : prefixes) {
          if (exact ? name == p : name.rfind(p, 0) == 0) {
            header.push_back(name);
            cols.push_back(summary.column(name));
            break;
          }
        }
      }
      std::vector<std::span<const double>> spans(cols.begin(), cols.end());
      write_csv((dir / file).string(), header, spans);
    };
    if (gantry) {
      pick({"rmse", "maxae", "rmse_ex", "rmse_ey", "maxae_ex", "maxae_ey"},
           "fig_convergence_e.csv", true);
    } else {
      pick({"rmse_e_", "maxae_e_"}, "fig_convergence_e.csv", false);
    }
    pick({"rmssv_", "maxasv_"}, "fig_convergence_s.csv", false);
  } catch (const std::exception& e) {
    err << "gista: plotdata: " << e.what() << '\n';
    return kConfigError;
  }
  return kOk;
}

}  // namespace gista::app
