#include "gista/app/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <charconv>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "gista/app/csv.hpp"
#include "gista/errors.hpp"

namespace gista::app {

namespace {

double to_double(const std::string& where, const std::string& text) {
  double v = 0.0;
  const char* b = text.data();
  const char* e = b + text.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e) {
    throw ConfigError(where + ": '" + text + "' is not a number");
  }
  return v;
}

std::uint64_t to_uint(const std::string& where, const std::string& text) {
  std::uint64_t v = 0;
  const char* b = text.data();
  const char* e = b + text.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e) {
    throw ConfigError(where + ": '" + text + "' is not a non-negative integer");
  }
  return v;
}

bool to_bool(const std::string& where, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw ConfigError(where + ": '" + text + "' is not a boolean");
}

// One INI section; every key must be consumed or the section is rejected.
class Section {
 public:
  Section(std::string name, const ptree* node) : name_(std::move(name)) {
    if (!node) return;
    for (const auto& [k, v] : *node) {
      if (!v.empty()) throw ConfigError("[" + name_ + "] " + k + ": nested keys not allowed");
      if (!values_.emplace(k, v.data()).second) {
        throw ConfigError("[" + name_ + "] " + k + ": duplicate key");
      }
    }
  }

  void num(const char* key, double& out) {
    if (auto s = take(key)) out = to_double(where(key), *s);
  }
  void flag(const char* key, bool& out) {
    if (auto s = take(key)) out = to_bool(where(key), *s);
  }
  void uint(const char* key, std::uint64_t& out) {
    if (auto s = take(key)) out = to_uint(where(key), *s);
  }
  std::optional<std::string> take(const char* key) {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    std::string v = it->second;
    values_.erase(it);
    return v;
  }
  void finish() const {
    if (!values_.empty()) {
      throw ConfigError("[" + name_ + "] unknown key '" + values_.begin()->first + "'");
    }
  }

 private:
  std::string where(const char* key) const { return "[" + name_ + "] " + key; }

  std::string name_;
  std::map<std::string, std::string> values_;
};

const ptree* find_section(const ptree& tree, const std::string& name) {
  const ptree* found = nullptr;
  for (const auto& [k, v] : tree) {
    if (k != name) continue;
    if (found) throw ConfigError("section [" + name + "] appears twice");
    found = &v;
  }
  return found;
}

void read_disturbance(Section& s, DisturbanceSpec& d) {
  s.num("constant", d.constant);
  s.num("coulomb", d.coulomb_amp);
  s.num("viscous", d.viscous_extra);
  s.num("sin_amp", d.sin_amp);
  s.num("sin_freq", d.sin_freq);
  s.num("sin_phase", d.sin_phase);
}

struct ControllerFields {
  double lambda = 5.0, k1 = 0.1, k2 = 0.1, kc = 0.1, q = 1.5, beta = 0.1, epsilon = 1e-6;
  bool carry_v = false;
};

void read_controller(Section& s, ControllerFields& c) {
  s.num("lambda", c.lambda);
  s.num("k1", c.k1);
  s.num("k2", c.k2);
  s.num("kc", c.kc);
  s.num("q", c.q);
  s.num("beta", c.beta);
  s.num("epsilon", c.epsilon);
  s.flag("carry_v", c.carry_v);
}

AxisConfig build_axis(const std::string& name, const ControllerFields& c) {
  try {
    return AxisConfig{name, SlidingConfig(c.lambda), StaGains(c.k1, c.k2, c.kc),
                      IlcParams(c.q, c.beta, c.epsilon), c.carry_v};
  } catch (const std::invalid_argument& e) {
    throw ConfigError("[controller." + name + "] " + e.what());
  }
}

}  // namespace

ptree read_ini(const std::string& path) {
  ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(path, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(e.what());
  }
  return tree;
}

SimConfig parse_config(const ptree& tree) {
  SimConfig cfg;

  std::set<std::string> known{"sim", "reference", "controller", "gantry", "axis",
                              "disturbance", "initial", "sweep"};
  Section sim("sim", find_section(tree, "sim"));
  if (auto p = sim.take("plant")) {
    if (*p == "gantry") {
      cfg.plant = PlantKind::gantry;
    } else if (*p == "axis") {
      cfg.plant = PlantKind::axis;
    } else {
      throw ConfigError("[sim] plant: expected 'gantry' or 'axis', got '" + *p + "'");
    }
  }
  const auto names = axis_names(cfg.plant);
  for (const auto& n : names) {
    known.insert("controller." + n);
    known.insert("disturbance." + n);
  }
  for (const auto& [k, v] : tree) {
    if (!known.count(k)) throw ConfigError("unknown section [" + k + "]");
    if (v.empty() && !v.data().empty()) throw ConfigError("key '" + k + "' outside a section");
  }

  std::uint64_t iterations = cfg.n_iterations;
  double dt = 1e-3;
  sim.uint("iterations", iterations);
  sim.num("dt", dt);
  sim.flag("measured_output", cfg.measured_output);
  sim.num("phase_jitter", cfg.phase_jitter);
  sim.uint("seed", cfg.seed);
  sim.finish();
  cfg.n_iterations = iterations;

  Section ref("reference", find_section(tree, "reference"));
  double amp = 0.1, ts = 0.2, te = 1.2, horizon = 2.0;
  ref.num("amplitude", amp);
  ref.num("t_start", ts);
  ref.num("t_end", te);
  ref.num("horizon", horizon);
  ref.finish();
  cfg.reference = SCurveProfile(amp, ts, te, horizon, dt);

  ControllerFields common;
  Section ctl("controller", find_section(tree, "controller"));
  read_controller(ctl, common);
  ctl.finish();
  cfg.controllers.clear();
  for (const auto& n : names) {
    ControllerFields f = common;
    Section s("controller." + n, find_section(tree, "controller." + n));
    read_controller(s, f);
    s.finish();
    cfg.controllers.push_back(build_axis(n, f));
  }

  DisturbanceSpec base = cfg.plant == PlantKind::gantry ? kDefaultCarriageDisturbance
                                                        : DisturbanceSpec{};
  Section dist("disturbance", find_section(tree, "disturbance"));
  read_disturbance(dist, base);
  dist.finish();
  std::vector<DisturbanceSpec> per_axis;
  for (const auto& n : names) {
    DisturbanceSpec d = base;
    Section s("disturbance." + n, find_section(tree, "disturbance." + n));
    read_disturbance(s, d);
    s.finish();
    per_axis.push_back(d);
  }

  Section initial("initial", find_section(tree, "initial"));
  if (cfg.plant == PlantKind::gantry) {
    cfg.gantry_disturbance = {per_axis[0], per_axis[1], per_axis[2]};
    Section g("gantry", find_section(tree, "gantry"));
    GantryParams& p = cfg.gantry;
    g.num("m_e", p.m_e);
    g.num("m_c", p.m_c);
    g.num("m_1", p.m_1);
    g.num("m_2", p.m_2);
    g.num("K_v", p.K_v);
    g.num("Gamma_1", p.Gamma_1);
    g.num("Gamma_2", p.Gamma_2);
    g.num("Gamma_e", p.Gamma_e);
    g.num("K_f", p.K_f);
    g.num("L_arm", p.L_arm);
    g.num("cos_min", p.cos_min);
    g.flag("theta_frozen_zero", p.theta_frozen_zero);
    if (auto c = g.take("coupling")) {
      if (*c == "restoring") {
        p.coupling = CouplingSign::restoring;
      } else if (*c == "literal") {
        p.coupling = CouplingSign::literal;
      } else {
        throw ConfigError("[gantry] coupling: expected 'restoring' or 'literal'");
      }
    }
    g.finish();
    if (find_section(tree, "axis")) throw ConfigError("[axis] given for a gantry plant");
    GantryState& s0 = cfg.gantry_initial;
    initial.num("y1", s0.y1);
    initial.num("y2", s0.y2);
    initial.num("yy", s0.yy);
    initial.num("y1_dot", s0.y1_dot);
    initial.num("y2_dot", s0.y2_dot);
    initial.num("yy_dot", s0.yy_dot);
  } else {
    Section a("axis", find_section(tree, "axis"));
    AxisPlantParams& p = cfg.axis;
    a.num("M", p.M);
    a.num("K_f", p.K_f);
    a.num("Gamma", p.Gamma);
    a.num("w_amp", p.w_amp);
    a.num("w_freq", p.w_freq);
    a.num("w_phase", p.w_phase);
    a.finish();
    p.extra = per_axis[0];
    if (find_section(tree, "gantry")) throw ConfigError("[gantry] given for an axis plant");
    initial.num("x1", cfg.axis_initial.x1);
    initial.num("x2", cfg.axis_initial.x2);
  }
  initial.finish();

  cfg.validate();
  return cfg;
}

SimConfig load_config(const std::string& path) { return parse_config(read_ini(path)); }

std::string to_ini(const SimConfig& cfg) {
  std::ostringstream o;
  auto kv = [&](const char* k, double v) { o << k << " = " << format_double(v) << '\n'; };
  auto kb = [&](const char* k, bool v) { o << k << " = " << (v ? "true" : "false") << '\n'; };

  o << "[sim]\nplant = " << (cfg.plant == PlantKind::gantry ? "gantry" : "axis") << '\n';
  o << "iterations = " << cfg.n_iterations << '\n';
  kv("dt", cfg.dt());
  kb("measured_output", cfg.measured_output);
  kv("phase_jitter", cfg.phase_jitter);
  o << "seed = " << cfg.seed << "\n\n";

  o << "[reference]\n";
  kv("amplitude", cfg.reference.amplitude());
  kv("t_start", cfg.reference.t_start());
  kv("t_end", cfg.reference.t_end());
  kv("horizon", cfg.reference.horizon());

  for (const auto& c : cfg.controllers) {
    o << "\n[controller." << c.name << "]\n";
    kv("lambda", c.sliding.lambda());
    kv("k1", c.gains.k1());
    kv("k2", c.gains.k2());
    kv("kc", c.gains.kc());
    kv("q", c.ilc.q());
    kv("beta", c.ilc.beta());
    kv("epsilon", c.ilc.epsilon());
    kb("carry_v", c.carry_v);
  }

  auto dist = [&](const std::string& name, const DisturbanceSpec& d) {
    o << "\n[disturbance." << name << "]\n";
    kv("constant", d.constant);
    kv("coulomb", d.coulomb_amp);
    kv("viscous", d.viscous_extra);
    kv("sin_amp", d.sin_amp);
    kv("sin_freq", d.sin_freq);
    kv("sin_phase", d.sin_phase);
  };

  if (cfg.plant == PlantKind::gantry) {
    const GantryParams& p = cfg.gantry;
    o << "\n[gantry]\n";
    kv("m_e", p.m_e);
    kv("m_c", p.m_c);
    kv("m_1", p.m_1);
    kv("m_2", p.m_2);
    kv("K_v", p.K_v);
    kv("Gamma_1", p.Gamma_1);
    kv("Gamma_2", p.Gamma_2);
    kv("Gamma_e", p.Gamma_e);
    kv("K_f", p.K_f);
    kv("L_arm", p.L_arm);
    kv("cos_min", p.cos_min);
    o << "coupling = " << (p.coupling == CouplingSign::restoring ? "restoring" : "literal")
      << '\n';
    kb("theta_frozen_zero", p.theta_frozen_zero);
    dist("x1", cfg.gantry_disturbance.d1);
    dist("x2", cfg.gantry_disturbance.d2);
    dist("y", cfg.gantry_disturbance.dy);
    const GantryState& s = cfg.gantry_initial;
    o << "\n[initial]\n";
    kv("y1", s.y1);
    kv("y2", s.y2);
    kv("yy", s.yy);
    kv("y1_dot", s.y1_dot);
    kv("y2_dot", s.y2_dot);
    kv("yy_dot", s.yy_dot);
  } else {
    const AxisPlantParams& p = cfg.axis;
    o << "\n[axis]\n";
    kv("M", p.M);
    kv("K_f", p.K_f);
    kv("Gamma", p.Gamma);
    kv("w_amp", p.w_amp);
    kv("w_freq", p.w_freq);
    kv("w_phase", p.w_phase);
    dist("x", p.extra);
    o << "\n[initial]\n";
    kv("x1", cfg.axis_initial.x1);
    kv("x2", cfg.axis_initial.x2);
  }
  return o.str();
}

SimConfig apply_overrides(SimConfig cfg, const Overrides& o) {
  if (o.iterations) {
    if (*o.iterations < 1) throw ConfigError("--iterations must be at least 1");
    cfg.n_iterations = *o.iterations;
  }
  if (o.dt) {
    const SCurveProfile& r = cfg.reference;
    cfg.reference = SCurveProfile(r.amplitude(), r.t_start(), r.t_end(), r.horizon(), *o.dt);
  }
  cfg.validate();
  return cfg;
}

}  // namespace gista::app
