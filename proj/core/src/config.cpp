#include "gaplab/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include <fmt/format.h>
#include <json.hpp>

#include "gaplab/error.hpp"

namespace gaplab {
namespace {

using nlohmann::json;

template <typename T>
T get_or(const json& object, const char* key, T fallback) {
  if (!object.contains(key)) return fallback;
  try {
    return object.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::invalid_parameter, fmt::format("config key '{}': {}", key, e.what()));
  }
}

template <typename T>
T get_required(const json& object, const char* key) {
  require(object.contains(key), ErrorKind::invalid_parameter,
          fmt::format("config: missing key '{}'", key));
  return get_or<T>(object, key, T{});
}

ModelParams explicit_params(ModelKind kind, const json& p) {
  switch (kind) {
    case ModelKind::pa: {
      const int m = get_or<int>(p, "m", 1);
      return PaParams{get_or<int>(p, "m_x", m), get_or<int>(p, "m_y", m)};
    }
    case ModelKind::copy: {
      const int m = get_or<int>(p, "m", 1);
      const double prob = get_or<double>(p, "p", 0.5);
      return CopyParams{get_or<int>(p, "m_x", m), get_or<int>(p, "m_y", m),
                        get_or<double>(p, "p_x", prob), get_or<double>(p, "p_y", prob)};
    }
    case ModelKind::alpha_pa:
      return AlphaPaParams{get_required<double>(p, "p1"), get_required<double>(p, "p2"),
                           get_required<double>(p, "alpha")};
    case ModelKind::empty:
      return EmptyModel{};
  }
  return EmptyModel{};
}

}  // namespace

void validate(const ExperimentConfig& config) {
  require(!config.sizes.empty(), ErrorKind::invalid_parameter, "config: sizes is empty");
  for (std::size_t i = 0; i < config.sizes.size(); ++i) {
    require(config.sizes[i] >= 2, ErrorKind::invalid_parameter, "config: sizes must be >= 2");
    require(i == 0 || config.sizes[i] > config.sizes[i - 1], ErrorKind::invalid_parameter,
            "config: sizes must be strictly increasing");
  }
  require(config.instances_per_size >= 1, ErrorKind::invalid_parameter,
          "config: instances_per_size must be >= 1");
  require(config.alpha_g > 0.0 && config.alpha_g < 1.0, ErrorKind::invalid_parameter,
          "config: alpha_g must lie in (0, 1)");
  require(config.s_t >= 1, ErrorKind::invalid_parameter, "config: s_t must be >= 1");
  require(config.solver.n_scan >= 2, ErrorKind::invalid_parameter, "config: n_scan must be >= 2");
  require(config.solver.tol > 0.0, ErrorKind::invalid_parameter, "config: solver tol must be > 0");
  require(kind_of(config.params) == config.model, ErrorKind::invalid_parameter,
          "config: params do not match the model");
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, PaParams> || std::is_same_v<T, CopyParams>) {
          validate(p, config.allow_unbalanced);
          const auto largest_m = static_cast<std::size_t>(std::max(p.m_x, p.m_y));
          require(config.sizes.front() >= largest_m + 1, ErrorKind::invalid_parameter,
                  "config: smallest size must exceed the seed graph");
        } else if constexpr (std::is_same_v<T, AlphaPaParams>) {
          validate(p);
        }
      },
      config.params);
}

ExperimentConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::invalid_parameter, fmt::format("config: {}", e.what()));
  }
  require(doc.is_object(), ErrorKind::invalid_parameter, "config: top level must be an object");

  ExperimentConfig config;
  config.model = parse_model_kind(get_required<std::string>(doc, "model"));
  config.allow_unbalanced = get_or<bool>(doc, "allow_unbalanced", false);

  const bool has_params = doc.contains("params");
  const bool has_targets = doc.contains("targets");
  require(!(has_params && has_targets), ErrorKind::invalid_parameter,
          "config: give either params or targets, not both");
  if (has_targets) {
    const json& t = doc.at("targets");
    ExponentTargets targets{get_required<double>(t, "gamma_in"),
                            get_required<double>(t, "gamma_out"),
                            get_or<double>(t, "mean_degree", 2.0)};
    config.targets = targets;
    config.params =
        params_for_targets(config.model, targets.gamma_in, targets.gamma_out, targets.mean_degree);
  } else {
    config.params = explicit_params(config.model, has_params ? doc.at("params") : json::object());
  }

  config.sizes = get_or<std::vector<std::size_t>>(doc, "sizes", config.sizes);
  config.instances_per_size = get_or<std::size_t>(doc, "instances_per_size", config.instances_per_size);
  config.master_seed = get_or<std::uint64_t>(doc, "master_seed", config.master_seed);
  config.alpha_g = get_or<double>(doc, "alpha_g", config.alpha_g);
  config.s_t = get_or<std::int64_t>(doc, "s_t", config.s_t);
  config.output_dir = get_or<std::string>(doc, "output_dir", config.output_dir.string());
  config.workers = get_or<std::size_t>(doc, "workers", config.workers);
  if (doc.contains("solver")) {
    const json& s = doc.at("solver");
    config.solver.mode = parse_solver_mode(get_or<std::string>(s, "mode", "auto"));
    config.solver.tol = get_or<double>(s, "tol", config.solver.tol);
    config.solver.n_scan = get_or<std::size_t>(s, "n_scan", config.solver.n_scan);
  }
  validate(config);
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::io, "cannot open config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::size_t effective_workers(const ExperimentConfig& config) {
  if (config.workers > 0) return config.workers;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

double estimate_cpu_seconds(const ExperimentConfig& config) {
  // About 40 dense eigensolves per instance at ~0.03 s for n = 512.
  double total = 0.0;
  for (std::size_t n : config.sizes) {
    const double scale = static_cast<double>(n) / 512.0;
    total += static_cast<double>(config.instances_per_size) * 40.0 * 0.03 * scale * scale * scale;
  }
  return total;
}

}  // namespace gaplab
