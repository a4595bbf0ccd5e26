#include "gaplab/params.hpp"

#include <cmath>
#include <type_traits>

#include <fmt/format.h>

#include "gaplab/error.hpp"
#include "gaplab/random.hpp"

namespace gaplab {
namespace {

int edges_per_component(double mean_degree, std::string_view model) {
  const double half = mean_degree / 2.0;
  const double rounded = std::round(half);
  require(std::isfinite(half) && rounded >= 1.0 && std::abs(half - rounded) < 1e-9,
          ErrorKind::no_solution,
          fmt::format("{}: mean degree {} must be a positive even integer (m_x = m_y = mean / 2)",
                      model, mean_degree));
  return static_cast<int>(rounded);
}

}  // namespace

std::string_view to_string(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::pa: return "pa";
    case ModelKind::copy: return "copy";
    case ModelKind::alpha_pa: return "alpha_pa";
    case ModelKind::empty: return "empty";
  }
  return "pa";
}

ModelKind parse_model_kind(std::string_view text) {
  if (text == "pa") return ModelKind::pa;
  if (text == "copy") return ModelKind::copy;
  if (text == "alpha_pa") return ModelKind::alpha_pa;
  if (text == "empty") return ModelKind::empty;
  throw Error(ErrorKind::invalid_parameter,
              fmt::format("unknown model '{}' (expected pa, copy, alpha_pa or empty)", text));
}

ModelKind kind_of(const ModelParams& params) noexcept {
  return std::visit(
      [](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, PaParams>) return ModelKind::pa;
        else if constexpr (std::is_same_v<T, CopyParams>) return ModelKind::copy;
        else if constexpr (std::is_same_v<T, AlphaPaParams>) return ModelKind::alpha_pa;
        else return ModelKind::empty;
      },
      params);
}

ModelParams params_for_targets(ModelKind kind, double gamma_in, double gamma_out,
                               double mean_degree) {
  require(std::isfinite(gamma_in) && std::isfinite(gamma_out) && std::isfinite(mean_degree),
          ErrorKind::invalid_parameter, "params_for_targets: non-finite target");
  switch (kind) {
    case ModelKind::pa: {
      require(std::abs(gamma_in - 3.0) < 1e-9 && std::abs(gamma_out - 3.0) < 1e-9,
              ErrorKind::unsupported_target,
              fmt::format("pa: only gamma_in = gamma_out = 3 is reachable (asked {}, {})", gamma_in,
                          gamma_out));
      const int m = edges_per_component(mean_degree, "pa");
      return PaParams{m, m};
    }
    case ModelKind::copy: {
      require(gamma_in > 2.0 && gamma_out > 2.0, ErrorKind::no_solution,
              "copy: exponents must exceed 2");
      const int m = edges_per_component(mean_degree, "copy");
      return CopyParams{m, m, (gamma_in - 2.0) / (gamma_in - 1.0),
                        (gamma_out - 2.0) / (gamma_out - 1.0)};
    }
    case ModelKind::alpha_pa: {
      require(gamma_in > 1.0 && gamma_out > 1.0 && mean_degree >= 1.0, ErrorKind::no_solution,
              "alpha_pa: need gamma > 1 and mean degree >= 1");
      // gamma_in (1 - p2) = 2 + c - p2 and gamma_out (1 - p1) = 2 + c - p1 with
      // c = (p1 + p2) alpha give p2 = (gamma_in - 2 - c) / (gamma_in - 1) and the
      // mirrored p1; the vertex-step rate then fixes c.
      const double rate = 1.0 / mean_degree;
      const double inv_in = 1.0 / (gamma_in - 1.0);
      const double inv_out = 1.0 / (gamma_out - 1.0);
      const double c = ((gamma_in - 2.0) * inv_in + (gamma_out - 2.0) * inv_out - rate) /
                       (inv_in + inv_out);
      const AlphaPaParams params{(gamma_out - 2.0 - c) * inv_out, (gamma_in - 2.0 - c) * inv_in,
                                 c / rate};
      require(params.p1 > 0.0 && params.p2 > 0.0 && params.p1 < 1.0 && params.p2 < 1.0 &&
                  params.alpha >= 0.0,
              ErrorKind::no_solution,
              fmt::format("alpha_pa: targets ({}, {}, {}) give p1={}, p2={}, alpha={}", gamma_in,
                          gamma_out, mean_degree, params.p1, params.p2, params.alpha));
      return params;
    }
    case ModelKind::empty:
      return EmptyModel{};
  }
  throw Error(ErrorKind::invalid_parameter, "params_for_targets: unknown model");
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t n, std::uint64_t instance_id) {
  std::uint64_t h = mix64(master_seed);
  h = mix64(h ^ n);
  h = mix64(h ^ (instance_id * 0xd1b54a32d192ed03ULL));
  return h;
}

}  // namespace gaplab
