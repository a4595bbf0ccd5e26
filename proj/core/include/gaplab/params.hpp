#pragma once

#include <cstdint>
#include <string_view>

#include "gaplab/netgen.hpp"

namespace gaplab {

enum class ModelKind { pa, copy, alpha_pa, empty };

std::string_view to_string(ModelKind kind) noexcept;
ModelKind parse_model_kind(std::string_view text);
ModelKind kind_of(const ModelParams& params) noexcept;

/// Inverts the closed-form exponent relations. mean_degree is the mean in-
/// (equivalently out-) degree per vertex.
///
///   pa:       only gamma_in = gamma_out = 3; m_x = m_y = mean_degree / 2
///   copy:     p = (gamma - 2) / (gamma - 1) per component; m = mean_degree / 2
///   alpha_pa: p1 + p2 = 1 / mean_degree together with both gamma relations,
///             which is linear in (p1, p2, (p1 + p2) alpha)
///
/// Throws unsupported-target (pa with gamma != 3) or no-solution.
ModelParams params_for_targets(ModelKind kind, double gamma_in, double gamma_out,
                               double mean_degree);

/// Seed for one ensemble member. Chained splitmix64 finalizers over
/// (master_seed, n, instance_id); injective in n for a fixed master seed and
/// in instance_id for fixed (master_seed, n). The mixing constants are part of
/// the record format and must not change.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t n, std::uint64_t instance_id);

}  // namespace gaplab
