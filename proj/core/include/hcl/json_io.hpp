#pragma once

#include <cstdint>

#include <nlohmann/json.hpp>

#include "hcl/bounds.hpp"
#include "hcl/series.hpp"
#include "hcl/verify.hpp"

namespace hcl {

/// {"order": N, "re": [...], "im": [...]}
nlohmann::json to_json(const TruncatedSeries& s);

/// Inverse of to_json. Throws std::invalid_argument on a malformed record
/// (missing keys, length mismatch with order).
TruncatedSeries series_from_json(const nlohmann::json& j);

/// {"alpha": ..., "beta": ..., "delta": ...}
nlohmann::json to_json(const ClassParams& p);
ClassParams params_from_json(const nlohmann::json& j);

/// Series record with a {"params": ..., "seed": ...} header.
nlohmann::json sampled_member_to_json(const TruncatedSeries& h, const ClassParams& p,
                                      std::uint64_t seed);

/// One JSON-lines record for a (member, theorem) pair.
nlohmann::json to_json(const VerificationReport& r, const ClassParams& p, int member);

/// {"params": ..., "lower": ..., "upper": ..., "at": ..., "tol": ...}
nlohmann::json to_json(const BoundEnvelope& e, const ClassParams& p, double tol);

nlohmann::json to_json(const BlochResult& b, const ClassParams& p, double tol);

}  // namespace hcl
