#pragma once

#include <span>
#include <string>

#include "pfq/verify.hpp"

namespace pfq {

/// Stable plain-text rendering: one record per grid point plus a summary
/// block per grid. Identical reports render to identical bytes.
std::string render_text(std::span<const VerificationReport> reports);

/// JSON rendering with per-point records (identity, coords, class, residual)
/// and per-grid summaries.
std::string render_json(std::span<const VerificationReport> reports);

/// CSV rendering: identity,coords,class,residual.
std::string render_csv(std::span<const VerificationReport> reports);

std::string render_report(std::span<const VerificationReport> reports,
                          const std::string& format);

} // namespace pfq
