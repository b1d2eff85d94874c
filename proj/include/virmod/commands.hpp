#pragma once

// One function per CLI subcommand. Each returns the full report; printing
// and file output happen in the CLI layer.

#include <cstdint>
#include <optional>

#include "virmod/exact.hpp"
#include "virmod/report.hpp"
#include "virmod/weights.hpp"

namespace virmod::commands {

ReportEnvelope bad_primes(int ell);
ReportEnvelope classify(int ell, std::uint32_t p);

enum class BSetMode { Both, BruteForce, Intervals };
ReportEnvelope bset(int ell, BSetMode mode);
ReportEnvelope gset(int ell, bool corrected);
ReportEnvelope dmatrix(int ell);

enum class VerifyTarget { PropH, PropX, Gko, GIdentity, Table1 };
/// Runs the check for every level in [ell_lo, ell_hi].
ReportEnvelope verify(VerifyTarget target, int ell_lo, int ell_hi);

ReportEnvelope gram(const BigRational& c, const BigRational& h, int level, std::optional<std::uint32_t> p);
ReportEnvelope probe(const MinimalLabel& label, std::uint32_t p, int max_level);

/// Every reference Example, the l=5 table, Table 1 and the engine checks in
/// one deterministic report.
ReportEnvelope reproduce();

}  // namespace virmod::commands
