#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "manp/characterize.hpp"
#include "manp/field.hpp"
#include "manp/partition.hpp"
#include "manp/structure.hpp"

namespace manp {

enum class VerifyMode { exhaustive, sampled };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::exhaustive;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;
  /// Also compute every shape through reduce and shape_of_reduced and require
  /// agreement with the rank-sequence shape.
  bool cross_check = true;
  /// In sampled mode, draw from the nilpotent sampler instead of filtering
  /// uniform candidates.
  bool nilpotent_sampler = true;
};

enum class Verdict { equal, subset, mismatch };

struct VerifyReport {
  Partition mu;
  FieldSpec field;
  VerifyOptions options;
  std::vector<Partition> predicted;  ///< canonical order
  std::vector<Partition> observed;   ///< canonical order
  std::uint64_t candidates = 0;
  std::uint64_t nilpotent = 0;
  Verdict verdict = Verdict::equal;
  std::string details;
};

std::string to_string(Verdict v);
std::string to_string(VerifyMode m);

/// Brute-force check of enumerate_shapes(mu) over a finite field. Throws
/// PreconditionViolated for the rationals and BudgetExceeded when exhaustive
/// enumeration is too large.
VerifyReport cmd_verify(const Partition& mu, const FieldSpec& field, const VerifyOptions& options);

struct RoundtripResult {
  bool ok = false;
  std::string stage;    ///< failing stage, or "done"
  std::string message;
  std::optional<Certificate> certificate;
  /// Exit status: 0 ok, 1 incompatible, 3 any later stage failed.
  int exit_code() const noexcept;
};

/// compatible -> witness -> validate -> reduce(witness A) -> shape_of_reduced == nu.
RoundtripResult cmd_roundtrip(const Partition& mu, const Partition& nu, const FieldSpec& field = FieldSpec::gf(2));

}  // namespace manp
