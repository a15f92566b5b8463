#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "manp/matrix.hpp"
#include "manp/partition.hpp"

namespace manp {

/// nu = ord(lambda_1 + epsilon_1, ..., lambda_l + epsilon_l, 2^c, 1^d) with
/// lambda a partition of the number of 1-parts of mu, epsilon_i in {0, 1, 2}
/// and 2c + sum(epsilon) <= 2k for the k parts of mu that are >= 2.
struct Certificate {
  Partition lambda;
  std::vector<int> epsilon;  ///< aligned with lambda
  int c = 0;
  int d = 0;

  int epsilon_sum() const noexcept;
  /// The partition this certificate produces.
  Partition shape() const;
  /// Checks every constraint against mu and the target nu.
  bool valid_for(const Partition& mu, const Partition& nu) const;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Returns a certificate iff some nilpotent A with A J_mu = J_mu A = 0 has shape
/// nu. Among all certificates the one chosen has the lexicographically smallest
/// lambda, then the smallest sum of epsilon, then the largest c.
/// Throws InvalidArgument if |mu| != |nu|.
std::optional<Certificate> compatible(const Partition& mu, const Partition& nu);

/// Same contract, always through the general search (no shortcuts for
/// mu = (1^n) or mu without 1-parts). Supports n <= kMaxSearchSize.
std::optional<Certificate> compatible_by_search(const Partition& mu, const Partition& nu);
inline constexpr int kMaxSearchSize = 40;

/// Calls fn(certificate, nu) for every certificate of mu, generated from
/// lambda, epsilon and c. A shape may be reached by several certificates.
void for_each_certificate(const Partition& mu, const std::function<void(const Certificate&, const Partition&)>& fn);

/// Every nu compatible with mu, each once, in canonical order.
std::vector<Partition> enumerate_shapes(const Partition& mu);

/// b = J_mu and a nilpotent with ab = ba = 0; nilpotent_shape(b) == mu and
/// nilpotent_shape(a) == nu.
template <class F>
struct WitnessPair {
  Matrix<F> a;
  Matrix<F> b;
  Partition mu;
  Partition nu;
};

/// Builds the 0/1 witness for (mu, nu). Throws Incompatible when there is no
/// certificate and ConstructionMismatch when the built pair fails validation.
template <class F>
WitnessPair<F> witness(const Partition& mu, const Partition& nu, const F& field);

/// The construction for a given certificate, validated.
template <class F>
WitnessPair<F> witness_from_certificate(const Partition& mu, const Certificate& cert, const F& field);

/// Recomputes every WitnessPair invariant; throws ConstructionMismatch on failure.
template <class F>
void validate_witness(const WitnessPair<F>& w);

using PairSet = std::vector<std::pair<Partition, Partition>>;

/// Pairs (mu, nu) = (sh A, sh B) with mu_1 <= a, nu_1 <= b, compatible.
/// Ordered by mu, then nu, both canonical.
PairSet enumerate_vnab(int n, int a, int b);

/// Pairs (mu, nu) = (sh A, sh B) in the component C_j, 1 <= j <= n - 1.
/// Computes both implementations below and throws DiscrepancyError if they differ.
PairSet component_pairs(int n, int j);
/// Generated from certificates with n - l - c - d <= j <= k + m.
PairSet component_pairs_by_inequality(int n, int j);
/// Compatible pairs with rk A <= n - j and rk B <= j, rk = n - (number of parts).
PairSet component_pairs_by_rank(int n, int j);

}  // namespace manp
