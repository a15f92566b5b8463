#include "manp/characterize.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "manp/errors.hpp"
#include "manp/linalg.hpp"
#include "manp/structure.hpp"

namespace manp {

int Certificate::epsilon_sum() const noexcept { return std::accumulate(epsilon.begin(), epsilon.end(), 0); }

Partition Certificate::shape() const {
  std::vector<int> parts;
  for (std::size_t i = 0; i < lambda.length(); ++i) parts.push_back(lambda[i] + epsilon[i]);
  parts.insert(parts.end(), static_cast<std::size_t>(c), 2);
  parts.insert(parts.end(), static_cast<std::size_t>(d), 1);
  return ord(parts);
}

bool Certificate::valid_for(const Partition& mu, const Partition& nu) const {
  const CoreSplit split = split_core(mu);
  const int k = split.core_blocks();
  if (lambda.total() != split.ones || epsilon.size() != lambda.length() || c < 0 || d < 0) return false;
  for (int e : epsilon)
    if (e < 0 || e > 2) return false;
  if (2 * c > 2 * k - epsilon_sum()) return false;
  if (2 * c + d + lambda.total() + epsilon_sum() != nu.total()) return false;
  return shape() == nu;
}

namespace {

void require_same_size(const Partition& mu, const Partition& nu) {
  if (mu.total() != nu.total())
    throw InvalidArgument("partitions of different sizes: |mu| = " + std::to_string(mu.total()) +
                          ", |nu| = " + std::to_string(nu.total()));
}

/// Sorted matching: epsilon_i = target_i - lambda_i with both sorted descending.
std::vector<int> match_epsilon(const std::vector<int>& target, const Partition& lambda) {
  std::vector<int> eps;
  for (std::size_t i = 0; i < lambda.length(); ++i) eps.push_back(target[i] - lambda[i]);
  return eps;
}

/// Better in the documented tie-break: smaller lambda, then smaller sum, then larger c.
bool preferred(const Certificate& x, const Certificate& y) {
  if (x.lambda != y.lambda) return x.lambda < y.lambda;
  if (x.epsilon_sum() != y.epsilon_sum()) return x.epsilon_sum() < y.epsilon_sum();
  return x.c > y.c;
}

}  // namespace

std::optional<Certificate> compatible_by_search(const Partition& mu, const Partition& nu) {
  require_same_size(mu, nu);
  if (mu.total() > kMaxSearchSize)
    throw InvalidArgument("compatibility search supports n <= " + std::to_string(kMaxSearchSize));
  const CoreSplit split = split_core(mu);
  const int k = split.core_blocks();
  const int m = split.ones;
  const int twos = nu.multiplicity(2);
  const int ones = nu.multiplicity(1);

  std::optional<Certificate> best;
  for (int c = 0; c <= std::min(k, twos); ++c) {
    for (int d = 0; d <= ones; ++d) {
      // nu' = nu without c twos and d ones, as (value, multiplicity) runs, descending.
      std::vector<int> rest;
      int drop2 = c, drop1 = d;
      for (int part : nu) {
        if (part == 2 && drop2 > 0) {
          --drop2;
          continue;
        }
        if (part == 1 && drop1 > 0) {
          --drop1;
          continue;
        }
        rest.push_back(part);
      }
      const int sum = std::accumulate(rest.begin(), rest.end(), 0) - m;
      if (sum < 0 || sum > 2 * k - 2 * c) continue;
      std::vector<std::pair<int, int>> runs;
      for (int part : rest) {
        if (!runs.empty() && runs.back().first == part)
          ++runs.back().second;
        else
          runs.emplace_back(part, 1);
      }
      // Choose how many parts of each run drop by 2 and by 1.
      std::vector<int> lowered;
      std::function<void(std::size_t, int)> visit = [&](std::size_t run, int used) {
        if (run == runs.size()) {
          if (used != sum) return;
          std::vector<int> parts = lowered;
          std::sort(parts.begin(), parts.end(), std::greater<>());
          Certificate cert{Partition(parts), {}, c, d};
          cert.epsilon = match_epsilon(rest, cert.lambda);
          if (!best || preferred(cert, *best)) best = std::move(cert);
          return;
        }
        const auto [value, count] = runs[run];
        const int max2 = value >= 3 ? count : 0;
        for (int n2 = 0; n2 <= max2; ++n2) {
          const int max1 = value >= 2 ? count - n2 : 0;
          for (int n1 = 0; n1 <= max1; ++n1) {
            const int add = n1 + 2 * n2;
            if (used + add > sum) break;
            const std::size_t mark = lowered.size();
            lowered.insert(lowered.end(), static_cast<std::size_t>(count - n1 - n2), value);
            lowered.insert(lowered.end(), static_cast<std::size_t>(n1), value - 1);
            lowered.insert(lowered.end(), static_cast<std::size_t>(n2), value - 2);
            visit(run + 1, used + add);
            lowered.resize(mark);
          }
        }
      };
      visit(0, 0);
    }
  }
  return best;
}

std::optional<Certificate> compatible(const Partition& mu, const Partition& nu) {
  require_same_size(mu, nu);
  const CoreSplit split = split_core(mu);
  const int n = mu.total();
  if (split.core_blocks() == 0) {
    // B = 0: every shape occurs, lambda = nu.
    return Certificate{nu, std::vector<int>(nu.length(), 0), 0, 0};
  }
  if (split.ones == 0) {
    // Only (2^i, 1^(n-2i)) with i <= k.
    const int i = nu.multiplicity(2);
    if (nu.largest() > 2 || i > split.core_blocks()) return std::nullopt;
    return Certificate{Partition{}, {}, i, n - 2 * i};
  }
  return compatible_by_search(mu, nu);
}

void for_each_certificate(const Partition& mu,
                          const std::function<void(const Certificate&, const Partition&)>& fn) {
  const CoreSplit split = split_core(mu);
  const int k = split.core_blocks();
  const int n = mu.total();
  for (const Partition& lambda : enumerate_partitions(split.ones)) {
    Certificate cert{lambda, std::vector<int>(lambda.length(), 0), 0, 0};
    std::function<void(std::size_t, int)> assign = [&](std::size_t i, int used) {
      if (i == lambda.length()) {
        for (int c = 0; 2 * c <= 2 * k - used; ++c) {
          const int d = n - 2 * c - lambda.total() - used;
          if (d < 0) break;
          cert.c = c;
          cert.d = d;
          fn(cert, cert.shape());
        }
        return;
      }
      for (int e = 0; e <= 2 && used + e <= 2 * k; ++e) {
        cert.epsilon[i] = e;
        assign(i + 1, used + e);
      }
      cert.epsilon[i] = 0;
    };
    assign(0, 0);
  }
}

std::vector<Partition> enumerate_shapes(const Partition& mu) {
  std::set<Partition, CanonicalOrder> shapes;
  for_each_certificate(mu, [&](const Certificate&, const Partition& nu) { shapes.insert(nu); });
  return {shapes.begin(), shapes.end()};
}

template <class F>
void validate_witness(const WitnessPair<F>& w) {
  auto fail = [&](const std::string& what) {
    throw ConstructionMismatch("witness for mu = (" + w.mu.to_string() + "), nu = (" + w.nu.to_string() +
                               "): " + what);
  };
  const auto n = static_cast<std::size_t>(w.mu.total());
  if (w.a.rows() != n || w.a.cols() != n || w.b.rows() != n || w.b.cols() != n) fail("wrong dimensions");
  if (!(w.a * w.b).is_zero()) fail("AB != 0");
  if (!(w.b * w.a).is_zero()) fail("BA != 0");
  if (!is_nilpotent(w.a)) fail("A is not nilpotent");
  if (!is_nilpotent(w.b)) fail("B is not nilpotent");
  if (nilpotent_shape(w.b) != w.mu) fail("sh B = (" + nilpotent_shape(w.b).to_string() + ")");
  if (nilpotent_shape(w.a) != w.nu) fail("sh A = (" + nilpotent_shape(w.a).to_string() + ")");
}

template <class F>
WitnessPair<F> witness_from_certificate(const Partition& mu, const Certificate& cert, const F& field) {
  const Partition nu = cert.shape();
  if (!cert.valid_for(mu, nu)) throw InvalidArgument("certificate does not satisfy its constraints for mu");
  const CoreLayout layout(mu);
  const auto k = static_cast<int>(layout.k);
  const int c = cert.c;
  const Partition& lambda = cert.lambda;
  const std::size_t l = lambda.length();
  const auto starts = block_starts(lambda, layout.band());

  WitnessPair<F> w{Matrix<F>(field, layout.n, layout.n), jordan_matrix(mu, field), mu, nu};
  w.a.set_block(layout.band(), layout.band(), jordan_matrix(lambda, field));

  auto core_index = [&](int block) {
    if (block < 0 || block >= k) throw ConstructionMismatch("witness: chain counter ran past the core blocks");
    return static_cast<std::size_t>(block);
  };
  // later_twos[i] = number of j > i (0-based) with epsilon_j = 2
  std::vector<int> later_twos(l + 1, 0);
  for (std::size_t i = l; i-- > 0;) later_twos[i] = later_twos[i + 1] + (cert.epsilon[i] == 2 ? 1 : 0);

  int t = 0, s = 0;
  for (std::size_t i = 0; i < l; ++i) {
    const int e = cert.epsilon[i];
    const int t_next = (e == 2 || (e == 1 && t + 1 + later_twos[i + 1] <= k - c)) ? t + 1 : t;
    const int s_next = (e == 2 || (e == 1 && t_next == t)) ? s + 1 : s;
    const std::size_t last = starts[i] + static_cast<std::size_t>(lambda[i]) - 1;
    if (t_next > t) w.a.set(last, layout.last_col[core_index(t_next - 1)], field.one());
    if (s_next > s) w.a.set(layout.first_row[core_index(s_next - 1)], starts[i], field.one());
    t = t_next;
    s = s_next;
  }
  for (int i = 1; i <= c; ++i) {
    const auto block = static_cast<std::size_t>(k - i);
    w.a.set(layout.first_row[block], layout.last_col[block], field.one());
  }
  validate_witness(w);
  return w;
}

template <class F>
WitnessPair<F> witness(const Partition& mu, const Partition& nu, const F& field) {
  const auto cert = compatible(mu, nu);
  if (!cert) throw Incompatible("no nilpotent A with AB = BA = 0 has shape (" + nu.to_string() +
                                ") when sh B = (" + mu.to_string() + ")");
  return witness_from_certificate(mu, *cert, field);
}

PairSet enumerate_vnab(int n, int a, int b) {
  if (n < 0 || a < 1 || b < 1) throw InvalidArgument("enumerate_vnab: need n >= 0 and a, b >= 1");
  PairSet out;
  for (const Partition& mu : enumerate_partitions(n)) {
    if (mu.largest() > a) continue;
    for (const Partition& nu : enumerate_shapes(mu))
      if (nu.largest() <= b) out.emplace_back(mu, nu);
  }
  return out;
}

namespace {

void require_component_index(int n, int j) {
  if (j < 1 || j > n - 1)
    throw InvalidArgument("component index j = " + std::to_string(j) + " outside 1.." + std::to_string(n - 1));
}

bool pair_less(const std::pair<Partition, Partition>& x, const std::pair<Partition, Partition>& y) {
  const CanonicalOrder before;
  if (x.first != y.first) return before(x.first, y.first);
  return before(x.second, y.second);
}

}  // namespace

PairSet component_pairs_by_inequality(int n, int j) {
  require_component_index(n, j);
  std::set<std::pair<Partition, Partition>, decltype(&pair_less)> pairs(&pair_less);
  for (const Partition& mu : enumerate_partitions(n)) {
    const CoreSplit split = split_core(mu);
    const int k_plus_m = split.core_blocks() + split.ones;
    for_each_certificate(mu, [&](const Certificate& cert, const Partition& nu) {
      const int lower = n - static_cast<int>(cert.lambda.length()) - cert.c - cert.d;
      if (lower <= j && j <= k_plus_m) pairs.emplace(mu, nu);
    });
  }
  return {pairs.begin(), pairs.end()};
}

PairSet component_pairs_by_rank(int n, int j) {
  require_component_index(n, j);
  PairSet out;
  const auto all = enumerate_partitions(n);
  for (const Partition& mu : all) {
    const int rank_a = n - static_cast<int>(mu.length());
    if (rank_a > n - j) continue;
    for (const Partition& nu : all) {
      const int rank_b = n - static_cast<int>(nu.length());
      if (rank_b <= j && compatible(mu, nu)) out.emplace_back(mu, nu);
    }
  }
  return out;
}

PairSet component_pairs(int n, int j) {
  PairSet by_inequality = component_pairs_by_inequality(n, j);
  PairSet by_rank = component_pairs_by_rank(n, j);
  if (by_inequality != by_rank)
    throw DiscrepancyError("component_pairs(n = " + std::to_string(n) + ", j = " + std::to_string(j) +
                           "): inequality form gives " + std::to_string(by_inequality.size()) +
                           " pairs, rank form gives " + std::to_string(by_rank.size()));
  return by_inequality;
}

#define MANP_INSTANTIATE_WITNESS(F)                                                              \
  template void validate_witness(const WitnessPair<F>&);                                         \
  template WitnessPair<F> witness_from_certificate(const Partition&, const Certificate&, const F&); \
  template WitnessPair<F> witness(const Partition&, const Partition&, const F&);

MANP_INSTANTIATE_WITNESS(Gf2)
MANP_INSTANTIATE_WITNESS(PrimeField)
MANP_INSTANTIATE_WITNESS(Rationals)

}  // namespace manp
