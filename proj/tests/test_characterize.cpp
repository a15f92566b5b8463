#include <doctest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "manp/characterize.hpp"
#include "manp/errors.hpp"

using namespace manp;

namespace {

using ShapeSet = std::set<Partition, CanonicalOrder>;

/// Shapes of all nilpotent A with A J_mu = J_mu A = 0 over GF(2), by brute force.
ShapeSet brute_force_shapes(const Partition& mu) {
  const auto n = static_cast<std::size_t>(mu.total());
  const auto j = jordan_matrix(mu, Gf2{});
  ShapeSet out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * n)); ++bits) {
    Matrix<Gf2> a(Gf2{}, n, n);
    for (std::size_t i = 0; i < n * n; ++i)
      if ((bits >> i) & 1U) a.set(i / n, i % n, 1);
    if (!(a * j).is_zero() || !(j * a).is_zero() || !is_nilpotent(a)) continue;
    out.insert(nilpotent_shape(a));
  }
  return out;
}

template <class F>
void check_witness(const WitnessPair<F>& w, const Partition& mu, const Partition& nu) {
  REQUIRE(w.mu == mu);
  REQUIRE(w.nu == nu);
  REQUIRE(w.b == jordan_matrix(mu, w.a.field()));
  REQUIRE((w.a * w.b).is_zero());
  REQUIRE((w.b * w.a).is_zero());
  REQUIRE(nilpotent_shape(w.a) == nu);
  REQUIRE(nilpotent_shape(w.b) == mu);
}

}  // namespace

TEST_CASE("compatible examples") {
  const auto a = compatible(Partition{1, 1, 1, 1}, Partition{4});
  REQUIRE(a);
  CHECK(a->lambda == Partition{4});
  CHECK(a->epsilon == std::vector<int>{0});
  CHECK(a->c == 0);
  CHECK(a->d == 0);

  CHECK_FALSE(compatible(Partition{2, 2}, Partition{3, 1}));

  const auto g = compatible(fixtures::golden_mu(), Partition{5, 3, 3, 3, 1, 1});
  REQUIRE(g);
  CHECK(g->lambda == Partition{3, 2, 2, 1});
  CHECK(g->epsilon == std::vector<int>{2, 1, 1, 2});
  CHECK(g->c == 0);
  CHECK(g->d == 2);
  CHECK(g->epsilon_sum() == 6);

  const auto b = compatible(Partition{2, 1, 1}, Partition{4});
  REQUIRE(b);
  CHECK(b->lambda == Partition{2});
  CHECK(b->epsilon == std::vector<int>{2});
  CHECK(b->c == 0);
  CHECK(b->d == 0);

  CHECK_THROWS_AS(compatible(Partition{2, 1}, Partition{2}), InvalidArgument);
}

TEST_CASE("enumerate_shapes examples") {
  const auto s32 = enumerate_shapes(Partition{3, 2});
  CHECK(s32 == std::vector<Partition>{Partition{2, 2, 1}, Partition{2, 1, 1, 1}, Partition{1, 1, 1, 1, 1}});
  CHECK(enumerate_shapes(Partition{1, 1, 1}) == enumerate_partitions(3));
  CHECK(enumerate_shapes(Partition{2, 1, 1}) == enumerate_partitions(4));
  CHECK(enumerate_shapes(Partition{}) == std::vector<Partition>{Partition{}});
}

TEST_CASE("enumerate_shapes matches GF(2) brute force, n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (const Partition& mu : enumerate_partitions(n)) {
      const auto predicted = enumerate_shapes(mu);
      CHECK(ShapeSet(predicted.begin(), predicted.end()) == brute_force_shapes(mu));
    }
}

TEST_CASE("compatible, search and enumeration agree, n <= 9") {
  for (int n = 0; n <= 9; ++n) {
    const auto all = enumerate_partitions(n);
    for (const Partition& mu : all) {
      const auto shapes = enumerate_shapes(mu);
      const ShapeSet allowed(shapes.begin(), shapes.end());
      // Best certificate per shape under the tie-break, straight from the generator.
      std::map<Partition, Certificate, CanonicalOrder> best;
      for_each_certificate(mu, [&](const Certificate& cert, const Partition& nu) {
        REQUIRE(cert.valid_for(mu, nu));
        auto it = best.find(nu);
        if (it == best.end()) {
          best.emplace(nu, cert);
          return;
        }
        const Certificate& cur = it->second;
        const bool better = cert.lambda != cur.lambda ? cert.lambda < cur.lambda
                            : cert.epsilon_sum() != cur.epsilon_sum() ? cert.epsilon_sum() < cur.epsilon_sum()
                                                                       : cert.c > cur.c;
        if (better) it->second = cert;
      });
      const auto split = split_core(mu);
      for (const Partition& nu : all) {
        const auto fast = compatible(mu, nu);
        const auto slow = compatible_by_search(mu, nu);
        REQUIRE(fast.has_value() == (allowed.count(nu) == 1));
        REQUIRE(slow.has_value() == fast.has_value());
        if (!fast) continue;
        REQUIRE(fast->valid_for(mu, nu));
        // epsilon may permute within equal lambda parts; the ranking keys must match.
        const Certificate& expected = best.at(nu);
        REQUIRE(slow->lambda == expected.lambda);
        REQUIRE(slow->epsilon_sum() == expected.epsilon_sum());
        REQUIRE(slow->c == expected.c);
        REQUIRE(slow->d == expected.d);
        // Fast paths use their own certificate form; the search result is canonical.
        if (split.core_blocks() > 0 && split.ones > 0) REQUIRE(*fast == *slow);
      }
    }
  }
}

TEST_CASE("symmetry, n <= 7") {
  for (int n = 0; n <= 7; ++n) {
    const auto all = enumerate_partitions(n);
    for (const Partition& mu : all)
      for (const Partition& nu : all) REQUIRE(compatible(mu, nu).has_value() == compatible(nu, mu).has_value());
  }
}

TEST_CASE("shape sets for B = 0 and for mu without 1-parts") {
  for (int n = 1; n <= 10; ++n) {
    CHECK(enumerate_shapes(ord(std::vector<int>(static_cast<std::size_t>(n), 1))) == enumerate_partitions(n));
    for (const Partition& mu : enumerate_partitions(n)) {
      if (mu.multiplicity(1) != 0) continue;
      std::vector<Partition> expected;
      for (int i = static_cast<int>(mu.length()); i >= 0; --i)
        if (2 * i <= n) {
          std::vector<int> parts(static_cast<std::size_t>(i), 2);
          parts.insert(parts.end(), static_cast<std::size_t>(n - 2 * i), 1);
          expected.push_back(ord(parts));
        }
      CHECK(enumerate_shapes(mu) == expected);
    }
  }
}

TEST_CASE("certificate checks") {
  Certificate cert{Partition{3, 2, 2, 1}, {2, 1, 1, 2}, 0, 2};
  CHECK(cert.shape() == Partition{5, 3, 3, 3, 1, 1});
  CHECK(cert.valid_for(fixtures::golden_mu(), Partition{5, 3, 3, 3, 1, 1}));
  cert.c = 1;
  CHECK_FALSE(cert.valid_for(fixtures::golden_mu(), cert.shape()));
  Certificate bad{Partition{2}, {3}, 0, 0};
  CHECK_FALSE(bad.valid_for(Partition{2, 1, 1}, Partition{5}));
}

TEST_CASE("witness examples") {
  const auto w = witness(Partition{2, 1, 1}, Partition{4}, Gf2{});
  check_witness(w, Partition{2, 1, 1}, Partition{4});
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      const bool one = (r == 0 && c == 2) || (r == 3 && c == 1) || (r == 2 && c == 3);
      CHECK(w.a.at(r, c) == (one ? 1 : 0));
    }

  for (int n = 2; n <= 7; ++n) {
    std::vector<int> tail(static_cast<std::size_t>(n - 2), 1);
    tail.insert(tail.begin(), 2);
    const auto corner = witness(Partition{n}, ord(tail), PrimeField(3));
    const auto un = static_cast<std::size_t>(n);
    for (std::size_t r = 0; r < un; ++r)
      for (std::size_t c = 0; c < un; ++c) CHECK(corner.a.at(r, c) == ((r == 0 && c == un - 1) ? 1u : 0u));
  }

  const auto two = witness(Partition{2, 2}, Partition{2, 2}, Rationals{});
  check_witness(two, Partition{2, 2}, Partition{2, 2});
  CHECK(two.a.at(0, 1) == 1);
  CHECK(two.a.at(2, 3) == 1);

  CHECK_THROWS_AS(witness(Partition{2, 2}, Partition{3, 1}, Gf2{}), Incompatible);
  CHECK_THROWS_AS(witness_from_certificate(Partition{2, 1, 1}, Certificate{Partition{2}, {2}, 1, 0}, Gf2{}),
                  InvalidArgument);

  auto broken = w;
  broken.a.set(1, 0, 1);
  CHECK_THROWS_AS(validate_witness(broken), ConstructionMismatch);
}

TEST_CASE("witnesses for every compatible pair, n <= 6") {
  int pairs = 0;
  for (int n = 1; n <= 6; ++n)
    for (const Partition& mu : enumerate_partitions(n))
      for (const Partition& nu : enumerate_shapes(mu)) {
        check_witness(witness(mu, nu, Gf2{}), mu, nu);
        check_witness(witness(mu, nu, PrimeField(5)), mu, nu);
        check_witness(witness(mu, nu, Rationals{}), mu, nu);
        // Every certificate builds, not only the preferred one.
        for_each_certificate(mu, [&](const Certificate& cert, const Partition& shape) {
          if (shape == nu) check_witness(witness_from_certificate(mu, cert, Gf2{}), mu, nu);
        });
        ++pairs;
      }
  CHECK(pairs > 100);
}

TEST_CASE("enumerate_vnab") {
  ShapeSet restricted;
  for (const auto& [mu, nu] : enumerate_vnab(4, 2, 2))
    if (mu == Partition{2, 1, 1}) restricted.insert(nu);
  CHECK(restricted == ShapeSet{Partition{1, 1, 1, 1}, Partition{2, 1, 1}, Partition{2, 2}});

  std::size_t compatible_pairs = 0;
  for (const Partition& mu : enumerate_partitions(4))
    for (const Partition& nu : enumerate_partitions(4)) compatible_pairs += compatible(mu, nu) ? 1 : 0;
  CHECK(enumerate_vnab(4, 4, 4).size() == compatible_pairs);

  for (int n = 1; n <= 6; ++n)
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (const auto& [mu, nu] : enumerate_vnab(n, a, b)) {
          REQUIRE(mu.largest() <= a);
          REQUIRE(nu.largest() <= b);
          const auto w = witness(mu, nu, Gf2{});
          REQUIRE(power(w.b, static_cast<unsigned>(a)).is_zero());
          REQUIRE(power(w.a, static_cast<unsigned>(b)).is_zero());
        }
  CHECK_THROWS_AS(enumerate_vnab(4, 0, 2), InvalidArgument);
}

TEST_CASE("component pairs") {
  const auto c43 = component_pairs(4, 3);
  const std::pair<Partition, Partition> example{Partition{2, 1, 1}, Partition{4}};
  CHECK(std::find(c43.begin(), c43.end(), example) != c43.end());
  for (int n = 2; n <= 7; ++n) {
    std::vector<int> ones(static_cast<std::size_t>(n), 1);
    const std::pair<Partition, Partition> extreme{ord(ones), Partition{n}};
    const auto top = component_pairs(n, n - 1);
    CHECK(std::find(top.begin(), top.end(), extreme) != top.end());
    for (int j = 1; j < n; ++j) {
      const auto pairs = component_pairs(n, j);
      CHECK(pairs == component_pairs_by_rank(n, j));
      for (const auto& [mu, nu] : pairs) {
        REQUIRE(compatible(mu, nu));
        REQUIRE(n - static_cast<int>(mu.length()) <= n - j);
        REQUIRE(n - static_cast<int>(nu.length()) <= j);
      }
    }
  }
  CHECK_THROWS_AS(component_pairs(4, 0), InvalidArgument);
  CHECK_THROWS_AS(component_pairs(4, 4), InvalidArgument);
}
