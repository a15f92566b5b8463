#include <doctest.h>

#include "fixtures.hpp"
#include "manp/errors.hpp"
#include "manp/exact_matrix.hpp"
#include "manp/json_io.hpp"
#include "manp/linalg.hpp"

using namespace manp;
using fixtures::Lcg;
using fixtures::random_matrix;

namespace {

template <class F>
Matrix<F> random_invertible(const F& field, std::size_t n, Lcg& rng) {
  while (true) {
    Matrix<F> q = random_matrix(field, n, n, rng);
    if (inverse(q)) return q;
  }
}

/// Q N Q^-1 with N strictly upper triangular.
template <class F>
Matrix<F> random_nilpotent(const F& field, std::size_t n, Lcg& rng) {
  Matrix<F> strict(field, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) strict.set(r, c, field.element(rng.below(field.order())));
  const Matrix<F> q = random_invertible(field, n, rng);
  return q * strict * *inverse(q);
}

/// Small-integer rational matrices reuse the finite-field generator shape.
Matrix<Rationals> random_rational(std::size_t rows, std::size_t cols, Lcg& rng) {
  Matrix<Rationals> m(Rationals{}, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng.below(3) != 0) m.set(r, c, mpq_class(static_cast<long>(rng.below(7)) - 3, 1 + static_cast<unsigned long>(rng.below(3))));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      mpq_class x = m.at(r, c);
      x.canonicalize();
      m.set(r, c, x);
    }
  return m;
}

Matrix<Rationals> random_rational_nilpotent(std::size_t n, Lcg& rng) {
  Matrix<Rationals> strict(Rationals{}, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) strict.set(r, c, mpq_class(static_cast<long>(rng.below(5)) - 2));
  while (true) {
    Matrix<Rationals> q = random_rational(n, n, rng);
    if (auto q_inv = inverse(q)) return q * strict * *q_inv;
  }
}

Matrix<PrimeField> as_prime2(const Matrix<Gf2>& m) {
  Matrix<PrimeField> out(PrimeField(2), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, m.at(r, c));
  return out;
}

template <class F>
void check_rank_profile(const Matrix<F>& m) {
  const Partition shape = nilpotent_shape(m);
  REQUIRE(shape.total() == static_cast<int>(m.rows()));
  Matrix<F> p = Matrix<F>::identity(m.field(), m.rows());
  for (int i = 0; i <= shape.largest() + 1; ++i) {
    int expected = 0;
    for (int part : shape) expected += std::max(part - i, 0);
    REQUIRE(rank(p) == static_cast<std::size_t>(expected));
    p = p * m;
  }
}

}  // namespace

TEST_CASE("field arithmetic") {
  const PrimeField f7(7);
  CHECK(f7.mul(f7.inv(3), 3) == 1);
  CHECK(f7.from_integer(-1) == 6);
  CHECK(f7.neg(0) == 0);
  CHECK_THROWS_AS(PrimeField(6), InvalidArgument);
  CHECK_THROWS_AS(f7.inv(0), InvalidArgument);
  CHECK(FieldSpec::parse("gf:2").to_string() == "gf2");
  CHECK(FieldSpec::parse("gf:101").modulus == 101);
  CHECK(FieldSpec::parse("rational").kind == FieldSpec::Kind::rational);
  CHECK_THROWS_AS(FieldSpec::parse("gf:9"), InvalidArgument);
  CHECK_THROWS_AS(FieldSpec::parse("real"), InvalidArgument);
  const Rationals q;
  CHECK(q.to_string(q.parse("4/6")) == "2/3");
  CHECK_THROWS_AS(q.parse("1/0"), InvalidArgument);
  for (std::uint32_t a = 1; a < 101; ++a) CHECK(PrimeField(101).mul(a, PrimeField(101).inv(a)) == 1);
}

TEST_CASE("multiply examples") {
  const Matrix<Gf2> j2 = jordan_matrix(Partition{2}, Gf2{});
  CHECK((j2 * j2).is_zero());
  Lcg rng(1);
  const auto m = random_matrix(PrimeField(5), 4, 3, rng);
  CHECK(Matrix<PrimeField>::identity(PrimeField(5), 4) * m == m);
  CHECK_THROWS_AS(m * m, InvalidArgument);
  CHECK_THROWS_AS(Matrix<PrimeField>(PrimeField(3), 2, 2) * Matrix<PrimeField>(PrimeField(5), 2, 2), InvalidArgument);

  // A12 * A21 of the golden matrix: one nonzero, at (7, 8) 1-based.
  const auto a = fixtures::golden_matrix(Gf2{});
  const auto prod = a.block(0, 8, 8, 8) * a.block(8, 0, 8, 8);
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) CHECK(prod.at(r, c) == ((r == 6 && c == 7) ? 1 : 0));
}

TEST_CASE("rank examples") {
  CHECK(rank(Matrix<Gf2>(Gf2{}, 3, 3)) == 0);
  CHECK(rank(jordan_matrix(Partition{4}, PrimeField(3))) == 3);
  CHECK(rank(fixtures::golden_matrix(Gf2{})) == 10);
  CHECK(rank(fixtures::golden_matrix(Rationals{})) == 10);
}

TEST_CASE("nilpotent_shape examples") {
  CHECK(nilpotent_shape(jordan_matrix(Partition{3, 2}, Gf2{})) == Partition{3, 2});
  CHECK(nilpotent_shape(Matrix<PrimeField>(PrimeField(3), 4, 4)) == Partition{1, 1, 1, 1});
  CHECK(nilpotent_shape(fixtures::golden_matrix(Gf2{})) == Partition{5, 3, 3, 3, 1, 1});
  CHECK(nilpotent_shape(fixtures::golden_matrix(PrimeField(7))) == Partition{5, 3, 3, 3, 1, 1});
  CHECK_THROWS_AS(nilpotent_shape(Matrix<Gf2>::identity(Gf2{}, 3)), NotNilpotent);
  CHECK_FALSE(is_nilpotent(Matrix<Rationals>::identity(Rationals{}, 2)));
}

TEST_CASE("jordan_matrix examples and round trip for n <= 8") {
  const auto j21 = jordan_matrix(Partition{2, 1}, PrimeField(3));
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) CHECK(j21.at(r, c) == ((r == 0 && c == 1) ? 1u : 0u));
  const auto j3 = jordan_matrix(Partition{3}, Gf2{});
  CHECK(j3.at(0, 1) == 1);
  CHECK(j3.at(1, 2) == 1);
  CHECK(rank(j3) == 2);
  for (int n = 0; n <= 8; ++n)
    for (const Partition& p : enumerate_partitions(n)) {
      REQUIRE(nilpotent_shape(jordan_matrix(p, Gf2{})) == p);
      REQUIRE(nilpotent_shape(jordan_matrix(p, PrimeField(3))) == p);
      REQUIRE(nilpotent_shape(jordan_matrix(p, Rationals{})) == p);
    }
}

TEST_CASE("jordanize_nilpotent") {
  SUBCASE("Jordan input gives P = I") {
    for (const Partition& p : enumerate_partitions(6)) {
      const auto jz = jordanize_nilpotent(jordan_matrix(p, PrimeField(3)));
      CHECK(jz.shape == p);
      CHECK(jz.transform == Matrix<PrimeField>::identity(PrimeField(3), 6));
    }
  }
  SUBCASE("transpose of J_(4) gives the reversal permutation") {
    const auto m = jordan_matrix(Partition{4}, Rationals{}).transpose();
    const auto jz = jordanize_nilpotent(m);
    CHECK(jz.shape == Partition{4});
    Matrix<Rationals> reversal(Rationals{}, 4, 4);
    for (std::size_t i = 0; i < 4; ++i) reversal.set(i, 3 - i, mpq_class(1));
    CHECK(jz.transform == reversal);
    CHECK(jz.inverse * m * jz.transform == jordan_matrix(Partition{4}, Rationals{}));
  }
  SUBCASE("random nilpotent matrices") {
    Lcg rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const auto m3 = random_nilpotent(PrimeField(3), 6, rng);
      const auto jz = jordanize_nilpotent(m3);
      REQUIRE(jz.shape == nilpotent_shape(m3));
      REQUIRE(jz.inverse * m3 * jz.transform == jordan_matrix(jz.shape, PrimeField(3)));
      const auto m2 = random_nilpotent(Gf2{}, 1 + rng.below(8), rng);
      const auto jz2 = jordanize_nilpotent(m2);
      REQUIRE(jz2.transform * jz2.inverse == Matrix<Gf2>::identity(Gf2{}, m2.rows()));
      REQUIRE(jz2.inverse * m2 * jz2.transform == jordan_matrix(jz2.shape, Gf2{}));
    }
    for (int trial = 0; trial < 40; ++trial) {
      const auto mq = random_rational_nilpotent(5, rng);
      const auto jz = jordanize_nilpotent(mq);
      REQUIRE(jz.inverse * mq * jz.transform == jordan_matrix(jz.shape, Rationals{}));
    }
  }
  CHECK_THROWS_AS(jordanize_nilpotent(Matrix<Gf2>::identity(Gf2{}, 2)), NotNilpotent);
}

TEST_CASE("rank plus nullity equals columns on 1000 random matrices per field") {
  Lcg rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t r = 1 + rng.below(7), c = 1 + rng.below(7);
    const auto g2 = random_matrix(Gf2{}, r, c, rng);
    REQUIRE(rank(g2) + nullspace(g2).size() == c);
    // The bit-packed and the generic elimination must agree.
    REQUIRE(rank(g2) == rank(as_prime2(g2)));
    const auto g3 = random_matrix(PrimeField(3), r, c, rng);
    REQUIRE(rank(g3) + nullspace(g3).size() == c);
    const auto q = random_rational(r, c, rng);
    const auto kernel = nullspace(q);
    REQUIRE(rank(q) + kernel.size() == c);
    for (const auto& v : kernel)
      for (const auto& x : mul_vec(q, v)) REQUIRE(sgn(x) == 0);
  }
}

TEST_CASE("rank of powers follows the shape for random nilpotent matrices") {
  Lcg rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(8);
    check_rank_profile(random_nilpotent(Gf2{}, n, rng));
    check_rank_profile(random_nilpotent(PrimeField(3), n, rng));
    if (trial % 10 == 0) check_rank_profile(random_rational_nilpotent(n, rng));
  }
}

TEST_CASE("Gf2 fast paths agree with the generic code") {
  Lcg rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng.below(9);
    const auto a = rng.below(2) ? random_nilpotent(Gf2{}, n, rng) : random_matrix(Gf2{}, n, n, rng);
    const auto b = random_matrix(Gf2{}, n, n, rng);
    REQUIRE(is_nilpotent(a) == is_nilpotent(as_prime2(a)));
    REQUIRE(as_prime2(a * b) == as_prime2(a) * as_prime2(b));
  }
  // Wider than one word.
  const auto big = jordan_matrix(Partition{70, 3}, Gf2{});
  CHECK(is_nilpotent(big));
  CHECK(rank(big) == 71);
  CHECK(nilpotent_shape(big) == Partition{70, 3});
}

TEST_CASE("inverse and echelon basis") {
  CHECK_FALSE(inverse(jordan_matrix(Partition{2}, Gf2{})).has_value());
  Lcg rng(9);
  const auto q = random_invertible(PrimeField(5), 5, rng);
  CHECK(q * *inverse(q) == Matrix<PrimeField>::identity(PrimeField(5), 5));
  EchelonBasis<PrimeField> basis(PrimeField(5), 3);
  CHECK(basis.insert({1, 2, 3}));
  CHECK(basis.insert({0, 1, 1}));
  CHECK_FALSE(basis.insert({1, 3, 4}));
  CHECK(basis.contains({2, 4, 1}));
  CHECK(basis.size() == 2);
}

TEST_CASE("type-erased matrices and JSON round trip") {
  const ExactMatrix j = jordan_matrix(Partition{3, 1}, FieldSpec::gf(5));
  CHECK(field_of(j).to_string() == "gf:5");
  CHECK(rank(j) == 2);
  CHECK(nilpotent_shape(j) == Partition{3, 1});
  CHECK(rows_of(multiply(j, j)) == 4);
  CHECK_THROWS_AS(multiply(j, zero_matrix(FieldSpec::gf(2), 4, 4)), InvalidArgument);

  Lcg rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const ExactMatrix g2 = random_matrix(Gf2{}, 3, 4, rng);
    const ExactMatrix g7 = random_matrix(PrimeField(7), 4, 2, rng);
    const ExactMatrix q = random_rational(3, 3, rng);
    for (const auto& m : {g2, g7, q}) {
      const auto doc = matrix_to_json(m);
      REQUIRE(matrix_from_json(doc) == m);
      REQUIRE(matrix_to_json(matrix_from_json(nlohmann::json::parse(doc.dump()))) == doc);
    }
  }
  const auto doc = nlohmann::json::parse(R"({"field": "rational", "rows": [[1, "2/4"], ["-3", 0]]})");
  const auto back = matrix_to_json(matrix_from_json(doc));
  CHECK(back["rows"][0][1] == "1/2");
  CHECK(back["rows"][1][0] == -3);
  const auto reduced = matrix_to_json(matrix_from_json(nlohmann::json::parse(R"({"field": "gf:3", "rows": [[4, -1]]})")));
  CHECK(reduced["rows"][0][0] == 1);
  CHECK(reduced["rows"][0][1] == 2);
  CHECK(matrix_to_json(matrix_from_json(nlohmann::json::parse(R"({"field": "gf:2", "rows": [[1]]})")))["field"] == "gf2");
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"field": "gf2", "rows": [[1, 0], [1]]})")), InvalidArgument);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"field": "gf2", "rows": [[0.5]]})")), InvalidArgument);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"rows": []})")), InvalidArgument);
}
