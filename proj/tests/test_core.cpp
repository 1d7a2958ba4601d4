#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mcmgr/error.hpp"
#include "mcmgr/kernels.hpp"
#include "mcmgr/linalg.hpp"
#include "mcmgr/parse.hpp"

using namespace mcmgr;

namespace {

Mat random_mat(std::mt19937_64& rng, std::size_t r, std::size_t c, std::uint32_t p, unsigned zero_percent = 0) {
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng() % 100 < zero_percent ? 0 : static_cast<Elem>(rng() % p);
  }
  return m;
}

// Rank by fraction-free elimination on 64-bit integers mod p, written
// independently of the library's rref.
std::size_t oracle_rank(const Mat& m, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  }
  auto powmod = [p](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (b %= p; e; e >>= 1, b = b * b % p) {
      if (e & 1) r = r * b % p;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][col] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    const std::uint64_t inv = powmod(a[rank][col], p - 2);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      const std::uint64_t f = a[i][col] * inv % p;
      for (std::size_t j = col; j < m.cols(); ++j) a[i][j] = (a[i][j] + (p - f) * a[rank][j]) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("field arithmetic") {
  const PrimeField f;
  CHECK(f.characteristic() == 32003);
  CHECK(f.from_int(-1) == 32002);
  CHECK(f.to_signed(32002) == -1);
  CHECK(f.to_signed(16001) == 16001);
  std::mt19937_64 rng(1);
  for (int k = 0; k < 200; ++k) {
    const Elem a = 1 + static_cast<Elem>(rng() % 32002);
    CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.add(a, f.neg(a)) == 0);
    CHECK(f.pow(a, 32002) == 1);
  }
  const PrimeField big(2147483629);
  CHECK(big.mul(big.inv(123456789), 123456789) == 1);
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(32001));
  CHECK_THROWS_AS(PrimeField(4), InputError);
  CHECK_THROWS_AS(PrimeField(std::uint64_t{1} << 31), InputError);
}

TEST_CASE("SIMD kernels match the scalar reference bit for bit") {
  std::vector<const kernels::KernelSet*> variants;
  if (auto* k = kernels::avx2_kernels()) variants.push_back(k);
  if (auto* k = kernels::neon_kernels()) variants.push_back(k);
  const auto& ref = kernels::scalar_kernels();
  std::mt19937_64 rng(7);
  for (const std::uint32_t p : {2u, 3u, 251u, 32003u, 32749u, 65521u, 2147483629u}) {
    for (const std::size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 257u}) {
      std::vector<Elem> x(n), y(n);
      for (auto& v : x) v = static_cast<Elem>(rng() % p);
      for (auto& v : y) v = static_cast<Elem>(rng() % p);
      const Elem c = static_cast<Elem>(rng() % p);
      std::uint64_t dot = 0;
      for (std::size_t i = 0; i < n; ++i) dot = (dot + std::uint64_t{x[i]} * y[i]) % p;
      CHECK(ref.dot(x.data(), y.data(), n, p) == dot);
      for (const auto* k : variants) {
        CAPTURE(k->name);
        CAPTURE(p);
        CAPTURE(n);
        auto a = y, b = y;
        ref.axpy(a.data(), x.data(), c, n, p);
        k->axpy(b.data(), x.data(), c, n, p);
        CHECK(a == b);
        ref.scale(a.data(), c, n, p);
        k->scale(b.data(), c, n, p);
        CHECK(a == b);
        CHECK(k->dot(x.data(), y.data(), n, p) == dot);
      }
    }
  }
}

TEST_CASE("rref agrees across kernel variants") {
  const PrimeField f;
  std::mt19937_64 rng(3);
  const Mat m = random_mat(rng, 40, 70, f.characteristic(), 60);
  const auto& before = kernels::active_kernels();
  kernels::set_active_kernels(kernels::scalar_kernels());
  const auto scalar = rref(m, f);
  kernels::set_active_kernels(before);
  const auto active = rref(m, f);
  CHECK(scalar.reduced == active.reduced);
  CHECK(scalar.pivots == active.pivots);
}

TEST_CASE("rank matches an independent elimination") {
  std::mt19937_64 rng(11);
  for (const std::uint32_t p : {2u, 5u, 32003u}) {
    const PrimeField f(p);
    for (int k = 0; k < 30; ++k) {
      const std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
      const Mat m = random_mat(rng, r, c, p, 50);
      CHECK(rank(m, f) == oracle_rank(m, p));
    }
  }
}

TEST_CASE("kernel and subspace identities") {
  const PrimeField f(101);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 20; ++k) {
    const std::size_t r = 1 + rng() % 8, c = 1 + rng() % 10;
    const Mat m = random_mat(rng, r, c, 101, 40);
    const Subspace ker = kernel(m, f);
    CHECK(ker.dim() + rank(m, f) == c);
    for (std::size_t i = 0; i < ker.dim(); ++i) {
      for (auto v : apply(m, ker.basis().row_span(i), f)) CHECK(v == 0);
    }
    const Subspace a = Subspace::span(f, random_mat(rng, 1 + rng() % 5, c, 101));
    const Subspace b = Subspace::span(f, random_mat(rng, 1 + rng() % 5, c, 101));
    const Subspace s = sum(a, b), i = intersect(a, b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(s.contains(a));
    CHECK(a.contains(i));
    CHECK(b.contains(i));
    CHECK(quotient_dim(s, a) == s.dim() - a.dim());
    // map: F^c -> F^r; preimage of the image contains the subspace and the kernel.
    const Subspace pre = preimage(m, image(m, a));
    CHECK(pre.contains(a));
    CHECK(pre.contains(ker));
    CHECK(pre.dim() == sum(a, ker).dim());
  }
}

TEST_CASE("polynomial text round trips") {
  const PrimeField f;
  const std::vector<std::string> vars{"x", "y", "z"};
  std::mt19937_64 rng(9);
  for (int k = 0; k < 50; ++k) {
    Poly p(f, 3);
    for (int t = 0; t < 5; ++t) {
      Exponent e(3);
      for (auto& d : e) d = static_cast<Exponent::value_type>(rng() % 4);
      p.add_term(e, static_cast<Elem>(rng() % f.characteristic()));
    }
    CHECK(parse_poly(p.to_string(vars), vars, f) == p);
  }
  CHECK(parse_poly("(x + y)^2 - 2*x*y", vars, f).to_string(vars) == "x^2 + y^2");
  CHECK(parse_poly("x^2*(x - y)", vars, f).to_string(vars) == "x^3 - x^2*y");
  CHECK(parse_poly("-(x - y)", vars, f) == parse_poly("y - x", vars, f));
  CHECK(parse_poly("32004*x", vars, f) == parse_poly("x", vars, f));
}

TEST_CASE("parse errors carry the column") {
  const PrimeField f;
  const std::vector<std::string> vars{"x", "y"};
  try {
    parse_poly("x + q", vars, f);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(parse_poly("x +", vars, f), ParseError);
  CHECK_THROWS_AS(parse_poly("(x", vars, f), ParseError);
  CHECK_THROWS_AS(parse_poly("x/0", vars, f), ParseError);
}

TEST_CASE("determinant and exact division") {
  const PrimeField f;
  const std::vector<std::string> v{"x", "y"};
  const auto m = testutil::matrix({{"y^2", "0"}, {"x", "y"}}, v, f);
  CHECK(determinant(m).to_string(v) == "y^3");
  const auto n = testutil::matrix({{"x", "y"}, {"y", "x + y"}}, v, f);
  CHECK(determinant(n).to_string(v) == "x^2 + x*y - y^2");
  const Poly a = parse_poly("x^2 - y^2", v, f);
  CHECK(divides(parse_poly("x - y", v, f), a));
  CHECK_FALSE(divides(parse_poly("x - 2*y", v, f), a));
  CHECK(divides(parse_poly("x + y", v, f), parse_poly("x^3 + x^2*y", v, f)));
}
