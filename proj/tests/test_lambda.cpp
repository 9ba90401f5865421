#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dvnug/error.hpp"
#include "dvnug/lambda.hpp"

using namespace dvnug;

namespace {

ErrorCode code_of(std::int64_t N, std::int64_t r) {
  try {
    LambdaParams::validate(N, r);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("parameter validation reports the first violated invariant") {
  CHECK(code_of(0, 1) == ErrorCode::NonPositive);
  CHECK(code_of(-3, 2) == ErrorCode::NonPositive);
  CHECK(code_of(2, 2) == ErrorCode::NonOdd);
  CHECK(code_of(2, 5) == ErrorCode::OutOfRange);
  CHECK(code_of(2, -1) == ErrorCode::OutOfRange);
  CHECK(code_of(3, 3) == ErrorCode::NotCoprime);
  CHECK(code_of(1, 3) == ErrorCode::OutOfRange);

  const LambdaParams p = LambdaParams::validate(2, 1);
  CHECK(p.N() == 2);
  CHECK(p.r() == 1);
  CHECK(p.period() == 4);
  CHECK_FALSE(p.uniform());
  CHECK(LambdaParams::validate(1, 1).uniform());
  CHECK(LambdaParams::validate(5, 7).r() == 7);
}

TEST_CASE("numerators decode back to points") {
  for (auto [N, r] : {std::pair{1, 1}, {2, 1}, {2, 3}, {3, 5}, {4, 3}}) {
    const LambdaParams params = LambdaParams::validate(N, r);
    for (std::int64_t n = -5; n <= 5; ++n)
      for (int eps = 0; eps <= 1; ++eps) {
        const LambdaPoint pt{n, eps};
        const auto back = point_from_numerator(numerator(pt, params), params);
        REQUIRE(back.has_value());
        CHECK(*back == pt);
        CHECK(lambda_real(pt, params) == doctest::Approx(2.0 * n + eps * double(r) / N));
      }
    // Residues other than 0 and r are not numerators of Lambda.
    for (std::int64_t p = -40; p < 40; ++p) {
      const std::int64_t res = ((p % (2 * N)) + 2 * N) % (2 * N);
      CHECK(point_from_numerator(p, params).has_value() == (res == 0 || res == r));
    }
  }
}

TEST_CASE("point order agrees with value order") {
  const LambdaParams params = LambdaParams::validate(3, 5);
  std::vector<LambdaPoint> pts;
  for (std::int64_t n = -3; n <= 3; ++n)
    for (int eps = 0; eps <= 1; ++eps) pts.push_back({n, eps});
  for (const auto& a : pts)
    for (const auto& b : pts) CHECK((a < b) == (lambda_value(a, params) < lambda_value(b, params)));
}

TEST_CASE("translation by 2N lambda keeps eps and moves the value by 2N lambda") {
  const LambdaParams params = LambdaParams::validate(2, 3);
  for (std::int64_t n = -3; n <= 3; ++n)
    for (int eps = 0; eps <= 1; ++eps)
      for (std::int64_t sn = -2; sn <= 2; ++sn)
        for (int seps = 0; seps <= 1; ++seps) {
          const LambdaPoint pt{n, eps}, s{sn, seps};
          const LambdaPoint t = translate_point(pt, s, params);
          CHECK(t.eps == eps);
          CHECK(lambda_real(t, params) == doctest::Approx(lambda_real(pt, params) + 4.0 * lambda_real(s, params)));
          CHECK(numerator(t, params) == numerator(pt, params) + shift_numerator(s, params));
        }
}

TEST_CASE("the grid translates tile Omega with midpoints") {
  for (auto [N, r] : {std::pair{1, 1}, {2, 1}, {3, 5}}) {
    const LambdaParams params = LambdaParams::validate(N, r);
    const int Q = 8;
    const XiGrid grid = make_grid(params, Q);
    CHECK(grid.resolution() == Q);
    CHECK(grid.rows() == 4 * N);
    std::set<long long> cells;
    const double h = 1.0 / (4.0 * N * Q);
    for (int q = 0; q < Q; ++q) {
      CHECK(grid.base()[q] >= 0.0);
      CHECK(grid.base()[q] < 1.0 / (4.0 * N));
      for (int row = 0; row < grid.rows(); ++row) {
        const double xi = grid.point(q, row);
        const bool upper = row >= 2 * N;
        const double start = upper ? N / 2.0 : 0.0;
        CHECK(xi >= start);
        CHECK(xi < start + 0.5);
        // Midpoint of cell number (xi - start)/h - 1/2 in its half.
        const double cell = (xi - start) / h - 0.5;
        CHECK(std::abs(cell - std::round(cell)) < 1e-9);
        cells.insert(std::llround(cell) + (upper ? 1000000 : 0));
      }
    }
    CHECK(cells.size() == static_cast<std::size_t>(4 * N * Q));
  }
  CHECK_THROWS_AS(make_grid(LambdaParams::validate(1, 1), 0), Error);
}

TEST_CASE("row offsets are exact rationals") {
  const LambdaParams params = LambdaParams::validate(2, 1);
  const XiGrid grid(params, 4);
  CHECK(grid.offset(0) == Rational{0, 1});
  CHECK(grid.offset(3) == Rational{3, 8});
  CHECK(grid.offset(4) == Rational{1, 1});  // N/2 + 0
  CHECK(grid.offset(7) == Rational{11, 8});
}
