#include "xnpr/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace xnpr;

namespace {

Mat mat(std::initializer_list<std::initializer_list<Rational>> rows) {
  Mat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("gauss_inverse") {
  CHECK(gauss_inverse(Mat::Identity(3, 3)) == Mat::Identity(3, 3));
  CHECK(gauss_inverse(mat({{2, 1}, {1, 2}})) == mat({{Rational(2, 3), Rational(-1, 3)}, {Rational(-1, 3), Rational(2, 3)}}));
  CHECK(gauss_inverse(mat({{0, 1}, {1, 0}})) == mat({{0, 1}, {1, 0}}));
  CHECK_THROWS_WITH_AS(gauss_inverse(mat({{1, 2}, {2, 4}})), "singular matrix", MathError);
  CHECK(gauss_determinant(mat({{2, 1}, {1, 2}})) == 3);
  CHECK(gauss_determinant(mat({{0, 1}, {1, 0}})) == -1);
}

TEST_CASE("circulant eigenpairs") {
  const Circulant<Rational> c{{-2, 1}};
  CHECK(c.materialize() == mat({{-2, 1}, {1, -2}}));
  CHECK(circ_eigen(c, 0).value == Cyclotomic::constant(2, -1));
  CHECK(circ_eigen(c, 1).value == Cyclotomic::constant(2, -3));
  const Circulant<Rational> scalar{{7, 0, 0, 0, 0}};
  for (Eigen::Index k = 0; k < 5; ++k) CHECK(circ_eigen(scalar, k).value == Cyclotomic::constant(5, 7));
  const Circulant<Rational> c4{{1, 2, 3, 4}};
  for (Eigen::Index k = 0; k < 4; ++k) {
    const auto pair = circ_eigen(c4, k);
    std::vector<Cyclotomic> scaled;
    for (const auto& v : pair.vector) scaled.push_back(v * pair.value);
    CHECK(xnpr::apply(c4.materialize(), pair.vector) == scaled);
  }
  CHECK_THROWS_AS(circ_eigen(c, 2), std::invalid_argument);
}

TEST_CASE("circulant inverse") {
  const Circulant<Rational> c{{-2, 1}};
  CHECK(circ_inverse_entry(c, 0, 0) == Rational(-2, 3));
  CHECK(circ_inverse_entry(c, 0, 1) == Rational(-1, 3));
  CHECK(circ_inverse(c).first_column == std::vector<Rational>{Rational(-2, 3), Rational(-1, 3)});
  const Circulant<Rational> two{{2, 0, 0}};
  CHECK(circ_inverse_entry(two, 1, 1) == Rational(1, 2));
  const Circulant<Rational> id{{1, 0, 0, 0}};
  CHECK(circ_inverse(id).first_column == id.first_column);
  const Circulant<Rational> five{{-5, 1, 1, 1, 1}};
  const Mat inv = circ_inverse(five).materialize();
  CHECK(inv == gauss_inverse(five.materialize()));
  CHECK(inv * five.materialize() == Mat::Identity(5, 5));
  const Circulant<Rational> singular{{1, 1, 1}};
  CHECK_THROWS_WITH_AS(circ_inverse(singular), "non-invertible circulant", MathError);
}

TEST_CASE("minor_removed_inverse") {
  CHECK(minor_removed_inverse(gauss_inverse(mat({{2, 1}, {1, 2}})), 0, 0) == mat({{Rational(1, 2)}}));
  CHECK(minor_removed_inverse(Mat::Identity(3, 3), 1, 1) == Mat::Identity(2, 2));
  CHECK(minor_removed_inverse(gauss_inverse(mat({{3, 1}, {1, 3}})), 0, 0) == mat({{Rational(1, 3)}}));
  const Mat a = mat({{1, 2, 0}, {0, 1, 3}, {4, 0, 1}});
  const Mat aInv = gauss_inverse(a);
  for (Eigen::Index s = 0; s < 3; ++s)
    for (Eigen::Index t = 0; t < 3; ++t) {
      if (aInv(t, s) == 0) continue;
      CHECK(minor_removed_inverse(aInv, s, t) == gauss_inverse(remove_row_col(a, s, t)));
    }
  CHECK_THROWS_WITH_AS(minor_removed_inverse(Mat::Identity(2, 2), 0, 1), "pivot vanishes", MathError);
}

TEST_CASE("woodbury") {
  const Mat aInv = gauss_inverse(Mat(2 * Mat::Identity(2, 2)));
  Mat u = Mat::Zero(2, 1);
  u(0, 0) = 1;
  const Mat v = u.transpose();
  const Mat c = mat({{1}});
  CHECK(woodbury(aInv, u, c, v) == mat({{Rational(1, 3), 0}, {0, Rational(1, 2)}}));
  CHECK(woodbury(aInv, Mat::Zero(2, 1), c, v) == aInv);
  CHECK_THROWS_WITH_AS(woodbury(aInv, u, mat({{Rational(-1, 2)}}), v), "woodbury: inner matrix singular", MathError);
  CHECK_THROWS_AS(woodbury(aInv, Mat::Zero(3, 1), c, v), std::invalid_argument);
}

TEST_CASE("block_ones_inverse") {
  const Mat a = -6 * Mat::Identity(4, 4) + Mat::Ones(4, 4);
  const Mat b = mat({{-5}});
  const Mat out = block_ones_inverse(gauss_inverse(a), gauss_inverse(b));
  CHECK(out == Rational(-1, 6) * (Mat::Identity(5, 5) + Mat::Ones(5, 5)));
  CHECK(block_ones_inverse(gauss_inverse(a), Mat(0, 0)) == gauss_inverse(a));
  // alpha = beta = 1
  CHECK_THROWS_WITH_AS(block_ones_inverse(mat({{1}}), mat({{1}})), "rank-2 update singular", MathError);
}

namespace {

Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  return Rational(num(rng), den(rng));
}

Mat random_mat(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  Mat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = small_rational(rng);
  return m;
}

Mat random_invertible(std::mt19937_64& rng, Eigen::Index n) {
  for (;;) {
    Mat m = random_mat(rng, n, n);
    if (gauss_determinant(m) != 0) return m;
  }
}

}  // namespace

TEST_CASE("seeded corpus: circulants") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(1 + trial % 12);
    Circulant<Rational> c;
    for (std::size_t i = 0; i < n; ++i) c.first_column.push_back(small_rational(rng));
    const Mat m = c.materialize();
    CHECK(is_circulant(m));
    if (gauss_determinant(m) == 0) continue;
    CHECK(circ_inverse(c).materialize() * m == Mat::Identity(m.rows(), m.cols()));
  }
}

TEST_CASE("seeded corpus: minor_removed_inverse") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Eigen::Index> idx(0, 4);
  int done = 0;
  while (done < 100) {
    const Mat a = random_invertible(rng, 5);
    const Mat aInv = gauss_inverse(a);
    const Eigen::Index s = idx(rng), t = idx(rng);
    if (aInv(t, s) == 0) continue;
    CHECK(minor_removed_inverse(aInv, s, t) * remove_row_col(a, s, t) == Mat::Identity(4, 4));
    ++done;
  }
}

TEST_CASE("seeded corpus: woodbury") {
  std::mt19937_64 rng(13);
  int done = 0;
  while (done < 100) {
    const Mat a = random_invertible(rng, 4);
    const Mat u = random_mat(rng, 4, 2), c = random_invertible(rng, 2), v = random_mat(rng, 2, 4);
    const Mat sum = a + u * c * v;
    if (gauss_determinant(sum) == 0) continue;
    CHECK(woodbury(gauss_inverse(a), u, gauss_inverse(c), v) == gauss_inverse(sum));
    ++done;
  }
}

TEST_CASE("seeded corpus: block_ones_inverse") {
  std::mt19937_64 rng(17);
  int done = 0;
  while (done < 100) {
    const Mat a = random_invertible(rng, 3), b = random_invertible(rng, 2);
    Mat full = Mat::Ones(5, 5);
    full.topLeftCorner(3, 3) = a;
    full.bottomRightCorner(2, 2) = b;
    if (gauss_determinant(full) == 0) continue;
    CHECK(block_ones_inverse(gauss_inverse(a), gauss_inverse(b)) == gauss_inverse(full));
    ++done;
  }
}
