#include <cmath>
#include <vector>

#include "doctest.h"
#include "gdt/neighbors.hpp"
#include "oracles.hpp"

using gdt::KnnIndex;
using gdt::PointMatrix;

namespace {

void require_matches_oracle(const KnnIndex& index, std::span<const double> q, std::size_t k) {
  const auto got = index.query(q, k);
  const auto want = oracle::knn(index.points(), q, k);
  REQUIRE(got.size() == want.size());
  for (std::size_t r = 0; r < got.size(); ++r) {
    CHECK(got[r].id == want[r].id);
    CHECK(got[r].distance == want[r].distance);
  }
}

}  // namespace

TEST_CASE("single point index returns itself") {
  const KnnIndex index(PointMatrix(1, 2, {3.0, -1.0}));
  const auto hits = index.query(index.points().row(0), 1);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].id == 0);
  CHECK(hits[0].distance == 0.0);
}

TEST_CASE("collinear points") {
  const KnnIndex index(PointMatrix(3, 2, {0, 0, 1, 0, 2, 0}));
  const std::vector<double> q{0.0, 0.0};
  const auto hits = index.query(q, 2);
  REQUIRE(hits.size() == 2);
  CHECK(hits[0].id == 0);
  CHECK(hits[1].id == 1);
  CHECK(hits[0].distance == 0.0);
  CHECK(hits[1].distance == 1.0);
}

TEST_CASE("equidistant neighbors resolve to the lower id") {
  const KnnIndex index(PointMatrix(2, 2, {1, 0, -1, 0}));
  const std::vector<double> q{0.0, 0.0};
  CHECK(index.query(q, 1)[0].id == 0);

  const KnnIndex swapped(PointMatrix(3, 1, {5, -1, 1}));
  const std::vector<double> origin{0.0};
  const auto hits = swapped.query(origin, 2);
  CHECK(hits[0].id == 1);
  CHECK(hits[1].id == 2);
}

TEST_CASE("queries agree with a full scan") {
  SUBCASE("100 uniform points, every point as query") {
    const KnnIndex index(oracle::uniform_points(100, 2, 7));
    for (std::size_t i = 0; i < 100; ++i) require_matches_oracle(index, index.points().row(i), 10);
  }
  SUBCASE("200 points, k = 15, off-sample queries") {
    const KnnIndex index(oracle::uniform_points(200, 3, 11));
    const PointMatrix queries = oracle::uniform_points(50, 3, 12, -0.2, 1.2);
    for (std::size_t i = 0; i < queries.rows(); ++i) require_matches_oracle(index, queries.row(i), 15);
  }
  SUBCASE("heavy duplicates on a coarse grid") {
    PointMatrix p = oracle::uniform_points(300, 2, 13, 0.0, 4.0);
    for (double& v : p.data()) v = std::floor(v);
    const KnnIndex index(p, 4);
    for (std::size_t i = 0; i < p.rows(); i += 7) require_matches_oracle(index, p.row(i), 25);
  }
}

TEST_CASE("results are ordered and k is clamped to n") {
  const KnnIndex index(oracle::uniform_points(20, 2, 3));
  const auto hits = index.query(index.points().row(4), 50);
  REQUIRE(hits.size() == 20);
  for (std::size_t r = 1; r < hits.size(); ++r) CHECK(hits[r - 1].distance <= hits[r].distance);
}

TEST_CASE("k = 1 on every indexed point returns the point") {
  const KnnIndex index(oracle::uniform_points(500, 5, 21));
  for (std::size_t i = 0; i < index.size(); ++i) {
    const auto hit = index.query(index.points().row(i), 1)[0];
    CHECK(hit.id == static_cast<gdt::PointId>(i));
    CHECK(hit.distance == 0.0);
  }
}

TEST_CASE("construction and query errors") {
  CHECK_THROWS_WITH(KnnIndex{PointMatrix{}}, "empty sample set");
  PointMatrix bad(3, 2, {0, 0, 1, NAN, 2, 2});
  CHECK_THROWS_WITH(KnnIndex{bad}, doctest::Contains("row 1, column 1"));
  const KnnIndex index(oracle::uniform_points(5, 2, 1));
  const std::vector<double> wrong{0.0, 0.0, 0.0};
  CHECK_THROWS(index.query(wrong, 1));
  CHECK_THROWS(index.query(index.points().row(0), 0));
}

TEST_CASE("neighbor table") {
  const KnnIndex index(PointMatrix(4, 1, {0, 1, 3, 10}));
  const gdt::NeighborTable table(index, 2);
  CHECK(table.size() == 4);
  CHECK(table.k() == 2);
  CHECK(table.of(3)[1].id == 2);
  CHECK(table.contains(2, 1));
  CHECK_FALSE(table.contains(3, 0));
}
