#include <doctest.h>

#include "helpers.hpp"

using namespace ds;
using ds::testing::datum;
using ds::testing::wt;

namespace {

const char* kAllTypes[] = {"A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4",
                           "C2", "C3", "C4", "D4", "D5", "D6", "E6", "F4", "G2"};

// leading principal minors of the gram matrix, exact
bool positive_definite(const std::vector<std::vector<Rational>>& g) {
  const int n = static_cast<int>(g.size());
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) a[i][j] = g[i][j];
    Rational det(1);
    for (int col = 0; col < k; ++col) {
      int p = col;
      while (p < k && a[p][col] == 0) ++p;
      if (p == k) return false;
      if (p != col) {
        std::swap(a[col], a[p]);
        det = -det;
      }
      det *= a[col][col];
      for (int r = col + 1; r < k; ++r) {
        if (a[r][col] == 0) continue;
        Rational f = a[r][col] / a[col][col];
        for (int j = col; j < k; ++j) a[r][j] -= f * a[col][j];
      }
    }
    if (det <= 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("supported types construct, others are rejected") {
  for (const char* t : kAllTypes) CHECK(datum(t).rank() == TypeLabel::parse(t).rank);
  CHECK_THROWS_AS(RootDatum(TypeLabel(Family::A, 7)), UnsupportedType);
  CHECK_THROWS_AS(RootDatum(TypeLabel(Family::B, 5)), UnsupportedType);
  CHECK_THROWS_AS(RootDatum(TypeLabel(Family::D, 3)), UnsupportedType);
  CHECK_THROWS_AS(RootDatum(TypeLabel(Family::E, 7)), UnsupportedType);
  CHECK_THROWS_AS(TypeLabel::parse("H3"), UnsupportedType);
  CHECK_THROWS_AS(TypeLabel::parse("E"), UnsupportedType);
  CHECK(TypeLabel::parse("e6").str() == "E6");
}

TEST_CASE("root datum invariants hold for every supported type") {
  for (const char* t : kAllTypes) {
    CAPTURE(t);
    const RootDatum& rd = datum(t);
    const int n = rd.rank();

    // cartan * cartan_inverse = identity
    for (int i = 1; i <= n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational acc(0);
        for (int k = 0; k < n; ++k) acc += Rational(rd.pairing(i, k + 1)) * rd.cartan_inverse()[k][j];
        CHECK(acc == (i - 1 == j ? 1 : 0));
      }

    CHECK(positive_definite(rd.gram()));

    // simple-root lengths: 2 for long, 1 or 2/3 for short
    int longs = 0;
    for (int i = 1; i <= n; ++i) {
      Rational len = rd.norm_sq(rd.simple_root(i));
      bool expected = len == 2 || len == 1 || len == Rational(2, 3);
      CHECK(expected);
      if (len == 2) ++longs;
    }
    CHECK(longs >= 1);

    // highest root is a dominant long root
    Weight beta = rd.highest_root();
    CHECK(rd.norm_sq(beta) == 2);
    CHECK(rd.is_dominant(beta));

    // rho is the half sum of positive roots: 2*rho has positive root coords
    for (const auto& c : rd.root_coords(Rational(2) * rd.rho())) CHECK(c > 0);

    CHECK(rd.rho() == Weight(n, Rational(1)));
  }
}

TEST_CASE("worked values: A1 and E6") {
  const RootDatum& a1 = datum("A1");
  CHECK(a1.pairing(1, 1) == 2);
  CHECK(a1.gram()[0][0] == Rational(1, 2));
  CHECK(a1.inner(a1.rho(), a1.rho()) == Rational(1, 2));

  const RootDatum& e6 = datum("E6");
  CHECK(e6.rho() == wt("[1,1,1,1,1,1]"));
  CHECK(e6.inner(e6.rho(), e6.rho()) == 78);
  // cross-check against the strange formula: (rho,rho) * 12 = dim(g) * dual
  // Coxeter number = 78 * 12
  CHECK(e6.inner(e6.rho(), e6.rho()) * 12 == 78 * 12);
  CHECK(e6.norm_sq(Rational(2) * e6.rho()) == 312);
  CHECK(e6.highest_root() == wt("[0,1,0,0,0,0]"));
  // the E6 diagram: 2 attached to 4, chain 1-3-4-5-6
  CHECK(e6.pairing(2, 4) == -1);
  CHECK(e6.pairing(2, 3) == 0);
  CHECK(e6.pairing(1, 3) == -1);
  CHECK(e6.pairing(1, 2) == 0);
}

TEST_CASE("inner product: symmetry, bilinearity, dimension checks") {
  std::mt19937_64 rng(20260810);
  const RootDatum& rd = datum("E6");
  for (int k = 0; k < 50; ++k) {
    Weight v = ds::testing::random_int_weight(rd, rng);
    Weight w = ds::testing::random_int_weight(rd, rng);
    CHECK(rd.inner(v, w) == rd.inner(w, v));
    CHECK(rd.inner(v + w, w) == rd.inner(v, w) + rd.inner(w, w));
  }
  CHECK_THROWS_AS(rd.inner(wt("[1,2]"), rd.rho()), DimensionMismatch);
  CHECK_THROWS_AS(rd.norm_sq(wt("[1]")), DimensionMismatch);
  CHECK(rd.norm_sq(rd.zero()) == 0);
}

TEST_CASE("root coordinates: basis vectors, worked values, round trip") {
  const RootDatum& a2 = datum("A2");
  auto rc = a2.root_coords(Rational(2) * a2.rho());
  CHECK(rc == std::vector<Rational>{2, 2});

  for (const char* t : {"A3", "B3", "G2", "E6"}) {
    const RootDatum& rd = datum(t);
    for (int i = 1; i <= rd.rank(); ++i) {
      auto c = rd.root_coords(rd.simple_root(i));
      for (int j = 0; j < rd.rank(); ++j) CHECK(c[j] == (j == i - 1 ? 1 : 0));
    }
    std::mt19937_64 rng(7);
    for (int k = 0; k < 25; ++k) {
      Weight v = ds::testing::random_int_weight(rd, rng);
      auto c = rd.root_coords(v);
      Weight back = rd.zero();
      for (int i = 1; i <= rd.rank(); ++i) back = back + c[i - 1] * rd.simple_root(i);
      CHECK(back == v);
    }
  }

  // the A-parameter of a classified E6 representation lies in the root lattice
  const RootDatum& e6 = datum("E6");
  for (const auto& c : e6.root_coords(wt("[2,-3,-3,5,-3,2]"))) {
    CHECK(is_integer(c));
    CHECK(c >= 0);
  }
}

TEST_CASE("dominance, integrality, regularity") {
  const RootDatum& a2 = datum("A2");
  CHECK(a2.is_dominant(a2.rho()));
  CHECK_FALSE(a2.is_dominant(wt("[-1,3]")));
  CHECK(a2.is_integral(wt("[0,7]")));
  CHECK_FALSE(a2.is_integral(wt("[1/2,1]")));
  CHECK_FALSE(a2.is_regular(wt("[1,0]")));
  CHECK(a2.is_regular(wt("[-1,-1]")));

  std::mt19937_64 rng(99);
  const RootDatum& e6 = datum("E6");
  for (int k = 0; k < 50; ++k) {
    Weight lam = ds::testing::random_half_positive_weight(e6, rng);
    CHECK(e6.is_regular(Rational(2) * lam));  // all coordinates positive
  }
}

TEST_CASE("simple reflections: involutive isometries fixing the wall") {
  std::mt19937_64 rng(4242);
  for (const char* t : {"A3", "C3", "F4"}) {
    const RootDatum& rd = datum(t);
    for (int k = 0; k < 200; ++k) {
      Weight v = ds::testing::random_int_weight(rd, rng);
      for (int i = 1; i <= rd.rank(); ++i) {
        Weight r = rd.simple_reflection_apply(i, v);
        CHECK(rd.simple_reflection_apply(i, r) == v);
        CHECK(rd.norm_sq(r) == rd.norm_sq(v));
      }
    }
    CHECK_THROWS_AS(rd.simple_reflection_apply(0, rd.rho()), IndexOutOfRange);
    CHECK_THROWS_AS(rd.simple_reflection_apply(rd.rank() + 1, rd.rho()), IndexOutOfRange);
  }
  const RootDatum& a2 = datum("A2");
  CHECK(a2.simple_reflection_apply(1, a2.rho()) == wt("[-1,2]"));
}

TEST_CASE("scaling the invariant form changes no boolean output") {
  RootDatum plain(TypeLabel::parse("A3"));
  RootDatum scaled = RootDatum::with_form_scale(TypeLabel::parse("A3"), Rational(7, 5));
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    Weight v = ds::testing::random_int_weight(plain, rng);
    Weight w = ds::testing::random_int_weight(plain, rng);
    CHECK(scaled.norm_sq(v) == Rational(7, 5) * plain.norm_sq(v));
    CHECK((plain.norm_sq(v) <= plain.norm_sq(w)) == (scaled.norm_sq(v) <= scaled.norm_sq(w)));
    CHECK(plain.root_coords(v) == scaled.root_coords(v));
    CHECK(plain.is_dominant(v) == scaled.is_dominant(v));
    CHECK(plain.is_regular(v) == scaled.is_regular(v));
  }
}
