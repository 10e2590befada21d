#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "zsub/errors.hpp"
#include "zsub/green.hpp"

using namespace zsub;
using fx::el;

namespace {

  bool in(std::vector<ElementId> const& xs, ElementId x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
  }

}  // namespace

TEST_SUITE("green_structure") {
  TEST_CASE("j_leq examples") {
    auto N = fx::N2();
    auto a = el(N, "a"), z = el(N, "z");
    CHECK(j_leq(N, a, a));
    CHECK(j_leq(N, z, a));
    CHECK_FALSE(j_leq(N, a, z));
    auto G = fx::S3();
    for (auto x : G.elements()) {
      for (auto y : G.elements()) {
        CHECK(j_leq(G, x, y));
      }
    }
  }

  TEST_CASE("j_leq and its witness agree with ideal closure on the corpus") {
    for (auto const& [name, S] : corpus::standard()) {
      CAPTURE(name);
      auto t = S.rows();
      JDecomposition J(S);
      for (auto y : S.elements()) {
        auto ideal = oracle::ideal(t, y.index);
        CHECK(principal_ideal(S, y) == ideal);
        for (auto x : S.elements()) {
          bool expected = ideal[x.index - 1];
          CHECK(j_leq(S, x, y) == expected);
          CHECK(J.j_leq(x, y) == expected);
          auto w = j_leq_witness(S, x, y);
          REQUIRE(w.has_value() == expected);
          if (w) {
            CHECK(S.product(w->first, y, w->second) == x);
          }
        }
      }
    }
  }

  TEST_CASE("j_decomposition examples") {
    auto N = fx::N2();
    JDecomposition JN(N);
    REQUIRE(JN.number_of_classes() == 2);
    auto ca = JN.class_of(el(N, "a")), cz = JN.class_of(el(N, "z"));
    CHECK(JN.below(cz, ca));
    CHECK_FALSE(JN.below(ca, cz));
    CHECK(JN.regular(cz));
    CHECK_FALSE(JN.regular(ca));
    CHECK(JN.minimal_ideal() == cz);

    auto T = fx::T3();
    JDecomposition JT(T);
    REQUIRE(JT.number_of_classes() == 3);
    std::vector<std::size_t> sizes;
    for (auto const& c : JT.classes()) {
      sizes.push_back(c.size());
    }
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{3, 6, 18});
    for (ClassId c = 0; c < 3; ++c) {
      CHECK(JT.regular(c));
      for (ClassId d = 0; d < 3; ++d) {
        if (c != d) {
          CHECK(JT.below(c, d) != JT.below(d, c));  // linear
        }
      }
    }
    CHECK(JT.elements(JT.minimal_ideal()).size() == 3);

    for (std::size_t n : {1, 2, 5}) {
      JDecomposition JG(corpus::cyclic_group(n));
      CHECK(JG.number_of_classes() == 1);
      CHECK(JG.regular(0));
    }
  }

  TEST_CASE("decomposition invariants on the corpus") {
    for (auto const& [name, S] : corpus::standard()) {
      CAPTURE(name);
      auto           t = S.rows();
      JDecomposition J(S);
      // partition, classes ordered by least element
      std::vector<int> hits(S.order(), 0);
      for (ClassId c = 0; c < J.number_of_classes(); ++c) {
        for (auto x : J.elements(c)) {
          ++hits[x.index - 1];
          CHECK(J.class_of(x) == c);
        }
        if (c > 0) {
          CHECK(J.elements(c - 1).front() < J.elements(c).front());
        }
      }
      CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
      // mutual ideal containment defines the classes
      for (auto x : S.elements()) {
        for (auto y : S.elements()) {
          bool same = oracle::ideal(t, x.index)[y.index - 1]
                      && oracle::ideal(t, y.index)[x.index - 1];
          CHECK(J.j_equivalent(x, y) == same);
        }
      }
      // strict order: irreflexive, transitive
      auto k = J.number_of_classes();
      for (ClassId a = 0; a < k; ++a) {
        CHECK_FALSE(J.below(a, a));
        for (ClassId b = 0; b < k; ++b) {
          for (ClassId c = 0; c < k; ++c) {
            if (J.below(a, b) && J.below(b, c)) {
              CHECK(J.below(a, c));
            }
          }
        }
      }
      // regular flag iff some idempotent
      for (ClassId c = 0; c < k; ++c) {
        bool has_e = false;
        for (auto x : J.elements(c)) {
          has_e = has_e || S.product(x, x) == x;
        }
        CHECK(J.regular(c) == has_e);
      }
    }
  }

  TEST_CASE("j3_witnesses examples and exhaustive check") {
    auto Y = fx::Y2();
    for (auto e : Y.elements()) {
      auto w = j3_witnesses(Y, e, e);
      CHECK((w.u1 == e && w.u2 == e && w.v1 == e && w.v2 == e));
    }
    auto T = fx::T2();
    auto c1 = el(T, "[1,1]"), c2 = el(T, "[2,2]");
    auto w  = j3_witnesses(T, c1, c2);
    for (auto u : {w.u1, w.u2, w.v1, w.v2}) {
      CHECK((u == c1 || u == c2));
    }

    for (auto const& [name, S] : corpus::standard()) {
      CAPTURE(name);
      JDecomposition J(S);
      for (ClassId c = 0; c < J.number_of_classes(); ++c) {
        auto const& cls = J.elements(c);
        for (auto x : cls) {
          for (auto y : cls) {
            if (!J.regular(c)) {
              CHECK_THROWS_AS(j3_witnesses(S, J, x, y), NotSameRegularClass);
              continue;
            }
            auto v = j3_witnesses(S, J, x, y);
            CHECK(S.product(v.u1, x, v.u2) == y);
            CHECK(S.product(v.v1, y, v.v2) == x);
            for (auto u : {v.u1, v.u2, v.v1, v.v2}) {
              CHECK(in(cls, u));
            }
          }
        }
      }
    }
    auto N = fx::N2();
    CHECK_THROWS_AS(j3_witnesses(N, el(N, "a"), el(N, "z")), NotSameRegularClass);
  }

  TEST_CASE("lki_decomposition examples") {
    auto N = fx::N2();
    auto d = lki_decomposition(N);
    CHECK(d.L.empty());
    CHECK(d.K == std::vector{el(N, "a")});
    CHECK(d.I == std::vector{el(N, "z")});

    auto M = corpus::monogenic(2, 1);
    auto m = lki_decomposition(M);
    CHECK(m.L.empty());
    CHECK(m.K == std::vector{el(M, "s")});
    CHECK(m.I == std::vector{el(M, "s^2")});

    CHECK_THROWS_AS(lki_decomposition(fx::Y2()), RegularSemigroup);
  }

  TEST_CASE("lki invariants on the non-regular corpus") {
    auto nonregular = oracle::nonregular_corpus();
    CHECK(nonregular.size() >= 10);
    for (auto const& [name, S] : nonregular) {
      CAPTURE(name);
      JDecomposition J(S);
      auto           d = lki_decomposition(S, J);
      CHECK(d.L.size() + d.K.size() + d.I.size() == S.order());
      CHECK_FALSE(d.I.empty());
      CHECK(d.K == J.elements(d.k_class));
      CHECK_FALSE(J.regular(d.k_class));
      // K minimal among non-regular classes, least such class
      for (ClassId c = 0; c < J.number_of_classes(); ++c) {
        if (J.below(c, d.k_class)) {
          CHECK(J.regular(c));
        }
        if (!J.regular(c) && c != d.k_class) {
          bool minimal = true;
          for (ClassId b = 0; b < J.number_of_classes(); ++b) {
            minimal = minimal && !(J.below(b, c) && !J.regular(b));
          }
          if (minimal) {
            CHECK(J.elements(d.k_class).front() < J.elements(c).front());
          }
        }
      }
      for (auto x : S.elements()) {
        CHECK(d.in_I(x) == J.below(J.class_of(x), d.k_class));
        for (auto y : S.elements()) {
          if (d.in_I(x) || d.in_I(y)) {
            CHECK(d.in_I(S.product(x, y)));
          }
          if (d.in_K(x) && d.in_K(y)) {
            CHECK(d.in_I(S.product(x, y)));
          }
        }
      }
    }
  }
}
