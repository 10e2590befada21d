#include <doctest.h>

#include "oracles.hpp"
#include "zsub/errors.hpp"
#include "zsub/int_semigroup.hpp"

using namespace zsub;
using Int = ZSet::Int;
using Dir = ZSet::Direction;

namespace {

  // Membership in <gens> decided by the oracle on a window large enough to
  // be complete on [-R, R].
  std::set<Int> exact_on(std::vector<Int> const& gens, Int R) {
    Int g = 0;
    for (Int x : gens) {
      g = std::max(g, std::abs(x));
    }
    auto all = oracle::int_closure(gens, R + g);
    std::set<Int> out;
    for (Int n : all) {
      if (n >= -R && n <= R) {
        out.insert(n);
      }
    }
    return out;
  }

  int cases_holding(IntSubsemigroupClass const& c) {
    auto const& v = c.value;
    int         k = 0;
    k += v == ZSet::singleton(0);
    k += c.step > 0 && v == ZSet::line(0, c.step);
    k += c.step > 0 && !v.has_negative() && v.has_positive()
         && difference(ZSet::ray(0, c.step, Dir::Up), v).is_finite()
         && v.subset_of(ZSet::ray(0, c.step, Dir::Up));
    k += c.step > 0 && v.has_negative() && !v.has_positive()
         && difference(ZSet::ray(0, c.step, Dir::Down), v).is_finite()
         && v.subset_of(ZSet::ray(0, c.step, Dir::Down));
    return k;
  }

  void check_class(IntSubsemigroupClass const& c) {
    CHECK(cases_holding(c) == 1);
    CHECK(minkowski_sum(c.value, c.value).subset_of(c.value));
    CHECK(classify_int_subsemigroup(minimal_generators(c)).value == c.value);
    switch (c.kind) {
      case IntCase::Zero:
        CHECK(c.value == ZSet::singleton(0));
        CHECK(minimal_generators(c) == std::vector<Int>{0});
        break;
      case IntCase::Group:
        CHECK(c.value == ZSet::line(0, c.step));
        CHECK(minimal_generators(c) == std::vector<Int>{-c.step, c.step});
        CHECK(c.value.gcd() == c.step);
        break;
      case IntCase::PositiveNumerical:
      case IntCase::NegativeNumerical: {
        bool pos  = c.kind == IntCase::PositiveNumerical;
        auto cone = ZSet::ray(0, c.step, pos ? Dir::Up : Dir::Down);
        CHECK(c.value.subset_of(cone));
        CHECK(difference(cone, c.value) == ZSet::of(c.gaps));
        CHECK(difference(c.value, ZSet::singleton(0)).gcd() == c.step);
        // every multiple of d beyond the conductor is a member
        for (Int k = 0; k < 50; ++k) {
          CHECK(c.value.contains(c.conductor + (pos ? k : -k) * c.step));
        }
        // and the conductor is tight
        if (!c.gaps.empty()) {
          CHECK_FALSE(c.value.contains(c.conductor + (pos ? -1 : 1) * c.step));
        }
        // irredundant
        auto gens = minimal_generators(c);
        for (std::size_t i = 0; i < gens.size() && gens.size() > 1; ++i) {
          auto fewer = gens;
          fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
          CHECK(classify_int_subsemigroup(fewer).value != c.value);
        }
        break;
      }
    }
  }

}  // namespace

TEST_SUITE("int_sets") {
  TEST_CASE("classification examples") {
    auto zero = classify_int_subsemigroup({0});
    CHECK(zero.kind == IntCase::Zero);

    auto grp = classify_int_subsemigroup({-2, 3});
    CHECK(grp.kind == IntCase::Group);
    CHECK(grp.step == 1);
    CHECK(grp.value.is_all());
    auto w = exact_on({-2, 3}, 60);
    CHECK(w.size() == 121);

    auto four_six = classify_int_subsemigroup({4, 6});
    CHECK(four_six.kind == IntCase::PositiveNumerical);
    CHECK(four_six.step == 2);
    CHECK(four_six.gaps == std::vector<Int>{0, 2});
    CHECK(four_six.conductor == 4);
    CHECK(four_six.value == ZSet::ray(4, 2, Dir::Up));

    auto two_three = classify_int_subsemigroup({2, 3});
    CHECK(two_three.kind == IntCase::PositiveNumerical);
    CHECK(two_three.step == 1);
    CHECK(two_three.gaps == std::vector<Int>{0, 1});
    CHECK(two_three.conductor == 2);
    CHECK(minimal_generators(two_three) == std::vector<Int>{2, 3});

    auto neg = classify_int_subsemigroup({-5, -3});
    CHECK(neg.kind == IntCase::NegativeNumerical);
    CHECK(neg.conductor == -8);
    CHECK(neg.value == classify_int_subsemigroup({5, 3}).value.negated());

    auto with_zero = classify_int_subsemigroup({0, 3});
    CHECK(with_zero.value == ZSet::ray(0, 3, Dir::Up));
    CHECK(with_zero.gaps.empty());
    CHECK(minimal_generators(with_zero) == std::vector<Int>{0, 3});

    CHECK(minimal_generators(classify_int_subsemigroup({6, -4})) == std::vector<Int>{-2, 2});
    CHECK_THROWS_AS(classify_int_subsemigroup(std::vector<Int>{}), EmptyGenerators);
  }

  TEST_CASE("windowed closure examples") {
    std::vector<Int> z{0};
    CHECK(windowed_int_closure(z, 10) == std::vector<Int>{0});
    std::vector<Int> p{2, 3};
    CHECK(windowed_int_closure(p, 10) == std::vector<Int>{2, 3, 4, 5, 6, 7, 8, 9, 10});
    std::vector<Int> m{-2, 3};
    auto             got = windowed_int_closure(m, 10);
    auto             c   = windowed_int_completeness(m, 10);
    CHECK(c == 7);
    for (Int n = -c; n <= c; ++n) {
      CHECK(std::binary_search(got.begin(), got.end(), n));
    }
    std::vector<Int> far{11};
    CHECK_THROWS_AS(windowed_int_closure(far, 10), WindowTooSmall);
  }

  TEST_CASE("additive closure of semilinear sets") {
    CHECK(additive_closure(ZSet::ray(3, 5, Dir::Up)).value
          == classify_int_subsemigroup({3, 8, 13, 18, 23}).value);
    CHECK(additive_closure(unite(ZSet::singleton(-1), ZSet::ray(4, 1, Dir::Up))).kind
          == IntCase::Group);
    CHECK(additive_closure(ZSet::line(2, 4)).value == ZSet::line(0, 2));
    CHECK(additive_closure(ZSet::of({6, 10, 15})).value
          == classify_int_subsemigroup({6, 10, 15}).value);
    CHECK_THROWS_AS(additive_closure(ZSet::empty()), EmptyGenerators);
  }

  TEST_CASE("random generator sets against the oracle") {
    std::mt19937_64                   rng(11);
    std::uniform_int_distribution<Int> val(-20, 20), count(1, 4), sign(0, 2);
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<Int> gens;
      auto             s = sign(rng);
      for (Int i = count(rng); i > 0; --i) {
        Int g = val(rng);
        gens.push_back(s == 0 ? std::abs(g) : s == 1 ? -std::abs(g) : g);
      }
      CAPTURE(gens);
      auto c = classify_int_subsemigroup(gens);
      check_class(c);
      CHECK(oracle::window(c.value, -100, 100) == exact_on(gens, 100));

      auto win  = windowed_int_closure(gens, 100);
      auto reg  = windowed_int_completeness(gens, 100);
      auto mine = oracle::int_closure(gens, 100);
      CHECK(std::set<Int>(win.begin(), win.end()) == mine);
      for (Int n : win) {
        CHECK(c.value.contains(n));
      }
      for (Int n = -reg; n <= reg; ++n) {
        CHECK(c.value.contains(n) == std::binary_search(win.begin(), win.end(), n));
      }
      CHECK(additive_closure(ZSet::of(gens)).value == c.value);
    }
  }
}
