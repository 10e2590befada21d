#include "zsub/int_semigroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "zsub/errors.hpp"

namespace zsub {

  using Int = ZSet::Int;

  std::string_view to_string(IntCase c) noexcept {
    switch (c) {
      case IntCase::Zero:
        return "zero";
      case IntCase::Group:
        return "group";
      case IntCase::PositiveNumerical:
        return "positive-numerical";
      case IntCase::NegativeNumerical:
        return "negative-numerical";
    }
    return "?";
  }

  namespace {

    // The numerical semigroup generated by positive integers `gens`
    // (gcd 1), plus 0 when `with_zero`. Returns the members below the
    // conductor and the conductor.
    struct Numerical {
      std::vector<bool> member;  // member[k] for 0 <= k < conductor
      Int               conductor;
      Int               multiplicity;  // least positive member
    };

    Numerical numerical(std::vector<Int> const& gens, bool with_zero) {
      Int const m = *std::min_element(gens.begin(), gens.end());
      // reach[k]: k is a sum of one or more generators.
      std::vector<bool> reach{false};
      Int               run = 0;
      Int               k   = 0;
      while (run < m) {
        ++k;
        bool r = false;
        for (Int g : gens) {
          if (g == k || (g < k && reach[k - g])) {
            r = true;
            break;
          }
        }
        reach.push_back(r);
        run = r ? run + 1 : 0;
      }
      // The last m entries are all members, so every larger k is too.
      Int conductor = k - m + 1;
      if (with_zero) {
        reach[0] = true;
        if (conductor == 1) {
          conductor = 0;
        }
      }
      reach.resize(static_cast<std::size_t>(conductor));
      return {std::move(reach), conductor, m};
    }

    IntSubsemigroupClass make_numerical(std::vector<Int> const& positive,
                                        bool                    with_zero) {
      Int d = 0;
      for (Int g : positive) {
        d = std::gcd(d, g);
      }
      std::vector<Int> scaled;
      for (Int g : positive) {
        scaled.push_back(g / d);
      }
      auto num = numerical(scaled, with_zero);

      IntSubsemigroupClass out;
      out.kind      = IntCase::PositiveNumerical;
      out.step      = d;
      out.conductor = num.conductor * d;
      std::vector<Int> points;
      for (Int k = 0; k < num.conductor; ++k) {
        if (num.member[k]) {
          points.push_back(k * d);
        } else {
          out.gaps.push_back(k * d);
        }
      }
      out.value = unite(ZSet::of(points),
                        ZSet::ray(num.conductor * d, d, ZSet::Direction::Up));

      // Minimal generators: positive members that are not the sum of two
      // positive members. All of them lie below conductor + multiplicity.
      Int const        bound = num.conductor + num.multiplicity;
      std::vector<bool> pos(static_cast<std::size_t>(bound + 1), false);
      for (Int k = 1; k <= bound; ++k) {
        pos[k] = k >= num.conductor || num.member[k];
      }
      if (with_zero) {
        out.generators.push_back(0);
      }
      for (Int k = 1; k <= bound; ++k) {
        if (!pos[k]) {
          continue;
        }
        bool decomposable = false;
        for (Int a = 1; a <= k / 2 && !decomposable; ++a) {
          decomposable = pos[a] && pos[k - a];
        }
        if (!decomposable) {
          out.generators.push_back(k * d);
        }
      }
      return out;
    }

    IntSubsemigroupClass negate(IntSubsemigroupClass c) {
      c.kind      = IntCase::NegativeNumerical;
      c.conductor = -c.conductor;
      for (auto& g : c.gaps) {
        g = -g;
      }
      std::reverse(c.gaps.begin(), c.gaps.end());
      for (auto& g : c.generators) {
        g = -g;
      }
      std::sort(c.generators.begin(), c.generators.end());
      c.value = c.value.negated();
      return c;
    }

    IntSubsemigroupClass make_zero() {
      IntSubsemigroupClass out;
      out.kind       = IntCase::Zero;
      out.value      = ZSet::singleton(0);
      out.generators = {0};
      return out;
    }

    IntSubsemigroupClass make_group(Int d) {
      IntSubsemigroupClass out;
      out.kind       = IntCase::Group;
      out.step       = d;
      out.value      = ZSet::line(0, d);
      out.generators = {-d, d};
      return out;
    }

  }  // namespace

  IntSubsemigroupClass
  classify_int_subsemigroup(std::span<std::int64_t const> gens) {
    if (gens.empty()) {
      throw EmptyGenerators();
    }
    bool neg = false, pos = false, zero = false;
    Int  d   = 0;
    for (Int g : gens) {
      neg |= g < 0;
      pos |= g > 0;
      zero |= g == 0;
      d = std::gcd(d, g);
    }
    if (!neg && !pos) {
      return make_zero();
    }
    if (neg && pos) {
      return make_group(d);
    }
    std::vector<Int> magnitudes;
    for (Int g : gens) {
      if (g != 0) {
        magnitudes.push_back(std::abs(g));
      }
    }
    auto out = make_numerical(magnitudes, zero);
    return pos ? out : negate(std::move(out));
  }

  IntSubsemigroupClass
  classify_int_subsemigroup(std::vector<std::int64_t> const& gens) {
    return classify_int_subsemigroup(std::span<std::int64_t const>(gens));
  }

  IntSubsemigroupClass additive_closure(ZSet const& set) {
    if (set.is_empty()) {
      throw EmptyGenerators();
    }
    bool const pos = set.has_positive();
    bool const neg = set.has_negative();
    if (!pos && !neg) {
      return make_zero();
    }
    if (pos && neg) {
      return make_group(set.gcd());
    }
    if (neg) {
      auto c = additive_closure(set.negated());
      return negate(std::move(c));
    }
    // A finite prefix of the set with the right gcd generates a numerical
    // semigroup whose complement in the set is finite; add the missing
    // elements one at a time.
    Int const        bound = set.upper_threshold() + 2 * set.period();
    std::vector<Int> gens  = set.elements_in(0, std::max<Int>(bound, 0));
    for (;;) {
      auto c       = classify_int_subsemigroup(gens);
      auto missing = difference(set, c.value);
      if (missing.is_empty()) {
        return c;
      }
      gens.push_back(*missing.min());
    }
  }

  std::vector<std::int64_t> minimal_generators(IntSubsemigroupClass const& C) {
    return C.generators;
  }

  std::vector<std::int64_t>
  windowed_int_closure(std::span<std::int64_t const> gens, std::int64_t W) {
    if (W <= 0) {
      throw WindowTooSmall("window must be positive");
    }
    for (Int g : gens) {
      if (std::abs(g) > W) {
        throw WindowTooSmall("generator " + std::to_string(g)
                             + " lies outside the window [-"
                             + std::to_string(W) + ", " + std::to_string(W)
                             + "]");
      }
    }
    std::vector<bool> in(static_cast<std::size_t>(2 * W + 1), false);
    std::vector<Int>  frontier;
    for (Int g : gens) {
      if (!in[g + W]) {
        in[g + W] = true;
        frontier.push_back(g);
      }
    }
    while (!frontier.empty()) {
      std::vector<Int> next;
      for (Int s : frontier) {
        for (Int g : gens) {
          Int t = s + g;
          if (t >= -W && t <= W && !in[t + W]) {
            in[t + W] = true;
            next.push_back(t);
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<Int> out;
    for (Int n = -W; n <= W; ++n) {
      if (in[n + W]) {
        out.push_back(n);
      }
    }
    return out;
  }

  std::int64_t windowed_int_completeness(std::span<std::int64_t const> gens,
                                         std::int64_t                  W) {
    bool neg = false, pos = false;
    Int  g   = 0;
    for (Int x : gens) {
      neg |= x < 0;
      pos |= x > 0;
      g = std::max(g, std::abs(x));
    }
    return neg && pos ? std::max<Int>(W - g, 0) : W;
  }

}  // namespace zsub
