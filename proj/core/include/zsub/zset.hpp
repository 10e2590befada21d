#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zsub {

  /// A semilinear subset of the integers: a finite set together with
  /// finitely many arithmetic rays r + dN0, r - dN0 and progressions r + dZ.
  ///
  /// Internally every such set is eventually periodic in both directions and
  /// is stored in a normal form:
  ///
  ///   n >= hi      : n in A  iff  up[n mod p]
  ///   lo <= n < hi : n in A  iff  mid[n - lo]
  ///   n <  lo      : n in A  iff  down[n mod p]
  ///
  /// with p the least common period of both tails, hi minimal and lo maximal
  /// subject to lo <= hi. Purely periodic sets use lo = hi = 0. The normal
  /// form is unique, so operator== is set equality.
  class ZSet {
   public:
    using Int = std::int64_t;

    enum class Direction { Up, Down };

    struct Ray {
      Int       r;
      Int       d;
      Direction dir;

      bool operator==(Ray const&) const = default;
    };

    struct Line {
      Int r;
      Int d;

      bool operator==(Line const&) const = default;
    };

    ZSet();  // the empty set

    static ZSet empty() { return ZSet(); }
    static ZSet all();
    static ZSet singleton(Int n);
    static ZSet of(std::vector<Int> const& points);
    static ZSet interval(Int first, Int last);  // [first, last]
    static ZSet ray(Int r, Int d, Direction dir);
    static ZSet line(Int r, Int d);
    static ZSet from_components(std::vector<Int> const&  sporadic,
                                std::vector<Ray> const&  rays,
                                std::vector<Line> const& lines);

    bool contains(Int n) const;

    bool is_empty() const;
    bool is_all() const;
    bool is_finite() const;
    bool bounded_below() const;
    bool bounded_above() const;
    bool has_positive() const;
    bool has_negative() const;

    std::optional<Int> min() const;
    std::optional<Int> max() const;

    /// Least member >= from, if any.
    std::optional<Int> first_member_at_or_above(Int from) const;

    /// The members in [first, last].
    std::vector<Int> elements_in(Int first, Int last) const;

    /// Canonical decomposition. Sporadic points are sorted and lie in no ray
    /// or line; rays and lines are pairwise disjoint; lines have 0 <= r < d
    /// and rays start at their extreme member.
    std::vector<Int>  sporadic() const;
    std::vector<Ray>  rays() const;
    std::vector<Line> lines() const;

    ZSet shifted(Int k) const;
    ZSet negated() const;

    bool subset_of(ZSet const& other) const;

    /// gcd of all members (0 for the empty set and for {0}).
    Int gcd() const;

    Int period() const noexcept { return period_; }
    Int lower_threshold() const noexcept { return lo_; }
    Int upper_threshold() const noexcept { return hi_; }

    std::string to_string() const;

    bool operator==(ZSet const&) const = default;

    friend ZSet unite(ZSet const& a, ZSet const& b);
    friend ZSet intersect(ZSet const& a, ZSet const& b);
    friend ZSet difference(ZSet const& a, ZSet const& b);
    friend ZSet symmetric_difference(ZSet const& a, ZSet const& b);
    /// Minkowski sum {a + b : a in A, b in B}.
    friend ZSet minkowski_sum(ZSet const& a, ZSet const& b);

   private:
    struct Components {
      std::vector<Int>  sporadic;
      std::vector<Ray>  rays;
      std::vector<Line> lines;
    };

    class Builder;

    Components components() const;
    void       normalize();

    template <typename Op>
    static ZSet combine(ZSet const& a, ZSet const& b, Op op);

    Int               period_ = 1;
    Int               lo_     = 0;
    Int               hi_     = 0;
    std::vector<bool> mid_;
    std::vector<bool> up_   = {false};
    std::vector<bool> down_ = {false};
  };

  ZSet unite(ZSet const& a, ZSet const& b);
  ZSet intersect(ZSet const& a, ZSet const& b);
  ZSet difference(ZSet const& a, ZSet const& b);
  ZSet symmetric_difference(ZSet const& a, ZSet const& b);
  ZSet minkowski_sum(ZSet const& a, ZSet const& b);

  inline ZSet operator+(ZSet const& a, ZSet const& b) {
    return minkowski_sum(a, b);
  }

  /// Floor modulus: the representative of n modulo m in [0, m).
  constexpr std::int64_t floor_mod(std::int64_t n, std::int64_t m) noexcept {
    auto r = n % m;
    return r < 0 ? r + m : r;
  }

}  // namespace zsub
