#include "zsub/zset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "zsub/errors.hpp"

namespace zsub {

  using Int = ZSet::Int;

  namespace {

    // Periods beyond this indicate runaway lcm growth, not a real workload.
    constexpr Int kMaxPeriod = Int{1} << 24;

    Int checked_lcm(Int a, Int b) {
      Int l = std::lcm(a, b);
      if (l > kMaxPeriod) {
        throw InvalidArgument("ZSet period " + std::to_string(l)
                              + " exceeds the supported maximum");
      }
      return l;
    }

    // Least n >= from with n = r (mod d).
    Int first_at_or_above(Int from, Int r, Int d) {
      return from + floor_mod(r - from, d);
    }

    // Greatest n <= from with n = r (mod d).
    Int first_at_or_below(Int from, Int r, Int d) {
      return from - floor_mod(from - r, d);
    }

    std::vector<Int> divisors(Int p) {
      std::vector<Int> out;
      for (Int q = 1; q <= p; ++q) {
        if (p % q == 0) {
          out.push_back(q);
        }
      }
      return out;
    }

    // Greedy partition of a residue set modulo p into full cosets of
    // subgroups dZ/pZ, coarsest first. Deterministic in the set alone.
    std::vector<std::pair<Int, Int>> coset_cover(std::vector<bool> const& in,
                                                 Int                      p) {
      std::vector<bool>                 covered(p, false);
      std::vector<std::pair<Int, Int>>  out;
      for (Int d : divisors(p)) {
        for (Int r = 0; r < d; ++r) {
          bool full = true;
          for (Int s = r; s < p; s += d) {
            if (!in[s] || covered[s]) {
              full = false;
              break;
            }
          }
          if (full) {
            for (Int s = r; s < p; s += d) {
              covered[s] = true;
            }
            out.emplace_back(r, d);
          }
        }
      }
      return out;
    }

    // Elements of the numerical monoid <a, b> (gcd 1) below its conductor
    // (a - 1)(b - 1), and that conductor.
    std::pair<std::vector<Int>, Int> two_generator_monoid(Int a, Int b) {
      if (a == 1 || b == 1) {
        return {{}, 0};
      }
      Int               c = (a - 1) * (b - 1);
      std::vector<bool> reach(static_cast<std::size_t>(c), false);
      std::vector<Int>  out;
      for (Int k = 0; k < c; ++k) {
        bool r = k == 0 || (k >= a && reach[k - a]) || (k >= b && reach[k - b]);
        reach[k] = r;
        if (r) {
          out.push_back(k);
        }
      }
      return {out, c};
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Builder: union of primitive pieces
  ////////////////////////////////////////////////////////////////////////

  class ZSet::Builder {
   public:
    void add_point(Int n) { points_.push_back(n); }

    void add_ray(Int r, Int d, Direction dir) {
      if (dir == Direction::Up) {
        rays_up_.insert({r, d});
      } else {
        rays_down_.insert({r, d});
      }
    }

    void add_line(Int r, Int d) {
      if (d == 1) {
        full_ = true;
      }
      lines_.insert({floor_mod(r, d), d});
    }

    void add(ZSet const& s) {
      auto c = s.components();
      points_.insert(points_.end(), c.sporadic.begin(), c.sporadic.end());
      for (auto const& ray : c.rays) {
        add_ray(ray.r, ray.d, ray.dir);
      }
      for (auto const& line : c.lines) {
        add_line(line.r, line.d);
      }
    }

    bool full() const noexcept { return full_; }

    ZSet build() const {
      if (full_) {
        return ZSet::all();
      }
      ZSet out;
      Int  p  = 1;
      Int  lo = std::numeric_limits<Int>::max();
      Int  hi = std::numeric_limits<Int>::min();
      for (Int n : points_) {
        lo = std::min(lo, n);
        hi = std::max(hi, n + 1);
      }
      for (auto const& [r, d] : rays_up_) {
        p  = checked_lcm(p, d);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
      }
      for (auto const& [r, d] : rays_down_) {
        p  = checked_lcm(p, d);
        lo = std::min(lo, r + 1);
        hi = std::max(hi, r + 1);
      }
      for (auto const& [r, d] : lines_) {
        p = checked_lcm(p, d);
      }
      if (lo > hi) {
        lo = hi = 0;
      }
      out.period_ = p;
      out.lo_     = lo;
      out.hi_     = hi;
      out.mid_.assign(static_cast<std::size_t>(hi - lo), false);
      out.up_.assign(static_cast<std::size_t>(p), false);
      out.down_.assign(static_cast<std::size_t>(p), false);

      for (Int n : points_) {
        out.mid_[n - lo] = true;
      }
      for (auto const& [r, d] : rays_up_) {
        for (Int n = r; n < hi; n += d) {
          out.mid_[n - lo] = true;
        }
        for (Int s = floor_mod(r, d); s < p; s += d) {
          out.up_[s] = true;
        }
      }
      for (auto const& [r, d] : rays_down_) {
        for (Int n = r; n >= lo; n -= d) {
          out.mid_[n - lo] = true;
        }
        for (Int s = floor_mod(r, d); s < p; s += d) {
          out.down_[s] = true;
        }
      }
      for (auto const& [r, d] : lines_) {
        for (Int n = first_at_or_above(lo, r, d); n < hi; n += d) {
          out.mid_[n - lo] = true;
        }
        for (Int s = r; s < p; s += d) {
          out.up_[s]   = true;
          out.down_[s] = true;
        }
      }
      out.normalize();
      return out;
    }

   private:
    std::vector<Int>              points_;
    std::set<std::pair<Int, Int>> rays_up_;
    std::set<std::pair<Int, Int>> rays_down_;
    std::set<std::pair<Int, Int>> lines_;
    bool                          full_ = false;
  };

  ////////////////////////////////////////////////////////////////////////
  // Construction and normal form
  ////////////////////////////////////////////////////////////////////////

  ZSet::ZSet() = default;

  ZSet ZSet::all() {
    ZSet s;
    s.up_   = {true};
    s.down_ = {true};
    return s;
  }

  ZSet ZSet::singleton(Int n) {
    ZSet s;
    s.lo_  = n;
    s.hi_  = n + 1;
    s.mid_ = {true};
    return s;
  }

  ZSet ZSet::of(std::vector<Int> const& points) {
    Builder b;
    for (Int n : points) {
      b.add_point(n);
    }
    return b.build();
  }

  ZSet ZSet::interval(Int first, Int last) {
    if (first > last) {
      return ZSet();
    }
    ZSet s;
    s.lo_ = first;
    s.hi_ = last + 1;
    s.mid_.assign(static_cast<std::size_t>(last - first + 1), true);
    return s;
  }

  ZSet ZSet::ray(Int r, Int d, Direction dir) {
    if (d <= 0) {
      throw InvalidArgument("ray step must be positive");
    }
    Builder b;
    b.add_ray(r, d, dir);
    return b.build();
  }

  ZSet ZSet::line(Int r, Int d) {
    if (d <= 0) {
      throw InvalidArgument("line step must be positive");
    }
    Builder b;
    b.add_line(r, d);
    return b.build();
  }

  ZSet ZSet::from_components(std::vector<Int> const&  sporadic,
                             std::vector<Ray> const&  rays,
                             std::vector<Line> const& lines) {
    Builder b;
    for (Int n : sporadic) {
      b.add_point(n);
    }
    for (auto const& ray : rays) {
      if (ray.d <= 0) {
        throw InvalidArgument("ray step must be positive");
      }
      b.add_ray(ray.r, ray.d, ray.dir);
    }
    for (auto const& line : lines) {
      if (line.d <= 0) {
        throw InvalidArgument("line step must be positive");
      }
      b.add_line(line.r, line.d);
    }
    return b.build();
  }

  void ZSet::normalize() {
    // Least common period of both tails.
    for (Int q : divisors(period_)) {
      bool ok = true;
      for (Int s = q; s < period_ && ok; ++s) {
        ok = up_[s] == up_[s - q] && down_[s] == down_[s - q];
      }
      if (ok) {
        up_.resize(static_cast<std::size_t>(q));
        down_.resize(static_cast<std::size_t>(q));
        period_ = q;
        break;
      }
    }

    auto member = [this](Int n) { return contains(n); };
    Int  hi     = hi_;
    while (hi > lo_ && member(hi - 1) == up_[floor_mod(hi - 1, period_)]) {
      --hi;
    }
    Int lo = lo_;
    if (hi == lo_) {
      if (up_ == down_) {
        period_ = static_cast<Int>(up_.size());
        lo_ = hi_ = 0;
        mid_.clear();
        return;
      }
      // Below lo_ membership follows the lower pattern; continue while the
      // two patterns agree. Terminates within one period since they differ.
      while (down_[floor_mod(hi - 1, period_)]
             == up_[floor_mod(hi - 1, period_)]) {
        --hi;
      }
      lo = hi;
    } else {
      while (lo < hi && member(lo) == down_[floor_mod(lo, period_)]) {
        ++lo;
      }
    }
    std::vector<bool> mid(static_cast<std::size_t>(hi - lo));
    for (Int n = lo; n < hi; ++n) {
      mid[n - lo] = member(n);
    }
    mid_ = std::move(mid);
    lo_  = lo;
    hi_  = hi;
  }

  ////////////////////////////////////////////////////////////////////////
  // Queries
  ////////////////////////////////////////////////////////////////////////

  bool ZSet::contains(Int n) const {
    if (n >= hi_) {
      return up_[floor_mod(n, period_)];
    }
    if (n < lo_) {
      return down_[floor_mod(n, period_)];
    }
    return mid_[n - lo_];
  }

  namespace {
    bool any_of(std::vector<bool> const& v) {
      return std::find(v.begin(), v.end(), true) != v.end();
    }
    bool all_of(std::vector<bool> const& v) {
      return std::find(v.begin(), v.end(), false) == v.end();
    }
  }  // namespace

  bool ZSet::is_empty() const {
    return !any_of(up_) && !any_of(down_) && !any_of(mid_);
  }

  bool ZSet::is_all() const {
    return all_of(up_) && all_of(down_) && all_of(mid_);
  }

  bool ZSet::is_finite() const {
    return !any_of(up_) && !any_of(down_);
  }

  bool ZSet::bounded_below() const {
    return !any_of(down_);
  }

  bool ZSet::bounded_above() const {
    return !any_of(up_);
  }

  std::optional<Int> ZSet::min() const {
    if (!bounded_below()) {
      return std::nullopt;
    }
    for (Int n = lo_; n < hi_; ++n) {
      if (mid_[n - lo_]) {
        return n;
      }
    }
    for (Int n = hi_; n < hi_ + period_; ++n) {
      if (contains(n)) {
        return n;
      }
    }
    return std::nullopt;
  }

  std::optional<Int> ZSet::max() const {
    if (!bounded_above()) {
      return std::nullopt;
    }
    for (Int n = hi_ - 1; n >= lo_; --n) {
      if (mid_[n - lo_]) {
        return n;
      }
    }
    for (Int n = lo_ - 1; n >= lo_ - period_; --n) {
      if (contains(n)) {
        return n;
      }
    }
    return std::nullopt;
  }

  std::optional<Int> ZSet::first_member_at_or_above(Int from) const {
    Int const last = std::max(from, hi_) + period_;
    for (Int n = from; n < last; ++n) {
      if (contains(n)) {
        return n;
      }
    }
    return std::nullopt;
  }

  bool ZSet::has_positive() const {
    if (!bounded_above()) {
      return true;
    }
    auto m = max();
    return m && *m > 0;
  }

  bool ZSet::has_negative() const {
    if (!bounded_below()) {
      return true;
    }
    auto m = min();
    return m && *m < 0;
  }

  std::vector<Int> ZSet::elements_in(Int first, Int last) const {
    std::vector<Int> out;
    for (Int n = first; n <= last; ++n) {
      if (contains(n)) {
        out.push_back(n);
      }
    }
    return out;
  }

  Int ZSet::gcd() const {
    Int g = 0;
    for (Int n = lo_; n < hi_; ++n) {
      if (mid_[n - lo_]) {
        g = std::gcd(g, n);
      }
    }
    // Two consecutive periods of each tail pin down the gcd of the tail.
    for (Int n = hi_; n < hi_ + 2 * period_; ++n) {
      if (contains(n)) {
        g = std::gcd(g, n);
      }
    }
    for (Int n = lo_ - 1; n >= lo_ - 2 * period_; --n) {
      if (contains(n)) {
        g = std::gcd(g, n);
      }
    }
    return g;
  }

  ZSet::Components ZSet::components() const {
    Components        out;
    Int const         p = period_;
    std::vector<bool> covered_mid(mid_.size(), false);

    std::vector<bool> line_res(static_cast<std::size_t>(p), false);
    for (Int s = 0; s < p; ++s) {
      if (!up_[s] || !down_[s]) {
        continue;
      }
      bool full = true;
      for (Int n = first_at_or_above(lo_, s, p); n < hi_; n += p) {
        if (!mid_[n - lo_]) {
          full = false;
          break;
        }
      }
      line_res[s] = full;
    }
    for (auto [r, d] : coset_cover(line_res, p)) {
      out.lines.push_back({r, d});
      for (Int n = first_at_or_above(lo_, r, d); n < hi_; n += d) {
        covered_mid[n - lo_] = true;
      }
    }

    std::vector<bool> up_res(static_cast<std::size_t>(p), false);
    std::vector<bool> down_res(static_cast<std::size_t>(p), false);
    for (Int s = 0; s < p; ++s) {
      up_res[s]   = up_[s] && !line_res[s];
      down_res[s] = down_[s] && !line_res[s];
    }
    for (auto [r, d] : coset_cover(up_res, p)) {
      Int start = first_at_or_above(hi_, r, d);
      while (contains(start - d)) {
        start -= d;
      }
      out.rays.push_back({start, d, Direction::Up});
      for (Int n = start; n < hi_; n += d) {
        if (n >= lo_) {
          covered_mid[n - lo_] = true;
        }
      }
    }
    for (auto [r, d] : coset_cover(down_res, p)) {
      Int start = first_at_or_below(lo_ - 1, r, d);
      while (contains(start + d)) {
        start += d;
      }
      out.rays.push_back({start, d, Direction::Down});
      for (Int n = start; n >= lo_; n -= d) {
        if (n < hi_) {
          covered_mid[n - lo_] = true;
        }
      }
    }
    for (Int n = lo_; n < hi_; ++n) {
      if (mid_[n - lo_] && !covered_mid[n - lo_]) {
        out.sporadic.push_back(n);
      }
    }
    return out;
  }

  std::vector<Int> ZSet::sporadic() const {
    return components().sporadic;
  }

  std::vector<ZSet::Ray> ZSet::rays() const {
    return components().rays;
  }

  std::vector<ZSet::Line> ZSet::lines() const {
    return components().lines;
  }

  ZSet ZSet::shifted(Int k) const {
    ZSet out    = *this;
    out.lo_     = lo_ + k;
    out.hi_     = hi_ + k;
    Int const p = period_;
    for (Int s = 0; s < p; ++s) {
      out.up_[floor_mod(s + k, p)]   = up_[s];
      out.down_[floor_mod(s + k, p)] = down_[s];
    }
    out.normalize();
    return out;
  }

  ZSet ZSet::negated() const {
    ZSet      out;
    Int const p  = period_;
    out.period_  = p;
    out.lo_      = -hi_ + 1;
    out.hi_      = -lo_ + 1;
    out.mid_.assign(mid_.size(), false);
    out.up_.assign(static_cast<std::size_t>(p), false);
    out.down_.assign(static_cast<std::size_t>(p), false);
    for (Int n = lo_; n < hi_; ++n) {
      out.mid_[-n - out.lo_] = mid_[n - lo_];
    }
    for (Int s = 0; s < p; ++s) {
      out.up_[floor_mod(-s, p)]   = down_[s];
      out.down_[floor_mod(-s, p)] = up_[s];
    }
    out.normalize();
    return out;
  }

  bool ZSet::subset_of(ZSet const& other) const {
    return difference(*this, other).is_empty();
  }

  std::string ZSet::to_string() const {
    auto               c = components();
    std::ostringstream out;
    bool               first = true;
    auto               sep   = [&] {
      if (!first) {
        out << " | ";
      }
      first = false;
    };
    if (!c.sporadic.empty()) {
      sep();
      out << '{';
      for (std::size_t i = 0; i < c.sporadic.size(); ++i) {
        out << (i ? "," : "") << c.sporadic[i];
      }
      out << '}';
    }
    for (auto const& r : c.rays) {
      sep();
      out << r.r << (r.dir == Direction::Up ? "+" : "-") << r.d << "N";
    }
    for (auto const& l : c.lines) {
      sep();
      out << l.r << "+" << l.d << "Z";
    }
    if (first) {
      out << "{}";
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Boolean operations
  ////////////////////////////////////////////////////////////////////////

  template <typename Op>
  ZSet ZSet::combine(ZSet const& a, ZSet const& b, Op op) {
    ZSet      out;
    Int const p = checked_lcm(a.period_, b.period_);
    Int const lo = std::min(a.lo_, b.lo_);
    Int const hi = std::max(a.hi_, b.hi_);
    out.period_ = p;
    out.lo_     = lo;
    out.hi_     = hi;
    out.mid_.resize(static_cast<std::size_t>(hi - lo));
    for (Int n = lo; n < hi; ++n) {
      out.mid_[n - lo] = op(a.contains(n), b.contains(n));
    }
    out.up_.resize(static_cast<std::size_t>(p));
    out.down_.resize(static_cast<std::size_t>(p));
    for (Int s = 0; s < p; ++s) {
      out.up_[s]   = op(a.up_[s % a.period_], b.up_[s % b.period_]);
      out.down_[s] = op(a.down_[s % a.period_], b.down_[s % b.period_]);
    }
    out.normalize();
    return out;
  }

  ZSet unite(ZSet const& a, ZSet const& b) {
    return ZSet::combine(a, b, [](bool x, bool y) { return x || y; });
  }

  ZSet intersect(ZSet const& a, ZSet const& b) {
    return ZSet::combine(a, b, [](bool x, bool y) { return x && y; });
  }

  ZSet difference(ZSet const& a, ZSet const& b) {
    return ZSet::combine(a, b, [](bool x, bool y) { return x && !y; });
  }

  ZSet symmetric_difference(ZSet const& a, ZSet const& b) {
    return ZSet::combine(a, b, [](bool x, bool y) { return x != y; });
  }

  ////////////////////////////////////////////////////////////////////////
  // Minkowski sum
  ////////////////////////////////////////////////////////////////////////

  ZSet minkowski_sum(ZSet const& a, ZSet const& b) {
    if (a.is_empty() || b.is_empty()) {
      return ZSet();
    }
    if (a.is_all() || b.is_all()) {
      return ZSet::all();
    }
    auto const ca = a.components();
    auto const cb = b.components();

    ZSet::Builder out;
    using Dir = ZSet::Direction;

    for (Int x : ca.sporadic) {
      for (Int y : cb.sporadic) {
        out.add_point(x + y);
      }
    }
    auto point_plus = [&out](std::vector<Int> const&        points,
                             ZSet::Components const& other) {
      for (Int x : points) {
        for (auto const& r : other.rays) {
          out.add_ray(r.r + x, r.d, r.dir);
        }
        for (auto const& l : other.lines) {
          out.add_line(l.r + x, l.d);
        }
      }
    };
    point_plus(ca.sporadic, cb);
    point_plus(cb.sporadic, ca);

    auto line_plus = [&out](std::vector<ZSet::Line> const& lines,
                            ZSet::Components const&        other) {
      for (auto const& l : lines) {
        for (auto const& r : other.rays) {
          out.add_line(l.r + r.r, std::gcd(l.d, r.d));
        }
        for (auto const& m : other.lines) {
          out.add_line(l.r + m.r, std::gcd(l.d, m.d));
        }
      }
    };
    line_plus(ca.lines, cb);
    // Lines of b against rays of a; line+line pairs were handled above.
    for (auto const& l : cb.lines) {
      for (auto const& r : ca.rays) {
        out.add_line(l.r + r.r, std::gcd(l.d, r.d));
      }
    }

    for (auto const& ra : ca.rays) {
      for (auto const& rb : cb.rays) {
        Int const base = ra.r + rb.r;
        Int const g    = std::gcd(ra.d, rb.d);
        if (ra.dir != rb.dir) {
          out.add_line(base, g);
          continue;
        }
        auto [small, conductor] = two_generator_monoid(ra.d / g, rb.d / g);
        Int const sign          = ra.dir == Dir::Up ? 1 : -1;
        for (Int k : small) {
          out.add_point(base + sign * g * k);
        }
        out.add_ray(base + sign * g * conductor, g, ra.dir);
      }
      if (out.full()) {
        break;
      }
    }
    return out.build();
  }

}  // namespace zsub
