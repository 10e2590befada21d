#include "zsub/subdirect.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <set>

#include "zsub/errors.hpp"

namespace zsub {

  using Int = std::int64_t;

  ////////////////////////////////////////////////////////////////////////
  // SubdirectDescription
  ////////////////////////////////////////////////////////////////////////

  SubdirectDescription::SubdirectDescription(FiniteSemigroup   S,
                                             std::vector<ZSet> fibers)
      : S_(std::move(S)), fibers_(std::move(fibers)) {
    if (fibers_.size() != S_.order()) {
      throw InvalidArgument("expected " + std::to_string(S_.order())
                            + " fibers, got " + std::to_string(fibers_.size()));
    }
  }

  SubdirectDescription::SubdirectDescription(FiniteSemigroup S)
      : S_(std::move(S)), fibers_(S_.order()) {}

  bool SubdirectDescription::is_closed() const {
    for (auto x : S_.elements()) {
      for (auto y : S_.elements()) {
        if (!minkowski_sum(fiber(x), fiber(y)).subset_of(
                fiber(S_.product(x, y)))) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // WindowedSubset
  ////////////////////////////////////////////////////////////////////////

  namespace {

    using Bits = std::vector<std::uint64_t>;

    // dst |= (src shifted by `shift` bit positions), truncated to `nbits`.
    void shift_or(Bits& dst, Bits const& src, Int shift, Int nbits) {
      auto const words = static_cast<Int>(dst.size());
      if (shift >= 0) {
        Int const ws = shift / 64;
        Int const bs = shift % 64;
        for (Int k = words - 1; k >= ws; --k) {
          std::uint64_t v = src[k - ws] << bs;
          if (bs != 0 && k - ws - 1 >= 0) {
            v |= src[k - ws - 1] >> (64 - bs);
          }
          dst[k] |= v;
        }
      } else {
        Int const s  = -shift;
        Int const ws = s / 64;
        Int const bs = s % 64;
        for (Int k = 0; k + ws < words; ++k) {
          std::uint64_t v = src[k + ws] >> bs;
          if (bs != 0 && k + ws + 1 < words) {
            v |= src[k + ws + 1] << (64 - bs);
          }
          dst[k] |= v;
        }
      }
      Int const tail = nbits % 64;
      if (tail != 0) {
        dst.back() &= (std::uint64_t{1} << tail) - 1;
      }
    }

  }  // namespace

  WindowedSubset::WindowedSubset(std::size_t order, Int W)
      : W_(W),
        words_(static_cast<std::size_t>((2 * W + 1 + 63) / 64)),
        bits_(order, Bits(words_, 0)) {}

  bool WindowedSubset::contains(ZPair p) const {
    if (p.n < -W_ || p.n > W_ || p.x.index < 1 || p.x.index > bits_.size()) {
      return false;
    }
    auto i = static_cast<std::size_t>(p.n + W_);
    return (bits_[p.x.index - 1][i / 64] >> (i % 64)) & 1U;
  }

  bool WindowedSubset::insert(ZPair p) {
    if (contains(p)) {
      return false;
    }
    auto i = static_cast<std::size_t>(p.n + W_);
    bits_.at(p.x.index - 1).at(i / 64) |= std::uint64_t{1} << (i % 64);
    return true;
  }

  std::vector<Int> WindowedSubset::fiber(ElementId x) const {
    std::vector<Int> out;
    auto const&      b = bits_.at(x.index - 1);
    for (std::size_t k = 0; k < words_; ++k) {
      std::uint64_t w = b[k];
      while (w != 0) {
        auto bit = static_cast<std::size_t>(std::countr_zero(w));
        out.push_back(static_cast<Int>(k * 64 + bit) - W_);
        w &= w - 1;
      }
    }
    return out;
  }

  std::vector<ZPair> WindowedSubset::pairs() const {
    std::vector<ZPair> out;
    for (std::uint32_t x = 1; x <= bits_.size(); ++x) {
      for (Int n : fiber(ElementId{x})) {
        out.push_back({n, ElementId{x}});
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t WindowedSubset::size() const {
    std::size_t total = 0;
    for (auto const& b : bits_) {
      for (auto w : b) {
        total += static_cast<std::size_t>(std::popcount(w));
      }
    }
    return total;
  }

  bool WindowedSubset::add_products(ElementId x, ElementId y, ElementId z) {
    Bits const xs     = bits_[x.index - 1];
    Bits const ys     = bits_[y.index - 1];
    Bits&      target = bits_[z.index - 1];
    Bits const before = target;
    Int const  nbits  = 2 * W_ + 1;
    for (std::size_t k = 0; k < words_; ++k) {
      std::uint64_t w = xs[k];
      while (w != 0) {
        auto bit = static_cast<Int>(std::countr_zero(w));
        Int  a   = static_cast<Int>(k) * 64 + bit - W_;
        shift_or(target, ys, a, nbits);
        w &= w - 1;
      }
    }
    return target != before;
  }

  WindowedSubset windowed_closure(FiniteSemigroup const& S,
                                  std::span<ZPair const> gens,
                                  Int                    W) {
    if (W <= 0) {
      throw WindowTooSmall("window must be positive");
    }
    WindowedSubset out(S.order(), W);
    for (auto const& g : gens) {
      if (!S.contains(g.x)) {
        throw InvalidArgument("generator element " + std::to_string(g.x.index)
                              + " is not in the semigroup");
      }
      if (std::abs(g.n) > W) {
        throw WindowTooSmall("generator (" + std::to_string(g.n) + ","
                             + S.label(g.x) + ") lies outside the window");
      }
      out.insert(g);
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto x : S.elements()) {
        for (auto y : S.elements()) {
          changed |= out.add_products(x, y, S.product(x, y));
        }
      }
    }
    return out;
  }

  Int windowed_completeness(std::span<ZPair const> gens, Int W) {
    bool neg = false, pos = false;
    Int  g   = 0;
    for (auto const& p : gens) {
      neg |= p.n < 0;
      pos |= p.n > 0;
      g = std::max(g, std::abs(p.n));
    }
    return neg && pos ? std::max<Int>(W - g, 0) : W;
  }

  ////////////////////////////////////////////////////////////////////////
  // Structured closure
  ////////////////////////////////////////////////////////////////////////

  ClosureResult structured_closure(FiniteSemigroup const& S,
                                   std::span<ZPair const> gens,
                                   std::size_t            max_rounds) {
    if (gens.empty()) {
      throw EmptyGenerators();
    }
    auto const                           n = S.order();
    std::map<std::uint32_t, std::vector<Int>> seeds;
    for (auto const& g : gens) {
      if (!S.contains(g.x)) {
        throw InvalidArgument("generator element " + std::to_string(g.x.index)
                              + " is not in the semigroup");
      }
      seeds[g.x.index].push_back(g.n);
    }
    std::vector<ZSet> fibers(n);
    for (auto const& [x, ns] : seeds) {
      fibers[x - 1] = ZSet::of(ns);
    }
    auto const idems = idempotents(S);

    // A pair (x, y) needs recomputing only if one of its fibers changed
    // since it was last combined. Sums within a round read the fibers as they
    // were at the start of the round; feeding fresh results back in
    // immediately lets finite supports double many times per round.
    std::uint64_t              tick = 1;
    std::vector<std::uint64_t> changed_at(n, 1);
    std::vector<std::uint64_t> combined_at(n * n, 0);

    auto update = [&](std::vector<ZSet>& into, std::size_t z, ZSet const& add) {
      ZSet merged = unite(into[z], add);
      if (merged != into[z]) {
        into[z]       = std::move(merged);
        changed_at[z] = tick;
        return true;
      }
      return false;
    };

    for (std::size_t round = 1; round <= max_rounds; ++round) {
      bool changed = false;
      ++tick;
      for (auto e : idems) {
        auto const z = e.index - 1;
        if (!fibers[z].is_empty()) {
          changed |= update(fibers, z, additive_closure(fibers[z]).value);
        }
      }
      auto const start = ++tick;
      ++tick;  // changes below must look newer than the pairs stamped `start`
      auto next = fibers;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          auto& stamp = combined_at[i * n + j];
          if (changed_at[i] <= stamp && changed_at[j] <= stamp) {
            continue;
          }
          stamp = start;
          if (fibers[i].is_empty() || fibers[j].is_empty()) {
            continue;
          }
          auto z = S.product(ElementId{static_cast<std::uint32_t>(i + 1)},
                             ElementId{static_cast<std::uint32_t>(j + 1)});
          changed |= update(next, z.index - 1, minkowski_sum(fibers[i], fibers[j]));
        }
      }
      fibers = std::move(next);
      if (!changed) {
        return {ClosureResult::Status::Stabilized,
                SubdirectDescription(S, std::move(fibers)),
                round};
      }
    }
    return {ClosureResult::Status::Unstabilized,
            SubdirectDescription(S, std::move(fibers)),
            max_rounds};
  }

  bool is_subdirect(SubdirectDescription const& P) {
    ZSet all;
    for (auto const& f : P.fibers()) {
      if (f.is_empty()) {
        return false;
      }
      all = unite(all, f);
    }
    return all.is_all();
  }

  ////////////////////////////////////////////////////////////////////////
  // Fiber structure and generating sets
  ////////////////////////////////////////////////////////////////////////

  std::string_view to_string(FiberCase c) noexcept {
    switch (c) {
      case FiberCase::Singleton:
        return "singleton";
      case FiberCase::Coset:
        return "coset";
      case FiberCase::PositiveRay:
        return "positive-ray";
      case FiberCase::NegativeRay:
        return "negative-ray";
    }
    return "?";
  }

  FiberStructure fiber_structure(SubdirectDescription const& P, ElementId x) {
    auto const& S = P.semigroup();
    auto        y = regular_witness(S, x);
    if (!y) {
      throw NotRegular(x.index);
    }
    FiberStructure out;
    out.x = x;
    out.y = *y;
    out.e = S.product(x, *y);

    ZSet const& tx = P.fiber(x);
    ZSet const& te = P.fiber(out.e);
    auto violation = [&](std::string const& what) {
      return StructureViolation("fiber of " + S.label(x) + ": " + what);
    };
    if (tx.is_empty() || te.is_empty()) {
      throw violation("empty fiber in a subdirect description");
    }
    out.idempotent_fiber = additive_closure(te);
    if (out.idempotent_fiber.value != te) {
      throw violation("fiber of idempotent " + S.label(out.e)
                      + " is not closed under addition");
    }
    out.step = out.idempotent_fiber.step;

    switch (out.idempotent_fiber.kind) {
      case IntCase::Zero: {
        out.kind = FiberCase::Singleton;
        auto m   = tx.min();
        if (!m || tx != ZSet::singleton(*m)) {
          throw violation("expected a single point, got " + tx.to_string());
        }
        out.r = *m;
        break;
      }
      case IntCase::Group: {
        out.kind = FiberCase::Coset;
        auto r   = tx.first_member_at_or_above(0);
        out.r    = r.value_or(0);
        if (!r || tx != ZSet::line(out.r, out.step)) {
          throw violation("expected a coset of " + std::to_string(out.step)
                          + "Z, got " + tx.to_string());
        }
        break;
      }
      case IntCase::PositiveNumerical:
      case IntCase::NegativeNumerical: {
        bool const up = out.idempotent_fiber.kind == IntCase::PositiveNumerical;
        out.kind      = up ? FiberCase::PositiveRay : FiberCase::NegativeRay;
        auto extreme  = up ? tx.min() : tx.max();
        if (!extreme) {
          throw violation("expected a fiber bounded on one side, got "
                          + tx.to_string());
        }
        out.r = *extreme;
        ZSet const progression = ZSet::ray(
            out.r, out.step, up ? ZSet::Direction::Up : ZSet::Direction::Down);
        if (!tx.subset_of(progression)
            || !difference(progression, tx).is_finite()) {
          throw violation("not cofinite in its progression: " + tx.to_string());
        }
        break;
      }
    }
    ZSet const translate = te.shifted(out.r);
    if (!translate.subset_of(tx)) {
      throw violation("r + fiber(e) is not contained in the fiber");
    }
    ZSet const F = difference(tx, translate);
    if (!F.is_finite()) {
      throw violation("exceptional set is infinite");
    }
    out.exceptional = F.sporadic();
    return out;
  }

  std::vector<ZPair> finite_generating_set(SubdirectDescription const& P) {
    std::set<ZPair> out;
    for (auto x : P.semigroup().elements()) {
      auto fs = fiber_structure(P, x);
      out.insert({fs.r, x});
      for (Int f : fs.exceptional) {
        out.insert({f, x});
      }
      for (Int b : minimal_generators(fs.idempotent_fiber)) {
        out.insert({b, fs.e});
      }
    }
    return {out.begin(), out.end()};
  }

  std::string_view to_string(GenerationCheck::Route r) noexcept {
    return r == GenerationCheck::Route::Structured ? "structured" : "windowed";
  }

  GenerationCheck verify_generation(SubdirectDescription const& P,
                                    std::span<ZPair const>      A,
                                    Int                         W,
                                    std::size_t                 max_rounds) {
    auto const& S = P.semigroup();
    for (auto const& a : A) {
      if (!P.contains(a)) {
        throw GeneratorsNotInP("(" + std::to_string(a.n) + ","
                               + (S.contains(a.x) ? S.label(a.x) : "?")
                               + ") is not in the described subsemigroup");
      }
    }
    if (A.empty()) {
      return {false, GenerationCheck::Route::Structured};
    }
    auto closure = structured_closure(S, A, max_rounds);
    if (closure.stabilized()) {
      return {closure.description == P, GenerationCheck::Route::Structured};
    }
    auto const window = windowed_closure(S, A, W);
    Int const  c      = windowed_completeness(A, W);
    for (auto x : S.elements()) {
      for (Int n = -c; n <= c; ++n) {
        if (window.contains({n, x}) != P.contains({n, x})) {
          return {false, GenerationCheck::Route::Windowed};
        }
      }
    }
    return {true, GenerationCheck::Route::Windowed};
  }

  ////////////////////////////////////////////////////////////////////////
  // Generator text
  ////////////////////////////////////////////////////////////////////////

  std::vector<ZPair> parse_generators(FiniteSemigroup const& S,
                                      std::string_view       text) {
    std::vector<ZPair> out;
    std::size_t        i    = 0;
    auto               skip = [&] {
      while (i < text.size()
             && (std::isspace(static_cast<unsigned char>(text[i]))
                 || text[i] == ',')) {
        ++i;
      }
    };
    auto fail = [&](std::string const& what) {
      return ParseError("generator list at offset " + std::to_string(i) + ": "
                        + what);
    };
    skip();
    while (i < text.size()) {
      if (text[i] != '(') {
        throw fail("expected '('");
      }
      auto close = text.find(')', i);
      if (close == std::string_view::npos) {
        throw fail("missing ')'");
      }
      auto inner = text.substr(i + 1, close - i - 1);
      auto comma = inner.find(',');
      if (comma == std::string_view::npos) {
        throw fail("expected '(integer,element)'");
      }
      auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
          s.remove_prefix(1);
        }
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
          s.remove_suffix(1);
        }
        return s;
      };
      auto num   = trim(inner.substr(0, comma));
      auto label = trim(inner.substr(comma + 1));
      Int  value = 0;
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
      if (ec != std::errc() || ptr != num.data() + num.size()) {
        throw fail("'" + std::string(num) + "' is not an integer");
      }
      auto x = S.find(label);
      if (!x) {
        throw fail("unknown element '" + std::string(label) + "'");
      }
      out.push_back({value, *x});
      i = close + 1;
      skip();
    }
    if (out.empty()) {
      throw ParseError("generator list is empty");
    }
    return out;
  }

}  // namespace zsub
