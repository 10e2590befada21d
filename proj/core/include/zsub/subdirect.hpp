#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "zsub/int_semigroup.hpp"
#include "zsub/semigroup.hpp"
#include "zsub/zset.hpp"

namespace zsub {

  /// An element (n, x) of Z x S. ElementId 0 stands for the adjoined
  /// identity when the pair is read as an element of (Z x S)^1.
  struct ZPair {
    std::int64_t n = 0;
    ElementId    x;

    constexpr auto operator<=>(ZPair const&) const = default;
  };

  inline ZPair multiply(FiniteSemigroup const& S, ZPair a, ZPair b) {
    return {a.n + b.n, S.product(a.x, b.x)};
  }

  /// A subset T of Z x S given by its fibers T_x = {n : (n, x) in T}.
  class SubdirectDescription {
   public:
    SubdirectDescription(FiniteSemigroup S, std::vector<ZSet> fibers);

    /// Every fiber empty.
    explicit SubdirectDescription(FiniteSemigroup S);

    FiniteSemigroup const&   semigroup() const noexcept { return S_; }
    std::vector<ZSet> const& fibers() const noexcept { return fibers_; }
    ZSet const&              fiber(ElementId x) const {
      return fibers_.at(x.index - 1);
    }

    bool contains(ZPair p) const {
      return S_.contains(p.x) && fiber(p.x).contains(p.n);
    }

    /// fiber(x) + fiber(y) is contained in fiber(xy) for all x, y.
    bool is_closed() const;

    bool operator==(SubdirectDescription const&) const = default;

   private:
    FiniteSemigroup   S_;
    std::vector<ZSet> fibers_;
  };

  /// A finite subset of [-W, W] x S stored as one bitset per element.
  class WindowedSubset {
   public:
    WindowedSubset(std::size_t order, std::int64_t W);

    std::int64_t window() const noexcept { return W_; }

    bool contains(ZPair p) const;
    bool insert(ZPair p);  // true if newly added

    std::vector<ZPair> pairs() const;
    std::vector<std::int64_t> fiber(ElementId x) const;
    std::size_t size() const;

    /// Adds (a + b, z) for every a in fiber x, b in fiber y that stays in the
    /// window. Returns true if anything was added.
    bool add_products(ElementId x, ElementId y, ElementId z);

    bool operator==(WindowedSubset const&) const = default;

   private:
    std::int64_t                        W_;
    std::size_t                         words_;
    std::vector<std::vector<std::uint64_t>> bits_;
  };

  /// The closure of `gens` under multiplication in Z x S, restricted to
  /// products of two elements whose first coordinate stays in [-W, W].
  /// Sound under-approximation of <gens> on the window.
  /// Throws WindowTooSmall if a generator lies outside the window.
  WindowedSubset windowed_closure(FiniteSemigroup const& S,
                                  std::span<ZPair const> gens,
                                  std::int64_t           W);

  /// Half-width of the first-coordinate region on which windowed_closure is
  /// claimed complete: W - max|n| for mixed-sign generators, W otherwise.
  std::int64_t windowed_completeness(std::span<ZPair const> gens,
                                     std::int64_t           W);

  struct ClosureResult {
    enum class Status { Stabilized, Unstabilized };

    Status               status;
    SubdirectDescription description;
    std::size_t          rounds;

    bool stabilized() const noexcept { return status == Status::Stabilized; }
  };

  inline constexpr std::size_t kDefaultMaxRounds = 64;
  inline constexpr std::int64_t kDefaultWindow   = 200;

  /// Fixpoint of fiber(xy) <- fiber(xy) u (fiber(x) + fiber(y)), with the
  /// fiber of every idempotent replaced by its additive closure after each
  /// round. Stabilized results are exactly <gens>.
  ClosureResult structured_closure(FiniteSemigroup const& S,
                                   std::span<ZPair const> gens,
                                   std::size_t max_rounds = kDefaultMaxRounds);

  /// Every fiber nonempty and their union is Z.
  bool is_subdirect(SubdirectDescription const& P);

  enum class FiberCase { Singleton, Coset, PositiveRay, NegativeRay };

  std::string_view to_string(FiberCase c) noexcept;

  /// fiber(x) = F u (r + fiber(e)) with e = xy for a generalised inverse y.
  struct FiberStructure {
    ElementId                 x;
    ElementId                 y;
    ElementId                 e;
    std::int64_t              r = 0;
    FiberCase                 kind = FiberCase::Singleton;
    std::int64_t              step = 0;  // d; 0 in the singleton case
    std::vector<std::int64_t> exceptional;  // F, sorted
    IntSubsemigroupClass      idempotent_fiber;
  };

  /// Throws NotRegular if x has no generalised inverse and
  /// StructureViolation if the fiber does not have the forced shape.
  FiberStructure fiber_structure(SubdirectDescription const& P, ElementId x);

  /// The union over x of {(r_x, x)}, F_x x {x} and B_e x {e}, where B_e are
  /// the minimal generators of fiber(e). Sorted, without duplicates.
  std::vector<ZPair> finite_generating_set(SubdirectDescription const& P);

  struct GenerationCheck {
    enum class Route { Structured, Windowed };

    bool  certified;
    Route route;
  };

  std::string_view to_string(GenerationCheck::Route r) noexcept;

  /// Whether <A> = P. Uses structured_closure; when that does not stabilise
  /// within max_rounds, compares windowed_closure(A, W) with P on the
  /// completeness region. Throws GeneratorsNotInP unless A lies in P.
  GenerationCheck verify_generation(SubdirectDescription const& P,
                                    std::span<ZPair const>      A,
                                    std::int64_t W = kDefaultWindow,
                                    std::size_t  max_rounds = kDefaultMaxRounds);

  /// Parses "(n,label),(n,label),..." against the labels of S.
  std::vector<ZPair> parse_generators(FiniteSemigroup const& S,
                                      std::string_view       text);

}  // namespace zsub
