#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zsub/green.hpp"
#include "zsub/semigroup.hpp"
#include "zsub/subdirect.hpp"
#include "zsub/zset.hpp"

namespace zsub {

  /// A finitely described M subset of N0 with 0 in M: a finite support and,
  /// optionally, every integer from `tail_from` on.
  ///
  /// Stored canonically: support sorted and below the tail, and the tail
  /// start as small as possible, so == is set equality. Text form is
  /// "0,2,3" or "0,1,+4".
  class MSpec {
   public:
    using Int = std::int64_t;

    /// Throws InvalidArgument unless the set lies in N0 and contains 0.
    explicit MSpec(std::vector<Int> support,
                   std::optional<Int> tail_from = std::nullopt);

    static MSpec parse(std::string_view text);

    /// Throws NotPMShaped unless `set` is finite or cofinite in N0 and
    /// contains 0.
    static MSpec from_zset(ZSet const& set);

    std::vector<Int> const& support() const noexcept { return support_; }
    std::optional<Int>      tail_from() const noexcept { return tail_; }

    bool contains(Int n) const;
    ZSet to_zset() const;
    std::string to_string() const;

    bool operator==(MSpec const&) const = default;

   private:
    std::vector<Int>   support_;
    std::optional<Int> tail_;
  };

  /// P_M = ({0} x L) u (M x K) u (Z x I) inside Z x S.
  struct PMProduct {
    FiniteSemigroup      semigroup;
    JDecomposition       j;
    LKIDecomposition     lki;
    MSpec                m;
    SubdirectDescription description;
  };

  /// Throws RegularSemigroup if S has no non-regular J-class, and
  /// StructureViolation if the closure or subdirectness re-check fails.
  PMProduct build_pm(FiniteSemigroup const& S, MSpec const& m);

  /// The S-level facts the closure of P_M rests on: I is an ideal,
  /// K.K is inside I, and L.K, K.L are inside K u I. Returns an empty string
  /// when all hold, otherwise a description of the first failure.
  std::string check_pm_closure_cases(FiniteSemigroup const&  S,
                                     LKIDecomposition const& lki);

  /// The J-relation of P_M read off structurally: x J y in S, and the first
  /// coordinates agree unless both x and y lie in I. Throws NotInP.
  bool pm_j_related(PMProduct const& P, ZPair alpha, ZPair beta);

  /// Witnesses u1 alpha u2 = beta and v1 beta v2 = alpha with u1, u2, v1, v2
  /// in P_M^1, built from S^1 witnesses (equal first coordinates) or from
  /// witnesses inside the regular J-class (both in Z x I). Absent when the
  /// pair is not structurally related. Throws NotInP.
  struct PMJWitnesses {
    ZPair u1, u2, v1, v2;
  };
  std::optional<PMJWitnesses> pm_j_witnesses(PMProduct const& P,
                                             ZPair            alpha,
                                             ZPair            beta);

  enum class OrderClass { Finite, Infinite };

  std::string_view to_string(OrderClass c) noexcept;

  /// Finite iff the first coordinate is 0. Throws NotInP.
  OrderClass element_order_class(PMProduct const& P, ZPair alpha);

  /// Reads M back from a description of P_M shape over `lki`: L fibers are
  /// {0}, I fibers are Z, and all K fibers equal one set M. Throws
  /// NotPMShaped.
  MSpec recover_m(SubdirectDescription const& description,
                  LKIDecomposition const&     lki);

  /// Evidence that P_{M1} and P_{M2} are not isomorphic.
  struct NonIsoCertificate {
    std::int64_t witness;        // least element of M1 symmetric-difference M2
    bool         witness_in_first;
    ElementId    k_element;      // a representative of K
    OrderClass   witness_order;  // order class of (witness, k)
    std::size_t  witness_j_class_size;  // |J-class of (witness, k)| = |K|
    bool         square_in_I;    // k^2 in I, so (witness, k)^2 is in Z x I
    std::vector<std::string> chain;
  };

  /// Returns nullopt when m1 == m2. Throws RegularSemigroup.
  std::optional<NonIsoCertificate> noniso_certificate(FiniteSemigroup const& S,
                                                      MSpec const&           m1,
                                                      MSpec const&           m2);

  /// Same, reusing a decomposition already computed for S.
  std::optional<NonIsoCertificate>
  noniso_certificate(FiniteSemigroup const&  S,
                     LKIDecomposition const& lki,
                     MSpec const&            m1,
                     MSpec const&            m2);

}  // namespace zsub
