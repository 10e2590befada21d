#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zsub {

  /// An element of a finite semigroup, identified by its 1-based row in the
  /// Cayley table. Index 0 is reserved for the identity adjoined in S^1.
  struct ElementId {
    std::uint32_t index = 0;

    constexpr bool is_adjoined_identity() const noexcept {
      return index == 0;
    }
    constexpr auto operator<=>(ElementId const&) const = default;
  };

  inline constexpr ElementId kAdjoinedIdentity{0};

  /// A finite semigroup given by its Cayley table.
  ///
  /// Objects are immutable once constructed and always associative: every
  /// constructor validates the table exhaustively.
  class FiniteSemigroup {
   public:
    static constexpr std::size_t kMaxOrder = 256;

    /// Rows are 1-based products: rows[i-1][j-1] is the index of e_i * e_j.
    /// Throws MalformedTable or NotAssociative.
    explicit FiniteSemigroup(std::vector<std::vector<std::uint32_t>> const& rows,
                             std::vector<std::string>                names = {});

    std::size_t order() const noexcept { return order_; }

    /// Table lookup. The adjoined identity (index 0) acts as a two-sided
    /// identity, so this is also the product of S^1.
    ElementId product(ElementId x, ElementId y) const noexcept {
      if (x.is_adjoined_identity()) {
        return y;
      }
      if (y.is_adjoined_identity()) {
        return x;
      }
      return ElementId{table_[(x.index - 1) * order_ + (y.index - 1)]};
    }

    ElementId product(ElementId x, ElementId y, ElementId z) const noexcept {
      return product(product(x, y), z);
    }

    /// All elements 1..n in index order.
    std::vector<ElementId> elements() const;

    /// 0, 1, ..., n: the elements of S^1 with the adjoined identity first.
    std::vector<ElementId> elements_with_identity() const;

    bool has_names() const noexcept { return !names_.empty(); }
    std::vector<std::string> const& names() const noexcept { return names_; }

    /// The display label of x: its name if names were given, else its index.
    std::string label(ElementId x) const;

    /// Resolves a label: names take precedence, then 1-based indices.
    std::optional<ElementId> find(std::string_view label) const;

    bool contains(ElementId x) const noexcept {
      return x.index >= 1 && x.index <= order_;
    }

    std::vector<std::vector<std::uint32_t>> rows() const;

    bool operator==(FiniteSemigroup const& other) const = default;

   private:
    std::size_t                order_;
    std::vector<std::uint16_t> table_;
    std::vector<std::string>   names_;
  };

  /// Reads the .cay text format. Throws MalformedTable or NotAssociative.
  FiniteSemigroup parse_cayley(std::istream& in);
  FiniteSemigroup parse_cayley(std::string_view text);
  FiniteSemigroup read_cayley_file(std::string const& path);

  /// Writes the .cay text format; parse_cayley(serialize_cayley(S)) == S.
  std::string serialize_cayley(FiniteSemigroup const& S,
                               std::string_view        comment = {});

  std::vector<ElementId> idempotents(FiniteSemigroup const& S);

  bool is_idempotent(FiniteSemigroup const& S, ElementId x) noexcept;

  /// Returns the least-index y with xyx = x, replaced by yxy so the result
  /// is a generalised inverse of x. Absent iff x is not regular.
  std::optional<ElementId> regular_witness(FiniteSemigroup const& S,
                                           ElementId               x);

  bool is_regular_element(FiniteSemigroup const& S, ElementId x);

  bool is_regular_semigroup(FiniteSemigroup const& S);

  /// Every s lies in {s^k : k >= 2}, i.e. S is a union of groups.
  bool is_completely_regular(FiniteSemigroup const& S);

  /// For every s there is t with st = s or ts = s.
  bool n_condition(FiniteSemigroup const& S);

  /// The distinct powers s, s^2, ..., in order of first appearance.
  std::vector<ElementId> powers(FiniteSemigroup const& S, ElementId s);

}  // namespace zsub
