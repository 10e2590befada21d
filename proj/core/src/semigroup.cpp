#include "zsub/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "zsub/errors.hpp"

namespace zsub {

  namespace {

    std::vector<std::string> split_ws(std::string_view line) {
      std::vector<std::string> out;
      std::size_t              i = 0;
      while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
          ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') {
          ++j;
        }
        if (j > i) {
          out.emplace_back(line.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }

    std::optional<long long> to_integer(std::string const& token) {
      long long   value = 0;
      char const* first = token.data();
      char const* last  = token.data() + token.size();
      auto [ptr, ec]    = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last) {
        return std::nullopt;
      }
      return value;
    }

    struct DataLine {
      std::size_t number;
      std::string text;
    };

  }  // namespace

  FiniteSemigroup::FiniteSemigroup(
      std::vector<std::vector<std::uint32_t>> const& rows,
      std::vector<std::string>                       names)
      : order_(rows.size()), names_(std::move(names)) {
    if (order_ == 0) {
      throw MalformedTable("order must be positive", 0);
    }
    if (order_ > kMaxOrder) {
      throw MalformedTable("order " + std::to_string(order_)
                               + " exceeds the supported maximum "
                               + std::to_string(kMaxOrder),
                           0);
    }
    if (!names_.empty()) {
      if (names_.size() != order_) {
        throw MalformedTable("expected " + std::to_string(order_)
                                 + " names, got "
                                 + std::to_string(names_.size()),
                             0);
      }
      std::set<std::string> distinct(names_.begin(), names_.end());
      if (distinct.size() != names_.size()) {
        throw MalformedTable("element names must be distinct", 0);
      }
    }
    table_.reserve(order_ * order_);
    for (std::size_t i = 0; i < order_; ++i) {
      if (rows[i].size() != order_) {
        throw MalformedTable("row " + std::to_string(i + 1) + " has "
                                 + std::to_string(rows[i].size())
                                 + " entries, expected "
                                 + std::to_string(order_),
                             0);
      }
      for (auto v : rows[i]) {
        if (v < 1 || v > order_) {
          throw MalformedTable("entry " + std::to_string(v) + " in row "
                                   + std::to_string(i + 1)
                                   + " is outside 1.."
                                   + std::to_string(order_),
                               0);
        }
        table_.push_back(static_cast<std::uint16_t>(v));
      }
    }
    auto const n = static_cast<std::uint32_t>(order_);
    for (std::uint32_t i = 1; i <= n; ++i) {
      for (std::uint32_t j = 1; j <= n; ++j) {
        ElementId ij = product(ElementId{i}, ElementId{j});
        for (std::uint32_t k = 1; k <= n; ++k) {
          if (product(ij, ElementId{k})
              != product(ElementId{i}, product(ElementId{j}, ElementId{k}))) {
            throw NotAssociative(i, j, k);
          }
        }
      }
    }
  }

  std::vector<ElementId> FiniteSemigroup::elements() const {
    std::vector<ElementId> out;
    out.reserve(order_);
    for (std::uint32_t i = 1; i <= order_; ++i) {
      out.push_back(ElementId{i});
    }
    return out;
  }

  std::vector<ElementId> FiniteSemigroup::elements_with_identity() const {
    std::vector<ElementId> out;
    out.reserve(order_ + 1);
    for (std::uint32_t i = 0; i <= order_; ++i) {
      out.push_back(ElementId{i});
    }
    return out;
  }

  std::string FiniteSemigroup::label(ElementId x) const {
    if (x.is_adjoined_identity()) {
      return "1*";
    }
    if (!names_.empty()) {
      return names_[x.index - 1];
    }
    return std::to_string(x.index);
  }

  std::optional<ElementId> FiniteSemigroup::find(std::string_view label) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == label) {
        return ElementId{static_cast<std::uint32_t>(i + 1)};
      }
    }
    auto v = to_integer(std::string(label));
    if (v && *v >= 1 && static_cast<std::size_t>(*v) <= order_) {
      return ElementId{static_cast<std::uint32_t>(*v)};
    }
    return std::nullopt;
  }

  std::vector<std::vector<std::uint32_t>> FiniteSemigroup::rows() const {
    std::vector<std::vector<std::uint32_t>> out(
        order_, std::vector<std::uint32_t>(order_));
    for (std::size_t i = 0; i < order_; ++i) {
      for (std::size_t j = 0; j < order_; ++j) {
        out[i][j] = table_[i * order_ + j];
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // .cay format
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup parse_cayley(std::istream& in) {
    std::vector<DataLine> lines;
    std::string           raw;
    std::size_t           number = 0;
    while (std::getline(in, raw)) {
      ++number;
      if (!raw.empty() && raw.back() == '\r') {
        raw.pop_back();
      }
      if (!raw.empty() && raw.front() == '#') {
        continue;
      }
      if (split_ws(raw).empty()) {
        continue;
      }
      lines.push_back({number, raw});
    }
    if (lines.empty()) {
      throw MalformedTable("missing order line", number);
    }
    auto header = split_ws(lines[0].text);
    auto n      = header.size() == 1 ? to_integer(header[0]) : std::nullopt;
    if (!n || *n < 1) {
      throw MalformedTable("first data line must be a positive integer order",
                           lines[0].number);
    }
    if (static_cast<std::size_t>(*n) > FiniteSemigroup::kMaxOrder) {
      throw MalformedTable("order " + std::to_string(*n)
                               + " exceeds the supported maximum "
                               + std::to_string(FiniteSemigroup::kMaxOrder),
                           lines[0].number);
    }
    auto const order = static_cast<std::size_t>(*n);

    std::size_t              next = 1;
    std::vector<std::string> names;
    if (lines.size() == order + 2) {
      names = split_ws(lines[1].text);
      if (names.size() != order) {
        throw MalformedTable("expected " + std::to_string(order) + " names",
                             lines[1].number);
      }
      std::set<std::string> distinct(names.begin(), names.end());
      if (distinct.size() != order) {
        throw MalformedTable("element names must be distinct",
                             lines[1].number);
      }
      next = 2;
    } else if (lines.size() != order + 1) {
      throw MalformedTable(
          "expected " + std::to_string(order) + " table rows, found "
              + std::to_string(lines.size() > 1 ? lines.size() - 1 : 0),
          lines.back().number);
    }

    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(order);
    for (std::size_t i = next; i < lines.size(); ++i) {
      auto tokens = split_ws(lines[i].text);
      if (tokens.size() != order) {
        throw MalformedTable("row has " + std::to_string(tokens.size())
                                 + " entries, expected "
                                 + std::to_string(order),
                             lines[i].number);
      }
      std::vector<std::uint32_t> row;
      row.reserve(order);
      for (auto const& t : tokens) {
        auto v = to_integer(t);
        if (!v || *v < 1 || static_cast<std::size_t>(*v) > order) {
          throw MalformedTable("entry '" + t + "' is not an integer in 1.."
                                   + std::to_string(order),
                               lines[i].number);
        }
        row.push_back(static_cast<std::uint32_t>(*v));
      }
      rows.push_back(std::move(row));
    }
    return FiniteSemigroup(rows, std::move(names));
  }

  FiniteSemigroup parse_cayley(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_cayley(in);
  }

  FiniteSemigroup read_cayley_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open " + path);
    }
    return parse_cayley(in);
  }

  std::string serialize_cayley(FiniteSemigroup const& S,
                               std::string_view        comment) {
    std::ostringstream out;
    if (!comment.empty()) {
      out << "# " << comment << '\n';
    }
    out << S.order() << '\n';
    if (S.has_names()) {
      auto const& names = S.names();
      for (std::size_t i = 0; i < names.size(); ++i) {
        out << (i ? " " : "") << names[i];
      }
      out << '\n';
    }
    for (auto const& row : S.rows()) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        out << (j ? " " : "") << row[j];
      }
      out << '\n';
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Element-level properties
  ////////////////////////////////////////////////////////////////////////

  bool is_idempotent(FiniteSemigroup const& S, ElementId x) noexcept {
    return S.product(x, x) == x;
  }

  std::vector<ElementId> idempotents(FiniteSemigroup const& S) {
    std::vector<ElementId> out;
    for (auto x : S.elements()) {
      if (is_idempotent(S, x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::optional<ElementId> regular_witness(FiniteSemigroup const& S,
                                           ElementId               x) {
    for (auto y : S.elements()) {
      if (S.product(x, y, x) == x) {
        return S.product(y, x, y);
      }
    }
    return std::nullopt;
  }

  bool is_regular_element(FiniteSemigroup const& S, ElementId x) {
    return regular_witness(S, x).has_value();
  }

  bool is_regular_semigroup(FiniteSemigroup const& S) {
    auto elts = S.elements();
    return std::all_of(elts.begin(), elts.end(), [&S](ElementId x) {
      return is_regular_element(S, x);
    });
  }

  std::vector<ElementId> powers(FiniteSemigroup const& S, ElementId s) {
    std::vector<ElementId> out{s};
    std::vector<bool>      seen(S.order() + 1, false);
    seen[s.index] = true;
    ElementId p   = S.product(s, s);
    while (!seen[p.index]) {
      seen[p.index] = true;
      out.push_back(p);
      p = S.product(p, s);
    }
    return out;
  }

  bool is_completely_regular(FiniteSemigroup const& S) {
    for (auto s : S.elements()) {
      // s lies in {s^k : k >= 2} iff the power sequence returns to s.
      ElementId p = S.product(s, s);
      bool      found = false;
      for (std::size_t k = 2; k <= S.order() + 1; ++k) {
        if (p == s) {
          found = true;
          break;
        }
        p = S.product(p, s);
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  bool n_condition(FiniteSemigroup const& S) {
    for (auto s : S.elements()) {
      bool ok = false;
      for (auto t : S.elements()) {
        if (S.product(s, t) == s || S.product(t, s) == s) {
          ok = true;
          break;
        }
      }
      if (!ok) {
        return false;
      }
    }
    return true;
  }

}  // namespace zsub
