#include "zsub/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "zsub/errors.hpp"

namespace zsub::corpus {

  namespace {

    using Rows = std::vector<std::vector<std::uint32_t>>;

    Rows square(std::size_t n) {
      return Rows(n, std::vector<std::uint32_t>(n, 0));
    }

    // Maps {0..n-1} -> {0..n-1} as image lists, lexicographic.
    std::vector<std::vector<std::size_t>> all_maps(std::size_t n) {
      std::vector<std::vector<std::size_t>> out;
      std::vector<std::size_t>              img(n, 0);
      for (;;) {
        out.push_back(img);
        std::size_t i = n;
        while (i > 0) {
          --i;
          if (++img[i] < n) {
            break;
          }
          img[i] = 0;
          if (i == 0) {
            return out;
          }
        }
      }
    }

    std::string image_name(std::vector<std::size_t> const& img) {
      std::string s = "[";
      for (std::size_t i = 0; i < img.size(); ++i) {
        s += (i ? "," : "") + std::to_string(img[i] + 1);
      }
      return s + "]";
    }

    FiniteSemigroup from_maps(std::vector<std::vector<std::size_t>> const& maps) {
      auto const n    = maps.size();
      Rows       rows = square(n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          std::vector<std::size_t> c(maps[a].size());
          for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] = maps[b][maps[a][i]];
          }
          auto it    = std::find(maps.begin(), maps.end(), c);
          rows[a][b] = static_cast<std::uint32_t>(it - maps.begin() + 1);
        }
      }
      std::vector<std::string> names;
      for (auto const& m : maps) {
        names.push_back(image_name(m));
      }
      return FiniteSemigroup(rows, std::move(names));
    }

  }  // namespace

  FiniteSemigroup null_semigroup(std::size_t n) {
    if (n == 0) {
      throw UnsupportedParams("null semigroup needs n >= 1");
    }
    Rows rows = square(n);
    for (auto& row : rows) {
      std::fill(row.begin(), row.end(), static_cast<std::uint32_t>(n));
    }
    std::vector<std::string> names;
    if (n == 2) {
      names = {"a", "z"};
    } else {
      for (std::size_t i = 1; i < n; ++i) {
        names.push_back("a" + std::to_string(i));
      }
      names.push_back("z");
    }
    return FiniteSemigroup(rows, std::move(names));
  }

  FiniteSemigroup monogenic(std::size_t index, std::size_t period) {
    if (index == 0 || period == 0) {
      throw UnsupportedParams("monogenic semigroup needs index, period >= 1");
    }
    auto const n      = index + period - 1;
    auto       reduce = [&](std::size_t k) {
      return k < index + period ? k : index + (k - index) % period;
    };
    Rows                     rows = square(n);
    std::vector<std::string> names;
    for (std::size_t a = 1; a <= n; ++a) {
      names.push_back(a == 1 ? "s" : "s^" + std::to_string(a));
      for (std::size_t b = 1; b <= n; ++b) {
        rows[a - 1][b - 1] = static_cast<std::uint32_t>(reduce(a + b));
      }
    }
    return FiniteSemigroup(rows, std::move(names));
  }

  FiniteSemigroup semilattice_chain(std::size_t n) {
    if (n == 0) {
      throw UnsupportedParams("semilattice chain needs n >= 1");
    }
    Rows                     rows = square(n);
    std::vector<std::string> names;
    for (std::size_t a = 1; a <= n; ++a) {
      names.push_back(n == 2 ? (a == 1 ? "e" : "f") : "e" + std::to_string(a));
      for (std::size_t b = 1; b <= n; ++b) {
        rows[a - 1][b - 1] = static_cast<std::uint32_t>(std::max(a, b));
      }
    }
    return FiniteSemigroup(rows, std::move(names));
  }

  FiniteSemigroup cyclic_group(std::size_t n) {
    if (n == 0) {
      throw UnsupportedParams("cyclic group needs n >= 1");
    }
    Rows                     rows = square(n);
    std::vector<std::string> names;
    for (std::size_t a = 0; a < n; ++a) {
      if (n == 1) {
        names.push_back("e");
      } else {
        names.push_back(a == 0 ? "1" : a == 1 ? "g" : "g^" + std::to_string(a));
      }
      for (std::size_t b = 0; b < n; ++b) {
        rows[a][b] = static_cast<std::uint32_t>((a + b) % n + 1);
      }
    }
    return FiniteSemigroup(rows, std::move(names));
  }

  FiniteSemigroup symmetric_group_3() {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t>              p{0, 1, 2};
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return from_maps(perms);
  }

  FiniteSemigroup full_transformation(std::size_t n) {
    if (n == 0 || n > 3) {
      throw UnsupportedParams("full transformation monoid needs 1 <= n <= 3");
    }
    return from_maps(all_maps(n));
  }

  FiniteSemigroup rectangular_band(std::size_t p, std::size_t q) {
    if (p == 0 || q == 0) {
      throw UnsupportedParams("rectangular band needs p, q >= 1");
    }
    auto const               n    = p * q;
    Rows                     rows = square(n);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < q; ++j) {
        names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
        for (std::size_t k = 0; k < p; ++k) {
          for (std::size_t l = 0; l < q; ++l) {
            rows[i * q + j][k * q + l] = static_cast<std::uint32_t>(i * q + l + 1);
          }
        }
      }
    }
    if (p > 9 || q > 9) {
      names.clear();
    }
    return FiniteSemigroup(rows, std::move(names));
  }

  Entry generate(std::string_view kind, std::vector<std::size_t> const& params) {
    auto need = [&](std::size_t count) {
      if (params.size() != count) {
        throw UnsupportedParams(std::string(kind) + " takes "
                                + std::to_string(count) + " parameter(s)");
      }
    };
    auto num = [&](std::size_t i) { return std::to_string(params[i]); };
    if (kind == "null") {
      need(1);
      return {"null-" + num(0), null_semigroup(params[0])};
    }
    if (kind == "monogenic") {
      need(2);
      return {"monogenic-" + num(0) + "-" + num(1),
              monogenic(params[0], params[1])};
    }
    if (kind == "semilattice") {
      need(1);
      return {"semilattice-" + num(0), semilattice_chain(params[0])};
    }
    if (kind == "cyclic") {
      need(1);
      return {"cyclic-" + num(0), cyclic_group(params[0])};
    }
    if (kind == "sym3") {
      need(0);
      return {"sym-3", symmetric_group_3()};
    }
    if (kind == "transformation") {
      need(1);
      return {"transformation-" + num(0), full_transformation(params[0])};
    }
    if (kind == "rectangular") {
      need(2);
      return {"rectangular-" + num(0) + "-" + num(1),
              rectangular_band(params[0], params[1])};
    }
    throw UnsupportedParams("unknown corpus kind '" + std::string(kind) + "'");
  }

  std::vector<Entry> standard() {
    std::vector<Entry> out;
    for (std::size_t n = 1; n <= 5; ++n) {
      out.push_back(generate("null", {n}));
    }
    for (std::size_t i = 1; i <= 4; ++i) {
      for (std::size_t p = 1; p <= 3; ++p) {
        out.push_back(generate("monogenic", {i, p}));
      }
    }
    for (std::size_t n = 2; n <= 4; ++n) {
      out.push_back(generate("semilattice", {n}));
    }
    for (std::size_t n = 1; n <= 6; ++n) {
      out.push_back(generate("cyclic", {n}));
    }
    out.push_back(generate("sym3", {}));
    for (auto [p, q] : {std::pair<std::size_t, std::size_t>{1, 2},
                        {2, 1},
                        {2, 2},
                        {2, 3}}) {
      out.push_back(generate("rectangular", {p, q}));
    }
    out.push_back(generate("transformation", {2}));
    out.push_back(generate("transformation", {3}));
    return out;
  }

}  // namespace zsub::corpus
