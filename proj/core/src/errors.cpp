#include "zsub/errors.hpp"

namespace zsub {

  MalformedTable::MalformedTable(std::string const& what, std::size_t line)
      : ParseError(line == 0 ? what
                             : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  NotAssociative::NotAssociative(unsigned i_, unsigned j_, unsigned k_)
      : ParseError("table is not associative: (" + std::to_string(i_) + "*"
                   + std::to_string(j_) + ")*" + std::to_string(k_) + " != "
                   + std::to_string(i_) + "*(" + std::to_string(j_) + "*"
                   + std::to_string(k_) + ")"),
        i(i_),
        j(j_),
        k(k_) {}

  RegularSemigroup::RegularSemigroup()
      : PreconditionError(
          "semigroup is regular: it has no non-regular J-class, so Z x S has "
          "only countably many subdirect products and no P_M family exists") {}

  NotRegular::NotRegular(unsigned element)
      : PreconditionError(
          "semigroup is not regular: element " + std::to_string(element)
          + " has no generalised inverse, so subdirect products of Z x S need "
            "not be finitely generated") {}

  EmptyGenerators::EmptyGenerators()
      : InvalidArgument("generating set must be nonempty") {}

}  // namespace zsub
