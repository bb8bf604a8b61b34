#ifndef CHAINSYM_ERRORS_HPP
#define CHAINSYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chainsym {

/// Base class for every domain error raised by the library.
///
/// `name()` is the stable error identifier (e.g. "OverlapError(2,3)") that the
/// CLI prints verbatim; `what()` carries the name followed by a human-readable
/// explanation.
class Error : public std::runtime_error
{
public:
  Error(std::string name, const std::string &detail)
  : std::runtime_error(name + ": " + detail), _name(std::move(name))
  {}

  const std::string &name() const noexcept
  { return _name; }

private:
  std::string _name;
};

#define CHAINSYM_DEFINE_ERROR(Type)                                          \
  class Type : public Error                                                  \
  {                                                                          \
  public:                                                                    \
    explicit Type(const std::string &detail, const std::string &args = "")   \
    : Error(std::string(#Type) + args, detail)                               \
    {}                                                                       \
  };

CHAINSYM_DEFINE_ERROR(ChainSizeError)
CHAINSYM_DEFINE_ERROR(OverlapError)
CHAINSYM_DEFINE_ERROR(DuplicateIndexError)
CHAINSYM_DEFINE_ERROR(IndexRangeError)
CHAINSYM_DEFINE_ERROR(DivisibilityError)
CHAINSYM_DEFINE_ERROR(RangeError)
CHAINSYM_DEFINE_ERROR(ParityError)
CHAINSYM_DEFINE_ERROR(DiagramError)
CHAINSYM_DEFINE_ERROR(GraphError)
CHAINSYM_DEFINE_ERROR(SizeMismatchError)
CHAINSYM_DEFINE_ERROR(NotCycleError)
CHAINSYM_DEFINE_ERROR(PermutationError)
CHAINSYM_DEFINE_ERROR(SymmetricGroupTooLarge)
CHAINSYM_DEFINE_ERROR(OrderBoundExceeded)
CHAINSYM_DEFINE_ERROR(SizeNotMultipleOf4)
CHAINSYM_DEFINE_ERROR(BudgetExceeded)
CHAINSYM_DEFINE_ERROR(FormatError)

#undef CHAINSYM_DEFINE_ERROR

} // namespace chainsym

#endif // CHAINSYM_ERRORS_HPP
