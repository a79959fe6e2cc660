#pragma once

#include <stdexcept>
#include <string>

namespace sintk {

// Domain error carrying a stable name; the CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define SINTK_DEFINE_ERROR(Cls)                                                \
    class Cls : public Error {                                                 \
    public:                                                                    \
        explicit Cls(const std::string& what) : Error(#Cls, what) {}           \
    };

SINTK_DEFINE_ERROR(InvalidRank)
SINTK_DEFINE_ERROR(DegeneratePattern)
SINTK_DEFINE_ERROR(LatticeMismatch)
SINTK_DEFINE_ERROR(ChargeImbalance)
SINTK_DEFINE_ERROR(NonIntegralTerm)
SINTK_DEFINE_ERROR(DegenerateRoot)
SINTK_DEFINE_ERROR(Unsupported)
SINTK_DEFINE_ERROR(TooLarge)
SINTK_DEFINE_ERROR(MalformedPD)
SINTK_DEFINE_ERROR(BudgetExceeded)
SINTK_DEFINE_ERROR(InvalidInput)

#undef SINTK_DEFINE_ERROR

} // namespace sintk
