#ifndef FLAGCOH_ERROR_HPP
#define FLAGCOH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace flagcoh {

/// Malformed or out-of-contract input (bad partition, wrong content, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computed check disagreed with the expected algebraic/combinatorial law.
/// `witness()` carries a JSON document describing the failure.
class VerificationError : public std::runtime_error {
public:
    VerificationError(const std::string& what, std::string witness)
        : std::runtime_error(what), witness_(std::move(witness)) {}

    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

}  // namespace flagcoh

#endif  // FLAGCOH_ERROR_HPP
