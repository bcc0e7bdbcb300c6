#ifndef PADICSPEC_ERRORS_HPP
#define PADICSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace padicspec {

/// A quantity's valuation (or a verdict depending on it) cannot be
/// determined at the working precision. The fix is more digits, never a guess.
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration would exceed its configured safety cap.
class SizeError : public std::runtime_error {
public:
    explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

/// Polynomial expression syntax error; position is a 0-based offset into the input.
class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t position, const std::string& what)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace padicspec

#endif
