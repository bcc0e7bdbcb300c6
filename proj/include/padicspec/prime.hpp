#ifndef PADICSPEC_PRIME_HPP
#define PADICSPEC_PRIME_HPP

#include <cstdint>
#include <compare>

namespace padicspec {

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(std::uint64_t n) noexcept;

/// A validated rational prime. Construction rejects composites, so every
/// Prime in the system is known good and arithmetic never re-checks.
class Prime {
public:
    explicit Prime(std::uint64_t value);

    std::uint64_t value() const noexcept { return value_; }

    friend bool operator==(const Prime&, const Prime&) = default;
    friend auto operator<=>(const Prime&, const Prime&) = default;

private:
    std::uint64_t value_;
};

} // namespace padicspec

#endif
