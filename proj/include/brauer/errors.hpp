#ifndef BRAUER_ERRORS_HPP
#define BRAUER_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace brauer {

enum class errc {
    not_prime,
    degree_zero,
    bound_exceeded,
    zero_element,
    roots_of_unity_missing,
    syntax_error,
    division_by_zero_polynomial,
    zero_polynomial,
    zero_function,
    not_a_unit,
    not_prime_power,
    precondition_violated,
    order_condition_failed,
    step_failed,
    invalid_input,
    internal,
};

class error : public std::runtime_error {
  public:
    error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    error(errc kind, const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), kind_(kind), pos_(pos) {}

    errc kind() const { return kind_; }
    std::size_t position() const { return pos_; }  // npos when not a parse error

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  private:
    errc kind_;
    std::size_t pos_ = npos;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

inline void require(bool cond, errc kind, const std::string& what) {
    if (!cond) throw error(kind, what);
}

}  // namespace brauer

#endif
