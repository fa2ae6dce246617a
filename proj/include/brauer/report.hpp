#ifndef BRAUER_REPORT_HPP
#define BRAUER_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace brauer {

inline constexpr const char* kToolVersion = "1.0.0";

/// 64-bit linear congruential generator with fixed constants; the single
/// source of randomness so that seeded runs replay byte for byte.
struct Lcg {
    std::uint64_t state = 0;

    explicit Lcg(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state;
    }
    std::uint64_t bounded(std::uint64_t m) { return m == 0 ? 0 : (next() >> 11) % m; }
};

/// Ordered key=value record list with a fixed-width text rendering.
class RunReport {
  public:
    void put(const std::string& key, const std::string& value) { rows_.emplace_back(key, value); }
    void put(const std::string& key, std::uint64_t value) { put(key, std::to_string(value)); }

    std::string as_record() const;  // line-delimited key=value
    std::string as_text() const;    // aligned table

    const std::vector<std::pair<std::string, std::string>>& rows() const { return rows_; }

  private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

}  // namespace brauer

#endif
