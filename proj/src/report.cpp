#include "brauer/report.hpp"

#include <algorithm>
#include <sstream>

namespace brauer {

std::string RunReport::as_record() const {
    std::ostringstream out;
    for (const auto& [k, v] : rows_) out << k << "=" << v << "\n";
    return out.str();
}

std::string RunReport::as_text() const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    std::ostringstream out;
    for (const auto& [k, v] : rows_) {
        out << k;
        for (std::size_t i = k.size(); i < width + 2; ++i) out << ' ';
        out << v << "\n";
    }
    return out.str();
}

}  // namespace brauer
