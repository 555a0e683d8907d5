#ifndef SMALLCOVER_BETTI_HPP
#define SMALLCOVER_BETTI_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace smallcover {

// A run of Betti numbers starting at a stated degree: -1 for reduced
// homology (the empty-simplex degree), 0 for unreduced.
struct BettiVector {
    int start_degree = 0;
    std::vector<std::int64_t> values;

    BettiVector() = default;
    BettiVector(int start, std::vector<std::int64_t> vals)
        : start_degree(start), values(std::move(vals)) {}

    // Value at a degree, 0 outside the stored range.
    std::int64_t at_degree(int d) const {
        const int idx = d - start_degree;
        if (idx < 0 || static_cast<std::size_t>(idx) >= values.size()) return 0;
        return values[static_cast<std::size_t>(idx)];
    }

    std::int64_t sum() const {
        std::int64_t s = 0;
        for (auto v : values) s += v;
        return s;
    }

    bool operator==(const BettiVector&) const = default;

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(values[i]);
        }
        return out;
    }
};

}  // namespace smallcover

#endif
