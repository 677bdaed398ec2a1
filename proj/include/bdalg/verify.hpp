#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bdalg/json_io.hpp"

namespace bdalg {

enum class Scale { small, full };

struct VerifyReport {
    std::string suite;
    std::string statement; // the identity the battery checks
    std::uint64_t seed = 0;
    Scale scale = Scale::full;
    std::size_t run = 0;
    std::size_t passed = 0;
    std::optional<json> counterexample; // first failing case
    double duration_ms = 0;
    std::vector<VerifyReport> parts; // per-suite reports of "all"

    bool ok() const { return passed == run; }
};

const std::vector<std::string>& suite_names(); // excludes "all"

// throws std::invalid_argument on an unknown suite
VerifyReport verify_suite(const std::string& name, std::uint64_t seed, Scale scale);

json to_json(const VerifyReport& r, bool with_timing = true);

} // namespace bdalg
