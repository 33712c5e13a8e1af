#pragma once

#include "critnum/group.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace critnum {

/// The property a witness set claims.
enum class Certificate {
    sumset_size,           // |hA| == value
    restricted_size,       // |h^A| == value
    sumset_deficient,      // g not in hA
    restricted_deficient,  // g not in h^A
    sigma_deficient,       // 0 not in A and g not in Sigma A
    sum_free,              // A and 2A disjoint
    three_one_sum_free,    // A and 3A disjoint
};

std::string_view to_string(Certificate c);
Certificate parse_certificate(std::string_view text);

/// An extremal set together with the property it certifies. Re-validating the
/// property from the stored fields alone must succeed.
struct WitnessSet {
    explicit WitnessSet(GroupSpec g) : group(std::move(g)) {}

    GroupSpec group;
    std::string quantity;
    Certificate certifies = Certificate::sumset_deficient;
    std::int64_t h = 0;
    std::optional<std::uint32_t> g;
    std::optional<std::int64_t> value;
    std::vector<std::uint32_t> elements;  // sorted, distinct
    bool exact = true;
};

/// Empty string when the certificate holds, otherwise a reason.
std::string check_witness(const WitnessSet& w);
inline bool validate_witness(const WitnessSet& w) { return check_witness(w).empty(); }

/// One JSON object: {group, quantity, certifies, h, g, value, m, elements, exact}.
std::string to_json_line(const WitnessSet& w);

/// Accepts either a witness object or an object carrying one under "witness".
WitnessSet parse_witness_json(std::string_view line);

void write_witness_file(const std::filesystem::path& path, const std::vector<WitnessSet>& witnesses);
std::vector<WitnessSet> read_witness_file(const std::filesystem::path& path);

}  // namespace critnum
