#include "critnum/witness.hpp"

#include "critnum/gset.hpp"
#include "critnum/sumset.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace critnum {

namespace {

constexpr Certificate kAllCertificates[] = {
    Certificate::sumset_size,          Certificate::restricted_size, Certificate::sumset_deficient,
    Certificate::restricted_deficient, Certificate::sigma_deficient, Certificate::sum_free,
    Certificate::three_one_sum_free,
};

}  // namespace

std::string_view to_string(Certificate c) {
    switch (c) {
    case Certificate::sumset_size: return "sumset_size";
    case Certificate::restricted_size: return "restricted_size";
    case Certificate::sumset_deficient: return "sumset_deficient";
    case Certificate::restricted_deficient: return "restricted_deficient";
    case Certificate::sigma_deficient: return "sigma_deficient";
    case Certificate::sum_free: return "sum_free";
    case Certificate::three_one_sum_free: return "three_one_sum_free";
    }
    return "?";
}

Certificate parse_certificate(std::string_view text) {
    for (const Certificate c : kAllCertificates) {
        if (to_string(c) == text) {
            return c;
        }
    }
    throw std::invalid_argument("unknown certificate '" + std::string(text) + "'");
}

std::string check_witness(const WitnessSet& w) {
    const GroupPtr group = Group::make(w.group);
    if (!std::is_sorted(w.elements.begin(), w.elements.end()) ||
        std::adjacent_find(w.elements.begin(), w.elements.end()) != w.elements.end()) {
        return "elements are not sorted and distinct";
    }
    for (const std::uint32_t x : w.elements) {
        if (x >= w.group.order()) {
            return "element " + std::to_string(x) + " out of range";
        }
    }
    const GSet a(group, std::span<const std::uint32_t>(w.elements));

    auto need_g = [&]() -> std::optional<Element> {
        if (!w.g || *w.g >= w.group.order()) {
            return std::nullopt;
        }
        return Element{*w.g};
    };

    switch (w.certifies) {
    case Certificate::sumset_size:
    case Certificate::restricted_size: {
        if (!w.value) {
            return "size certificate without value";
        }
        if (w.h < (w.certifies == Certificate::sumset_size ? 1 : 0)) {
            return "invalid h";
        }
        const GSet sums = w.certifies == Certificate::sumset_size ? h_fold(a, static_cast<int>(w.h))
                                                                 : h_fold_restricted(a, static_cast<int>(w.h));
        if (static_cast<std::int64_t>(sums.size()) != *w.value) {
            return "sumset has size " + std::to_string(sums.size()) + ", expected " + std::to_string(*w.value);
        }
        return {};
    }
    case Certificate::sumset_deficient: {
        const auto g = need_g();
        if (!g || w.h < 1) {
            return "deficiency certificate needs g in range and h >= 1";
        }
        if (a.empty()) {
            return {};
        }
        return h_fold(a, static_cast<int>(w.h)).contains(*g) ? "target is reached by hA" : "";
    }
    case Certificate::restricted_deficient: {
        const auto g = need_g();
        if (!g || w.h < 0) {
            return "deficiency certificate needs g in range and h >= 0";
        }
        return h_fold_restricted(a, static_cast<int>(w.h)).contains(*g) ? "target is reached by h^A" : "";
    }
    case Certificate::sigma_deficient: {
        const auto g = need_g();
        if (!g) {
            return "deficiency certificate needs g in range";
        }
        if (a.contains(Element{0})) {
            return "set contains 0";
        }
        return subset_sums(a).contains(*g) ? "target is reached by Sigma A" : "";
    }
    case Certificate::sum_free:
    case Certificate::three_one_sum_free: {
        if (a.empty()) {
            return {};
        }
        const int k = w.certifies == Certificate::sum_free ? 2 : 3;
        return (h_fold(a, k) & a).empty() ? "" : "set meets its own k-fold sumset";
    }
    }
    return "unknown certificate";
}

std::string to_json_line(const WitnessSet& w) {
    nlohmann::ordered_json j;
    j["group"] = w.group.to_string();
    j["quantity"] = w.quantity;
    j["certifies"] = to_string(w.certifies);
    j["h"] = w.h;
    j["g"] = w.g ? nlohmann::ordered_json(*w.g) : nlohmann::ordered_json(nullptr);
    j["value"] = w.value ? nlohmann::ordered_json(*w.value) : nlohmann::ordered_json(nullptr);
    j["m"] = w.elements.size();
    j["elements"] = w.elements;
    j["exact"] = w.exact;
    return j.dump();
}

WitnessSet parse_witness_json(std::string_view line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("witness JSON: ") + e.what());
    }
    if (j.contains("witness") && j["witness"].is_object()) {
        j = j["witness"];
    }
    try {
        WitnessSet w{GroupSpec::parse(j.at("group").get<std::string>())};
        w.quantity = j.value("quantity", std::string{});
        w.certifies = parse_certificate(j.at("certifies").get<std::string>());
        w.h = j.value("h", std::int64_t{0});
        if (j.contains("g") && !j["g"].is_null()) {
            w.g = j["g"].get<std::uint32_t>();
        }
        if (j.contains("value") && !j["value"].is_null()) {
            w.value = j["value"].get<std::int64_t>();
        }
        w.elements = j.at("elements").get<std::vector<std::uint32_t>>();
        w.exact = j.value("exact", true);
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("witness JSON: ") + e.what());
    }
}

void write_witness_file(const std::filesystem::path& path, const std::vector<WitnessSet>& witnesses) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    for (const auto& w : witnesses) {
        out << to_json_line(w) << '\n';
    }
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

std::vector<WitnessSet> read_witness_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::vector<WitnessSet> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        out.push_back(parse_witness_json(line));
    }
    return out;
}

}  // namespace critnum
