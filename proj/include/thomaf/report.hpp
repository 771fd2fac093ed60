#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace thomaf {

inline std::string fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

// One command's outcome: ordered named fields, each a list of strings.
// Wall time is deliberately absent so that repeated runs print identical
// reports; the front end reports timing on stderr.
struct report {
    std::string command;
    std::string input_digest;
    std::vector<std::pair<std::string, std::vector<std::string>>> fields;
    std::size_t budget_used = 0;
    int exit_code = 0;

    void add(const std::string& key, std::string value) {
        fields.emplace_back(key, std::vector<std::string>{std::move(value)});
    }
    void add(const std::string& key, std::vector<std::string> values) {
        fields.emplace_back(key, std::move(values));
    }
    void add_flag(const std::string& key, bool v) { add(key, v ? "true" : "false"); }

    const std::vector<std::string>* find(const std::string& key) const {
        for (const auto& [k, v] : fields)
            if (k == key) return &v;
        return nullptr;
    }
};

inline std::string joined(const std::vector<std::string>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += "; ";
        out += values[i];
    }
    return out;
}

inline std::string to_text(const report& r) {
    std::string out;
    out += "command: " + r.command + "\n";
    out += "input: " + r.input_digest + "\n";
    for (const auto& [k, v] : r.fields) out += k + ": " + joined(v) + "\n";
    out += "budget_used: " + std::to_string(r.budget_used) + "\n";
    return out;
}

// Schema thomaf.report/1: fixed top-level keys, fields as an object whose
// values are arrays of strings, in insertion order.
inline std::string to_json(const report& r) {
    nlohmann::ordered_json j;
    j["schema"] = "thomaf.report/1";
    j["command"] = r.command;
    j["input_digest"] = r.input_digest;
    nlohmann::ordered_json fields = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.fields) fields[k] = v;
    j["fields"] = std::move(fields);
    j["budget_used"] = r.budget_used;
    j["exit_code"] = r.exit_code;
    return j.dump(2) + "\n";
}

}  // namespace thomaf
