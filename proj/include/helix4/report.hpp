#pragma once

#include <string>
#include <vector>

#include "helix4/vec4.hpp"

namespace helix4 {

/// Deterministic key-value document (structured-text diagnostics output).
/// Keys appear in insertion order; doubles use round-trip formatting.
class Report {
public:
    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, double value);
    void add(const std::string& key, std::size_t value);
    void add(const std::string& key, const Vec4& value);
    void add_array(const std::string& key, const std::vector<double>& values);
    void blank();

    std::string str() const;

private:
    std::vector<std::string> lines_;
};

}  // namespace helix4
