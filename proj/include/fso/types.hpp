#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fso {

using Tick = std::int64_t;
using AgentId = std::int32_t;
using HospitalId = std::int32_t;
using CommunityId = std::int32_t;

inline constexpr AgentId kNoAgent = -1;
inline constexpr HospitalId kNoHospital = -1;
inline constexpr CommunityId kNoCommunity = -1;

enum class StrategyKind { Traditional, PerfectOracle, Fso };

const char* to_string(StrategyKind k);

/// Invalid or out-of-range configuration; carries the offending key.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& message)
        : std::runtime_error(message), key_(std::move(key)) {}
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

/// Malformed community topology (cycle, orphan, duplicate root, ...).
class TopologyError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Protocol contract violation (non-member publish, double allocation, ...).
class ProtocolError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Internal consistency failure detected by the strict checker.
class InvariantViolation : public std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace fso
