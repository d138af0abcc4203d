#pragma once

#include "qmds/constacyclic.hpp"
#include "qmds/families.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qmds {

inline constexpr const char* kVersion = "1.0.0";

/// Serializable summary of a classical code and its quantum image.
struct CodeRecord {
    u64 q = 0, n = 0, r = 0;
    std::vector<u64> defining_set;
    u64 k = 0;
    u64 bch = 0;
    bool mds = false;
    QuantumParams quantum;

    friend bool operator==(const CodeRecord&, const CodeRecord&) = default;
};

/// Requires a dual-containing code with 2k >= n.
CodeRecord make_code_record(const ConstaCode& code);

void to_json(nlohmann::json& j, const QuantumParams& p);
void from_json(const nlohmann::json& j, QuantumParams& p);
void to_json(nlohmann::json& j, const CodeRecord& c);
void from_json(const nlohmann::json& j, CodeRecord& c);

std::string csv_header();
/// The defining set is joined with ';' inside one quoted field.
std::string csv_row(const CodeRecord& c);

/// Command output. Everything but timing_seconds is deterministic for fixed
/// inputs; payload() omits timing.
struct RunReport {
    std::string command;
    nlohmann::json instances = nlohmann::json::array();
    bool passed = true;
    std::vector<std::string> failures;
    std::string version = kVersion;
    double timing_seconds = 0.0;

    nlohmann::json payload() const;

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

void to_json(nlohmann::json& j, const RunReport& r);
void from_json(const nlohmann::json& j, RunReport& r);

void to_json(nlohmann::json& j, const TableRow& row);
void from_json(const nlohmann::json& j, TableRow& row);

/// Coefficients as arrays of base-p coordinates, constant term first.
nlohmann::json polynomial_to_json(const Polynomial& f);

} // namespace qmds
