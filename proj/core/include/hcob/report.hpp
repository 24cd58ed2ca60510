#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hcob {

enum class StageStatus { verified, derived, assumed, failed };

std::string to_string(StageStatus s);
/// Throws std::invalid_argument for an unknown name.
StageStatus parse_stage_status(const std::string& s);

/// Ordered key/value pairs; order is preserved in every rendering.
using Witness = std::vector<std::pair<std::string, std::string>>;

struct Stage {
    std::string name;
    /// Short pointer to the statement being checked.
    std::string reference;
    StageStatus status = StageStatus::verified;
    Witness witness;
    /// Required for assumed stages.
    std::string citation;

    friend bool operator==(const Stage&, const Stage&) = default;
};

struct Assumption {
    std::string id;
    std::string statement;
    std::string citation;

    friend bool operator==(const Assumption&, const Assumption&) = default;
};

struct ReportDocument {
    std::string tool = "hcob";
    std::string version;
    std::string command;
    Witness parameters;
    std::vector<Stage> stages;
    std::vector<Assumption> assumptions;
    std::optional<std::string> conclusion;

    /// Version defaults to the library version.
    explicit ReportDocument(std::string command = {}, Witness parameters = {});

    /// Throws std::invalid_argument for an assumed stage without citation.
    Stage& add_stage(Stage s);
    Stage& add(std::string name, std::string reference, StageStatus status, Witness witness = {});
    /// Adds a literature fact from the bundled table, both as an assumption and as an assumed stage.
    void assume(const std::string& fact_id, const std::string& reference);

    bool ok() const;
    /// 0 iff no stage failed, 1 otherwise.
    int exit_code() const { return ok() ? 0 : 1; }
    /// Throws std::invalid_argument if an invariant is violated.
    void validate() const;

    /// One line per stage: "[STATUS] name - witness".
    std::string to_text() const;

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

/// Version of the library, as configured by the build.
const std::string& library_version();

}  // namespace hcob
