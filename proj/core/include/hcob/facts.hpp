#pragma once

#include <string>
#include <vector>

namespace hcob {

/// A result from the literature that computations rely on but never re-derive.
struct LiteratureFact {
    std::string id;
    std::string statement;
    std::string citation;
    /// Optional value in FgAbGroup notation, empty if the fact is not a group.
    std::string value;
};

/// Version string of the bundled facts table.
const std::string& facts_version();
const std::vector<LiteratureFact>& literature_facts();
/// Throws std::out_of_range for an unknown id.
const LiteratureFact& literature_fact(const std::string& id);

}  // namespace hcob
