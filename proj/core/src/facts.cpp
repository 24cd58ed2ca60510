#include "hcob/facts.hpp"

#include <stdexcept>

#include "hcob/facts_data.hpp"
#include "json_io_detail.hpp"

namespace hcob {

namespace {

struct FactsTable {
    std::string version;
    std::vector<LiteratureFact> facts;
};

const FactsTable& table()
{
    static const FactsTable t = [] {
        const auto doc = nlohmann::ordered_json::parse(detail::kLiteratureFactsJson);
        FactsTable out;
        out.version = doc.at("version").get<std::string>();
        for (const auto& f : doc.at("facts")) {
            LiteratureFact fact;
            fact.id = f.at("id").get<std::string>();
            fact.statement = f.at("statement").get<std::string>();
            fact.citation = f.at("citation").get<std::string>();
            fact.value = f.value("value", std::string());
            if (fact.citation.empty())
                throw std::logic_error("literature fact without citation: " + fact.id);
            out.facts.push_back(std::move(fact));
        }
        return out;
    }();
    return t;
}

}  // namespace

const std::string& facts_version() { return table().version; }

const std::vector<LiteratureFact>& literature_facts() { return table().facts; }

const LiteratureFact& literature_fact(const std::string& id)
{
    for (const auto& f : table().facts)
        if (f.id == id)
            return f;
    throw std::out_of_range("unknown literature fact: " + id);
}

}  // namespace hcob
