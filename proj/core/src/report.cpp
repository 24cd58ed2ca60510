#include "hcob/report.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "hcob/facts.hpp"
#include "hcob/version.hpp"

namespace hcob {

std::string to_string(StageStatus s)
{
    switch (s) {
    case StageStatus::verified: return "verified";
    case StageStatus::derived: return "derived";
    case StageStatus::assumed: return "assumed";
    case StageStatus::failed: return "failed";
    }
    throw std::logic_error("bad stage status");
}

StageStatus parse_stage_status(const std::string& s)
{
    for (auto st : {StageStatus::verified, StageStatus::derived, StageStatus::assumed, StageStatus::failed})
        if (to_string(st) == s)
            return st;
    throw std::invalid_argument("unknown stage status: " + s);
}

const std::string& library_version()
{
    static const std::string v = kVersion;
    return v;
}

ReportDocument::ReportDocument(std::string cmd, Witness params)
    : version(library_version()), command(std::move(cmd)), parameters(std::move(params))
{
}

Stage& ReportDocument::add_stage(Stage s)
{
    if (s.status == StageStatus::assumed && s.citation.empty())
        throw std::invalid_argument("assumed stage without citation: " + s.name);
    stages.push_back(std::move(s));
    return stages.back();
}

Stage& ReportDocument::add(std::string name, std::string reference, StageStatus status, Witness witness)
{
    return add_stage(Stage{std::move(name), std::move(reference), status, std::move(witness), {}});
}

void ReportDocument::assume(const std::string& fact_id, const std::string& reference)
{
    const LiteratureFact& f = literature_fact(fact_id);
    add_stage(Stage{f.statement, reference, StageStatus::assumed, {{"fact", f.id}}, f.citation});
    for (const auto& a : assumptions)
        if (a.id == f.id)
            return;
    assumptions.push_back(Assumption{f.id, f.statement, f.citation});
}

bool ReportDocument::ok() const
{
    for (const auto& s : stages)
        if (s.status == StageStatus::failed)
            return false;
    return true;
}

void ReportDocument::validate() const
{
    for (const auto& s : stages)
        if (s.status == StageStatus::assumed && s.citation.empty())
            throw std::invalid_argument("assumed stage without citation: " + s.name);
    for (const auto& a : assumptions)
        if (a.citation.empty())
            throw std::invalid_argument("assumption without citation: " + a.id);
}

std::string ReportDocument::to_text() const
{
    std::ostringstream out;
    for (const auto& s : stages) {
        std::string status = to_string(s.status);
        for (auto& c : status)
            c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        out << '[' << status << "] " << s.name;
        if (!s.witness.empty()) {
            out << " - ";
            for (std::size_t k = 0; k < s.witness.size(); ++k)
                out << (k ? ", " : "") << s.witness[k].first << '=' << s.witness[k].second;
        }
        if (!s.citation.empty())
            out << " [" << s.citation << ']';
        out << '\n';
    }
    if (conclusion)
        out << "conclusion: " << *conclusion << '\n';
    return out.str();
}

}  // namespace hcob
