#pragma once

#include <string>

#include "json.hpp"
#include "scf/axioms.hpp"
#include "scf/enumeration.hpp"
#include "scf/text.hpp"

namespace scf {

inline constexpr const char* kToolName = "scfcheck";
inline constexpr const char* kToolVersion = "0.1.0";

// Full command line echoed into every record; set once by the CLI.
std::string& command_echo();

// Line-delimited structured records: one JSON object per check, streamed to
// stdout. With --jobs 1 and no --timing, records are byte-identical across
// runs on identical inputs.
nlohmann::ordered_json report_header(const std::string& command,
                                     const DomainSpec& spec, int jobs);
nlohmann::ordered_json witness_json(const Witness& witness, int m);
nlohmann::ordered_json check_record(const std::string& command,
                                    const std::string& rule,
                                    const std::string& axiom,
                                    const DomainSpec& spec, int jobs,
                                    const CheckResult& result,
                                    bool revalidated, bool timing);

}  // namespace scf
