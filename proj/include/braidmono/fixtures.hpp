#pragma once

#include <string>
#include <vector>

#include "braidmono/factorization.hpp"
#include "braidmono/zvk.hpp"

namespace braidmono {

// Outcome of replaying one worked example end to end. Checkpoints that are
// forced by the toolkit's own oracles are asserted while the pipeline runs;
// `notes` records which ones passed. `soft_diffs` collects the documented
// divergences between computed entries and the transcripts the pipelines were
// taken from (misprints, omitted closing entries); they are reported, never
// asserted.
struct PipelineReport {
    std::string name;
    Factorization result;
    std::vector<std::string> notes;
    std::vector<std::string> soft_diffs;
};

// Names accepted by run_pipeline, in presentation order.
std::vector<std::string> pipeline_names();

// Replays the named example from its literal starting data. Every move list
// and conjugator is stored as data, so no search happens at run time. Throws
// OracleMismatchError naming the first divergent entry (index plus both
// words) if a hard checkpoint fails, and ValidationError for unknown names.
PipelineReport run_pipeline(const std::string& name);

// Fiber decomposition of the dual-quartic generic tuple: row i writes entry i
// of run_pipeline("dual-quartic").result as conjugator * local * conjugator^-1
// with the local word positive in the listed band generators. Input for
// presentation_generic.
std::vector<GenericFiberEntry> dual_quartic_fiber_entries();

} // namespace braidmono
