#pragma once

#include <string>
#include <vector>

#include "livesub/core_model.hpp"

namespace livesub {

struct WaitKConfig {
    int k = 3;
    double step_size = kDefaultStepSeconds;  // seconds of audio per READ
    double compute_latency = 0.0;            // seconds added per written token
    // Write everything left in one burst once the audio runs out. When false
    // the policy keeps its pace past the end of the source.
    bool flush_at_end = true;
};

/// Break-annotated reference: target surfaces with inline <eol>/<eob>, plus
/// the duration of the source audio.
struct AnnotatedReference {
    std::string segment_id;
    std::vector<std::string> tokens;
    double duration = 0.0;
};

void validate(const WaitKConfig& cfg);

/// Emission log a fixed wait-k decoder would produce for `ref`: token i
/// (1-based) is written after reading min(D, (k + i - 1) * step) seconds of
/// audio, plus i * compute_latency of generation cost. The consumed-source
/// amounts are recorded on the log.
EmissionLog simulate_waitk(const AnnotatedReference& ref, const WaitKConfig& cfg);

}  // namespace livesub
