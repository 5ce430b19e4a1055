#include "livesub/waitk.hpp"

#include <algorithm>
#include <cmath>

#include "livesub/errors.hpp"

namespace livesub {

void validate(const WaitKConfig& cfg) {
    if (cfg.k < 1) throw Error("wait-k: k must be at least 1");
    if (!(cfg.step_size > 0.0) || !std::isfinite(cfg.step_size)) throw Error("wait-k: step size must be positive");
    if (!(cfg.compute_latency >= 0.0) || !std::isfinite(cfg.compute_latency)) {
        throw Error("wait-k: compute latency must be non-negative");
    }
}

EmissionLog simulate_waitk(const AnnotatedReference& ref, const WaitKConfig& cfg) {
    validate(cfg);
    if (!(ref.duration > 0.0)) throw Error("reference '" + ref.segment_id + "': duration must be positive");

    EmissionLog log;
    log.segment_id = ref.segment_id;
    log.source_duration = ref.duration;
    log.wait_k = cfg.k;
    log.step_size = cfg.step_size;
    log.events.reserve(ref.tokens.size());
    std::vector<double> consumed;
    consumed.reserve(ref.tokens.size());

    for (std::size_t n = 0; n < ref.tokens.size(); ++n) {
        const double i = static_cast<double>(n + 1);
        const double paced = (static_cast<double>(cfg.k) + i - 1.0) * cfg.step_size;
        const double g = std::min(ref.duration, paced);
        const double read_until = cfg.flush_at_end ? g : paced;
        const std::string& surface = ref.tokens[n];
        log.events.push_back(TokenEvent{surface, classify_surface(surface), read_until + i * cfg.compute_latency});
        consumed.push_back(g);
    }
    log.consumed = std::move(consumed);
    return log;
}

}  // namespace livesub
