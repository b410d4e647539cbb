#pragma once

/* Three-valued answers for horizon-bounded questions.  Yes may carry a
 * numeric payload (a dimension), No carries serializable evidence such as a
 * nonvanishing Ext degree. */

#include <optional>
#include <string>

namespace homdim {

struct Verdict {
    enum class State { Yes, No, UnknownAtHorizon };

    State state = State::UnknownAtHorizon;
    std::optional<long> value;          // payload of Yes
    std::optional<long> witnessDegree;  // evidence of No, when numeric
    std::string witness;                // free-form evidence of No

    static Verdict yes() { return {State::Yes, std::nullopt, std::nullopt, {}}; }
    static Verdict yes(long v) { return {State::Yes, v, std::nullopt, {}}; }
    static Verdict no(std::string why) { return {State::No, std::nullopt, std::nullopt, std::move(why)}; }
    static Verdict no(long degree, std::string why) { return {State::No, std::nullopt, degree, std::move(why)}; }
    static Verdict unknown() { return {State::UnknownAtHorizon, std::nullopt, std::nullopt, {}}; }

    bool isYes() const { return state == State::Yes; }
    bool isNo() const { return state == State::No; }
    bool isUnknown() const { return state == State::UnknownAtHorizon; }
    bool determinate() const { return state != State::UnknownAtHorizon; }

    // Yes(a) <= bound, only meaningful when determinate
    bool yesAtMost(long bound) const { return isYes() && value && *value <= bound; }
};

}  // namespace homdim
