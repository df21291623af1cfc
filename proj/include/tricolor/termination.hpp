#pragma once

namespace tricolor {

// Why a trace stopped.
enum class Termination {
    loop_closed,  // returned to the starting state
    region_exit,  // the next head would leave the confining region
    step_cap,     // step budget exhausted (or a visitor asked to stop)
};

inline const char* termination_name(Termination t) {
    switch (t) {
        case Termination::loop_closed: return "loop_closed";
        case Termination::region_exit: return "region_exit";
        case Termination::step_cap: return "step_cap";
    }
    return "?";
}

}  // namespace tricolor
