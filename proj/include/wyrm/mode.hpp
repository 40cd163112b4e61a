#pragma once

#include <string>
#include <string_view>

#include "wyrm/error.hpp"

namespace wyrm {

// Computation mode used throughout the toolkit.
//
// paper_faithful reproduces the reference dataset's own bookkeeping,
// including its internal unit slips (a lamb is worth 941,400 J there).
// physical enforces dimensional consistency everywhere (a lamb is worth
// its edible mass times a measured energy density).
enum class Mode {
    paper_faithful,
    physical,
};

inline std::string_view to_string(Mode m) {
    return m == Mode::paper_faithful ? "paper_faithful" : "physical";
}

inline Mode parse_mode(std::string_view text) {
    if (text == "paper_faithful" || text == "paper") return Mode::paper_faithful;
    if (text == "physical") return Mode::physical;
    throw ValidationError("unknown mode: " + std::string(text));
}

}  // namespace wyrm
