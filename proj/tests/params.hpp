#pragma once

#include "cgmy/model.hpp"

namespace sets {

inline cgmy::CgmyParams schoutens() { return cgmy::CgmyParams::validate(0.0244, 0.0765, 7.5515, 1.2945, 0.0); }
inline cgmy::CgmyParams al_pure() { return cgmy::CgmyParams::validate(0.0066, 0.4087, 1.932, 1.5, 0.0); }
inline cgmy::CgmyParams al_mixed() { return cgmy::CgmyParams::validate(0.00265, 0.4087, 1.932, 1.5, 0.1); }

} // namespace sets
