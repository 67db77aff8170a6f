#pragma once

#include <string>

namespace polyspace {

enum class SpaceTag { UP, APol, Pol, PlanarPol, SymmetricPol, InvariantPol };

inline std::string space_name(SpaceTag tag) {
    switch (tag) {
        case SpaceTag::UP: return "UP";
        case SpaceTag::APol: return "APol";
        case SpaceTag::Pol: return "Pol";
        case SpaceTag::PlanarPol: return "PlanarPol";
        case SpaceTag::SymmetricPol: return "SymmetricPol";
        case SpaceTag::InvariantPol: return "InvariantPol";
    }
    return "?";
}

}  // namespace polyspace
