#pragma once

#include <string>

#include "sofa/cap.hpp"
#include "sofa/maximizer.hpp"
#include "sofa/sofa.hpp"

namespace sofa {

// Cap JSON: {"omega", "grid", "support", "vertices"}. On input either
// grid + support or vertices must be present.
std::string cap_to_json(const Cap &cap);
Cap cap_from_json(const std::string &text);
// Raw support samples without cap validation (input to monotonize).
SupportSamples samples_from_json(const std::string &text, double &omega);

// AngularMeasure JSON: {"atoms": [[angle, weight]...], "density": [[angle, value]...]}.
std::string measure_to_json(const AngularMeasure &m);
AngularMeasure measure_from_json(const std::string &text);

std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

struct SvgScene {
    const Cap *cap = nullptr;
    const NicheRegion *niche = nullptr;
    const Polyline *path = nullptr; // rotation path
    const S1Curves *s1 = nullptr;
};

// 100 units per hallway width, y axis pointing up.
std::string render_svg(const SvgScene &scene);

} // namespace sofa
