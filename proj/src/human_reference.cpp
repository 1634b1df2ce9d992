// --------------------------------------------------------------------
// Human accuracy reference values for the 74 benchmark subtasks
// (Close and Far per concept), shipped for correlation scoring.
// --------------------------------------------------------------------
#include "geoclidean/eval.hpp"

namespace geoclidean {

const std::vector<HumanAccuracy>& human_reference() {
    static const std::vector<HumanAccuracy> table = {
        {"angle", 0.9767, 0.9833},
        {"perp_bisector", 0.9367, 0.9833},
        {"ang_bisector", 0.9433, 0.9533},
        {"sixty_ang", 0.8233, 0.9533},
        {"radii", 0.9233, 0.9600},
        {"diameter", 0.9567, 1.0000},
        {"segment", 0.9300, 0.9833},
        {"rectilinear", 0.9000, 0.9033},
        {"triangle", 0.9633, 0.9767},
        {"quadrilateral", 0.9167, 0.9267},
        {"eq_t", 0.9533, 0.9800},
        {"right_ang_t", 0.7200, 0.8133},
        {"square", 0.8933, 0.9867},
        {"rhombus", 0.9367, 0.9667},
        {"oblong", 0.9666, 0.9900},
        {"rhomboid", 0.9700, 0.9300},
        {"parallel_l", 0.9500, 0.9567},
        {"lll", 0.9700, 0.9667},
        {"cll", 0.9467, 0.9667},
        {"llc", 0.6767, 0.9233},
        {"ccl", 0.8700, 0.8833},
        {"lcc", 0.8867, 0.9633},
        {"ccc", 0.6667, 0.8767},
        {"llll", 0.8833, 0.9767},
        {"lllc", 0.6667, 0.8867},
        {"clll", 0.8367, 0.9033},
        {"clcl", 0.8700, 0.8567},
        {"llcc", 0.8867, 0.9333},
        {"cccl", 0.9233, 0.9333},
        {"clcc", 0.8633, 0.9000},
        {"cccc", 0.8167, 0.8800},
        {"tll", 0.9467, 0.9800},
        {"llt", 0.9267, 0.9400},
        {"tcl", 0.9533, 0.9633},
        {"clt", 0.9533, 0.9633},
        {"tcc", 0.9533, 0.9633},
        {"cct", 0.9533, 0.9633},
    };
    return table;
}

}  // namespace geoclidean
